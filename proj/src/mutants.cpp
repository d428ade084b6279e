#include "ppdelp/mutants.hpp"

namespace ppdelp::mutants {

namespace {

PPreDeLPProgram withAnnotation(const PPreDeLPProgram& p, const std::string& id, Formula formula) {
    AnnotationFunction af = p.af();
    af.set(id, std::move(formula));
    return PPreDeLPProgram(p.em(), p.am(), std::move(af));
}

} // namespace

RevisionResult nonMaximal(const PPreDeLPProgram& program, const EpistemicInput& input) {
    auto phi = defaultSelection(program, input);
    for (auto& [w, chosen] : phi) {
        for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {
            if (*it == input.element.id) continue;
            chosen.erase(std::next(it).base());
            break;
        }
    }
    return applySelection(program, input, phi);
}

RevisionResult dropInput(const PPreDeLPProgram& program, const EpistemicInput& input) {
    auto result = revise(program, input);
    result.program = withAnnotation(result.program, input.element.id, Formula::constant(false));
    return result;
}

RevisionResult extraWorldDeleting(const PPreDeLPProgram& program, const EpistemicInput& input) {
    auto result = revise(program, input);
    const auto& p = result.program;
    const auto& universe = p.em().universe();
    for (const auto& choice : result.log) {
        for (const auto& id : choice.chosen) {
            if (id == input.element.id) continue;
            result.program = withAnnotation(p, id, p.af().at(id) && !forWorld(choice.world, universe));
            return result;
        }
    }
    for (const auto& e : p.am().elements()) {
        for (const auto& w : p.worlds()) {
            if (!p.activeAt(e.id, w)) continue;
            result.program = withAnnotation(p, e.id, p.af().at(e.id) && !forWorld(w, universe));
            return result;
        }
    }
    return result;
}

std::vector<Named> all() {
    return {{"non-maximal subset", nonMaximal},
            {"f-dropping", dropInput},
            {"extra-world-deleting", extraWorldDeleting}};
}

} // namespace ppdelp::mutants
