#include "ppdelp/revision.hpp"

#include "ppdelp/error.hpp"

#include <algorithm>
#include <tuple>

namespace ppdelp {

EpistemicInput EpistemicInput::extend(const PPreDeLPProgram& program, AMElement element, Formula annotation) {
    if (const auto* existing = program.am().find(element.id)) {
        if (!existing->sameContent(element) || !(program.af().at(element.id) == annotation))
            throw ValidationError("input id '" + element.id + "' already names a different element");
    }
    AnnotationFunction af = program.af();
    af.set(element.id, std::move(annotation));
    return EpistemicInput{std::move(element), std::move(af)};
}

PPreDeLPProgram unionWith(const PPreDeLPProgram& program, const EpistemicInput& input) {
    PreDeLPProgram am = program.am().contains(input.element.id) ? program.am() : program.am().with(input.element);
    return PPreDeLPProgram(program.em(), std::move(am), input.annotations);
}

std::vector<World> badWorlds(const PPreDeLPProgram& program) {
    return CombinedModel(program).inconsistentWorlds().positive;
}

IdSet strictSlice(const PPreDeLPProgram& program, const World& world) {
    IdSet out;
    for (const auto& e : program.am().elements())
        if (isStrict(e.kind) && program.activeAt(e.id, world)) out.push_back(e.id);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IdSet> candPgm(const World& world, const PPreDeLPProgram& program) {
    std::vector<AMElement> slice;
    for (const auto& id : strictSlice(program, world)) slice.push_back(program.am().at(id));
    const RuleBase rules(std::move(slice));
    std::vector<IdSet> out;
    for (const auto& s : maximalConsistentSubsets(rules, rules.allElements(), rules.noElements())) {
        auto ids = rules.ids(s);
        std::sort(ids.begin(), ids.end());
        out.push_back(std::move(ids));
    }
    std::sort(out.begin(), out.end());
    return out;
}

SelectionFunction defaultSelection(const PPreDeLPProgram& program, const EpistemicInput& input) {
    const auto uni = unionWith(program, input);
    const auto& fid = input.element.id;
    auto key = [&](const IdSet& c) {
        const bool keepsF = std::binary_search(c.begin(), c.end(), fid);
        const auto facts = std::count_if(c.begin(), c.end(), [&](const std::string& id) {
            return uni.am().at(id).kind == ElementKind::Fact;
        });
        IdSet rest;
        std::copy_if(c.begin(), c.end(), std::back_inserter(rest), [&](const std::string& id) { return id != fid; });
        // larger is better for the first two, smaller for the last
        return std::make_tuple(!keepsF, -facts, rest);
    };
    SelectionFunction phi;
    for (const auto& w : badWorlds(uni)) {
        auto candidates = candPgm(w, uni);
        auto best = std::min_element(candidates.begin(), candidates.end(),
                                     [&](const IdSet& a, const IdSet& b) { return key(a) < key(b); });
        phi[w] = best == candidates.end() ? IdSet{} : *best;
    }
    return phi;
}

Formula newFor(const std::string& h, const SelectionFunction& phi, const Formula& annotation,
               const std::vector<World>& bad, const Universe& universe) {
    std::vector<Formula> parts{annotation};
    for (const auto& w : bad) {
        auto it = phi.find(w);
        if (it == phi.end() || !std::binary_search(it->second.begin(), it->second.end(), h))
            parts.push_back(!forWorld(w, universe));
    }
    return Formula::conjunction(std::move(parts));
}

Formula newFor(const std::string& h, const SelectionFunction& phi, const PPreDeLPProgram& program,
               const EpistemicInput& input) {
    const auto uni = unionWith(program, input);
    return newFor(h, phi, input.annotations.at(h), badWorlds(uni), uni.em().universe());
}

namespace {

RevisionResult construct(const PPreDeLPProgram& uni, const SelectionFunction& phi, const std::vector<World>& bad) {
    AnnotationFunction revised;
    for (const auto& e : uni.am().elements()) {
        const auto& annotation = uni.af().at(e.id);
        // only facts and strict rules are selected; the rest keep their annotation
        revised.set(e.id, isStrict(e.kind) ? newFor(e.id, phi, annotation, bad, uni.em().universe()) : annotation);
    }
    RevisionResult result{PPreDeLPProgram(uni.em(), uni.am(), std::move(revised)), {}};
    for (const auto& w : bad) {
        auto it = phi.find(w);
        result.log.push_back({w, candPgm(w, uni), it == phi.end() ? IdSet{} : it->second});
    }
    return result;
}

} // namespace

RevisionResult applySelection(const PPreDeLPProgram& program, const EpistemicInput& input,
                              const SelectionFunction& phi) {
    const auto uni = unionWith(program, input);
    if (!isStrict(input.element.kind)) return {uni, {}};
    return construct(uni, phi, badWorlds(uni));
}

RevisionResult revise(const PPreDeLPProgram& program, const EpistemicInput& input, const SelectionFunction& phi) {
    const auto uni = unionWith(program, input);
    if (!isStrict(input.element.kind)) return {uni, {}};
    const auto bad = badWorlds(uni);
    for (const auto& w : bad) {
        auto it = phi.find(w);
        if (it == phi.end()) throw InvalidSelection("selection has no choice for world " + toString(w));
        const auto candidates = candPgm(w, uni);
        if (std::find(candidates.begin(), candidates.end(), it->second) == candidates.end())
            throw InvalidSelection("selection at world " + toString(w) + " is not a maximal consistent subset");
    }
    return construct(uni, phi, bad);
}

RevisionResult revise(const PPreDeLPProgram& program, const EpistemicInput& input) {
    return revise(program, input, defaultSelection(program, input));
}

} // namespace ppdelp
