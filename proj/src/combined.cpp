#include "ppdelp/combined.hpp"

#include "ppdelp/error.hpp"

namespace ppdelp {

CombinedModel::CombinedModel(PPreDeLPProgram program)
    : program_(std::move(program)), worlds_(program_.worlds()) {
    std::vector<AMElement> strict;
    for (const auto& e : program_.am().elements())
        if (isStrict(e.kind)) strict.push_back(e);
    strictRules_ = RuleBase(std::move(strict));
}

std::vector<bool> CombinedModel::activeMask(const World& world) const {
    std::vector<bool> mask;
    for (const auto& e : program_.am().elements()) mask.push_back(program_.activeAt(e.id, world));
    return mask;
}

WorldSlice CombinedModel::activeElements(const World& world) const {
    WorldSlice slice{world, {}};
    for (const auto& e : program_.am().elements())
        if (program_.activeAt(e.id, world)) slice.active.insert(e.id);
    return slice;
}

PreDeLPProgram CombinedModel::restrictedProgram(const World& world) const {
    return program_.am().restrictedTo(activeElements(world).active);
}

const ArgumentationEngine& CombinedModel::engineAt(const World& world) const {
    auto mask = activeMask(world);
    std::lock_guard lock(cacheMutex_);
    auto& slot = engines_[mask];
    if (!slot) slot = std::make_unique<ArgumentationEngine>(restrictedProgram(world));
    return *slot;
}

bool CombinedModel::argumentValidAt(const std::vector<std::string>& support, const World& world) const {
    for (const auto& id : support)
        if (!program_.activeAt(id, world)) return false;
    return true;
}

bool CombinedModel::warrantingScenario(const World& world, const Literal& literal) const {
    return engineAt(world).warrantStatus(literal) == WarrantStatus::Warranted;
}

void CombinedModel::requireConsistent() const {
    if (!checkTypeI(program_.em())) throw TypeIInconsistent();
    if (!checkTypeII()) throw TypeIIInconsistent();
}

NecPoss CombinedModel::necPoss(const Literal& literal) const {
    requireConsistent();
    NecPoss out;
    for (const auto& w : worlds_) {
        const auto& engine = engineAt(w);
        if (engine.warrantStatus(literal) == WarrantStatus::Warranted) out.nec.push_back(w);
        if (engine.warrantStatus(literal.complement()) != WarrantStatus::Warranted) out.poss.push_back(w);
    }
    return out;
}

ProbabilityBounds CombinedModel::literalBounds(const Literal& literal) const {
    const auto sets = necPoss(literal);
    const auto system = buildConstraints(program_.em());
    const auto lo = epLp(system, system.mask(sets.nec), Sense::Minimize);
    const auto hi = epLp(system, system.mask(sets.poss), Sense::Maximize);
    if (!lo.optimal() || !hi.optimal()) throw TypeIInconsistent();
    return {lo.value, hi.value};
}

bool strictSliceInconsistent(const PPreDeLPProgram& program, const World& world) {
    std::vector<AMElement> active;
    for (const auto& e : program.am().elements())
        if (isStrict(e.kind) && program.activeAt(e.id, world)) active.push_back(e);
    return !isClassicallyConsistent(active);
}

InconsistentWorlds CombinedModel::inconsistentWorlds() const {
    InconsistentWorlds out;
    for (const auto& w : worlds_) {
        ElementSet active = strictRules_.noElements();
        for (std::size_t i = 0; i < strictRules_.elementCount(); ++i)
            if (program_.activeAt(strictRules_.element(i).id, w)) active.set(i);
        if (strictRules_.isContradictory(active)) out.zero.push_back(w);
    }
    if (out.zero.empty()) return out;
    const auto system = buildConstraints(program_.em());
    std::vector<bool> candidates(system.worlds.size(), false);
    for (const auto& w : out.zero) candidates[system.indexOf(w)] = true;
    const auto positive = positiveWorlds(system, candidates);
    for (const auto& w : out.zero)
        if (positive[system.indexOf(w)]) out.positive.push_back(w);
    return out;
}

} // namespace ppdelp
