#include "ppdelp/em.hpp"

#include "ppdelp/error.hpp"

#include <algorithm>

namespace ppdelp {

ProbabilisticFormula ProbabilisticFormula::make(Formula formula, Rational probability, Rational tolerance) {
    probability.canonicalize();
    tolerance.canonicalize();
    if (probability < 0 || probability > 1)
        throw ValidationError("probability " + toExactString(probability) + " is outside [0,1]");
    if (tolerance < 0) throw ValidationError("negative tolerance " + toExactString(tolerance));
    if (tolerance > probability || tolerance > 1 - probability)
        throw ValidationError("tolerance " + toExactString(tolerance) + " exceeds min(p, 1-p) for p = " +
                              toExactString(probability));
    return ProbabilisticFormula{std::move(formula), std::move(probability), std::move(tolerance)};
}

namespace {

std::set<std::string> mentionedAtoms(const std::vector<ProbabilisticFormula>& formulas,
                                     const std::vector<IntegrityConstraint>& constraints) {
    std::set<std::string> atoms;
    for (const auto& pf : formulas) collectAtoms(pf.formula, atoms);
    for (const auto& ic : constraints) atoms.insert(ic.atoms.begin(), ic.atoms.end());
    return atoms;
}

} // namespace

EMKnowledgeBase::EMKnowledgeBase(std::vector<ProbabilisticFormula> formulas, Universe universe,
                                 std::vector<IntegrityConstraint> constraints)
    : formulas_(std::move(formulas)), constraints_(std::move(constraints)) {
    universe_ = universe.merged(mentionedAtoms(formulas_, constraints_));
}

EMKnowledgeBase::EMKnowledgeBase(std::vector<ProbabilisticFormula> formulas,
                                 std::vector<IntegrityConstraint> constraints)
    : EMKnowledgeBase(std::move(formulas), Universe{}, std::move(constraints)) {}

EMKnowledgeBase EMKnowledgeBase::withUniverse(const Universe& universe) const {
    return EMKnowledgeBase(formulas_, universe.merged({universe_.atoms().begin(), universe_.atoms().end()}),
                           constraints_);
}

std::size_t ConstraintSystem::indexOf(const World& world) const {
    return static_cast<std::size_t>(std::find(worlds.begin(), worlds.end(), world) - worlds.begin());
}

std::vector<bool> ConstraintSystem::mask(const std::vector<World>& subset) const {
    std::vector<bool> m(worlds.size(), false);
    std::set<World> wanted(subset.begin(), subset.end());
    for (std::size_t i = 0; i < worlds.size(); ++i)
        if (wanted.contains(worlds[i])) m[i] = true;
    return m;
}

bool ConstraintSystem::admits(const std::vector<Rational>& distribution) const {
    if (distribution.size() != worlds.size()) return false;
    Rational total = 0;
    for (const auto& x : distribution) {
        if (x < 0) return false;
        total += x;
    }
    if (total != 1) return false;
    for (const auto& row : rows) {
        Rational p = 0;
        for (std::size_t i = 0; i < worlds.size(); ++i)
            if (row.satisfiedBy[i]) p += distribution[i];
        if (p < row.lower || p > row.upper) return false;
    }
    return true;
}

LinearProgram ConstraintSystem::toLinearProgram(const std::vector<bool>& objective, Sense sense) const {
    const auto n = worlds.size();
    LinearProgram lp;
    lp.variableCount = n;
    lp.sense = sense;
    auto coefficients = [n](const std::vector<bool>& m) {
        std::vector<Rational> c(n);
        for (std::size_t i = 0; i < n; ++i)
            if (m[i]) c[i] = 1;
        return c;
    };
    for (const auto& row : rows) {
        if (row.lower == row.upper) {
            lp.constraints.push_back({coefficients(row.satisfiedBy), Relation::Equal, row.lower});
            continue;
        }
        // bounds at 0 and 1 are implied by nonnegativity and normalization
        if (row.lower > 0) lp.constraints.push_back({coefficients(row.satisfiedBy), Relation::GreaterEqual, row.lower});
        if (row.upper < 1) lp.constraints.push_back({coefficients(row.satisfiedBy), Relation::LessEqual, row.upper});
    }
    lp.constraints.push_back({std::vector<Rational>(n, Rational(1)), Relation::Equal, Rational(1)});
    lp.objective = coefficients(objective);
    return lp;
}

ConstraintSystem buildConstraints(const EMKnowledgeBase& kb) {
    ConstraintSystem system;
    system.worlds = kb.worlds();
    for (const auto& pf : kb.formulas()) {
        ConstraintSystem::Row row;
        row.lower = pf.lower();
        row.upper = pf.upper();
        row.satisfiedBy.reserve(system.worlds.size());
        for (const auto& w : system.worlds) row.satisfiedBy.push_back(satisfies(w, pf.formula));
        system.rows.push_back(std::move(row));
    }
    return system;
}

LPResult epLp(const ConstraintSystem& system, const std::vector<bool>& objective, Sense sense) {
    const auto solution = solve(system.toLinearProgram(objective, sense));
    LPResult result;
    result.worlds = system.worlds;
    if (solution.status != LPStatus::Optimal) return result;  // the polytope is bounded; only infeasible remains
    result.status = LPOutcome::Optimal;
    result.value = solution.value;
    result.witness = solution.values;
    return result;
}

LPResult epLpMin(const EMKnowledgeBase& kb, const std::vector<World>& objectiveWorlds) {
    const auto system = buildConstraints(kb);
    return epLp(system, system.mask(objectiveWorlds), Sense::Minimize);
}

LPResult epLpMax(const EMKnowledgeBase& kb, const std::vector<World>& objectiveWorlds) {
    const auto system = buildConstraints(kb);
    return epLp(system, system.mask(objectiveWorlds), Sense::Maximize);
}

Entailment maxEntailment(const EMKnowledgeBase& kb, const Formula& query) {
    requireVocabulary(query, kb.universe());
    const auto system = buildConstraints(kb);
    std::vector<bool> objective;
    objective.reserve(system.worlds.size());
    for (const auto& w : system.worlds) objective.push_back(satisfies(w, query));
    const auto lo = epLp(system, objective, Sense::Minimize);
    if (!lo.optimal()) throw TypeIInconsistent();
    const auto hi = epLp(system, objective, Sense::Maximize);
    Entailment e;
    e.lower = lo.value;
    e.upper = hi.value;
    e.tolerance = (hi.value - lo.value) / 2;
    e.probability = lo.value + e.tolerance;
    return e;
}

bool checkTypeI(const EMKnowledgeBase& kb) {
    const auto system = buildConstraints(kb);
    return epLp(system, std::vector<bool>(system.worlds.size(), false), Sense::Minimize).optimal();
}

bool canHavePositiveProbability(const ConstraintSystem& system, std::size_t worldIndex) {
    std::vector<bool> objective(system.worlds.size(), false);
    if (worldIndex >= objective.size()) return false;
    objective[worldIndex] = true;
    const auto r = epLp(system, objective, Sense::Maximize);
    return r.optimal() && sgn(r.value) > 0;
}

std::vector<bool> positiveWorlds(const ConstraintSystem& system, std::vector<bool> candidates) {
    std::vector<bool> positive(system.worlds.size(), false);
    while (std::find(candidates.begin(), candidates.end(), true) != candidates.end()) {
        const auto r = epLp(system, candidates, Sense::Maximize);
        if (!r.optimal()) return std::vector<bool>(system.worlds.size(), false);
        if (sgn(r.value) == 0) break;
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (candidates[i] && sgn(r.witness[i]) > 0) {
                positive[i] = true;
                candidates[i] = false;
            }
    }
    return positive;
}

bool canHavePositiveProbability(const EMKnowledgeBase& kb, const World& world) {
    const auto system = buildConstraints(kb);
    return canHavePositiveProbability(system, system.indexOf(world));
}

} // namespace ppdelp
