#pragma once

#include "ppdelp/formula.hpp"
#include "ppdelp/rational.hpp"
#include "ppdelp/simplex.hpp"
#include "ppdelp/world.hpp"

#include <vector>

namespace ppdelp {

/// f : p +- eps, read as  p - eps <= P(f) <= p + eps.
struct ProbabilisticFormula {
    Formula formula;
    Rational probability;
    Rational tolerance;

    /// Throws ValidationError unless 0 <= p <= 1 and 0 <= eps <= min(p, 1 - p).
    static ProbabilisticFormula make(Formula formula, Rational probability, Rational tolerance);

    Rational lower() const { return probability - tolerance; }
    Rational upper() const { return probability + tolerance; }

    friend bool operator==(const ProbabilisticFormula&, const ProbabilisticFormula&) = default;
};

/// Probabilistic knowledge base over a fixed atom universe and oneOf constraints.
class EMKnowledgeBase {
public:
    EMKnowledgeBase() = default;
    /// The universe is extended with every atom the formulas mention.
    EMKnowledgeBase(std::vector<ProbabilisticFormula> formulas, Universe universe,
                    std::vector<IntegrityConstraint> constraints = {});
    /// Universe = atoms of the formulas and constraints.
    explicit EMKnowledgeBase(std::vector<ProbabilisticFormula> formulas,
                             std::vector<IntegrityConstraint> constraints = {});

    const std::vector<ProbabilisticFormula>& formulas() const { return formulas_; }
    const Universe& universe() const { return universe_; }
    const std::vector<IntegrityConstraint>& constraints() const { return constraints_; }

    /// Same formulas and constraints over a larger universe.
    EMKnowledgeBase withUniverse(const Universe& universe) const;

    std::vector<World> worlds() const { return enumerateWorlds(universe_, constraints_); }

    friend bool operator==(const EMKnowledgeBase&, const EMKnowledgeBase&) = default;

private:
    std::vector<ProbabilisticFormula> formulas_;
    Universe universe_;
    std::vector<IntegrityConstraint> constraints_;
};

/// The linear constraint system over world probabilities: one variable per
/// conforming world, one two-sided row per formula, plus normalization.
struct ConstraintSystem {
    struct Row {
        std::vector<bool> satisfiedBy;  // per world
        Rational lower;
        Rational upper;
    };
    std::vector<World> worlds;
    std::vector<Row> rows;

    std::size_t variableCount() const { return worlds.size(); }
    /// Index of the world in `worlds`, or worlds.size() when absent.
    std::size_t indexOf(const World& world) const;
    /// Membership vector of a world set.
    std::vector<bool> mask(const std::vector<World>& subset) const;
    /// Nonnegative, sums to one, and within every row's bounds.
    bool admits(const std::vector<Rational>& distribution) const;

    LinearProgram toLinearProgram(const std::vector<bool>& objective, Sense sense) const;
};

ConstraintSystem buildConstraints(const EMKnowledgeBase& kb);

enum class LPOutcome { Optimal, Infeasible };

struct LPResult {
    LPOutcome status = LPOutcome::Infeasible;
    Rational value;
    std::vector<World> worlds;
    std::vector<Rational> witness;  // distribution attaining the optimum, aligned with worlds

    bool optimal() const { return status == LPOutcome::Optimal; }
};

/// min / max of P(objectiveWorlds) over distributions satisfying kb.
LPResult epLpMin(const EMKnowledgeBase& kb, const std::vector<World>& objectiveWorlds);
LPResult epLpMax(const EMKnowledgeBase& kb, const std::vector<World>& objectiveWorlds);
LPResult epLp(const ConstraintSystem& system, const std::vector<bool>& objective, Sense sense);

struct Entailment {
    Rational probability;  // l + eps
    Rational tolerance;    // (u - l) / 2
    Rational lower;
    Rational upper;
};

/// Tightest q : p +- eps entailed by kb. Throws TypeIInconsistent when kb is infeasible.
Entailment maxEntailment(const EMKnowledgeBase& kb, const Formula& query);

/// Some distribution satisfies kb.
bool checkTypeI(const EMKnowledgeBase& kb);

/// Some distribution satisfying kb gives the world positive probability.
bool canHavePositiveProbability(const EMKnowledgeBase& kb, const World& world);
bool canHavePositiveProbability(const ConstraintSystem& system, std::size_t worldIndex);
/// Which of the candidate worlds can get positive probability. Each round
/// maximizes the candidates' total mass and keeps the witness's support, so
/// a set with no such world costs one LP. Empty when the kb is infeasible.
std::vector<bool> positiveWorlds(const ConstraintSystem& system, std::vector<bool> candidates);

} // namespace ppdelp
