#pragma once

#include "ppdelp/rational.hpp"

#include <vector>

namespace ppdelp {

enum class Relation { LessEqual, GreaterEqual, Equal };
enum class Sense { Minimize, Maximize };
enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LinearConstraint {
    std::vector<Rational> coefficients;  // one per variable
    Relation relation = Relation::Equal;
    Rational rhs;
};

/// optimize objective . x  subject to the constraints and x >= 0
struct LinearProgram {
    std::size_t variableCount = 0;
    std::vector<LinearConstraint> constraints;
    std::vector<Rational> objective;  // empty means the zero objective
    Sense sense = Sense::Minimize;
};

struct LPSolution {
    LPStatus status = LPStatus::Infeasible;
    Rational value;
    std::vector<Rational> values;  // primal point when optimal
    std::size_t pivots = 0;
};

/// Two-phase primal simplex over exact rationals on a dense tableau. Entering
/// and leaving variables follow Bland's rule, so it terminates on degenerate
/// problems.
LPSolution solve(const LinearProgram& program);

} // namespace ppdelp
