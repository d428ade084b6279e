#include "ppdelp/simplex.hpp"

#include "ppdelp/error.hpp"

#include <optional>

namespace ppdelp {

namespace {

class Tableau {
public:
    // rows_[i] has columns_ + 1 entries; the last one is the right-hand side.
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> cost;  // reduced costs; last entry is -objective
    std::vector<std::size_t> basis;
    std::vector<bool> allowed;   // columns that may enter
    std::size_t columns = 0;
    std::size_t pivots = 0;

    const Rational& rhs(std::size_t i) const { return rows[i][columns]; }

    void pivot(std::size_t r, std::size_t c) {
        ++pivots;
        auto& prow = rows[r];
        const Rational inv = 1 / prow[c];
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j <= columns; ++j) {
            if (sgn(prow[j]) != 0) {
                prow[j] *= inv;
                nz.push_back(j);
            }
        }
        auto eliminate = [&](std::vector<Rational>& row) {
            if (sgn(row[c]) == 0) return;
            const Rational factor = row[c];
            for (auto j : nz) row[j] -= factor * prow[j];
        };
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r) eliminate(rows[i]);
        eliminate(cost);
        basis[r] = c;
    }

    // Minimizes the current cost row. Returns false when unbounded.
    bool optimize() {
        for (;;) {
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < columns; ++j) {
                if (allowed[j] && sgn(cost[j]) < 0) {
                    entering = j;
                    break;
                }
            }
            if (!entering) return true;
            const auto c = *entering;
            std::optional<std::size_t> leaving;
            Rational best;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (sgn(rows[i][c]) <= 0) continue;
                Rational ratio = rhs(i) / rows[i][c];
                if (!leaving || ratio < best || (ratio == best && basis[i] < basis[*leaving])) {
                    leaving = i;
                    best = ratio;
                }
            }
            if (!leaving) return false;
            pivot(*leaving, c);
        }
    }

    void setObjective(const std::vector<Rational>& costs) {
        cost.assign(columns + 1, Rational(0));
        for (std::size_t j = 0; j < costs.size(); ++j) cost[j] = costs[j];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto b = basis[i];
            if (b >= costs.size() || sgn(costs[b]) == 0) continue;
            const Rational cb = costs[b];
            for (std::size_t j = 0; j <= columns; ++j)
                if (sgn(rows[i][j]) != 0) cost[j] -= cb * rows[i][j];
        }
    }
};

} // namespace

LPSolution solve(const LinearProgram& program) {
    const std::size_t n = program.variableCount;
    for (const auto& con : program.constraints)
        if (con.coefficients.size() != n) throw ValidationError("constraint width does not match variable count");
    if (!program.objective.empty() && program.objective.size() != n)
        throw ValidationError("objective width does not match variable count");

    // Normalize to nonnegative right-hand sides.
    struct Row {
        std::vector<Rational> coefficients;
        Relation relation;
        Rational rhs;
    };
    std::vector<Row> normalized;
    std::size_t slackCount = 0, artificialCount = 0;
    for (const auto& con : program.constraints) {
        Row row{con.coefficients, con.relation, con.rhs};
        if (sgn(row.rhs) < 0) {
            for (auto& a : row.coefficients) a = -a;
            row.rhs = -row.rhs;
            if (row.relation == Relation::LessEqual) row.relation = Relation::GreaterEqual;
            else if (row.relation == Relation::GreaterEqual) row.relation = Relation::LessEqual;
        }
        if (row.relation != Relation::Equal) ++slackCount;
        if (row.relation != Relation::LessEqual) ++artificialCount;
        normalized.push_back(std::move(row));
    }

    Tableau t;
    t.columns = n + slackCount + artificialCount;
    const std::size_t firstArtificial = n + slackCount;
    t.allowed.assign(t.columns, true);
    std::size_t nextSlack = n, nextArtificial = firstArtificial;
    for (const auto& row : normalized) {
        std::vector<Rational> r(t.columns + 1);
        for (std::size_t j = 0; j < n; ++j) r[j] = row.coefficients[j];
        r[t.columns] = row.rhs;
        switch (row.relation) {
        case Relation::LessEqual:
            r[nextSlack] = 1;
            t.basis.push_back(nextSlack++);
            break;
        case Relation::GreaterEqual:
            r[nextSlack++] = -1;
            r[nextArtificial] = 1;
            t.basis.push_back(nextArtificial++);
            break;
        case Relation::Equal:
            r[nextArtificial] = 1;
            t.basis.push_back(nextArtificial++);
            break;
        }
        t.rows.push_back(std::move(r));
    }

    LPSolution solution;

    // Phase 1: minimize the sum of artificial variables.
    if (artificialCount > 0) {
        std::vector<Rational> phase1(t.columns);
        for (std::size_t j = firstArtificial; j < t.columns; ++j) phase1[j] = 1;
        t.setObjective(phase1);
        t.optimize();
        if (sgn(t.cost[t.columns]) != 0) {
            solution.status = LPStatus::Infeasible;
            solution.pivots = t.pivots;
            return solution;
        }
        // Drive zero-valued artificials out of the basis; drop redundant rows.
        for (std::size_t i = 0; i < t.rows.size();) {
            if (t.basis[i] < firstArtificial) {
                ++i;
                continue;
            }
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < firstArtificial; ++j) {
                if (sgn(t.rows[i][j]) != 0) {
                    col = j;
                    break;
                }
            }
            if (col) {
                t.pivot(i, *col);
                ++i;
            } else {
                t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
                t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
        for (std::size_t j = firstArtificial; j < t.columns; ++j) t.allowed[j] = false;
    }

    // Phase 2.
    std::vector<Rational> costs(n);
    if (!program.objective.empty()) {
        for (std::size_t j = 0; j < n; ++j)
            costs[j] = program.sense == Sense::Maximize ? Rational(-program.objective[j]) : program.objective[j];
    }
    t.setObjective(costs);
    if (!t.optimize()) {
        solution.status = LPStatus::Unbounded;
        solution.pivots = t.pivots;
        return solution;
    }

    solution.status = LPStatus::Optimal;
    solution.values.assign(n, Rational(0));
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        if (t.basis[i] < n) solution.values[t.basis[i]] = t.rhs(i);
    Rational value = 0;
    if (!program.objective.empty())
        for (std::size_t j = 0; j < n; ++j) value += program.objective[j] * solution.values[j];
    solution.value = value;
    solution.pivots = t.pivots;
    return solution;
}

} // namespace ppdelp
