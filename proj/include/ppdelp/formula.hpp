#pragma once

#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace ppdelp {

class World;

/// Propositional formula over ground atoms built from and/or/not and the
/// constants true/false. Immutable; copies share structure.
class Formula {
public:
    enum class Kind { True, False, Atom, Not, And, Or };

    Formula();  // true

    static Formula constant(bool value);
    static Formula atom(std::string name);
    static Formula negation(Formula operand);
    /// Zero operands yield true, one operand yields the operand itself.
    static Formula conjunction(std::vector<Formula> operands);
    /// Zero operands yield false, one operand yields the operand itself.
    static Formula disjunction(std::vector<Formula> operands);

    Kind kind() const;
    const std::string& atomName() const;
    std::span<const Formula> operands() const;

    /// Structural equality (same tree, same operand order).
    friend bool operator==(const Formula& lhs, const Formula& rhs);

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

Formula operator&&(Formula lhs, Formula rhs);
Formula operator||(Formula lhs, Formula rhs);
Formula operator!(Formula operand);

bool satisfies(const World& world, const Formula& formula);

void collectAtoms(const Formula& formula, std::set<std::string>& out);
std::set<std::string> atomsOf(const Formula& formula);

/// Text in the file grammar: `!`, `&`, `|`, parentheses, `true`, `false`.
std::string toString(const Formula& formula);

} // namespace ppdelp
