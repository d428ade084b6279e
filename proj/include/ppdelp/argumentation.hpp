#pragma once

#include "ppdelp/derivation.hpp"
#include "ppdelp/program.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ppdelp {

/// <A, L>: a support (bitset over the engine's program elements) and the
/// literal it concludes. Supports hold every element used in the derivation,
/// facts and strict rules included.
struct Argument {
    ElementSet support;
    Literal conclusion;

    friend bool operator==(const Argument&, const Argument&) = default;
};

bool operator<(const Argument& lhs, const Argument& rhs);

enum class DefeatKind { None, Proper, Blocking };
enum class Mark { Unmarked, Undefeated, Defeated };
enum class WarrantStatus { Warranted, NotWarranted, Undecided };

std::string toString(DefeatKind kind);
std::string toString(Mark mark);
std::string toString(WarrantStatus status);

/// A node of a dialectical tree. Every child defeats its parent; `defeat`
/// records how this node defeats its own parent (None at the root).
struct DialecticalNode {
    Argument argument;
    DefeatKind defeat = DefeatKind::None;
    Mark mark = Mark::Unmarked;
    std::vector<DialecticalNode> children;

    friend bool operator==(const DialecticalNode&, const DialecticalNode&) = default;
};
using DialecticalTree = DialecticalNode;

/// Leaves are U; an inner node is U iff every child is D.
DialecticalTree markTree(DialecticalTree tree);

/// Argument reasoning over one ground PreDeLP program.
///
/// Derived data (arguments per literal, the defeat relation, specificity
/// comparisons) is computed lazily and memoized, so an engine must not be
/// shared between threads.
class ArgumentationEngine {
public:
    explicit ArgumentationEngine(PreDeLPProgram program);

    const PreDeLPProgram& program() const { return program_; }
    const RuleBase& rules() const { return rules_; }

    ElementSet elementSet(std::span<const std::string> ids) const { return rules_.toSet(ids); }
    ElementSet elementSet(std::initializer_list<std::string> ids) const;
    std::vector<std::string> elementIds(const ElementSet& set) const { return rules_.ids(set); }

    bool defeasiblyDerives(const ElementSet& elements, const Literal& literal) const;
    bool isContradictory(const ElementSet& elements) const { return rules_.isContradictory(elements); }

    /// All arguments for the literal, in a deterministic order.
    std::vector<Argument> buildArguments(const Literal& literal) const;
    /// Arguments for every literal derivable from the whole program.
    const std::vector<Argument>& allArguments() const;
    /// Every argument whose support lies inside a's support (a included).
    const std::vector<Argument>& subarguments(const Argument& a) const;
    static bool isSubargument(const Argument& b, const Argument& a) { return b.support.is_subset_of(a.support); }

    bool attacks(const Argument& attacker, const Argument& attacked) const;
    /// Generalized specificity.
    bool preferredPS(const Argument& a1, const Argument& a2) const;
    /// Presumption-enabled specificity.
    bool preferred(const Argument& a1, const Argument& a2) const;
    /// Compares the attacker against each attacked subargument: proper if it is
    /// preferred to one, blocking if incomparable with one.
    DefeatKind defeats(const Argument& attacker, const Argument& attacked) const;

    /// The tree of all acceptable argumentation lines from the root, unmarked.
    DialecticalTree buildDialecticalTree(const Argument& root) const;
    /// Marked trees for the root. When the presumptions used on even (or odd)
    /// levels are jointly inconsistent, one pruned tree per maximal consistent
    /// choice of presumptions.
    std::vector<DialecticalTree> dialecticalTrees(const Argument& root) const;
    /// Marked trees for every argument of the literal.
    std::vector<DialecticalTree> markedForest(const Literal& literal) const;

    WarrantStatus warrantStatus(const Literal& literal) const;

    /// Literals with a defeasible derivation from the whole program.
    std::vector<Literal> derivableLiterals() const { return rules_.literals(everything_); }

    std::string describe(const Argument& a) const;  // "<{theta1a,delta1a}, s>"
    std::string render(const DialecticalTree& tree) const;

private:
    std::vector<ElementSet> minimalSupports(std::size_t literal, const ElementSet& allowed) const;
    bool disagree(const ElementSet& strictContext, std::size_t l1, std::size_t l2) const;
    void expand(DialecticalNode& node, std::vector<const DialecticalNode*>& line) const;

    PreDeLPProgram program_;
    RuleBase rules_;
    ElementSet strict_, omega_, theta_, delta_, phi_;
    LiteralSet everything_;

    mutable std::map<Literal, std::vector<Argument>> argumentsByLiteral_;
    mutable std::optional<std::vector<Argument>> allArguments_;
    mutable std::map<Argument, std::vector<Argument>> subarguments_;
    mutable std::map<std::pair<Argument, Argument>, bool> preferredPS_;
    mutable std::map<std::pair<Argument, Argument>, DefeatKind> defeats_;
};

} // namespace ppdelp
