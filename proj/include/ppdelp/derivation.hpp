#pragma once

#include "ppdelp/program.hpp"

#include <boost/dynamic_bitset.hpp>

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace ppdelp {

/// Bitset over the elements of one RuleBase.
using ElementSet = boost::dynamic_bitset<>;
/// Bitset over the interned literals of one RuleBase.
using LiteralSet = boost::dynamic_bitset<>;

/// A ground element list compiled for forward chaining. Literal index 2k is
/// atom k, 2k+1 its strong negation.
class RuleBase {
public:
    RuleBase() = default;
    explicit RuleBase(std::vector<AMElement> elements);

    std::size_t elementCount() const { return elements_.size(); }
    std::size_t literalCount() const { return literals_.size(); }

    const AMElement& element(std::size_t i) const { return elements_[i]; }
    const std::vector<AMElement>& elements() const { return elements_; }
    std::optional<std::size_t> elementIndex(const std::string& id) const;

    std::optional<std::size_t> literalIndex(const Literal& literal) const;
    const Literal& literal(std::size_t i) const { return literals_[i]; }
    static std::size_t complement(std::size_t i) { return i ^ 1U; }

    std::size_t head(std::size_t element) const { return heads_[element]; }
    const std::vector<std::size_t>& body(std::size_t element) const { return bodies_[element]; }

    ElementSet noElements() const { return ElementSet(elements_.size()); }
    ElementSet allElements() const;
    ElementSet ofKind(ElementKind kind) const;
    ElementSet strictPart() const;  // facts and strict rules
    LiteralSet noLiterals() const { return LiteralSet(literals_.size()); }

    ElementSet toSet(std::span<const std::string> ids) const;  // throws on unknown ids
    std::vector<std::string> ids(const ElementSet& set) const;

    /// Literals derivable from the seeds using the given elements.
    LiteralSet closure(const ElementSet& elements, const LiteralSet& seeds) const;
    LiteralSet closure(const ElementSet& elements) const { return closure(elements, noLiterals()); }

    bool contradictory(const LiteralSet& literals) const;
    bool isContradictory(const ElementSet& elements) const { return contradictory(closure(elements)); }
    bool derives(const ElementSet& elements, const Literal& literal) const;

    std::vector<Literal> literals(const LiteralSet& set) const;

private:
    std::size_t intern(const Literal& literal);

    std::vector<AMElement> elements_;
    std::map<std::string, std::size_t> elementIndex_;
    std::vector<Literal> literals_;
    std::map<std::string, std::size_t> atomIndex_;
    std::vector<std::size_t> heads_;
    std::vector<std::vector<std::size_t>> bodies_;
};

/// Subset-maximal S with within ⊇ S and base ∪ S non-contradictory. Found by
/// include/exclude branching with a maximality check at each leaf.
std::vector<ElementSet> maximalConsistentSubsets(const RuleBase& rules, const ElementSet& within,
                                                 const ElementSet& base);

/// Classical consistency of a ground element list (no literal derivable together with its complement).
bool isClassicallyConsistent(const std::vector<AMElement>& elements);

} // namespace ppdelp
