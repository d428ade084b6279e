#include "ppdelp/derivation.hpp"

#include "ppdelp/error.hpp"

#include <functional>

namespace ppdelp {

RuleBase::RuleBase(std::vector<AMElement> elements) : elements_(std::move(elements)) {
    heads_.reserve(elements_.size());
    bodies_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        const auto& e = elements_[i];
        elementIndex_.emplace(e.id, i);
        heads_.push_back(intern(e.head));
        std::vector<std::size_t> body;
        for (const auto& b : e.body) body.push_back(intern(b));
        bodies_.push_back(std::move(body));
    }
}

std::size_t RuleBase::intern(const Literal& literal) {
    auto [it, inserted] = atomIndex_.emplace(literal.atom, literals_.size() / 2);
    if (inserted) {
        literals_.push_back(Literal{literal.atom, false});
        literals_.push_back(Literal{literal.atom, true});
    }
    return it->second * 2 + (literal.negated ? 1 : 0);
}

std::optional<std::size_t> RuleBase::elementIndex(const std::string& id) const {
    auto it = elementIndex_.find(id);
    if (it == elementIndex_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> RuleBase::literalIndex(const Literal& literal) const {
    auto it = atomIndex_.find(literal.atom);
    if (it == atomIndex_.end()) return std::nullopt;
    return it->second * 2 + (literal.negated ? 1 : 0);
}

ElementSet RuleBase::allElements() const {
    ElementSet s(elements_.size());
    s.set();
    return s;
}

ElementSet RuleBase::ofKind(ElementKind kind) const {
    ElementSet s(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i].kind == kind) s.set(i);
    return s;
}

ElementSet RuleBase::strictPart() const {
    return ofKind(ElementKind::Fact) | ofKind(ElementKind::StrictRule);
}

ElementSet RuleBase::toSet(std::span<const std::string> ids) const {
    ElementSet s(elements_.size());
    for (const auto& id : ids) {
        auto i = elementIndex(id);
        if (!i) throw ValidationError("unknown AM element '" + id + "'");
        s.set(*i);
    }
    return s;
}

std::vector<std::string> RuleBase::ids(const ElementSet& set) const {
    std::vector<std::string> out;
    for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) out.push_back(elements_[i].id);
    return out;
}

LiteralSet RuleBase::closure(const ElementSet& elements, const LiteralSet& seeds) const {
    LiteralSet derived = seeds;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto i = elements.find_first(); i != ElementSet::npos; i = elements.find_next(i)) {
            if (derived.test(heads_[i])) continue;
            bool fires = true;
            for (auto b : bodies_[i]) {
                if (!derived.test(b)) {
                    fires = false;
                    break;
                }
            }
            if (fires) {
                derived.set(heads_[i]);
                changed = true;
            }
        }
    }
    return derived;
}

bool RuleBase::contradictory(const LiteralSet& literals) const {
    for (std::size_t i = 0; i + 1 < literals.size(); i += 2)
        if (literals.test(i) && literals.test(i + 1)) return true;
    return false;
}

bool RuleBase::derives(const ElementSet& elements, const Literal& literal) const {
    auto idx = literalIndex(literal);
    return idx && closure(elements).test(*idx);
}

std::vector<Literal> RuleBase::literals(const LiteralSet& set) const {
    std::vector<Literal> out;
    for (auto i = set.find_first(); i != LiteralSet::npos; i = set.find_next(i)) out.push_back(literals_[i]);
    return out;
}

std::vector<ElementSet> maximalConsistentSubsets(const RuleBase& rules, const ElementSet& within,
                                                 const ElementSet& base) {
    std::vector<std::size_t> order;
    for (auto i = within.find_first(); i != ElementSet::npos; i = within.find_next(i)) order.push_back(i);

    auto consistent = [&](const ElementSet& s) { return !rules.isContradictory(base | s); };

    std::vector<ElementSet> out;
    ElementSet current = rules.noElements();
    std::function<void(std::size_t)> branch = [&](std::size_t k) {
        if (k == order.size()) {
            for (auto i : order) {
                if (current.test(i)) continue;
                ElementSet grown = current;
                grown.set(i);
                if (consistent(grown)) return;  // not maximal
            }
            out.push_back(current);
            return;
        }
        const auto i = order[k];
        current.set(i);
        if (consistent(current)) branch(k + 1);
        current.reset(i);
        branch(k + 1);
    };
    if (!consistent(current)) return out;
    branch(0);
    return out;
}

bool isClassicallyConsistent(const std::vector<AMElement>& elements) {
    RuleBase rules(elements);
    return !rules.isContradictory(rules.allElements());
}

} // namespace ppdelp
