#include "ppdelp/argumentation.hpp"

#include "ppdelp/error.hpp"

#include <algorithm>
#include <functional>

namespace ppdelp {

bool operator<(const Argument& lhs, const Argument& rhs) {
    if (lhs.conclusion != rhs.conclusion) return lhs.conclusion < rhs.conclusion;
    if (lhs.support.size() != rhs.support.size()) return lhs.support.size() < rhs.support.size();
    return lhs.support < rhs.support;
}

std::string toString(DefeatKind kind) {
    switch (kind) {
    case DefeatKind::None: return "none";
    case DefeatKind::Proper: return "proper";
    case DefeatKind::Blocking: return "blocking";
    }
    return "?";
}

std::string toString(Mark mark) {
    switch (mark) {
    case Mark::Unmarked: return "-";
    case Mark::Undefeated: return "U";
    case Mark::Defeated: return "D";
    }
    return "?";
}

std::string toString(WarrantStatus status) {
    switch (status) {
    case WarrantStatus::Warranted: return "warranted";
    case WarrantStatus::NotWarranted: return "not warranted";
    case WarrantStatus::Undecided: return "undecided";
    }
    return "?";
}

namespace {

// Drops duplicates and proper supersets.
std::vector<ElementSet> minimize(std::vector<ElementSet> sets) {
    std::sort(sets.begin(), sets.end(), [](const ElementSet& a, const ElementSet& b) {
        auto ca = a.count(), cb = b.count();
        return ca != cb ? ca < cb : a < b;
    });
    std::vector<ElementSet> out;
    for (auto& s : sets) {
        bool dominated = std::any_of(out.begin(), out.end(), [&](const ElementSet& kept) {
            return kept.is_subset_of(s);
        });
        if (!dominated) out.push_back(std::move(s));
    }
    return out;
}

} // namespace

ArgumentationEngine::ArgumentationEngine(PreDeLPProgram program)
    : program_(std::move(program)), rules_(program_.elements()) {
    theta_ = rules_.ofKind(ElementKind::Fact);
    omega_ = rules_.ofKind(ElementKind::StrictRule);
    phi_ = rules_.ofKind(ElementKind::Presumption);
    delta_ = rules_.ofKind(ElementKind::DefeasibleRule);
    strict_ = theta_ | omega_;
    everything_ = rules_.closure(rules_.allElements());
}

ElementSet ArgumentationEngine::elementSet(std::initializer_list<std::string> ids) const {
    std::vector<std::string> v(ids);
    return rules_.toSet(v);
}

bool ArgumentationEngine::defeasiblyDerives(const ElementSet& elements, const Literal& literal) const {
    return rules_.derives(elements, literal);
}

std::vector<ElementSet> ArgumentationEngine::minimalSupports(std::size_t literal, const ElementSet& allowed) const {
    // Backward chaining over acyclic derivation trees; a literal already on the
    // current path is never re-derived below itself.
    std::function<std::vector<ElementSet>(std::size_t, LiteralSet&)> supports =
        [&](std::size_t lit, LiteralSet& path) -> std::vector<ElementSet> {
        std::vector<ElementSet> found;
        path.set(lit);
        for (auto e = allowed.find_first(); e != ElementSet::npos; e = allowed.find_next(e)) {
            if (rules_.head(e) != lit) continue;
            ElementSet self = rules_.noElements();
            self.set(e);
            std::vector<ElementSet> partial{self};
            for (auto b : rules_.body(e)) {
                if (path.test(b)) {
                    partial.clear();
                    break;
                }
                auto sub = supports(b, path);
                std::vector<ElementSet> combined;
                for (const auto& p : partial)
                    for (const auto& s : sub) combined.push_back(p | s);
                partial = minimize(std::move(combined));
                if (partial.empty()) break;
            }
            found.insert(found.end(), partial.begin(), partial.end());
        }
        path.reset(lit);
        return minimize(std::move(found));
    };
    LiteralSet path = rules_.noLiterals();
    return supports(literal, path);
}

std::vector<Argument> ArgumentationEngine::buildArguments(const Literal& literal) const {
    if (auto it = argumentsByLiteral_.find(literal); it != argumentsByLiteral_.end()) return it->second;
    std::vector<Argument> out;
    if (auto idx = rules_.literalIndex(literal)) {
        for (auto& s : minimalSupports(*idx, rules_.allElements())) {
            if (rules_.isContradictory(strict_ | s)) continue;
            out.push_back(Argument{std::move(s), literal});
        }
    }
    std::sort(out.begin(), out.end());
    argumentsByLiteral_.emplace(literal, out);
    return out;
}

const std::vector<Argument>& ArgumentationEngine::allArguments() const {
    if (!allArguments_) {
        std::vector<Argument> all;
        for (const auto& lit : rules_.literals(everything_)) {
            auto args = buildArguments(lit);
            all.insert(all.end(), args.begin(), args.end());
        }
        allArguments_ = std::move(all);
    }
    return *allArguments_;
}

const std::vector<Argument>& ArgumentationEngine::subarguments(const Argument& a) const {
    if (auto it = subarguments_.find(a); it != subarguments_.end()) return it->second;
    std::vector<Argument> subs;
    const auto derived = rules_.closure(a.support);
    for (auto l = derived.find_first(); l != LiteralSet::npos; l = derived.find_next(l))
        for (auto& s : minimalSupports(l, a.support)) subs.push_back(Argument{std::move(s), rules_.literal(l)});
    std::sort(subs.begin(), subs.end());
    return subarguments_.emplace(a, std::move(subs)).first->second;
}

bool ArgumentationEngine::disagree(const ElementSet& strictContext, std::size_t l1, std::size_t l2) const {
    LiteralSet seeds = rules_.noLiterals();
    seeds.set(l1);
    seeds.set(l2);
    return rules_.contradictory(rules_.closure(strictContext, seeds));
}

bool ArgumentationEngine::attacks(const Argument& attacker, const Argument& attacked) const {
    auto l2 = rules_.literalIndex(attacker.conclusion);
    if (!l2) return false;
    const ElementSet context = (attacker.support | attacked.support) & strict_;
    const auto derived = rules_.closure(attacked.support);
    for (auto l = derived.find_first(); l != LiteralSet::npos; l = derived.find_next(l))
        if (disagree(context, *l2, l)) return true;
    return false;
}

bool ArgumentationEngine::preferredPS(const Argument& a1, const Argument& a2) const {
    const auto key = std::make_pair(a1, a2);
    if (auto it = preferredPS_.find(key); it != preferredPS_.end()) return it->second;

    const auto l1 = rules_.literalIndex(a1.conclusion);
    const auto l2 = rules_.literalIndex(a2.conclusion);
    if (!l1 || !l2) throw ValidationError("argument conclusion outside the program vocabulary");

    const ElementSet omega = (a1.support | a2.support) & omega_;
    const ElementSet withDelta1 = omega | (a1.support & delta_);
    const ElementSet withDelta2 = omega | (a2.support & delta_);

    // Only literals that can matter to these derivations are enumerated for H:
    // the two conclusions and the bodies of the rules involved. Any other
    // member of H is inert, and dropping it preserves consistency.
    LiteralSet relevantSet = rules_.noLiterals();
    relevantSet.set(*l1);
    relevantSet.set(*l2);
    const ElementSet rulesUsed = withDelta1 | withDelta2;
    for (auto e = rulesUsed.find_first(); e != ElementSet::npos; e = rulesUsed.find_next(e))
        for (auto b : rules_.body(e)) relevantSet.set(b);
    relevantSet &= everything_;
    std::vector<std::size_t> relevant;
    for (auto l = relevantSet.find_first(); l != LiteralSet::npos; l = relevantSet.find_next(l)) relevant.push_back(l);
    if (relevant.size() > 24) throw ValidationError("specificity comparison over too many literals");

    bool condition1 = true;
    bool condition2 = false;
    const std::uint64_t subsets = std::uint64_t{1} << relevant.size();
    for (std::uint64_t mask = 0; mask < subsets && condition1; ++mask) {
        LiteralSet h = rules_.noLiterals();
        for (std::size_t k = 0; k < relevant.size(); ++k)
            if (mask >> k & 1U) h.set(relevant[k]);
        const auto base = rules_.closure(omega, h);
        if (rules_.contradictory(base)) continue;
        const bool d1 = rules_.closure(withDelta1, h).test(*l1);
        const bool d2 = rules_.closure(withDelta2, h).test(*l2);
        if (d1 && !base.test(*l1) && !d2) condition1 = false;
        if (d2 && !base.test(*l2) && !d1) condition2 = true;
    }
    const bool result = condition1 && condition2;
    preferredPS_.emplace(key, result);
    return result;
}

bool ArgumentationEngine::preferred(const Argument& a1, const Argument& a2) const {
    const ElementSet p1 = a1.support & phi_;
    const ElementSet p2 = a2.support & phi_;
    const bool factual1 = p1.none();
    const bool factual2 = p2.none();
    if (factual1 && factual2) return preferredPS(a1, a2);
    if (factual1) return true;
    if (factual2) return false;
    if (p1.is_proper_subset_of(p2)) return true;
    return p1 == p2 && preferredPS(a1, a2);
}

DefeatKind ArgumentationEngine::defeats(const Argument& attacker, const Argument& attacked) const {
    const auto key = std::make_pair(attacker, attacked);
    if (auto it = defeats_.find(key); it != defeats_.end()) return it->second;

    DefeatKind result = DefeatKind::None;
    if (auto l2 = rules_.literalIndex(attacker.conclusion)) {
        const ElementSet context = (attacker.support | attacked.support) & strict_;
        for (const auto& sub : subarguments(attacked)) {
            if (!disagree(context, *l2, *rules_.literalIndex(sub.conclusion))) continue;
            if (preferred(attacker, sub)) {
                result = DefeatKind::Proper;
                break;
            }
            if (!preferred(sub, attacker)) result = DefeatKind::Blocking;
        }
    }
    defeats_.emplace(key, result);
    return result;
}

void ArgumentationEngine::expand(DialecticalNode& node, std::vector<const DialecticalNode*>& line) const {
    const std::size_t position = line.size();  // position a child would take
    for (const auto& candidate : allArguments()) {
        const auto kind = defeats(candidate, node.argument);
        if (kind == DefeatKind::None) continue;
        // a blocking defeater can only be answered by a proper one
        if (node.defeat == DefeatKind::Blocking && kind != DefeatKind::Proper) continue;
        if (std::any_of(line.begin(), line.end(),
                        [&](const DialecticalNode* n) { return isSubargument(candidate, n->argument); }))
            continue;
        // supporting (even) and interfering (odd) arguments must each be concordant
        ElementSet side = strict_ | candidate.support;
        for (std::size_t i = position % 2; i < line.size(); i += 2) side |= line[i]->argument.support;
        if (rules_.isContradictory(side)) continue;

        DialecticalNode child{candidate, kind, Mark::Unmarked, {}};
        line.push_back(&child);
        expand(child, line);
        line.pop_back();
        node.children.push_back(std::move(child));
    }
}

DialecticalTree ArgumentationEngine::buildDialecticalTree(const Argument& root) const {
    DialecticalNode tree{root, DefeatKind::None, Mark::Unmarked, {}};
    std::vector<const DialecticalNode*> line{&tree};
    expand(tree, line);
    return tree;
}

namespace {

void collectPresumptions(const DialecticalNode& node, const ElementSet& phi, std::size_t depth, ElementSet& even,
                         ElementSet& odd) {
    (depth % 2 == 0 ? even : odd) |= node.argument.support & phi;
    for (const auto& c : node.children) collectPresumptions(c, phi, depth + 1, even, odd);
}

std::optional<DialecticalNode> prune(const DialecticalNode& node, const ElementSet& phi, const ElementSet& even,
                                     const ElementSet& odd, std::size_t depth) {
    const ElementSet& allowed = depth % 2 == 0 ? even : odd;
    if (!(node.argument.support & phi).is_subset_of(allowed)) return std::nullopt;
    DialecticalNode out{node.argument, node.defeat, Mark::Unmarked, {}};
    for (const auto& c : node.children)
        if (auto kept = prune(c, phi, even, odd, depth + 1)) out.children.push_back(std::move(*kept));
    return out;
}

} // namespace

std::vector<DialecticalTree> ArgumentationEngine::dialecticalTrees(const Argument& root) const {
    auto tree = buildDialecticalTree(root);
    ElementSet even = rules_.noElements(), odd = rules_.noElements();
    collectPresumptions(tree, phi_, 0, even, odd);
    if (!rules_.isContradictory(strict_ | even) && !rules_.isContradictory(strict_ | odd))
        return {markTree(std::move(tree))};

    const ElementSet rootPresumptions = root.support & phi_;
    std::vector<DialecticalTree> out;
    for (const auto& e : maximalConsistentSubsets(rules_, even, strict_)) {
        if (!rootPresumptions.is_subset_of(e)) continue;
        for (const auto& o : maximalConsistentSubsets(rules_, odd, strict_)) {
            auto pruned = prune(tree, phi_, e, o, 0);
            if (!pruned) continue;
            auto marked = markTree(std::move(*pruned));
            if (std::find(out.begin(), out.end(), marked) == out.end()) out.push_back(std::move(marked));
        }
    }
    return out;
}

std::vector<DialecticalTree> ArgumentationEngine::markedForest(const Literal& literal) const {
    std::vector<DialecticalTree> forest;
    for (const auto& a : buildArguments(literal)) {
        auto trees = dialecticalTrees(a);
        forest.insert(forest.end(), std::make_move_iterator(trees.begin()), std::make_move_iterator(trees.end()));
    }
    return forest;
}

WarrantStatus ArgumentationEngine::warrantStatus(const Literal& literal) const {
    auto anyUndefeated = [](const std::vector<DialecticalTree>& forest) {
        return std::any_of(forest.begin(), forest.end(),
                           [](const DialecticalTree& t) { return t.mark == Mark::Undefeated; });
    };
    if (anyUndefeated(markedForest(literal))) return WarrantStatus::Warranted;
    if (anyUndefeated(markedForest(literal.complement()))) return WarrantStatus::NotWarranted;
    return WarrantStatus::Undecided;
}

std::string ArgumentationEngine::describe(const Argument& a) const {
    std::string out = "<{";
    const auto ids = rules_.ids(a.support);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ',';
        out += ids[i];
    }
    return out + "}, " + toString(a.conclusion) + ">";
}

namespace {

void renderNode(const ArgumentationEngine& engine, const DialecticalNode& node, std::size_t depth, std::string& out) {
    out.append(depth * 2, ' ');
    out += engine.describe(node.argument);
    out += " [" + toString(node.mark) + "]";
    if (node.defeat != DefeatKind::None) out += " (" + toString(node.defeat) + " defeater)";
    out += '\n';
    for (const auto& c : node.children) renderNode(engine, c, depth + 1, out);
}

} // namespace

std::string ArgumentationEngine::render(const DialecticalTree& tree) const {
    std::string out;
    renderNode(*this, tree, 0, out);
    return out;
}

DialecticalTree markTree(DialecticalTree tree) {
    bool anyUndefeatedChild = false;
    for (auto& c : tree.children) {
        c = markTree(std::move(c));
        anyUndefeatedChild |= c.mark == Mark::Undefeated;
    }
    tree.mark = anyUndefeatedChild ? Mark::Defeated : Mark::Undefeated;
    return tree;
}

} // namespace ppdelp
