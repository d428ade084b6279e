#include "ppdelp/formula.hpp"

#include "ppdelp/world.hpp"

#include <algorithm>
#include <cassert>

namespace ppdelp {

struct Formula::Node {
    Kind kind;
    std::string atom;
    std::vector<Formula> operands;
};

Formula::Formula() : Formula(constant(true)) {}

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::constant(bool value) {
    static const auto t = std::make_shared<const Node>(Node{Kind::True, {}, {}});
    static const auto f = std::make_shared<const Node>(Node{Kind::False, {}, {}});
    return Formula(value ? t : f);
}

Formula Formula::atom(std::string name) {
    return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}}));
}

Formula Formula::negation(Formula operand) {
    return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {std::move(operand)}}));
}

Formula Formula::conjunction(std::vector<Formula> operands) {
    if (operands.empty()) return constant(true);
    if (operands.size() == 1) return std::move(operands.front());
    return Formula(std::make_shared<const Node>(Node{Kind::And, {}, std::move(operands)}));
}

Formula Formula::disjunction(std::vector<Formula> operands) {
    if (operands.empty()) return constant(false);
    if (operands.size() == 1) return std::move(operands.front());
    return Formula(std::make_shared<const Node>(Node{Kind::Or, {}, std::move(operands)}));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const std::string& Formula::atomName() const {
    assert(node_->kind == Kind::Atom);
    return node_->atom;
}

std::span<const Formula> Formula::operands() const { return node_->operands; }

bool operator==(const Formula& lhs, const Formula& rhs) {
    if (lhs.node_ == rhs.node_) return true;
    return lhs.node_->kind == rhs.node_->kind && lhs.node_->atom == rhs.node_->atom &&
           lhs.node_->operands == rhs.node_->operands;
}

Formula operator&&(Formula lhs, Formula rhs) { return Formula::conjunction({std::move(lhs), std::move(rhs)}); }
Formula operator||(Formula lhs, Formula rhs) { return Formula::disjunction({std::move(lhs), std::move(rhs)}); }
Formula operator!(Formula operand) { return Formula::negation(std::move(operand)); }

bool satisfies(const World& world, const Formula& formula) {
    switch (formula.kind()) {
    case Formula::Kind::True: return true;
    case Formula::Kind::False: return false;
    case Formula::Kind::Atom: return world.contains(formula.atomName());
    case Formula::Kind::Not: return !satisfies(world, formula.operands().front());
    case Formula::Kind::And:
        return std::all_of(formula.operands().begin(), formula.operands().end(),
                           [&](const Formula& f) { return satisfies(world, f); });
    case Formula::Kind::Or:
        return std::any_of(formula.operands().begin(), formula.operands().end(),
                           [&](const Formula& f) { return satisfies(world, f); });
    }
    return false;
}

void collectAtoms(const Formula& formula, std::set<std::string>& out) {
    if (formula.kind() == Formula::Kind::Atom) out.insert(formula.atomName());
    for (const auto& op : formula.operands()) collectAtoms(op, out);
}

std::set<std::string> atomsOf(const Formula& formula) {
    std::set<std::string> out;
    collectAtoms(formula, out);
    return out;
}

namespace {

bool isCompound(const Formula& f) {
    return f.kind() == Formula::Kind::And || f.kind() == Formula::Kind::Or;
}

void print(const Formula& f, std::string& out) {
    switch (f.kind()) {
    case Formula::Kind::True: out += "true"; return;
    case Formula::Kind::False: out += "false"; return;
    case Formula::Kind::Atom: out += f.atomName(); return;
    case Formula::Kind::Not: {
        const auto& op = f.operands().front();
        out += '!';
        if (isCompound(op)) {
            out += '(';
            print(op, out);
            out += ')';
        } else {
            print(op, out);
        }
        return;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or: {
        const bool isAnd = f.kind() == Formula::Kind::And;
        bool first = true;
        for (const auto& op : f.operands()) {
            if (!first) out += isAnd ? " & " : " | ";
            first = false;
            // nested operators of the same or lower precedence keep their grouping
            bool parens = isAnd ? isCompound(op) : op.kind() == Formula::Kind::Or;
            if (parens) out += '(';
            print(op, out);
            if (parens) out += ')';
        }
        return;
    }
    }
}

} // namespace

std::string toString(const Formula& formula) {
    std::string out;
    print(formula, out);
    return out;
}

} // namespace ppdelp
