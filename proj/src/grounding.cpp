#include "ppdelp/error.hpp"
#include "ppdelp/program.hpp"

#include <algorithm>
#include <functional>

namespace ppdelp {

bool SchematicAtom::ground() const {
    return std::none_of(args.begin(), args.end(), [](const Term& t) { return t.variable; });
}

std::string toString(const SchematicAtom& atom) {
    std::string out = atom.predicate;
    if (atom.args.empty()) return out;
    out += '(';
    for (std::size_t i = 0; i < atom.args.size(); ++i) {
        if (i) out += ',';
        out += atom.args[i].name;
    }
    return out + ')';
}

std::string canonicalAtom(const SchematicAtom& atom) {
    if (!atom.ground()) throw ValidationError("atom '" + toString(atom) + "' is not ground");
    return toString(atom);
}

std::vector<std::string> SchematicElement::variables() const {
    std::vector<std::string> vars;
    auto visit = [&](const SchematicLiteral& l) {
        for (const auto& t : l.atom.args)
            if (t.variable && std::find(vars.begin(), vars.end(), t.name) == vars.end()) vars.push_back(t.name);
    };
    visit(head);
    for (const auto& b : body) visit(b);
    return vars;
}

bool SchematicProgram::ground() const {
    return std::all_of(elements.begin(), elements.end(),
                       [](const SchematicElement& e) { return e.variables().empty(); });
}

std::set<std::string> SchematicProgram::constants() const {
    std::set<std::string> out;
    auto visit = [&](const SchematicLiteral& l) {
        for (const auto& t : l.atom.args)
            if (!t.variable) out.insert(t.name);
    };
    for (const auto& e : elements) {
        visit(e.head);
        for (const auto& b : e.body) visit(b);
    }
    return out;
}

namespace {

using Substitution = std::map<std::string, std::string>;

Literal instantiate(const SchematicLiteral& lit, const Substitution& sub) {
    SchematicAtom atom = lit.atom;
    for (auto& t : atom.args) {
        if (t.variable) {
            t.name = sub.at(t.name);
            t.variable = false;
        }
    }
    return Literal{canonicalAtom(atom), lit.negated};
}

void requireRangeRestricted(const SchematicElement& e) {
    if (e.kind == ElementKind::Fact || e.kind == ElementKind::Presumption) return;
    std::set<std::string> bodyVars;
    for (const auto& b : e.body)
        for (const auto& t : b.atom.args)
            if (t.variable) bodyVars.insert(t.name);
    for (const auto& t : e.head.atom.args)
        if (t.variable && !bodyVars.contains(t.name))
            throw ValidationError("head variable " + t.name + " of rule '" + e.id + "' does not occur in its body");
}

} // namespace

GroundingResult groundWithOrigins(const SchematicProgram& program, const std::set<std::string>& constants) {
    const std::vector<std::string> pool(constants.begin(), constants.end());
    std::vector<AMElement> out;
    std::map<std::string, std::string> origin;

    for (const auto& e : program.elements) {
        const auto vars = e.variables();
        requireRangeRestricted(e);
        if (!vars.empty() && pool.empty())
            throw ValidationError("element '" + e.id + "' has variables but there are no constants to ground them");

        std::vector<AMElement> instances;
        Substitution sub;
        std::function<void(std::size_t, std::string)> expand = [&](std::size_t k, std::string suffix) {
            if (k == vars.size()) {
                AMElement g;
                g.id = e.id + suffix;
                g.kind = e.kind;
                g.head = instantiate(e.head, sub);
                for (const auto& b : e.body) g.body.push_back(instantiate(b, sub));
                bool duplicate = std::any_of(instances.begin(), instances.end(),
                                             [&](const AMElement& x) { return x.sameContent(g); });
                if (!duplicate) instances.push_back(std::move(g));
                return;
            }
            for (const auto& c : pool) {
                sub[vars[k]] = c;
                expand(k + 1, suffix + "@" + c);
            }
        };
        expand(0, "");
        for (auto& g : instances) {
            origin.emplace(g.id, e.id);
            out.push_back(std::move(g));
        }
    }
    return GroundingResult{PreDeLPProgram(std::move(out)), std::move(origin)};
}

PreDeLPProgram ground(const SchematicProgram& program, const std::set<std::string>& constants) {
    return groundWithOrigins(program, constants).program;
}

} // namespace ppdelp
