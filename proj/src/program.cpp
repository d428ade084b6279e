#include "ppdelp/program.hpp"

#include "ppdelp/error.hpp"

#include <algorithm>

namespace ppdelp {

std::string toString(const Literal& literal) { return (literal.negated ? "~" : "") + literal.atom; }

std::string toString(ElementKind kind) {
    switch (kind) {
    case ElementKind::Fact: return "fact";
    case ElementKind::StrictRule: return "strict rule";
    case ElementKind::Presumption: return "presumption";
    case ElementKind::DefeasibleRule: return "defeasible rule";
    }
    return "?";
}

AMElement AMElement::fact(std::string id, Literal head) {
    return AMElement{std::move(id), ElementKind::Fact, std::move(head), {}};
}

AMElement AMElement::presumption(std::string id, Literal head) {
    return AMElement{std::move(id), ElementKind::Presumption, std::move(head), {}};
}

AMElement AMElement::strictRule(std::string id, Literal head, std::vector<Literal> body) {
    return AMElement{std::move(id), ElementKind::StrictRule, std::move(head), std::move(body)};
}

AMElement AMElement::defeasibleRule(std::string id, Literal head, std::vector<Literal> body) {
    return AMElement{std::move(id), ElementKind::DefeasibleRule, std::move(head), std::move(body)};
}

bool AMElement::sameContent(const AMElement& other) const {
    return kind == other.kind && head == other.head && body == other.body;
}

PreDeLPProgram::PreDeLPProgram(std::vector<AMElement> elements) : elements_(std::move(elements)) {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        const auto& e = elements_[i];
        if (e.id.empty()) throw ValidationError("AM element without an id");
        if ((e.kind == ElementKind::Fact || e.kind == ElementKind::Presumption) && !e.body.empty())
            throw ValidationError("element '" + e.id + "' is a " + toString(e.kind) + " but has a body");
        if ((e.kind == ElementKind::StrictRule || e.kind == ElementKind::DefeasibleRule) && e.body.empty())
            throw ValidationError("rule '" + e.id + "' has an empty body");
        if (!index_.emplace(e.id, i).second) throw ValidationError("duplicate AM element id '" + e.id + "'");
    }
}

const AMElement* PreDeLPProgram::find(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &elements_[it->second];
}

const AMElement& PreDeLPProgram::at(const std::string& id) const {
    if (const auto* e = find(id)) return *e;
    throw ValidationError("unknown AM element '" + id + "'");
}

std::vector<AMElement> PreDeLPProgram::ofKind(ElementKind kind) const {
    std::vector<AMElement> out;
    std::copy_if(elements_.begin(), elements_.end(), std::back_inserter(out),
                 [kind](const AMElement& e) { return e.kind == kind; });
    return out;
}

PreDeLPProgram PreDeLPProgram::with(AMElement element) const {
    auto elements = elements_;
    elements.push_back(std::move(element));
    return PreDeLPProgram(std::move(elements));
}

PreDeLPProgram PreDeLPProgram::restrictedTo(const std::set<std::string>& ids) const {
    std::vector<AMElement> kept;
    for (const auto& e : elements_)
        if (ids.contains(e.id)) kept.push_back(e);
    return PreDeLPProgram(std::move(kept));
}

std::set<std::string> PreDeLPProgram::atoms() const {
    std::set<std::string> out;
    for (const auto& e : elements_) {
        out.insert(e.head.atom);
        for (const auto& b : e.body) out.insert(b.atom);
    }
    return out;
}

const Formula& AnnotationFunction::at(const std::string& id) const {
    if (const auto* f = find(id)) return *f;
    throw ValidationError("no annotation for AM element '" + id + "'");
}

const Formula* AnnotationFunction::find(const std::string& id) const {
    auto it = entries_.find(id);
    return it == entries_.end() ? nullptr : &it->second;
}

void AnnotationFunction::requireTotalOn(const PreDeLPProgram& program) const {
    for (const auto& e : program.elements())
        if (!contains(e.id)) throw ValidationError("no annotation for AM element '" + e.id + "'");
}

std::set<std::string> AnnotationFunction::atoms() const {
    std::set<std::string> out;
    for (const auto& [id, f] : entries_) collectAtoms(f, out);
    return out;
}

} // namespace ppdelp
