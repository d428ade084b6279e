#pragma once

#include "ppdelp/formula.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ppdelp {

/// Ground AM literal: an atom, possibly under strong negation.
struct Literal {
    std::string atom;  // canonical ground atom text, e.g. "p" or "attack(x,y)"
    bool negated = false;

    Literal complement() const { return Literal{atom, !negated}; }

    friend bool operator==(const Literal&, const Literal&) = default;
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

std::string toString(const Literal& literal);  // "~p" or "p"

enum class ElementKind { Fact, StrictRule, Presumption, DefeasibleRule };

std::string toString(ElementKind kind);

inline bool isStrict(ElementKind kind) { return kind == ElementKind::Fact || kind == ElementKind::StrictRule; }

/// One member of Theta, Omega, Phi or Delta. Facts and presumptions have empty bodies.
struct AMElement {
    std::string id;
    ElementKind kind = ElementKind::Fact;
    Literal head;
    std::vector<Literal> body;

    static AMElement fact(std::string id, Literal head);
    static AMElement presumption(std::string id, Literal head);
    static AMElement strictRule(std::string id, Literal head, std::vector<Literal> body);
    static AMElement defeasibleRule(std::string id, Literal head, std::vector<Literal> body);

    /// Same kind, head and body; ids are ignored.
    bool sameContent(const AMElement& other) const;

    friend bool operator==(const AMElement&, const AMElement&) = default;
};

/// The analytical model (Theta, Omega, Phi, Delta). Elements keep insertion
/// order; ids are unique across all four parts.
class PreDeLPProgram {
public:
    PreDeLPProgram() = default;
    explicit PreDeLPProgram(std::vector<AMElement> elements);

    const std::vector<AMElement>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    const AMElement* find(const std::string& id) const;
    const AMElement& at(const std::string& id) const;
    bool contains(const std::string& id) const { return find(id) != nullptr; }

    std::vector<AMElement> ofKind(ElementKind kind) const;
    std::vector<AMElement> theta() const { return ofKind(ElementKind::Fact); }
    std::vector<AMElement> omega() const { return ofKind(ElementKind::StrictRule); }
    std::vector<AMElement> phi() const { return ofKind(ElementKind::Presumption); }
    std::vector<AMElement> delta() const { return ofKind(ElementKind::DefeasibleRule); }

    /// Copy with one more element; throws ValidationError on a duplicate id.
    PreDeLPProgram with(AMElement element) const;
    /// Elements whose ids are in the set, in program order.
    PreDeLPProgram restrictedTo(const std::set<std::string>& ids) const;

    std::set<std::string> atoms() const;

    friend bool operator==(const PreDeLPProgram&, const PreDeLPProgram&) = default;

private:
    std::vector<AMElement> elements_;
    std::map<std::string, std::size_t> index_;
};

/// Map from AM element ids to EM formulas.
class AnnotationFunction {
public:
    AnnotationFunction() = default;
    explicit AnnotationFunction(std::map<std::string, Formula> entries) : entries_(std::move(entries)) {}

    const Formula& at(const std::string& id) const;
    const Formula* find(const std::string& id) const;
    bool contains(const std::string& id) const { return entries_.contains(id); }
    void set(const std::string& id, Formula formula) { entries_.insert_or_assign(id, std::move(formula)); }
    const std::map<std::string, Formula>& entries() const { return entries_; }

    /// Throws ValidationError unless every program element has an annotation.
    void requireTotalOn(const PreDeLPProgram& program) const;

    std::set<std::string> atoms() const;

    friend bool operator==(const AnnotationFunction&, const AnnotationFunction&) = default;

private:
    std::map<std::string, Formula> entries_;
};

// ---- schematic programs -------------------------------------------------

struct Term {
    std::string name;
    bool variable = false;

    friend bool operator==(const Term&, const Term&) = default;
};

struct SchematicAtom {
    std::string predicate;
    std::vector<Term> args;

    bool ground() const;
    friend bool operator==(const SchematicAtom&, const SchematicAtom&) = default;
};

/// "p" or "p(a,b)"; requires a ground atom.
std::string canonicalAtom(const SchematicAtom& atom);
std::string toString(const SchematicAtom& atom);

struct SchematicLiteral {
    SchematicAtom atom;
    bool negated = false;

    friend bool operator==(const SchematicLiteral&, const SchematicLiteral&) = default;
};

struct SchematicElement {
    std::string id;
    ElementKind kind = ElementKind::Fact;
    SchematicLiteral head;
    std::vector<SchematicLiteral> body;

    std::vector<std::string> variables() const;  // in order of first occurrence
    friend bool operator==(const SchematicElement&, const SchematicElement&) = default;
};

struct SchematicProgram {
    std::vector<SchematicElement> elements;

    bool ground() const;
    std::set<std::string> constants() const;
    friend bool operator==(const SchematicProgram&, const SchematicProgram&) = default;
};

struct GroundingResult {
    PreDeLPProgram program;
    std::map<std::string, std::string> origin;  // ground id -> schematic label
};

/// Herbrand instantiation. An element with variables X1..Xk becomes one
/// element per substitution, with id "label@c1@...@ck" (values in order of
/// first variable occurrence). Ground elements keep their labels. Instances
/// of one schematic element that coincide are merged into the first.
GroundingResult groundWithOrigins(const SchematicProgram& program, const std::set<std::string>& constants);
PreDeLPProgram ground(const SchematicProgram& program, const std::set<std::string>& constants);

} // namespace ppdelp
