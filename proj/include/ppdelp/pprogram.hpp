#pragma once

#include "ppdelp/em.hpp"
#include "ppdelp/program.hpp"

namespace ppdelp {

/// I = (EM, AM, af). The EM universe is widened to cover every atom the
/// annotations mention, so worlds range over both.
class PPreDeLPProgram {
public:
    PPreDeLPProgram() = default;
    /// Throws ValidationError when af is not total on am, annotates unknown
    /// elements, or EM and AM share a predicate symbol.
    PPreDeLPProgram(EMKnowledgeBase em, PreDeLPProgram am, AnnotationFunction af);

    const EMKnowledgeBase& em() const { return em_; }
    const PreDeLPProgram& am() const { return am_; }
    const AnnotationFunction& af() const { return af_; }

    std::vector<World> worlds() const { return em_.worlds(); }
    bool activeAt(const std::string& id, const World& world) const { return satisfies(world, af_.at(id)); }

    friend bool operator==(const PPreDeLPProgram&, const PPreDeLPProgram&) = default;

private:
    EMKnowledgeBase em_;
    PreDeLPProgram am_;
    AnnotationFunction af_;
};

/// Predicate symbol of an atom text ("p(a,b)" -> "p").
std::string predicateOf(const std::string& atom);

} // namespace ppdelp
