#include "ppdelp/pprogram.hpp"

#include "ppdelp/error.hpp"

namespace ppdelp {

std::string predicateOf(const std::string& atom) { return atom.substr(0, atom.find('(')); }

PPreDeLPProgram::PPreDeLPProgram(EMKnowledgeBase em, PreDeLPProgram am, AnnotationFunction af)
    : am_(std::move(am)), af_(std::move(af)) {
    af_.requireTotalOn(am_);
    for (const auto& [id, f] : af_.entries())
        if (!am_.contains(id)) throw ValidationError("annotation for unknown AM element '" + id + "'");

    em_ = em.withUniverse(Universe(af_.atoms()));

    std::set<std::string> emPredicates;
    for (const auto& a : em_.universe().atoms()) emPredicates.insert(predicateOf(a));
    for (const auto& a : am_.atoms()) {
        if (emPredicates.contains(predicateOf(a)))
            throw ValidationError("predicate '" + predicateOf(a) + "' is used by both the EM and the AM");
    }
}

} // namespace ppdelp
