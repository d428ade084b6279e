#pragma once

#include "ppdelp/revision.hpp"

/// Deliberately broken revision operators, used to probe the postulate checkers.
namespace ppdelp::mutants {

/// Keeps one element fewer than the default selection wherever it can.
RevisionResult nonMaximal(const PPreDeLPProgram& program, const EpistemicInput& input);

/// Revises, then annotates f with false.
RevisionResult dropInput(const PPreDeLPProgram& program, const EpistemicInput& input);

/// Revises, then also cuts one more world out of one annotation.
RevisionResult extraWorldDeleting(const PPreDeLPProgram& program, const EpistemicInput& input);

struct Named {
    std::string name;
    RevisionOperator op;
};

std::vector<Named> all();

} // namespace ppdelp::mutants
