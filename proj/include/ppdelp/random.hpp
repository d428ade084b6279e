#pragma once

#include "ppdelp/argumentation.hpp"
#include "ppdelp/em.hpp"
#include "ppdelp/revision.hpp"

#include <random>

namespace ppdelp::random {

using Rng = std::mt19937;

struct Bounds {
    std::size_t emAtoms = 4;
    std::size_t emFormulas = 4;
    std::size_t amElements = 8;
    std::size_t bodyLiterals = 3;
};

/// Formula over the given atoms, nesting at most `depth` connectives.
Formula formula(Rng& rng, const std::vector<std::string>& atoms, int depth = 2);

/// A kb with a known model: bounds are drawn around a random distribution.
EMKnowledgeBase feasibleKb(Rng& rng, std::size_t atoms, std::size_t formulas);
/// A kb with arbitrary bounds; may be infeasible.
EMKnowledgeBase anyKb(Rng& rng, std::size_t atoms, std::size_t formulas);

/// Ground AM program over atoms p..t with ids e0, e1, ...
PreDeLPProgram amProgram(Rng& rng, std::size_t elements, std::size_t bodyLiterals, bool strictOnly = false);

/// Annotations over the EM atoms, true about a third of the time.
AnnotationFunction annotations(Rng& rng, const PreDeLPProgram& am, const std::vector<std::string>& atoms);

/// Consistent program plus a fact or strict rule input; the variant is the
/// same element under another id with a re-spelled annotation.
RevisionInstance revisionInstance(unsigned seed, const Bounds& bounds = {});
std::vector<RevisionInstance> revisionSuite(unsigned firstSeed, std::size_t count, const Bounds& bounds = {});

/// Tree shape with placeholder arguments.
DialecticalTree tree(Rng& rng, int maxDepth, int maxBranching);

std::vector<std::string> emAtoms(std::size_t count);

} // namespace ppdelp::random
