#pragma once

#include "ppdelp/combined.hpp"
#include "ppdelp/pprogram.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace ppdelp {

/// (f, af'): the element to add and an annotation function that agrees with
/// the program's on existing elements and also covers f.
struct EpistemicInput {
    AMElement element;
    AnnotationFunction annotations;

    /// af' built from the program's af plus f's annotation. Throws
    /// ValidationError if f's id is taken by a different element.
    static EpistemicInput extend(const PPreDeLPProgram& program, AMElement element, Formula annotation);

    const Formula& annotation() const { return annotations.at(element.id); }
};

/// Chosen element ids (sorted) per world.
using SelectionFunction = std::map<World, std::vector<std::string>>;

using IdSet = std::vector<std::string>;  // sorted element ids

struct RevisionChoice {
    World world;
    std::vector<IdSet> candidates;
    IdSet chosen;
};

struct RevisionResult {
    PPreDeLPProgram program;
    std::vector<RevisionChoice> log;
};

/// I ∪ (f, af').
PPreDeLPProgram unionWith(const PPreDeLPProgram& program, const EpistemicInput& input);

/// W^I of a program: worlds that activate contradictory facts/strict rules
/// and can get positive probability.
std::vector<World> badWorlds(const PPreDeLPProgram& program);

/// Facts and strict rules whose annotation holds at the world.
IdSet strictSlice(const PPreDeLPProgram& program, const World& world);

/// Maximal consistent subsets of the world's active facts and strict rules, sorted.
std::vector<IdSet> candPgm(const World& world, const PPreDeLPProgram& program);

/// At each bad world of I ∪ input, the candidate that keeps f if possible,
/// then keeps the most facts, then has the smallest id list (f's id aside).
SelectionFunction defaultSelection(const PPreDeLPProgram& program, const EpistemicInput& input);

/// af'(h) with every bad world where h is not selected cut out.
Formula newFor(const std::string& h, const SelectionFunction& phi, const PPreDeLPProgram& program,
               const EpistemicInput& input);
Formula newFor(const std::string& h, const SelectionFunction& phi, const Formula& annotation,
               const std::vector<World>& bad, const Universe& universe);

/// The AF-based operator. Throws InvalidSelection if phi is missing a bad
/// world or picks a non-candidate there.
RevisionResult revise(const PPreDeLPProgram& program, const EpistemicInput& input, const SelectionFunction& phi);
RevisionResult revise(const PPreDeLPProgram& program, const EpistemicInput& input);

/// Same construction without validating phi.
RevisionResult applySelection(const PPreDeLPProgram& program, const EpistemicInput& input,
                              const SelectionFunction& phi);

using RevisionOperator = std::function<RevisionResult(const PPreDeLPProgram&, const EpistemicInput&)>;

// ---- postulates -----------------------------------------------------------

/// Type I and Type II.
bool isConsistent(const PPreDeLPProgram& program);

bool checkInclusion(const PPreDeLPProgram& program, const EpistemicInput& input, const PPreDeLPProgram& result);
bool checkVacuity(const PPreDeLPProgram& program, const EpistemicInput& input, const PPreDeLPProgram& result);
bool checkConsistencyPreservation(const PPreDeLPProgram& program, const EpistemicInput& input,
                                  const PPreDeLPProgram& result);
bool checkWeakSuccess(const PPreDeLPProgram& program, const EpistemicInput& input, const PPreDeLPProgram& result);
bool checkCoreRetainment(const PPreDeLPProgram& program, const EpistemicInput& input, const PPreDeLPProgram& result);
bool checkRelevance(const PPreDeLPProgram& program, const EpistemicInput& input, const PPreDeLPProgram& result);

struct UniformityCheck {
    bool satisfied = true;
    bool applicable = false;  // false when the hypothesis fails; satisfied is then vacuous
    std::string note;
};

UniformityCheck checkUniformity1(const PPreDeLPProgram& program, const EpistemicInput& input1,
                                 const EpistemicInput& input2, const PPreDeLPProgram& result1,
                                 const PPreDeLPProgram& result2);
UniformityCheck checkUniformity2(const PPreDeLPProgram& program, const EpistemicInput& input1,
                                 const EpistemicInput& input2, const PPreDeLPProgram& result1,
                                 const PPreDeLPProgram& result2);

/// At every bad world of I ∪ input, the result's active facts/strict rules
/// form a maximal consistent subset of the union's.
bool selectsMaximalSubsets(const PPreDeLPProgram& program, const EpistemicInput& input,
                           const PPreDeLPProgram& result);
/// At every world, the result's active facts/strict rules are among the union's.
bool onlyShrinksSlices(const PPreDeLPProgram& program, const EpistemicInput& input, const PPreDeLPProgram& result);

struct PostulateVerdicts {
    bool inclusion = false;
    bool vacuity = false;
    bool consistencyPreservation = false;
    bool weakSuccess = false;
    bool coreRetainment = false;
    bool relevance = false;
    UniformityCheck uniformity1;
    UniformityCheck uniformity2;

    /// The six postulates of the representation theorem.
    bool representation() const {
        return inclusion && vacuity && consistencyPreservation && weakSuccess && relevance && uniformity1.satisfied;
    }
    std::vector<std::string> violated() const;
};

/// One revision problem: a program, an input, and a second input with the
/// same conflict structure for the Uniformity postulates.
struct RevisionInstance {
    unsigned seed = 0;
    PPreDeLPProgram program;
    EpistemicInput input;
    EpistemicInput variant;
};

PostulateVerdicts evaluatePostulates(const RevisionInstance& instance, const RevisionOperator& op);

struct RepresentationReport {
    std::size_t instances = 0;
    std::map<std::string, std::size_t> violations;  // postulate -> instances violating it, for the operator
    std::vector<unsigned> failingSeeds;

    bool clean() const { return failingSeeds.empty(); }
};

RepresentationReport checkRepresentation(const std::vector<RevisionInstance>& suite, const RevisionOperator& op);

} // namespace ppdelp
