#pragma once

#include "ppdelp/argumentation.hpp"
#include "ppdelp/pprogram.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

namespace ppdelp {

struct WorldSlice {
    World world;
    std::set<std::string> active;  // ids whose annotation holds at world
};

struct ProbabilityBounds {
    Rational lower;
    Rational upper;
};

struct InconsistentWorlds {
    std::vector<World> zero;      // active facts and strict rules are contradictory
    std::vector<World> positive;  // ... and the world can get positive probability
};

struct NecPoss {
    std::vector<World> nec;
    std::vector<World> poss;
};

/// The combined model: world-relative argumentation over one program.
class CombinedModel {
public:
    explicit CombinedModel(PPreDeLPProgram program);

    const PPreDeLPProgram& program() const { return program_; }
    const std::vector<World>& worlds() const { return worlds_; }

    WorldSlice activeElements(const World& world) const;
    /// The elements active at the world, all four kinds.
    PreDeLPProgram restrictedProgram(const World& world) const;
    /// Engine for the world's slice; worlds with the same slice share one.
    const ArgumentationEngine& engineAt(const World& world) const;

    bool argumentValidAt(const std::vector<std::string>& support, const World& world) const;
    bool warrantingScenario(const World& world, const Literal& literal) const;

    /// Throws TypeIInconsistent / TypeIIInconsistent.
    NecPoss necPoss(const Literal& literal) const;
    ProbabilityBounds literalBounds(const Literal& literal) const;

    InconsistentWorlds inconsistentWorlds() const;
    bool checkTypeII() const { return inconsistentWorlds().positive.empty(); }

private:
    void requireConsistent() const;
    std::vector<bool> activeMask(const World& world) const;

    PPreDeLPProgram program_;
    std::vector<World> worlds_;
    RuleBase strictRules_;
    mutable std::mutex cacheMutex_;
    mutable std::map<std::vector<bool>, std::unique_ptr<ArgumentationEngine>> engines_;
};

/// Facts and strict rules active at the world form a contradictory set.
bool strictSliceInconsistent(const PPreDeLPProgram& program, const World& world);

} // namespace ppdelp
