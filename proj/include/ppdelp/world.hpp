#pragma once

#include "ppdelp/formula.hpp"

#include <compare>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace ppdelp {

/// A set of ground atoms, the ones true in the world. Atoms are kept sorted.
class World {
public:
    World() = default;
    World(std::initializer_list<std::string> atoms);
    explicit World(std::vector<std::string> atoms);

    bool contains(const std::string& atom) const;
    const std::vector<std::string>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }

    friend bool operator==(const World&, const World&) = default;
    friend auto operator<=>(const World&, const World&) = default;

private:
    std::vector<std::string> atoms_;
};

/// "{a,b}"
std::string toString(const World& world);

/// Ordered set of ground atoms that worlds range over.
class Universe {
public:
    Universe() = default;
    Universe(std::initializer_list<std::string> atoms);
    explicit Universe(std::set<std::string> atoms);

    const std::vector<std::string>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    bool contains(const std::string& atom) const;
    Universe merged(const std::set<std::string>& more) const;

    friend bool operator==(const Universe&, const Universe&) = default;

private:
    std::vector<std::string> atoms_;
};

/// oneOf(A'): a conforming world holds at most one atom of the set.
struct IntegrityConstraint {
    std::vector<std::string> atoms;  // sorted, nonempty

    static IntegrityConstraint oneOf(std::vector<std::string> atoms);
    bool conforms(const World& world) const;

    friend bool operator==(const IntegrityConstraint&, const IntegrityConstraint&) = default;
};

/// Every subset of the universe conforming to all constraints. World i
/// (before filtering) is the subset whose bit j selects universe atom j.
std::vector<World> enumerateWorlds(const Universe& universe, const std::vector<IntegrityConstraint>& constraints);

/// Conforming worlds that satisfy the formula.
std::vector<World> wld(const Formula& formula, const Universe& universe,
                       const std::vector<IntegrityConstraint>& constraints);

/// Conjunction of every universe atom, negated when absent from the world.
Formula forWorld(const World& world, const Universe& universe);

/// Throws ValidationError when the formula mentions an atom outside the universe.
void requireVocabulary(const Formula& formula, const Universe& universe);

/// satisfies() with a vocabulary check against the universe.
bool satisfies(const World& world, const Formula& formula, const Universe& universe);

} // namespace ppdelp
