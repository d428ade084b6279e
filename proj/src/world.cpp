#include "ppdelp/world.hpp"

#include "ppdelp/error.hpp"

#include <algorithm>

namespace ppdelp {

namespace {

std::vector<std::string> sortedUnique(std::vector<std::string> atoms) {
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    return atoms;
}

// Explicit world enumeration stops being practical long before this.
constexpr std::size_t kMaxUniverse = 30;

} // namespace

World::World(std::initializer_list<std::string> atoms) : atoms_(sortedUnique(atoms)) {}

World::World(std::vector<std::string> atoms) : atoms_(sortedUnique(std::move(atoms))) {}

bool World::contains(const std::string& atom) const {
    return std::binary_search(atoms_.begin(), atoms_.end(), atom);
}

std::string toString(const World& world) {
    std::string out = "{";
    for (std::size_t i = 0; i < world.atoms().size(); ++i) {
        if (i) out += ',';
        out += world.atoms()[i];
    }
    return out + "}";
}

Universe::Universe(std::initializer_list<std::string> atoms) : atoms_(sortedUnique(atoms)) {}

Universe::Universe(std::set<std::string> atoms) : atoms_(atoms.begin(), atoms.end()) {}

bool Universe::contains(const std::string& atom) const {
    return std::binary_search(atoms_.begin(), atoms_.end(), atom);
}

Universe Universe::merged(const std::set<std::string>& more) const {
    std::set<std::string> all(atoms_.begin(), atoms_.end());
    all.insert(more.begin(), more.end());
    return Universe(std::move(all));
}

IntegrityConstraint IntegrityConstraint::oneOf(std::vector<std::string> atoms) {
    if (atoms.empty()) throw ValidationError("oneOf constraint needs at least one atom");
    return IntegrityConstraint{sortedUnique(std::move(atoms))};
}

bool IntegrityConstraint::conforms(const World& world) const {
    std::size_t present = 0;
    for (const auto& a : atoms)
        if (world.contains(a) && ++present > 1) return false;
    return true;
}

std::vector<World> enumerateWorlds(const Universe& universe, const std::vector<IntegrityConstraint>& constraints) {
    const std::size_t n = universe.size();
    if (n > kMaxUniverse)
        throw ValidationError("universe of " + std::to_string(n) + " atoms is too large to enumerate worlds");
    std::vector<World> worlds;
    const std::uint64_t count = std::uint64_t{1} << n;
    worlds.reserve(static_cast<std::size_t>(count));
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::vector<std::string> atoms;
        for (std::size_t j = 0; j < n; ++j)
            if (mask >> j & 1U) atoms.push_back(universe.atoms()[j]);
        World w(std::move(atoms));
        if (std::all_of(constraints.begin(), constraints.end(),
                        [&](const IntegrityConstraint& ic) { return ic.conforms(w); }))
            worlds.push_back(std::move(w));
    }
    return worlds;
}

std::vector<World> wld(const Formula& formula, const Universe& universe,
                       const std::vector<IntegrityConstraint>& constraints) {
    std::vector<World> out;
    for (auto& w : enumerateWorlds(universe, constraints))
        if (satisfies(w, formula)) out.push_back(std::move(w));
    return out;
}

Formula forWorld(const World& world, const Universe& universe) {
    std::vector<Formula> literals;
    literals.reserve(universe.size());
    for (const auto& a : universe.atoms())
        literals.push_back(world.contains(a) ? Formula::atom(a) : Formula::negation(Formula::atom(a)));
    return Formula::conjunction(std::move(literals));
}

void requireVocabulary(const Formula& formula, const Universe& universe) {
    for (const auto& a : atomsOf(formula))
        if (!universe.contains(a)) throw ValidationError("atom '" + a + "' is not in the world vocabulary");
}

bool satisfies(const World& world, const Formula& formula, const Universe& universe) {
    requireVocabulary(formula, universe);
    for (const auto& a : world.atoms())
        if (!universe.contains(a)) throw ValidationError("world atom '" + a + "' is not in the vocabulary");
    return satisfies(world, formula);
}

} // namespace ppdelp
