#include "fixtures.hpp"
#include "oracles.hpp"
#include "ppdelp/combined.hpp"
#include "ppdelp/error.hpp"
#include "ppdelp/random.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ppdelp;

namespace {

const PPreDeLPProgram& running() {
    static const auto program = fixtures::bundle("three.em", "running.am", "running.af");
    return program;
}

// slice filtered by hand and a fresh engine, bypassing the model's cache
WarrantStatus statusByHand(const PPreDeLPProgram& program, const World& world, const Literal& literal) {
    std::vector<AMElement> kept;
    for (const auto& e : program.am().elements())
        if (satisfies(world, program.af().at(e.id))) kept.push_back(e);
    return ArgumentationEngine(PreDeLPProgram(kept)).warrantStatus(literal);
}

bool contains(const std::vector<World>& worlds, const World& w) {
    return std::find(worlds.begin(), worlds.end(), w) != worlds.end();
}

} // namespace

TEST_CASE("active elements at a world") {
    const CombinedModel model(running());
    const auto slice = model.activeElements(World{"c", "f", "i", "k", "m"});
    for (const char* id : {"theta1a", "theta1b", "theta2", "phi1", "phi2", "omega1a", "delta1a", "delta5b"})
        CHECK(slice.active.contains(id));
    CHECK_FALSE(slice.active.contains("phi3"));

    const auto empty = model.activeElements(World{});
    CHECK_FALSE(empty.active.contains("theta1a"));
    CHECK_FALSE(empty.active.contains("theta2"));
    CHECK_FALSE(empty.active.contains("phi1"));
    CHECK(empty.active.contains("delta4"));
    CHECK(model.restrictedProgram(World{}).size() == empty.active.size());
}

TEST_CASE("arguments valid at a world") {
    const CombinedModel model(running());
    const World w{"c", "f", "i", "k", "m"};
    CHECK(model.argumentValidAt({"theta1a", "delta1a"}, w));
    CHECK(model.argumentValidAt({"phi2", "delta3", "theta2"}, w));
    CHECK_FALSE(model.argumentValidAt({"phi3", "delta5a"}, w));
    CHECK_FALSE(model.argumentValidAt({"theta1a", "delta1a"}, World{"c"}));
    CHECK(model.argumentValidAt({}, World{}));
    const std::vector<std::string> a2{"phi1", "phi2", "delta4", "omega2a", "theta1a", "theta2"};
    CHECK(model.argumentValidAt(a2, World{"c", "f", "i", "k", "m"}));
    CHECK_FALSE(model.argumentValidAt(a2, World{}));
}

TEST_CASE("warranting scenarios match a hand-built slice") {
    const CombinedModel model(running());
    const World w{"c", "f", "i", "k", "m"};
    CHECK(model.warrantingScenario(w, parseLiteral("s")));
    CHECK_FALSE(model.warrantingScenario(w, parseLiteral("~s")));
    random::Rng rng(3);
    const auto worlds = model.worlds();
    for (int i = 0; i < 60; ++i) {
        const auto& world = worlds[std::uniform_int_distribution<std::size_t>(0, worlds.size() - 1)(rng)];
        for (const char* lit : {"s", "~s", "u", "~u", "w", "~w"}) {
            const auto literal = parseLiteral(lit);
            CHECK(model.warrantingScenario(world, literal) ==
                  (statusByHand(running(), world, literal) == WarrantStatus::Warranted));
        }
    }
}

TEST_CASE("probability bounds on the running example") {
    const CombinedModel model(running());
    for (const char* lit : {"s", "~s", "u"}) {
        const auto literal = parseLiteral(lit);
        const auto np = model.necPoss(literal);
        std::vector<World> nec, poss;
        for (const auto& w : model.worlds()) {
            if (statusByHand(running(), w, literal) == WarrantStatus::Warranted) nec.push_back(w);
            if (statusByHand(running(), w, literal.complement()) != WarrantStatus::Warranted) poss.push_back(w);
        }
        CHECK(np.nec == nec);
        CHECK(np.poss == poss);
        const auto bounds = model.literalBounds(literal);
        const auto low = oracle::extremes(running().em(), nec);
        const auto high = oracle::extremes(running().em(), poss);
        REQUIRE(low);
        REQUIRE(high);
        CHECK(bounds.lower == low->min);
        CHECK(bounds.upper == high->max);
        CHECK(bounds.lower <= bounds.upper);
    }
}

TEST_CASE("inconsistent worlds") {
    const CombinedModel umbrella(fixtures::bundle("umbrella.em", "umbrella.am", "umbrella.af"));
    const auto bad = umbrella.inconsistentWorlds();
    const std::vector<World> expected{World{"hail", "wind"}, World{"rain", "wind"}, World{"hail", "rain", "wind"}};
    CHECK(bad.zero.size() == expected.size());
    for (const auto& w : expected) CHECK(contains(bad.zero, w));
    CHECK_FALSE(bad.positive.empty());
    for (const auto& w : bad.positive) CHECK(contains(bad.zero, w));
    CHECK_FALSE(umbrella.checkTypeII());
    CHECK_THROWS_AS(umbrella.necPoss(parseLiteral("umbrella")), TypeIIInconsistent);
    CHECK_THROWS_AS(umbrella.literalBounds(parseLiteral("umbrella")), TypeIIInconsistent);

    CHECK(CombinedModel(running()).checkTypeII());
    CHECK(CombinedModel(fixtures::bundle("umbrella.em", "umbrella_base.am", "umbrella_base.af")).checkTypeII());

    const CombinedModel extended(fixtures::bundle("three.em", "running_ext.am", "running_ext.af"));
    const auto ext = extended.inconsistentWorlds();
    CHECK(contains(ext.zero, World{"f", "h"}));
    CHECK(contains(ext.positive, World{"f", "h"}));
    for (const auto& w : ext.zero) CHECK(strictSliceInconsistent(extended.program(), w));

    // with k pinned to 1 every world lacking k has probability 0
    CHECK(CombinedModel(fixtures::bundle("eleven.em", "running_ext.am", "running_ext.af")).checkTypeII());

    const CombinedModel rainhail(fixtures::bundle("rainhail.em", "umbrella_base.am", "umbrella_base.af"));
    CHECK_THROWS_AS(rainhail.literalBounds(parseLiteral("umbrella")), TypeIInconsistent);
}

TEST_CASE("bounds on random programs") {
    random::Rng rng(29);
    const auto atoms = random::emAtoms(3);
    int checked = 0;
    for (int i = 0; i < 60; ++i) {
        const auto em = random::feasibleKb(rng, atoms.size(), 2);
        const auto am = random::amProgram(rng, 3 + i % 5, 2);
        const auto af = random::annotations(rng, am, atoms);
        const CombinedModel model(PPreDeLPProgram(em, am, af));
        for (const auto& w : model.worlds())
            CHECK(contains(model.inconsistentWorlds().zero, w) == strictSliceInconsistent(model.program(), w));
        if (!model.checkTypeII()) {
            CHECK_THROWS_AS(model.necPoss(Literal{"p", false}), TypeIIInconsistent);
            continue;
        }
        ++checked;
        for (const char* atom : {"p", "q", "r"}) {
            const Literal literal{atom, false};
            const auto np = model.necPoss(literal);
            for (const auto& w : np.nec) CHECK(contains(np.poss, w));
            const auto b = model.literalBounds(literal);
            const auto c = model.literalBounds(literal.complement());
            CHECK(b.lower <= b.upper);
            CHECK(b.lower == 1 - c.upper);
            CHECK(b.upper == 1 - c.lower);
            const auto low = oracle::extremes(model.program().em(), np.nec);
            REQUIRE(low);
            CHECK(b.lower == low->min);
        }
    }
    CHECK(checked > 10);
}
