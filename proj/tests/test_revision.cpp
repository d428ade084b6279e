#include "fixtures.hpp"
#include "oracles.hpp"
#include "ppdelp/error.hpp"
#include "ppdelp/mutants.hpp"
#include "ppdelp/random.hpp"
#include "ppdelp/revision.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace ppdelp;

namespace {

const PPreDeLPProgram& umbrellaBase() {
    static const auto program = fixtures::bundle("umbrella.em", "umbrella_base.am", "umbrella_base.af");
    return program;
}

EpistemicInput leave() {
    return EpistemicInput::extend(umbrellaBase(), AMElement::fact("leave", parseLiteral("~umbrella")),
                                  parseFormula("wind"));
}

const World triple{"hail", "rain", "wind"};

bool in(const std::vector<World>& worlds, const World& w) {
    return std::find(worlds.begin(), worlds.end(), w) != worlds.end();
}

std::set<IdSet> asSet(std::vector<IdSet> sets) {
    for (auto& s : sets) std::sort(s.begin(), s.end());
    return {sets.begin(), sets.end()};
}

} // namespace

TEST_CASE("candidate programs") {
    const auto u = unionWith(umbrellaBase(), leave());
    CHECK(candPgm(triple, u) == std::vector<IdSet>{{"carry"}, {"leave"}});
    CHECK(candPgm(World{"rain"}, u) == std::vector<IdSet>{{"carry"}});
    CHECK(candPgm(World{}, u) == std::vector<IdSet>{{}});

    const auto bad = badWorlds(u);
    CHECK(bad.size() == 3);
    for (const auto& w : {World{"hail", "wind"}, World{"rain", "wind"}, triple}) CHECK(in(bad, w));
    CHECK(badWorlds(umbrellaBase()).empty());

    random::Rng rng(41);
    const auto em = fixtures::em("umbrella.em");
    for (int i = 0; i < 150; ++i) {
        const auto am = random::amProgram(rng, 1 + i % 9, 2, true);
        std::map<std::string, Formula> always;
        for (const auto& e : am.elements()) always.emplace(e.id, Formula::constant(true));
        const PPreDeLPProgram program(em, am, AnnotationFunction(always));
        REQUIRE(asSet(candPgm(World{}, program)) == asSet(oracle::maximalConsistent(am.elements())));
    }
}

TEST_CASE("new annotations cut exactly the unselected bad worlds") {
    const auto u = unionWith(umbrellaBase(), leave());
    const auto phi = defaultSelection(umbrellaBase(), leave());
    REQUIRE(phi.size() == 3);
    for (const auto& [w, chosen] : phi) CHECK(chosen == IdSet{"leave"});
    const auto bad = badWorlds(u);
    for (const char* id : {"carry", "leave"}) {
        const auto updated = newFor(id, phi, umbrellaBase(), leave());
        for (const auto& w : u.worlds()) {
            const bool selected = !in(bad, w) || std::ranges::count(phi.at(w), std::string(id)) > 0;
            CHECK(satisfies(w, updated) == (satisfies(w, u.af().at(id)) && selected));
        }
    }
}

TEST_CASE("revising the umbrella program") {
    const auto result = revise(umbrellaBase(), leave());
    const auto& af = result.program.af();
    for (const auto& w : result.program.worlds()) {
        const bool precip = w.contains("rain") || w.contains("hail");
        CHECK(satisfies(w, af.at("carry")) == (precip && !w.contains("wind")));
        CHECK(satisfies(w, af.at("leave")) == w.contains("wind"));
    }
    CHECK(result.log.size() == 3);
    CHECK(isConsistent(result.program));
    CHECK(result.program.am().contains("leave"));

    SelectionFunction both = defaultSelection(umbrellaBase(), leave());
    both[triple] = {"carry", "leave"};
    CHECK_THROWS_AS(revise(umbrellaBase(), leave(), both), InvalidSelection);
    SelectionFunction missing = defaultSelection(umbrellaBase(), leave());
    missing.erase(triple);
    CHECK_THROWS_AS(revise(umbrellaBase(), leave(), missing), InvalidSelection);

    // keeping carry instead is also a valid choice
    SelectionFunction keepCarry = defaultSelection(umbrellaBase(), leave());
    for (auto& [w, chosen] : keepCarry) chosen = {"carry"};
    const auto other = revise(umbrellaBase(), leave(), keepCarry);
    CHECK(isConsistent(other.program));
    for (const auto& w : other.program.worlds())
        CHECK(satisfies(w, other.program.af().at("leave")) == (w.contains("wind") && !in(badWorlds(unionWith(umbrellaBase(), leave())), w)));
}

TEST_CASE("defeasible inputs are added unchanged") {
    const auto input = EpistemicInput::extend(
        umbrellaBase(), AMElement::defeasibleRule("maybe", parseLiteral("~umbrella"), {parseLiteral("cloudy")}),
        parseFormula("true"));
    const auto result = revise(umbrellaBase(), input);
    CHECK(result.program == unionWith(umbrellaBase(), input));
    CHECK(result.log.empty());
}

TEST_CASE("postulates hold for the operator on random instances") {
    const auto suite = random::revisionSuite(1, 40);
    const RevisionOperator op = [](const PPreDeLPProgram& p, const EpistemicInput& i) { return revise(p, i); };
    int withBadWorlds = 0;
    for (const auto& instance : suite) {
        const auto verdicts = evaluatePostulates(instance, op);
        INFO("seed " << instance.seed);
        CHECK(verdicts.representation());
        CHECK(verdicts.coreRetainment);
        CHECK(verdicts.uniformity2.satisfied);

        const auto result = revise(instance.program, instance.input).program;
        const auto u = unionWith(instance.program, instance.input);
        const auto bad = badWorlds(u);
        if (!bad.empty()) ++withBadWorlds;
        CHECK(selectsMaximalSubsets(instance.program, instance.input, result));
        CHECK(onlyShrinksSlices(instance.program, instance.input, result));
        CHECK(isConsistent(result));
        for (const auto& w : u.worlds())
            if (!in(bad, w)) CHECK(strictSlice(result, w) == strictSlice(u, w));
    }
    CHECK(withBadWorlds > 5);
}

TEST_CASE("mutant operators are caught") {
    const auto suite = random::revisionSuite(100, 60);
    const std::map<std::string, std::string> expected{
        {"non-maximal subset", "Relevance"}, {"f-dropping", "Weak Success"}, {"extra-world-deleting", "Relevance"}};
    for (const auto& mutant : mutants::all()) {
        const auto report = checkRepresentation(suite, mutant.op);
        INFO(mutant.name);
        CHECK_FALSE(report.clean());
        CHECK(report.violations.contains(expected.at(mutant.name)));
    }
    // a consistent union: f must survive
    const auto dry = EpistemicInput::extend(umbrellaBase(), AMElement::fact("leave", parseLiteral("~umbrella")),
                                            parseFormula("!rain & !hail"));
    CHECK(badWorlds(unionWith(umbrellaBase(), dry)).empty());
    CHECK(checkVacuity(umbrellaBase(), dry, revise(umbrellaBase(), dry).program));
    CHECK(checkWeakSuccess(umbrellaBase(), dry, revise(umbrellaBase(), dry).program));
    const auto dropped = mutants::dropInput(umbrellaBase(), dry).program;
    CHECK(dropped.af().at("leave") == Formula::constant(false));
    CHECK_FALSE(checkWeakSuccess(umbrellaBase(), dry, dropped));
}
