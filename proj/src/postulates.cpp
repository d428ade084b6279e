#include "ppdelp/revision.hpp"

#include <algorithm>

namespace ppdelp {

namespace {

bool sameWorlds(const Formula& a, const Formula& b, const std::vector<World>& worlds) {
    return std::all_of(worlds.begin(), worlds.end(),
                       [&](const World& w) { return satisfies(w, a) == satisfies(w, b); });
}

bool includedWorlds(const Formula& a, const Formula& b, const std::vector<World>& worlds) {
    return std::all_of(worlds.begin(), worlds.end(), [&](const World& w) { return !satisfies(w, a) || satisfies(w, b); });
}

std::vector<AMElement> sortedElements(const PreDeLPProgram& am) {
    auto v = am.elements();
    std::sort(v.begin(), v.end(), [](const AMElement& a, const AMElement& b) { return a.id < b.id; });
    return v;
}

/// Same elements, and annotations with the same models.
bool equivalentPrograms(const PPreDeLPProgram& a, const PPreDeLPProgram& b, const std::vector<World>& worlds) {
    if (!(a.em().formulas() == b.em().formulas())) return false;
    if (sortedElements(a.am()) != sortedElements(b.am())) return false;
    for (const auto& e : a.am().elements())
        if (!sameWorlds(a.af().at(e.id), b.af().at(e.id), worlds)) return false;
    return true;
}

bool consistentIds(const PreDeLPProgram& am, const IdSet& ids) {
    std::vector<AMElement> elements;
    for (const auto& id : ids) elements.push_back(am.at(id));
    return isClassicallyConsistent(elements);
}

IdSet withId(IdSet ids, const std::string& id) {
    if (!std::binary_search(ids.begin(), ids.end(), id)) ids.insert(std::upper_bound(ids.begin(), ids.end(), id), id);
    return ids;
}

IdSet minus(const IdSet& a, const IdSet& b) {
    IdSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

IdSet pick(const IdSet& pool, std::uint64_t mask) {
    IdSet out;
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (mask >> i & 1U) out.push_back(pool[i]);
    return out;
}

IdSet merge(const IdSet& a, const IdSet& b) {
    IdSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

enum class Search { Subsets, Supersets };

// For each g removed at a bad world, look for a consistent Y (a subset of
// X ∪ {f}, or a superset of it inside Π_AM(w) ∪ {f}) that g makes inconsistent.
bool retentionPostulate(const PPreDeLPProgram& program, const EpistemicInput& input, const PPreDeLPProgram& result,
                        Search search) {
    const auto uni = unionWith(program, input);
    const auto& am = uni.am();
    const auto& f = input.element.id;
    for (const auto& w : badWorlds(uni)) {
        const IdSet original = strictSlice(program, w);
        const IdSet kept = strictSlice(result, w);
        const IdSet base = withId(kept, f);
        const IdSet pool = search == Search::Subsets ? base : minus(withId(original, f), base);
        for (const auto& g : minus(original, kept)) {
            bool found = false;
            const std::uint64_t subsets = std::uint64_t{1} << pool.size();
            for (std::uint64_t mask = 0; mask < subsets && !found; ++mask) {
                const IdSet y = search == Search::Subsets ? pick(pool, mask) : merge(base, pick(pool, mask));
                found = consistentIds(am, y) && !consistentIds(am, withId(y, g));
            }
            if (!found) return false;
        }
    }
    return true;
}

enum class Kept { Removed, Retained };

UniformityCheck uniformity(const PPreDeLPProgram& program, const EpistemicInput& in1, const EpistemicInput& in2,
                           const PPreDeLPProgram& r1, const PPreDeLPProgram& r2, Kept which) {
    const auto u1 = unionWith(program, in1);
    const auto u2 = unionWith(program, in2);
    const auto bad1 = badWorlds(u1);
    const auto bad2 = badWorlds(u2);
    if (bad1 != bad2) return {true, false, "inputs lead to different bad worlds"};

    for (const auto& w : bad1) {
        const IdSet slice = strictSlice(program, w);
        const bool f1 = satisfies(w, in1.annotation());
        const bool f2 = satisfies(w, in2.annotation());
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slice.size()); ++mask) {
            const IdSet x = pick(slice, mask);
            const bool bad1x = !consistentIds(u1.am(), f1 ? withId(x, in1.element.id) : x);
            const bool bad2x = !consistentIds(u2.am(), f2 ? withId(x, in2.element.id) : x);
            if (bad1x != bad2x) return {true, false, "inputs conflict differently at " + toString(w)};
        }
    }

    for (const auto& h : program.am().elements()) {
        for (const auto& w : bad1) {
            const bool a1 = satisfies(w, in1.annotations.at(h.id)) &&
                            (satisfies(w, r1.af().at(h.id)) == (which == Kept::Retained));
            const bool a2 = satisfies(w, in2.annotations.at(h.id)) &&
                            (satisfies(w, r2.af().at(h.id)) == (which == Kept::Retained));
            if (a1 != a2) return {false, true, h.id + " differs at " + toString(w)};
        }
    }
    return {true, true, {}};
}

} // namespace

bool isConsistent(const PPreDeLPProgram& program) {
    return checkTypeI(program.em()) && CombinedModel(program).checkTypeII();
}

bool checkInclusion(const PPreDeLPProgram& program, const EpistemicInput& input, const PPreDeLPProgram& result) {
    const auto uni = unionWith(program, input);
    const auto worlds = uni.worlds();
    for (const auto& e : uni.am().elements()) {
        const auto* revised = result.af().find(e.id);
        if (!revised || !includedWorlds(*revised, uni.af().at(e.id), worlds)) return false;
    }
    return true;
}

bool checkVacuity(const PPreDeLPProgram& program, const EpistemicInput& input, const PPreDeLPProgram& result) {
    const auto uni = unionWith(program, input);
    if (!isConsistent(uni)) return true;
    return equivalentPrograms(uni, result, uni.worlds());
}

bool checkConsistencyPreservation(const PPreDeLPProgram& program, const EpistemicInput&,
                                  const PPreDeLPProgram& result) {
    return !isConsistent(program) || isConsistent(result);
}

bool checkWeakSuccess(const PPreDeLPProgram& program, const EpistemicInput& input, const PPreDeLPProgram& result) {
    const auto uni = unionWith(program, input);
    if (!isConsistent(uni)) return true;
    const auto* f = result.am().find(input.element.id);
    if (!f || !f->sameContent(input.element)) return false;
    const auto worlds = uni.worlds();
    for (const auto& [id, formula] : input.annotations.entries()) {
        const auto* revised = result.af().find(id);
        if (!revised || !sameWorlds(*revised, formula, worlds)) return false;
    }
    return true;
}

bool checkCoreRetainment(const PPreDeLPProgram& program, const EpistemicInput& input, const PPreDeLPProgram& result) {
    return retentionPostulate(program, input, result, Search::Subsets);
}

bool checkRelevance(const PPreDeLPProgram& program, const EpistemicInput& input, const PPreDeLPProgram& result) {
    return retentionPostulate(program, input, result, Search::Supersets);
}

UniformityCheck checkUniformity1(const PPreDeLPProgram& program, const EpistemicInput& input1,
                                 const EpistemicInput& input2, const PPreDeLPProgram& result1,
                                 const PPreDeLPProgram& result2) {
    return uniformity(program, input1, input2, result1, result2, Kept::Removed);
}

UniformityCheck checkUniformity2(const PPreDeLPProgram& program, const EpistemicInput& input1,
                                 const EpistemicInput& input2, const PPreDeLPProgram& result1,
                                 const PPreDeLPProgram& result2) {
    return uniformity(program, input1, input2, result1, result2, Kept::Retained);
}

bool selectsMaximalSubsets(const PPreDeLPProgram& program, const EpistemicInput& input,
                           const PPreDeLPProgram& result) {
    const auto uni = unionWith(program, input);
    for (const auto& w : badWorlds(uni)) {
        const auto candidates = candPgm(w, uni);
        if (std::find(candidates.begin(), candidates.end(), strictSlice(result, w)) == candidates.end()) return false;
    }
    return true;
}

bool onlyShrinksSlices(const PPreDeLPProgram& program, const EpistemicInput& input, const PPreDeLPProgram& result) {
    const auto uni = unionWith(program, input);
    for (const auto& w : uni.worlds()) {
        const auto before = strictSlice(uni, w);
        const auto after = strictSlice(result, w);
        if (!std::includes(before.begin(), before.end(), after.begin(), after.end())) return false;
    }
    return true;
}

std::vector<std::string> PostulateVerdicts::violated() const {
    std::vector<std::string> out;
    if (!inclusion) out.push_back("Inclusion");
    if (!vacuity) out.push_back("Vacuity");
    if (!consistencyPreservation) out.push_back("Consistency Preservation");
    if (!weakSuccess) out.push_back("Weak Success");
    if (!coreRetainment) out.push_back("Core Retainment");
    if (!relevance) out.push_back("Relevance");
    if (!uniformity1.satisfied) out.push_back("Uniformity 1");
    if (!uniformity2.satisfied) out.push_back("Uniformity 2");
    return out;
}

PostulateVerdicts evaluatePostulates(const RevisionInstance& instance, const RevisionOperator& op) {
    const auto& I = instance.program;
    const auto r1 = op(I, instance.input).program;
    const auto r2 = op(I, instance.variant).program;
    PostulateVerdicts v;
    v.inclusion = checkInclusion(I, instance.input, r1);
    v.vacuity = checkVacuity(I, instance.input, r1);
    v.consistencyPreservation = checkConsistencyPreservation(I, instance.input, r1);
    v.weakSuccess = checkWeakSuccess(I, instance.input, r1);
    v.coreRetainment = checkCoreRetainment(I, instance.input, r1);
    v.relevance = checkRelevance(I, instance.input, r1);
    v.uniformity1 = checkUniformity1(I, instance.input, instance.variant, r1, r2);
    v.uniformity2 = checkUniformity2(I, instance.input, instance.variant, r1, r2);
    return v;
}

RepresentationReport checkRepresentation(const std::vector<RevisionInstance>& suite, const RevisionOperator& op) {
    RepresentationReport report;
    for (const auto& instance : suite) {
        ++report.instances;
        const auto verdicts = evaluatePostulates(instance, op);
        for (const auto& name : verdicts.violated()) ++report.violations[name];
        if (!verdicts.representation()) report.failingSeeds.push_back(instance.seed);
    }
    return report;
}

} // namespace ppdelp
