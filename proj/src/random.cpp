#include "ppdelp/random.hpp"

#include <algorithm>

namespace ppdelp::random {

namespace {

const std::vector<std::string> kAmAtoms{"p", "q", "r", "s", "t"};

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

Literal literal(Rng& rng) { return Literal{kAmAtoms[uniform(rng, 0, kAmAtoms.size() - 1)], coin(rng, 0.3)}; }

AMElement element(Rng& rng, std::string id, std::size_t bodyLiterals, bool strictOnly) {
    const auto kind = static_cast<ElementKind>(strictOnly ? uniform(rng, 0, 1) : uniform(rng, 0, 3));
    const Literal head = literal(rng);
    std::vector<Literal> body;
    if (kind == ElementKind::StrictRule || kind == ElementKind::DefeasibleRule) {
        const auto n = uniform(rng, 1, bodyLiterals);
        while (body.size() < n) {
            auto l = literal(rng);
            if (l != head && std::find(body.begin(), body.end(), l) == body.end()) body.push_back(l);
        }
    }
    return AMElement{std::move(id), kind, head, std::move(body)};
}

Rational tenths(Rng& rng, std::size_t lo, std::size_t hi) {
    Rational r(static_cast<long>(uniform(rng, lo, hi)), 10);
    r.canonicalize();
    return r;
}

} // namespace

std::vector<std::string> emAtoms(std::size_t count) {
    static const std::vector<std::string> names{"a", "b", "c", "d", "e", "g"};
    return {names.begin(), names.begin() + static_cast<long>(std::min(count, names.size()))};
}

Formula formula(Rng& rng, const std::vector<std::string>& atoms, int depth) {
    if (depth <= 0 || coin(rng, 0.35)) {
        auto f = Formula::atom(atoms[uniform(rng, 0, atoms.size() - 1)]);
        return coin(rng, 0.3) ? !f : f;
    }
    switch (uniform(rng, 0, 2)) {
    case 0: return !formula(rng, atoms, depth - 1);
    case 1: return formula(rng, atoms, depth - 1) && formula(rng, atoms, depth - 1);
    default: return formula(rng, atoms, depth - 1) || formula(rng, atoms, depth - 1);
    }
}

EMKnowledgeBase feasibleKb(Rng& rng, std::size_t atomCount, std::size_t formulaCount) {
    const auto atoms = emAtoms(atomCount);
    const Universe universe(std::set<std::string>(atoms.begin(), atoms.end()));
    const auto worlds = enumerateWorlds(universe, {});
    std::vector<Rational> weight;
    Rational total = 0;
    for (std::size_t i = 0; i < worlds.size(); ++i) {
        weight.emplace_back(static_cast<long>(uniform(rng, 0, 4)));
        total += weight.back();
    }
    if (total == 0) {
        weight.front() = 1;
        total = 1;
    }
    std::vector<ProbabilisticFormula> formulas;
    for (std::size_t k = 0; k < formulaCount; ++k) {
        auto f = formula(rng, atoms);
        Rational pf = 0;
        for (std::size_t i = 0; i < worlds.size(); ++i)
            if (satisfies(worlds[i], f)) pf += weight[i] / total;
        Rational lo = pf - tenths(rng, 0, 2), hi = pf + tenths(rng, 0, 2);
        if (lo < 0) lo = 0;
        if (hi > 1) hi = 1;
        formulas.push_back(ProbabilisticFormula::make(f, (lo + hi) / 2, (hi - lo) / 2));
    }
    return EMKnowledgeBase(std::move(formulas), universe);
}

EMKnowledgeBase anyKb(Rng& rng, std::size_t atomCount, std::size_t formulaCount) {
    const auto atoms = emAtoms(atomCount);
    const Universe universe(std::set<std::string>(atoms.begin(), atoms.end()));
    std::vector<ProbabilisticFormula> formulas;
    for (std::size_t k = 0; k < formulaCount; ++k) {
        const Rational p = tenths(rng, 0, 10);
        const Rational room = std::min(p, Rational(1 - p));
        const long steps = static_cast<long>(Rational(room * 10).get_num().get_si());
        Rational eps(static_cast<long>(uniform(rng, 0, static_cast<std::size_t>(steps))), 10);
        eps.canonicalize();
        formulas.push_back(ProbabilisticFormula::make(formula(rng, atoms), p, eps));
    }
    std::vector<IntegrityConstraint> constraints;
    if (atoms.size() >= 2 && coin(rng, 0.2)) constraints.push_back(IntegrityConstraint::oneOf({atoms[0], atoms[1]}));
    return EMKnowledgeBase(std::move(formulas), universe, std::move(constraints));
}

PreDeLPProgram amProgram(Rng& rng, std::size_t elements, std::size_t bodyLiterals, bool strictOnly) {
    std::vector<AMElement> out;
    for (std::size_t i = 0; i < elements; ++i)
        out.push_back(element(rng, "e" + std::to_string(i), bodyLiterals, strictOnly));
    return PreDeLPProgram(std::move(out));
}

AnnotationFunction annotations(Rng& rng, const PreDeLPProgram& am, const std::vector<std::string>& atoms) {
    AnnotationFunction af;
    for (const auto& e : am.elements())
        af.set(e.id, coin(rng, 0.3) ? Formula::constant(true) : formula(rng, atoms, 1));
    return af;
}

RevisionInstance revisionInstance(unsigned seed, const Bounds& bounds) {
    Rng rng(seed);
    for (;;) {
        const auto atoms = emAtoms(uniform(rng, 1, bounds.emAtoms));
        auto em = feasibleKb(rng, atoms.size(), uniform(rng, 0, bounds.emFormulas));
        auto am = amProgram(rng, uniform(rng, 1, bounds.amElements - 1), bounds.bodyLiterals);
        auto af = annotations(rng, am, atoms);
        PPreDeLPProgram program(std::move(em), std::move(am), std::move(af));
        if (!isConsistent(program)) continue;

        auto f = element(rng, "f_in", bounds.bodyLiterals, true);
        // aim the input at an existing head to make conflicts likely
        if (coin(rng, 0.7)) {
            const auto& elements = program.am().elements();
            f.head = elements[uniform(rng, 0, elements.size() - 1)].head.complement();
            std::erase(f.body, f.head);
            if (f.body.empty()) f.kind = ElementKind::Fact;
        }
        auto annotation = coin(rng, 0.3) ? Formula::constant(true) : formula(rng, atoms, 1);
        auto input = EpistemicInput::extend(program, f, annotation);
        auto g = f;
        g.id = "g_in";
        auto variant = EpistemicInput::extend(program, std::move(g), !!annotation);
        return RevisionInstance{seed, std::move(program), std::move(input), std::move(variant)};
    }
}

std::vector<RevisionInstance> revisionSuite(unsigned firstSeed, std::size_t count, const Bounds& bounds) {
    std::vector<RevisionInstance> suite;
    for (std::size_t i = 0; i < count; ++i) suite.push_back(revisionInstance(firstSeed + static_cast<unsigned>(i), bounds));
    return suite;
}

namespace {

DialecticalNode node(Rng& rng, int depth, int maxDepth, int maxBranching, int& counter) {
    DialecticalNode n{Argument{ElementSet(), Literal{"n" + std::to_string(counter++), false}},
                      depth == 0 ? DefeatKind::None : (coin(rng) ? DefeatKind::Proper : DefeatKind::Blocking),
                      Mark::Unmarked,
                      {}};
    if (depth < maxDepth) {
        const auto children = uniform(rng, 0, static_cast<std::size_t>(maxBranching));
        for (std::size_t i = 0; i < children; ++i) n.children.push_back(node(rng, depth + 1, maxDepth, maxBranching, counter));
    }
    return n;
}

} // namespace

DialecticalTree tree(Rng& rng, int maxDepth, int maxBranching) {
    int counter = 0;
    return node(rng, 0, maxDepth, maxBranching, counter);
}

} // namespace ppdelp::random
