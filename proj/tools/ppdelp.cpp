// ppdelp: command-line front end for probabilistic PreDeLP programs.

#include "ppdelp/combined.hpp"
#include "ppdelp/error.hpp"
#include "ppdelp/io.hpp"
#include "ppdelp/revision.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace ppdelp;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, BadInput = 1, Inconsistent = 2 };

struct Output {
    bool asJson = false;
    json result = json::object();
    std::vector<std::string> diagnostics;
    std::ostringstream text;

    int finish(int code) {
        if (asJson) {
            json out{{"status", code == Ok ? "ok" : code == BadInput ? "error" : "inconsistent"},
                     {"result", result},
                     {"diagnostics", diagnostics}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << text.str();
            for (const auto& d : diagnostics) std::cerr << "ppdelp: " << d << "\n";
        }
        return code;
    }
};

json rational(const Rational& r) { return {{"fraction", toFractionString(r)}, {"decimal", toDecimalString(r)}}; }

std::string show(const Rational& r) { return toFractionString(r) + " (" + toDecimalString(r) + ")"; }

json worldList(const std::vector<World>& worlds) {
    json out = json::array();
    for (const auto& w : worlds) out.push_back(w.atoms());
    return out;
}

World parseWorld(const std::string& text, const PPreDeLPProgram& program) {
    std::vector<std::string> atoms;
    std::stringstream in(text);
    for (std::string atom; std::getline(in, atom, ',');) {
        atom.erase(0, atom.find_first_not_of(" \t{"));
        atom.erase(atom.find_last_not_of(" \t}") + 1);
        if (atom.empty()) continue;
        if (!program.em().universe().contains(atom)) throw ValidationError("world atom '" + atom + "' is not in the EM vocabulary");
        atoms.push_back(atom);
    }
    World w(std::move(atoms));
    for (const auto& c : program.em().constraints())
        if (!c.conforms(w)) throw ValidationError("world " + toString(w) + " violates a oneOf constraint");
    return w;
}

struct ProgramFiles {
    std::string em, am, af;
    void add(CLI::App* cmd) {
        cmd->add_option("--em", em, "environmental model file")->required();
        cmd->add_option("--am", am, "analytical model file")->required();
        cmd->add_option("--af", af, "annotation function file")->required();
    }
    PPreDeLPProgram load() const { return loadBundle(em, am, af).parsed; }
};

int runCheck(const ProgramFiles& files, Output& out) {
    const auto program = files.load();
    const bool typeI = checkTypeI(program.em());
    out.result["typeI"] = typeI;
    out.text << "Type I:  " << (typeI ? "PASS" : "FAIL") << "\n";
    const CombinedModel model(program);
    const auto bad = model.inconsistentWorlds();
    const bool typeII = bad.positive.empty();
    out.result["typeII"] = typeII;
    out.result["inconsistentWorlds"] = worldList(bad.zero);
    json conflicts = json::array();
    for (const auto& w : bad.positive) {
        const auto slice = strictSlice(program, w);
        conflicts.push_back({{"world", w.atoms()}, {"slice", slice}});
    }
    out.result["positiveInconsistentWorlds"] = conflicts;
    out.text << "Type II: " << (typeII ? "PASS" : "FAIL") << "\n";
    if (!typeI) out.text << "  (no distribution satisfies the EM, so every world has probability zero)\n";
    for (const auto& c : conflicts) {
        out.text << "  world {";
        const auto& atoms = c["world"];
        for (std::size_t i = 0; i < atoms.size(); ++i) out.text << (i ? "," : "") << atoms[i].get<std::string>();
        out.text << "} activates";
        for (const auto& id : c["slice"]) out.text << " " << id.get<std::string>();
        out.text << "\n";
    }
    return Ok;
}

int runEntail(const std::string& emPath, const std::string& formulaText, Output& out) {
    const auto kb = parseEM(readFile(emPath), emPath);
    const auto query = parseFormula(formulaText, "--formula");
    const auto e = maxEntailment(kb, query);
    out.result = {{"formula", toString(query)},
                  {"probability", rational(e.probability)},
                  {"tolerance", rational(e.tolerance)},
                  {"lower", rational(e.lower)},
                  {"upper", rational(e.upper)}};
    out.text << toString(query) << " : " << toFractionString(e.probability) << " +- " << toFractionString(e.tolerance)
             << "\n"
             << "  = " << toDecimalString(e.probability) << " +- " << toDecimalString(e.tolerance) << "\n"
             << "  interval [" << show(e.lower) << ", " << show(e.upper) << "]\n";
    return Ok;
}

int runQuery(const ProgramFiles& files, const std::string& literalText, Output& out) {
    const auto program = files.load();
    const auto literal = parseLiteral(literalText, "--literal");
    const CombinedModel model(program);
    const auto sets = model.necPoss(literal);
    const auto bounds = model.literalBounds(literal);
    out.result = {{"literal", toString(literal)},
                  {"lower", rational(bounds.lower)},
                  {"upper", rational(bounds.upper)},
                  {"worlds", model.worlds().size()},
                  {"nec", sets.nec.size()},
                  {"poss", sets.poss.size()}};
    out.text << "P(" << toString(literal) << ") in [" << show(bounds.lower) << ", " << show(bounds.upper) << "]\n"
             << "  nec: " << sets.nec.size() << " of " << model.worlds().size() << " worlds\n"
             << "  poss: " << sets.poss.size() << " of " << model.worlds().size() << " worlds\n";
    return Ok;
}

int runRevise(const ProgramFiles& files, const std::string& elementText, const std::string& annotationText,
              const std::string& outAf, const std::string& outAm, Output& out) {
    const auto program = files.load();
    const auto element = parseElement(elementText, "input", "--input-element");
    const auto annotation = parseFormula(annotationText, "--input-annotation");
    const auto input = EpistemicInput::extend(program, element, annotation);
    const auto revised = revise(program, input);

    std::ofstream af(outAf);
    if (!af) throw ValidationError("cannot write '" + outAf + "'");
    af << printAF(revised.program.af());
    if (!outAm.empty()) {
        std::ofstream am(outAm);
        if (!am) throw ValidationError("cannot write '" + outAm + "'");
        am << printAM(revised.program.am());
    }

    json log = json::array();
    out.text << "revised with " << printElement(element) << " annotated " << toString(annotation) << "\n";
    if (revised.log.empty()) out.text << "  no world with positive probability is inconsistent; annotations unchanged\n";
    for (const auto& choice : revised.log) {
        json candidates = json::array();
        for (const auto& c : choice.candidates) candidates.push_back(c);
        log.push_back({{"world", choice.world.atoms()}, {"candidates", candidates}, {"chosen", choice.chosen}});
        out.text << "  world " << toString(choice.world) << ": kept {";
        for (std::size_t i = 0; i < choice.chosen.size(); ++i) out.text << (i ? "," : "") << choice.chosen[i];
        out.text << "} of " << choice.candidates.size() << " candidate(s)\n";
    }
    out.text << "wrote " << outAf << "\n";
    json annotations = json::object();
    for (const auto& [id, f] : revised.program.af().entries()) annotations[id] = toString(f);
    out.result = {{"choices", log}, {"annotations", annotations}, {"afPath", outAf}};
    return Ok;
}

int runExplain(const ProgramFiles& files, const std::string& literalText, const std::string& worldText,
               bool allWorlds, Output& out) {
    const auto program = files.load();
    const auto literal = parseLiteral(literalText, "--literal");
    const CombinedModel model(program);
    if (allWorlds) {
        json rows = json::array();
        for (const auto& w : model.worlds()) {
            const auto status = model.engineAt(w).warrantStatus(literal);
            rows.push_back({{"world", w.atoms()}, {"status", toString(status)}});
            out.text << toString(w) << "  " << toString(status) << "\n";
        }
        out.result = {{"literal", toString(literal)}, {"worlds", rows}};
        return Ok;
    }
    if (worldText.empty()) throw ValidationError("explain needs --world or --all-worlds");
    const auto world = parseWorld(worldText, program);
    const auto& engine = model.engineAt(world);
    const auto status = engine.warrantStatus(literal);
    json trees = json::array();
    out.text << "world " << toString(world) << ": " << toString(literal) << " is " << toString(status) << "\n";
    for (const auto& target : {literal, literal.complement()}) {
        for (const auto& tree : engine.markedForest(target)) {
            const auto rendered = engine.render(tree);
            trees.push_back({{"literal", toString(target)}, {"mark", toString(tree.mark)}, {"tree", rendered}});
            out.text << "\n" << rendered;
        }
    }
    out.result = {{"literal", toString(literal)}, {"world", world.atoms()}, {"status", toString(status)},
                  {"trees", trees}};
    return Ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reasoning and revision for probabilistic PreDeLP programs"};
    app.require_subcommand(1);
    Output out;
    app.add_flag("--json", out.asJson, "emit {status, result, diagnostics} as JSON");

    ProgramFiles checkFiles, queryFiles, reviseFiles, explainFiles;
    std::string emPath, formula, literal, element, annotation, outAf, outAm, world;
    bool allWorlds = false;

    auto* check = app.add_subcommand("check", "Type I and Type II consistency");
    checkFiles.add(check);
    auto* entail = app.add_subcommand("entail", "tightest probability interval entailed by an EM");
    entail->add_option("--em", emPath, "environmental model file")->required();
    entail->add_option("--formula", formula, "EM formula")->required();
    auto* query = app.add_subcommand("query", "warrant-based probability bounds for a literal");
    queryFiles.add(query);
    query->add_option("--literal", literal, "AM literal, e.g. ~s")->required();
    auto* rev = app.add_subcommand("revise", "incorporate a fact or strict rule by revising annotations");
    reviseFiles.add(rev);
    rev->add_option("--input-element", element, "AM statement, e.g. \"[f] ~umbrella.\"")->required();
    rev->add_option("--input-annotation", annotation, "EM formula for the input")->required();
    rev->add_option("--out-af", outAf, "where to write the revised annotation function")->required();
    rev->add_option("--out-am", outAm, "where to write the extended AM");
    auto* explain = app.add_subcommand("explain", "dialectical trees for a literal at a world");
    explainFiles.add(explain);
    explain->add_option("--literal", literal, "AM literal")->required();
    explain->add_option("--world", world, "true EM atoms, comma separated");
    explain->add_flag("--all-worlds", allWorlds, "summary line per world instead of trees");
    for (auto* sub : {check, entail, query, rev, explain})
        sub->add_flag("--json", out.asJson, "emit {status, result, diagnostics} as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return BadInput;
    }

    try {
        if (*check) return out.finish(runCheck(checkFiles, out));
        if (*entail) return out.finish(runEntail(emPath, formula, out));
        if (*query) return out.finish(runQuery(queryFiles, literal, out));
        if (*rev) return out.finish(runRevise(reviseFiles, element, annotation, outAf, outAm, out));
        if (*explain) return out.finish(runExplain(explainFiles, literal, world, allWorlds, out));
    } catch (const TypeIInconsistent& e) {
        out.diagnostics.push_back(e.what());
        return out.finish(Inconsistent);
    } catch (const TypeIIInconsistent& e) {
        out.diagnostics.push_back(e.what());
        return out.finish(Inconsistent);
    } catch (const Error& e) {
        out.diagnostics.push_back(e.what());
        return out.finish(BadInput);
    }
    return BadInput;
}
