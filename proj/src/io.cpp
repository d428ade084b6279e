#include "ppdelp/io.hpp"

#include "ppdelp/error.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace ppdelp {

namespace {

bool identStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool identChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Cursor {
public:
    Cursor(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {}

    void skipSpace() {
        while (pos_ < text_.size()) {
            if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            } else if (text_[pos_] == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    bool atEnd() {
        skipSpace();
        return pos_ >= text_.size();
    }

    char peek() {
        skipSpace();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool lookingAt(std::string_view token) {
        skipSpace();
        return text_.substr(pos_, token.size()) == token;
    }

    bool accept(std::string_view token) {
        if (!lookingAt(token)) return false;
        pos_ += token.size();
        return true;
    }

    /// A word not followed by further identifier characters.
    bool acceptKeyword(std::string_view word) {
        if (!lookingAt(word)) return false;
        const auto end = pos_ + word.size();
        if (end < text_.size() && identChar(text_[end])) return false;
        pos_ = end;
        return true;
    }

    void expect(std::string_view token) {
        if (!accept(token)) fail("expected '" + std::string(token) + "'");
    }

    std::string identifier() {
        skipSpace();
        if (pos_ >= text_.size() || !identStart(text_[pos_])) fail("expected an identifier");
        const auto start = pos_;
        while (pos_ < text_.size() && identChar(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string label() {
        skipSpace();
        const auto start = pos_;
        while (pos_ < text_.size() && (identChar(text_[pos_]) || text_[pos_] == '@')) ++pos_;
        if (start == pos_) fail("expected a label");
        return std::string(text_.substr(start, pos_ - start));
    }

    Rational number() {
        skipSpace();
        const auto start = pos_;
        auto digits = [&] {
            while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
        };
        if (pos_ >= text_.size() || !digit(text_[pos_])) fail("expected a number");
        digits();
        // a '.' only belongs to the number when a digit follows; otherwise it ends the statement
        if (pos_ + 1 < text_.size() && (text_[pos_] == '.' || text_[pos_] == '/') && digit(text_[pos_ + 1])) {
            ++pos_;
            digits();
        }
        return parseRational(text_.substr(start, pos_ - start));
    }

    std::size_t position() {
        skipSpace();
        return pos_;
    }

    [[noreturn]] void fail(const std::string& message) { failAt(pos_, message); }

    [[noreturn]] void failAt(std::size_t at, const std::string& message) const {
        const auto [line, column] = lineColumn(at);
        throw ParseError(source_, line, column, message);
    }

    /// Well-formed but invalid; still reported with its position.
    [[noreturn]] void invalidAt(std::size_t at, const std::string& message) const {
        const auto [line, column] = lineColumn(at);
        throw ValidationError(source_ + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message);
    }

private:
    std::pair<std::size_t, std::size_t> lineColumn(std::size_t at) const {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        return {line, column};
    }

    std::string_view text_;
    std::string source_;
    std::size_t pos_ = 0;
};

Formula orExpr(Cursor& in);

Formula unary(Cursor& in) {
    if (in.accept("!")) return !unary(in);
    if (in.accept("(")) {
        auto f = orExpr(in);
        in.expect(")");
        return f;
    }
    const auto name = in.identifier();
    if (name == "true") return Formula::constant(true);
    if (name == "false") return Formula::constant(false);
    return Formula::atom(name);
}

Formula andExpr(Cursor& in) {
    std::vector<Formula> parts{unary(in)};
    while (in.accept("&")) parts.push_back(unary(in));
    return Formula::conjunction(std::move(parts));
}

Formula orExpr(Cursor& in) {
    std::vector<Formula> parts{andExpr(in)};
    while (in.accept("|")) parts.push_back(andExpr(in));
    return Formula::disjunction(std::move(parts));
}

SchematicLiteral schematicLiteral(Cursor& in) {
    SchematicLiteral lit;
    lit.negated = in.accept("~");
    lit.atom.predicate = in.identifier();
    if (std::isupper(static_cast<unsigned char>(lit.atom.predicate.front())))
        in.fail("predicate '" + lit.atom.predicate + "' must start with a lowercase letter");
    if (in.accept("(")) {
        do {
            auto name = in.identifier();
            const bool variable = std::isupper(static_cast<unsigned char>(name.front())) || name.front() == '_';
            lit.atom.args.push_back(Term{std::move(name), variable});
        } while (in.accept(","));
        in.expect(")");
    }
    return lit;
}

std::vector<std::string> atomList(Cursor& in) {
    in.expect("{");
    std::vector<std::string> atoms;
    do atoms.push_back(in.identifier());
    while (in.accept(","));
    in.expect("}");
    in.expect(".");
    return atoms;
}

SchematicElement statement(Cursor& in, std::optional<std::string> defaultId) {
    SchematicElement e;
    if (in.accept("[")) {
        e.id = in.label();
        in.expect("]");
    } else if (defaultId) {
        e.id = *defaultId;
    } else {
        in.fail("expected '[label]'");
    }
    e.head = schematicLiteral(in);
    if (in.accept(".")) {
        e.kind = ElementKind::Fact;
        return e;
    }
    if (in.accept("<-")) {
        e.kind = ElementKind::StrictRule;
    } else if (in.accept("-<")) {
        if (in.accept(".")) {
            e.kind = ElementKind::Presumption;
            return e;
        }
        e.kind = ElementKind::DefeasibleRule;
    } else {
        in.fail("expected '.', '<-' or '-<'");
    }
    do e.body.push_back(schematicLiteral(in));
    while (in.accept(","));
    in.expect(".");
    return e;
}

Literal groundLiteral(const SchematicLiteral& lit, Cursor& in, std::size_t at) {
    if (!lit.atom.ground()) in.failAt(at, "literal must be ground");
    return Literal{canonicalAtom(lit.atom), lit.negated};
}

} // namespace

Formula parseFormula(std::string_view text, const std::string& source) {
    Cursor in(text, source);
    auto f = orExpr(in);
    if (!in.atEnd()) in.fail("unexpected text after formula");
    return f;
}

Literal parseLiteral(std::string_view text, const std::string& source) {
    Cursor in(text, source);
    const auto at = in.position();
    auto lit = schematicLiteral(in);
    if (!in.atEnd()) in.fail("unexpected text after literal");
    return groundLiteral(lit, in, at);
}

EMKnowledgeBase parseEM(std::string_view text, const std::string& source) {
    Cursor in(text, source);
    std::vector<ProbabilisticFormula> formulas;
    std::vector<IntegrityConstraint> constraints;
    std::set<std::string> declared;
    while (!in.atEnd()) {
        const auto at = in.position();
        if (in.acceptKeyword("oneOf")) {
            auto atoms = atomList(in);
            constraints.push_back(IntegrityConstraint::oneOf(std::move(atoms)));
            continue;
        }
        if (in.acceptKeyword("atoms")) {
            for (auto& a : atomList(in)) declared.insert(std::move(a));
            continue;
        }
        auto f = orExpr(in);
        in.expect(":");
        const auto p = in.number();
        in.expect("+-");
        const auto eps = in.number();
        in.expect(".");
        try {
            formulas.push_back(ProbabilisticFormula::make(std::move(f), p, eps));
        } catch (const ValidationError& e) {
            in.invalidAt(at, e.what());
        }
    }
    for (const auto& c : constraints) declared.insert(c.atoms.begin(), c.atoms.end());
    return EMKnowledgeBase(std::move(formulas), Universe(std::move(declared)), std::move(constraints));
}

SchematicProgram parseSchematicAM(std::string_view text, const std::string& source) {
    Cursor in(text, source);
    SchematicProgram program;
    std::set<std::string> seen;
    while (!in.atEnd()) {
        const auto at = in.position();
        auto e = statement(in, std::nullopt);
        if (!seen.insert(e.id).second) in.failAt(at, "duplicate label '" + e.id + "'");
        program.elements.push_back(std::move(e));
    }
    return program;
}

PreDeLPProgram parseAM(std::string_view text, const std::string& source) {
    const auto schematic = parseSchematicAM(text, source);
    return ground(schematic, schematic.constants());
}

AnnotationFunction parseAF(std::string_view text, const std::string& source) {
    Cursor in(text, source);
    AnnotationFunction af;
    while (!in.atEnd()) {
        const auto at = in.position();
        auto label = in.label();
        in.expect(":");
        auto f = orExpr(in);
        in.expect(".");
        if (af.contains(label)) in.failAt(at, "duplicate annotation for '" + label + "'");
        af.set(label, std::move(f));
    }
    return af;
}

AMElement parseElement(std::string_view text, const std::string& defaultId, const std::string& source) {
    Cursor in(text, source);
    const auto at = in.position();
    auto e = statement(in, defaultId);
    if (!in.atEnd()) in.fail("unexpected text after element");
    AMElement out{e.id, e.kind, groundLiteral(e.head, in, at), {}};
    for (const auto& b : e.body) out.body.push_back(groundLiteral(b, in, at));
    return out;
}

std::string printEM(const EMKnowledgeBase& kb) {
    std::ostringstream out;
    std::set<std::string> mentioned;
    for (const auto& c : kb.constraints()) {
        out << "oneOf{";
        for (std::size_t i = 0; i < c.atoms.size(); ++i) out << (i ? ", " : "") << c.atoms[i];
        out << "}.\n";
        mentioned.insert(c.atoms.begin(), c.atoms.end());
    }
    for (const auto& f : kb.formulas()) {
        out << toString(f.formula) << " : " << toExactString(f.probability) << " +- " << toExactString(f.tolerance)
            << ".\n";
        collectAtoms(f.formula, mentioned);
    }
    std::vector<std::string> extra;
    for (const auto& a : kb.universe().atoms())
        if (!mentioned.contains(a)) extra.push_back(a);
    if (!extra.empty()) {
        out << "atoms{";
        for (std::size_t i = 0; i < extra.size(); ++i) out << (i ? ", " : "") << extra[i];
        out << "}.\n";
    }
    return out.str();
}

std::string printElement(const AMElement& e) {
    std::string out = "[" + e.id + "] " + toString(e.head);
    switch (e.kind) {
    case ElementKind::Fact: return out + ".";
    case ElementKind::Presumption: return out + " -< .";
    case ElementKind::StrictRule: out += " <- "; break;
    case ElementKind::DefeasibleRule: out += " -< "; break;
    }
    for (std::size_t i = 0; i < e.body.size(); ++i) out += (i ? ", " : "") + toString(e.body[i]);
    return out + ".";
}

std::string printAM(const PreDeLPProgram& program) {
    std::string out;
    for (const auto& e : program.elements()) out += printElement(e) + "\n";
    return out;
}

std::string printAF(const AnnotationFunction& af) {
    std::string out;
    for (const auto& [id, f] : af.entries()) out += id + " : " + toString(f) + ".\n";
    return out;
}

PPreDeLPProgram assemble(const EMKnowledgeBase& em, const GroundingResult& grounding, const AnnotationFunction& af) {
    std::set<std::string> labels;
    for (const auto& [id, label] : grounding.origin) labels.insert(label);
    for (const auto& [label, f] : af.entries())
        if (!grounding.program.contains(label) && !labels.contains(label))
            throw ValidationError("annotation for unknown element '" + label + "'");

    AnnotationFunction ground;
    for (const auto& e : grounding.program.elements()) {
        if (const auto* f = af.find(e.id)) {
            ground.set(e.id, *f);
            continue;
        }
        auto origin = grounding.origin.find(e.id);
        const Formula* f = origin == grounding.origin.end() ? nullptr : af.find(origin->second);
        if (!f) throw ValidationError("missing annotation for '" + e.id + "'");
        ground.set(e.id, *f);
    }
    return PPreDeLPProgram(em, grounding.program, std::move(ground));
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ProgramBundle loadBundle(const std::string& emPath, const std::string& amPath, const std::string& afPath) {
    ProgramBundle bundle{emPath, amPath, afPath, {}, {}};
    const auto em = parseEM(readFile(emPath), emPath);
    const auto schematic = parseSchematicAM(readFile(amPath), amPath);
    bundle.grounding = groundWithOrigins(schematic, schematic.constants());
    const auto af = parseAF(readFile(afPath), afPath);
    bundle.parsed = assemble(em, bundle.grounding, af);
    return bundle;
}

} // namespace ppdelp
