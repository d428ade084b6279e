#pragma once

#include "ppdelp/em.hpp"
#include "ppdelp/pprogram.hpp"
#include "ppdelp/program.hpp"

#include <string>
#include <string_view>

namespace ppdelp {

// All parsers throw ParseError with a line and column on malformed text and
// ValidationError on well-formed text that breaks a structural rule.

Formula parseFormula(std::string_view text, const std::string& source = "<formula>");
Literal parseLiteral(std::string_view text, const std::string& source = "<literal>");

/// `FORMULA : P +- E.`, `oneOf{a, b}.` and `atoms{a, b}.` statements; `#` comments.
EMKnowledgeBase parseEM(std::string_view text, const std::string& source = "<em>");
/// Labelled facts, presumptions, strict and defeasible rules; may contain variables.
SchematicProgram parseSchematicAM(std::string_view text, const std::string& source = "<am>");
/// parseSchematicAM grounded over the constants it mentions.
PreDeLPProgram parseAM(std::string_view text, const std::string& source = "<am>");
/// `label : FORMULA.` statements; a label may appear once.
AnnotationFunction parseAF(std::string_view text, const std::string& source = "<af>");
/// One AM statement; the label is optional and defaults to `defaultId`.
AMElement parseElement(std::string_view text, const std::string& defaultId = "input",
                       const std::string& source = "<element>");

std::string printEM(const EMKnowledgeBase& kb);
std::string printElement(const AMElement& element);
std::string printAM(const PreDeLPProgram& program);
std::string printAF(const AnnotationFunction& af);

struct ProgramBundle {
    std::string emPath, amPath, afPath;
    GroundingResult grounding;
    PPreDeLPProgram parsed;
};

/// Grounds the AM over its constants. Annotations may name ground ids or
/// schematic labels; a label's annotation covers all its instances. Every
/// element must end up with exactly one annotation.
PPreDeLPProgram assemble(const EMKnowledgeBase& em, const GroundingResult& grounding, const AnnotationFunction& af);

ProgramBundle loadBundle(const std::string& emPath, const std::string& amPath, const std::string& afPath);
std::string readFile(const std::string& path);

} // namespace ppdelp
