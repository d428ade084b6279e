#pragma once

#include "ppdelp/io.hpp"

#include <string>

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(PPDELP_DATA_DIR) + "/" + name; }

inline ppdelp::PreDeLPProgram running() { return ppdelp::parseAM(ppdelp::readFile(path("running.am")), "running.am"); }

inline ppdelp::EMKnowledgeBase em(const std::string& name) {
    return ppdelp::parseEM(ppdelp::readFile(path(name)), name);
}

inline ppdelp::PPreDeLPProgram bundle(const std::string& em, const std::string& am, const std::string& af) {
    return ppdelp::loadBundle(path(em), path(am), path(af)).parsed;
}

} // namespace fixtures
