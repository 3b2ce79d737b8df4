#pragma once

#include <string>

#include "termweaver/program.hpp"

namespace termweaver {

/// Prolog-style rendering; lists re-sugared, infix for is/comparisons.
std::string to_string(const TermPtr& t);
std::string to_string(const Literal& l);
std::string to_string(const Clause& c);
std::string to_string(const Query& q);
std::string to_string(const Subst& s);
std::string to_string(const LevelExpr& e, const TermPtr& head_pattern);

/// Whole program including directives; parsing the result reproduces the
/// program (round-trip tested on the corpus).
std::string to_string(const Program& p);

/// Variables renamed to V1,V2,... in order of first occurrence; used to
/// compare and deduplicate literals modulo renaming.
std::string canonical_literal(const Literal& l);
std::string canonical_query(const Query& q);

}  // namespace termweaver
