#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "termweaver/program.hpp"

namespace termweaver {

struct Diagnostic {
  int line = 0;
  int col = 0;
  std::string message;
};

std::string to_string(const Diagnostic& d);

struct ParseResult {
  std::optional<Program> program;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return program.has_value() && diagnostics.empty(); }
};

struct QueryParseResult {
  std::optional<Query> query;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return query.has_value() && diagnostics.empty(); }
};

/// Parses the annotated program format: clauses, '%' comments and the
/// mode/type/typedef/module/levelmap/model directives.
ParseResult parse_program(std::string_view text);
QueryParseResult parse_query(std::string_view text);

/// Test/CLI conveniences; throw std::runtime_error with joined diagnostics.
Program parse_program_or_throw(std::string_view text);
Query parse_query_or_throw(std::string_view text);

}  // namespace termweaver
