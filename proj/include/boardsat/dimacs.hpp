#pragma once

#include "boardsat/cnf.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace boardsat {

struct ParseDiagnostic {
    std::size_t line = 1;
    std::string message;
};

/// Parses DIMACS CNF. Literal +i maps to x_{i-1}, -i to ~x_{i-1}. Comment
/// lines are skipped and a line starting with '%' ends the clause section.
/// Hard errors throw ParseError with the offending line; recoverable issues
/// (clause count disagreeing with the header) are appended to `warnings`.
Formula parse_dimacs(std::string_view text, std::vector<ParseDiagnostic>* warnings = nullptr);

/// Header, then one clause per line with literals in ascending variable order.
std::string write_dimacs(const Formula& f);

} // namespace boardsat
