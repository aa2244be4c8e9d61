#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sternbp/bigint.hpp"

namespace sternbp {

// One OEIS b-file line: "<n> <value>", single space, decimal.
struct BFileRecord {
  Index n;
  Count value;

  friend bool operator==(const BFileRecord&, const BFileRecord&) = default;
};

std::string format_bfile_line(const BFileRecord& rec);

// Parses b-file text. Lines whose first non-blank character is '#' and blank
// lines are skipped; any other line must be two non-negative decimal fields.
// Throws std::runtime_error with the line number on malformed input.
std::vector<BFileRecord> parse_bfile(std::istream& in);
std::vector<BFileRecord> parse_bfile_text(const std::string& text);

}  // namespace sternbp
