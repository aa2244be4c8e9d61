#include "sternbp/bfile.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace sternbp {

std::string format_bfile_line(const BFileRecord& rec) {
  return rec.n.get_str() + ' ' + rec.value.get_str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void fail(std::size_t lineno, const std::string& what) {
  throw std::runtime_error("b-file line " + std::to_string(lineno) + ": " +
                           what);
}

}  // namespace

std::vector<BFileRecord> parse_bfile(std::istream& in) {
  std::vector<BFileRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const std::size_t sep = body.find_first_of(" \t");
    if (sep == std::string_view::npos) {
      fail(lineno, "expected \"<n> <value>\"");
    }
    std::string_view n_text = body.substr(0, sep);
    std::string_view v_text = trim(body.substr(sep + 1));
    auto n = parse_index(n_text);
    if (!n) fail(lineno, "bad index field \"" + std::string(n_text) + "\"");
    auto v = parse_index(v_text);
    if (!v) fail(lineno, "bad value field \"" + std::string(v_text) + "\"");
    records.push_back({std::move(*n), std::move(*v)});
  }
  return records;
}

std::vector<BFileRecord> parse_bfile_text(const std::string& text) {
  std::istringstream in(text);
  return parse_bfile(in);
}

}  // namespace sternbp
