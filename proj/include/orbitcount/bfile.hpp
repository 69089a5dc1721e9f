#pragma once

// OEIS b-file interchange: ASCII lines "<index> <value>\n" with contiguous
// ascending indices. Lines starting with '#' and blank lines are skipped on
// input. Output is always canonical, so parse followed by emit reproduces a
// canonical file byte for byte.

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sequence.hpp"

namespace orbitcount {

class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct BFile {
  std::int64_t offset = 1;  // index of the first entry
  std::vector<Integer> values;

  friend bool operator==(const BFile&, const BFile&) = default;
};

namespace detail {

inline bool parse_integer(std::string_view text, Integer& out) {
  if (text.empty()) return false;
  std::size_t start = text[0] == '-' ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  out = Integer(std::string(text));
  return true;
}

}  // namespace detail

inline BFile parse_bfile(std::string_view text) {
  BFile out;
  bool first = true;
  std::size_t line_no = 0;
  std::int64_t expected = 0;
  while (!text.empty()) {
    ++line_no;
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t lead = 0;
    while (lead < line.size() && std::isspace(static_cast<unsigned char>(line[lead]))) ++lead;
    line.remove_prefix(lead);
    if (line.empty() || line.front() == '#') continue;

    std::size_t split = 0;
    while (split < line.size() && !std::isspace(static_cast<unsigned char>(line[split]))) ++split;
    std::string_view index_text = line.substr(0, split);
    std::string_view rest = line.substr(split);
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) rest.remove_prefix(1);
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.remove_suffix(1);
    if (rest.find_first_of(" \t") != std::string_view::npos)
      throw FormatError(line_no, "expected exactly two fields");

    Integer index, value;
    if (!detail::parse_integer(index_text, index)) throw FormatError(line_no, "bad index");
    if (!detail::parse_integer(rest, value)) throw FormatError(line_no, "bad value");
    if (index > INT64_MAX || index < INT64_MIN) throw FormatError(line_no, "index out of range");
    const auto idx = index.convert_to<std::int64_t>();
    if (first) {
      out.offset = idx;
      expected = idx;
      first = false;
    }
    if (idx != expected)
      throw FormatError(line_no, "expected index " + std::to_string(expected) + ", found " + std::to_string(idx));
    ++expected;
    out.values.push_back(std::move(value));
  }
  if (out.values.empty()) throw FormatError(line_no, "no data lines");
  return out;
}

inline std::string emit_bfile(const BFile& file) {
  std::ostringstream os;
  std::int64_t index = file.offset;
  for (const auto& v : file.values) os << index++ << ' ' << v.str() << '\n';
  return os.str();
}

// Internal index 1 becomes b-file index `offset`.
inline BFile to_bfile(const Sequence& s, std::int64_t offset = 1) {
  return BFile{offset, std::vector<Integer>(s.terms().begin(), s.terms().end())};
}

// The first entry becomes internal index 1, whatever its b-file index.
inline Sequence from_bfile(const BFile& file, View view) { return Sequence(view, file.values); }

}  // namespace orbitcount
