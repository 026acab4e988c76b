#include "moonfill/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "moonfill/error.hpp"

namespace moonfill {

namespace {

struct Line {
  int number = 0;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back({number, line});
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return out;
}

std::string_view strip_comment(std::string_view line) { return line.substr(0, line.find('#')); }

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what, {line});
}

std::vector<int> integers(std::string_view text, int line) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char ch = text[pos];
    if (ch == ' ' || ch == '\t' || ch == ',') {
      ++pos;
      continue;
    }
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + pos)
      fail(line, "expected an integer near '" + std::string(text.substr(pos, 12)) + "'");
    pos = static_cast<std::size_t>(ptr - text.data());
    out.push_back(value);
  }
  return out;
}

// Nonblank lines as integer tuples of the given arity.
std::vector<std::pair<int, std::vector<int>>> tuples(std::string_view text, std::size_t arity) {
  std::vector<std::pair<int, std::vector<int>>> out;
  for (const auto& line : split_lines(text)) {
    auto values = integers(strip_comment(line.text), line.number);
    if (values.empty()) continue;
    if (values.size() != arity)
      fail(line.number, "expected " + std::to_string(arity) + " integers, got " +
                            std::to_string(values.size()));
    out.emplace_back(line.number, std::move(values));
  }
  return out;
}

}  // namespace

MoonPolyomino parse_shape(std::string_view text) {
  std::vector<RowInterval> rows;
  for (const auto& [line, v] : tuples(text, 2)) rows.push_back({v[0], v[1]});
  if (rows.empty()) throw Error(ErrorKind::ParseError, "shape file has no rows");
  return validate_moon(std::move(rows));
}

std::string format_shape(const MoonPolyomino& shape) {
  std::string out;
  for (const auto& row : shape.row_intervals())
    out += std::to_string(row.left) + " " + std::to_string(row.right) + "\n";
  return out;
}

Filling parse_filling(std::string_view text, const MoonPolyomino& shape) {
  std::vector<Cell> cells;
  for (const auto& [line, v] : tuples(text, 2)) cells.push_back({v[0], v[1]});
  return Filling::from_cells(shape, cells);
}

std::string format_filling(const Filling& filling) {
  std::string out;
  for (const Cell& c : filling.ones())
    out += std::to_string(c.row) + " " + std::to_string(c.col) + "\n";
  return out;
}

CompositionFile parse_compositions(std::string_view text) {
  CompositionFile out;
  bool have_e = false;
  for (const auto& line : split_lines(text)) {
    std::string_view body = line.text;
    const auto first = body.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    body.remove_prefix(first);
    if (body.substr(0, 3) == "# e") {
      out.e = integers(body.substr(3), line.number);
      have_e = true;
      continue;
    }
    body = strip_comment(body);
    if (body.find_first_not_of(" \t") == std::string_view::npos) continue;
    const auto colon = body.find(':');
    if (colon == std::string_view::npos) fail(line.number, "expected 'column: entries'");
    const auto index = integers(body.substr(0, colon), line.number);
    if (index.size() != 1 || index[0] != static_cast<int>(out.compositions.size()) + 1)
      fail(line.number, "expected column " + std::to_string(out.compositions.size() + 1));
    auto entries = integers(body.substr(colon + 1), line.number);
    if (entries.empty()) fail(line.number, "empty composition");
    out.compositions.push_back(std::move(entries));
  }
  if (!have_e) throw Error(ErrorKind::ParseError, "missing '# e' header");
  return out;
}

std::string format_compositions(std::span<const int> e, const CompositionSeq& compositions) {
  std::string out = "# e";
  for (int x : e) out += " " + std::to_string(x);
  out += "\n";
  for (std::size_t i = 0; i < compositions.size(); ++i)
    out += std::to_string(i + 1) + ": " + format_int_list(compositions[i]) + "\n";
  return out;
}

std::vector<int> column_sums_of(const CompositionSeq& compositions) {
  std::vector<int> s;
  for (const auto& c : compositions) s.push_back(static_cast<int>(c.size()) - 1);
  return s;
}

Word parse_word(std::string_view text) {
  Word out;
  for (const auto& line : split_lines(text)) {
    const auto values = integers(strip_comment(line.text), line.number);
    out.insert(out.end(), values.begin(), values.end());
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, "empty word");
  return out;
}

std::string format_word(std::span<const int> word) { return format_int_list(word) + "\n"; }

Matching parse_matching(std::string_view text) {
  std::vector<Arc> arcs;
  for (const auto& [line, v] : tuples(text, 2)) arcs.push_back({v[0], v[1]});
  if (arcs.empty()) throw Error(ErrorKind::ParseError, "matching file has no arcs");
  return Matching(std::move(arcs));
}

std::string format_matching(const Matching& matching) {
  std::string out;
  for (const Arc& a : matching.arcs())
    out += std::to_string(a.left) + " " + std::to_string(a.right) + "\n";
  return out;
}

std::vector<int> parse_int_list(std::string_view text) { return integers(text, 1); }

std::string format_int_list(std::span<const int> values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string poly_to_json(const BivarPoly& poly) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [exp, c] : poly.terms())
    terms.push_back({{"coeff", c.str()}, {"i", exp.first}, {"j", exp.second}});
  nlohmann::ordered_json doc;
  doc["terms"] = std::move(terms);
  return doc.dump();
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string digest(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace moonfill
