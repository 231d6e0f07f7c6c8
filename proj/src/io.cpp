#include "groupcheck/io.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "groupcheck/errors.hpp"
#include "groupcheck/lattice.hpp"

namespace groupcheck {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1;

  bool done() const { return pos >= text.size(); }

  // Returns the next line without its terminator, advancing the cursor.
  std::string next_line() {
    std::size_t end = text.find('\n', pos);
    std::string out;
    if (end == std::string::npos) {
      out = text.substr(pos);
      pos = text.size();
    } else {
      out = text.substr(pos, end - pos);
      pos = end + 1;
    }
    ++line;
    return out;
  }
};

// Splits a line into integer tokens, reporting the 1-based column of the
// first bad character.
std::vector<int> parse_int_row(const std::string& row, int line) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < row.size()) {
    if (row[i] == ' ') {
      ++i;
      continue;
    }
    int value = 0;
    const char* begin = row.data() + i;
    const char* end = row.data() + row.size();
    auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc() || value < 0)
      throw ParseError("expected a non-negative integer", line,
                       static_cast<int>(i) + 1);
    if (result.ptr != end && *result.ptr != ' ')
      throw ParseError("unexpected character in number", line,
                       static_cast<int>(result.ptr - row.data()) + 1);
    out.push_back(value);
    i = static_cast<std::size_t>(result.ptr - row.data());
  }
  return out;
}

// Expects `keyword <tail>` and returns the tail.
std::string parse_header(const std::string& row, const std::string& keyword,
                         int line) {
  if (row.rfind(keyword + " ", 0) != 0)
    throw ParseError("expected '" + keyword + " ...'", line, 1);
  std::string tail = row.substr(keyword.size() + 1);
  if (tail.empty())
    throw ParseError("missing value after '" + keyword + "'", line,
                     static_cast<int>(keyword.size()) + 2);
  return tail;
}

int parse_count(const std::string& row, const std::string& keyword, int line) {
  const std::string tail = parse_header(row, keyword, line);
  const auto values = parse_int_row(tail, line);
  if (values.size() != 1 || values[0] <= 0)
    throw ParseError("expected one positive integer after '" + keyword + "'",
                     line, static_cast<int>(keyword.size()) + 2);
  return values[0];
}

void reject_trailing(Cursor& cursor) {
  while (!cursor.done()) {
    const int line = cursor.line;
    if (!cursor.next_line().empty())
      throw ParseError("unexpected content after group data", line, 1);
  }
}

GroupPtr parse_table(Cursor& cursor, std::string name, const Budgets& budgets) {
  const int order_line = cursor.line;
  if (cursor.done())
    throw ParseError("missing 'order' line", order_line, 1);
  const int n = parse_count(cursor.next_line(), "order", order_line);
  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    const int line = cursor.line;
    if (cursor.done())
      throw ParseError("expected a table row", line, 1);
    auto row = parse_int_row(cursor.next_line(), line);
    if (static_cast<int>(row.size()) != n)
      throw ParseError("table row has " + std::to_string(row.size()) +
                           " entries, expected " + std::to_string(n),
                       line, 1);
    for (int value : row)
      if (value >= n)
        throw ParseError("table entry " + std::to_string(value) +
                             " out of range",
                         line, 1);
    rows.push_back(std::move(row));
  }
  reject_trailing(cursor);
  return group_from_table(rows, std::move(name), budgets);
}

GroupPtr parse_permutations(Cursor& cursor, std::string name,
                            const Budgets& budgets) {
  const int degree_line = cursor.line;
  if (cursor.done())
    throw ParseError("missing 'degree' line", degree_line, 1);
  const int degree = parse_count(cursor.next_line(), "degree", degree_line);
  std::vector<std::vector<int>> generators;
  while (!cursor.done()) {
    const int line = cursor.line;
    const std::string raw = cursor.next_line();
    if (raw.empty()) {
      reject_trailing(cursor);
      break;
    }
    auto row = parse_int_row(raw, line);
    if (static_cast<int>(row.size()) != degree)
      throw ParseError("generator has " + std::to_string(row.size()) +
                           " images, expected " + std::to_string(degree),
                       line, 1);
    for (int value : row)
      if (value >= degree)
        throw ParseError("image " + std::to_string(value) + " out of range",
                         line, 1);
    generators.push_back(std::move(row));
  }
  if (generators.empty())
    throw ParseError("no generators", cursor.line, 1);
  return group_from_permutations(generators, std::move(name), budgets);
}

}  // namespace

std::string emit_table(const GroupPtr& g) {
  std::ostringstream out;
  out << "group " << g->name() << "\n";
  out << "order " << g->order() << "\n";
  const int n = g->order();
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c) out << ' ';
      out << g->mul(static_cast<Elem>(r), static_cast<Elem>(c));
    }
    out << '\n';
  }
  return out.str();
}

std::string emit_permutations(const GroupPtr& g) {
  std::ostringstream out;
  out << "perm " << g->name() << "\n";
  out << "degree " << g->order() << "\n";
  std::vector<Elem> everything(static_cast<std::size_t>(g->order()));
  std::iota(everything.begin(), everything.end(), Elem{0});
  auto generators = small_generators(g, everything);
  if (generators.empty()) generators.push_back(0);
  const int n = g->order();
  for (Elem s : generators) {
    for (int x = 0; x < n; ++x) {
      if (x) out << ' ';
      out << g->mul(s, static_cast<Elem>(x));
    }
    out << '\n';
  }
  return out.str();
}

GroupPtr parse_group_text(const std::string& text, const Budgets& budgets) {
  Cursor cursor{text};
  if (cursor.done()) throw ParseError("empty input", 1, 1);
  const int header_line = cursor.line;
  const std::string header = cursor.next_line();
  if (header.rfind("group ", 0) == 0)
    return parse_table(cursor, parse_header(header, "group", header_line),
                       budgets);
  if (header.rfind("perm ", 0) == 0)
    return parse_permutations(cursor,
                              parse_header(header, "perm", header_line),
                              budgets);
  throw ParseError("expected 'group <name>' or 'perm <name>'", header_line, 1);
}

GroupPtr load_group(const std::string& path, const Budgets& budgets) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path, 0, 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_group_text(buffer.str(), budgets);
}

}  // namespace groupcheck
