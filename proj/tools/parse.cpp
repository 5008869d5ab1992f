#include "parse.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "anosov/errors.hpp"

namespace anosov::cli {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at line " + std::to_string(line) + ", column " + std::to_string(col),
                     line, col);
  }
};

Integer read_integer(Cursor& c) {
  c.skip_space();
  std::string tok;
  if (!c.done() && (c.peek() == '-' || c.peek() == '+')) {
    tok += c.peek();
    c.advance();
  }
  if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
    c.fail("expected an integer");
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    tok += c.peek();
    c.advance();
  }
  return Integer(tok);
}

IntMatrix matrix_from_rows(const std::vector<std::vector<Integer>>& rows, Cursor& c) {
  if (rows.empty()) c.fail("empty matrix");
  const std::size_t n = rows.size();
  for (const auto& r : rows)
    if (r.size() != n)
      c.fail("matrix must be square: " + std::to_string(n) + " rows but a row has " +
             std::to_string(r.size()) + " entries");
  return IntMatrix(rows);
}

IntMatrix parse_inline_matrix(const std::string& spec) {
  Cursor c{spec};
  std::vector<std::vector<Integer>> rows;
  rows.emplace_back();
  for (;;) {
    rows.back().push_back(read_integer(c));
    c.skip_space();
    if (c.done()) break;
    if (c.peek() == ',') {
      c.advance();
    } else if (c.peek() == ';') {
      c.advance();
      rows.emplace_back();
    } else {
      c.fail(std::string("unexpected character '") + c.peek() + "'");
    }
  }
  return matrix_from_rows(rows, c);
}

Integer json_entry_to_integer(const nlohmann::json& e) {
  if (e.is_number_integer()) return Integer(std::to_string(e.get<long long>()));
  if (e.is_number_unsigned()) return Integer(std::to_string(e.get<unsigned long long>()));
  if (e.is_string()) {
    const std::string s = e.get<std::string>();
    std::size_t k = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (k == s.size()) throw ParseError("matrix entry '" + s + "' is not an integer", 1, 1);
    for (; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k])))
        throw ParseError("matrix entry '" + s + "' is not an integer", 1, 1);
    return Integer(s);
  }
  throw ParseError("matrix entries must be integers or decimal strings", 1, 1);
}

IntMatrix parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file " + path, 1, 1);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what(), 1, 1);
  }
  if (!doc.is_object() || !doc.contains("matrix") || !doc["matrix"].is_array())
    throw ParseError("matrix file " + path + " must be an object with an array key \"matrix\"", 1,
                     1);
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : doc["matrix"]) {
    if (!row.is_array())
      throw ParseError("matrix file " + path + ": every row must be an array", 1, 1);
    rows.emplace_back();
    for (const auto& e : row) rows.back().push_back(json_entry_to_integer(e));
  }
  if (rows.empty()) throw ParseError("matrix file " + path + ": empty matrix", 1, 1);
  for (const auto& r : rows)
    if (r.size() != rows.size())
      throw ParseError("matrix file " + path + ": matrix must be square", 1, 1);
  return IntMatrix(rows);
}

}  // namespace

IntMatrix parse_matrix_spec(const std::string& spec) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) return parse_matrix_file(spec);
  return parse_inline_matrix(spec);
}

RationalPoint parse_point_spec(const std::string& spec, std::size_t expect_dim) {
  Cursor c{spec};
  std::vector<Rational> coords;
  for (;;) {
    Integer num = read_integer(c);
    Integer den = 1;
    c.skip_space();
    if (!c.done() && c.peek() == '/') {
      c.advance();
      den = read_integer(c);
      if (den == 0) c.fail("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    coords.push_back(q);
    c.skip_space();
    if (c.done()) break;
    if (c.peek() == ',')
      c.advance();
    else if (c.peek() == '.')
      c.fail("decimal coordinates are not exact; use a fraction p/q");
    else
      c.fail(std::string("unexpected character '") + c.peek() + "'");
  }
  if (coords.size() != expect_dim)
    throw ParseError("point has " + std::to_string(coords.size()) + " coordinates; matrix needs " +
                         std::to_string(expect_dim),
                     1, 1);
  return RationalPoint(std::move(coords));
}

std::vector<double> parse_float_point(const std::string& spec, std::size_t expect_dim) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    std::string tok = spec.substr(start, comma == std::string::npos ? comma : comma - start);
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("'" + tok + "' is not a number", 1, static_cast<int>(start) + 1);
    }
    while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
    if (used != tok.size())
      throw ParseError("'" + tok + "' is not a number", 1, static_cast<int>(start) + 1);
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() != expect_dim)
    throw ParseError("point has " + std::to_string(out.size()) + " coordinates; matrix needs " +
                         std::to_string(expect_dim),
                     1, 1);
  return out;
}

}  // namespace anosov::cli
