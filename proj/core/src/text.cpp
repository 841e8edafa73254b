#include "evoclass/text.hpp"

#include <cctype>

namespace evoclass::text {

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::string algebra_literal(const evo::EvolutionAlgebra& a) {
  std::string s;
  for (std::uint32_t i = 0; i < a.dim(); ++i) {
    if (i) s += ';';
    for (std::uint32_t j = 0; j < a.dim(); ++j) {
      if (j) s += ',';
      s += a.field().encode(a.at(i, j));
    }
  }
  return s;
}

std::string matrix_literal(const linalg::Mat& m) {
  std::string s;
  for (std::uint32_t i = 0; i < m.n(); ++i) {
    if (i) s += ';';
    for (std::uint32_t j = 0; j < m.n(); ++j) {
      if (j) s += ',';
      s += m.field().encode(m.at(i, j));
    }
  }
  return s;
}

evo::EvolutionAlgebra parse_algebra_literal(const gf::Field& field, std::uint32_t n, std::string_view textv) {
  auto rows = split_top_level(textv, ';');
  if (rows.size() != n)
    raise(Errc::parse_error, "algebra literal has " + std::to_string(rows.size()) + " rows, expected " +
                                 std::to_string(n));
  std::vector<std::uint16_t> entries;
  entries.reserve(std::size_t(n) * n);
  for (const auto& row : rows) {
    auto cells = split_top_level(row, ',');
    if (cells.size() != n)
      raise(Errc::parse_error, "algebra row '" + row + "' has " + std::to_string(cells.size()) +
                                   " entries, expected " + std::to_string(n));
    for (const auto& cell : cells) {
      auto v = field.parse(cell);
      if (!v) raise(Errc::parse_error, "bad field element '" + cell + "'");
      entries.push_back(*v);
    }
  }
  return evo::EvolutionAlgebra(field, n, std::move(entries));
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    skip_ws();
    return s[pos++];
  }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::uint64_t parse_number(Cursor& cur) {
  cur.skip_ws();
  std::uint64_t v = 0;
  bool any = false;
  while (cur.pos < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.pos]))) {
    v = v * 10 + std::uint64_t(cur.s[cur.pos] - '0');
    ++cur.pos;
    any = true;
    if (v > (std::uint64_t{1} << 40)) raise(Errc::parse_error, "number too large");
  }
  if (!any) raise(Errc::parse_error, "expected a number");
  return v;
}

// factor := bracketed-element | number | name ('^' number)?
// Returns the factor as (coefficient, monomial) applied onto the term state.
void parse_factor(const poly::Ring& ring, Cursor& cur, std::uint16_t& coeff, poly::Monomial& mono) {
  const gf::Field& f = ring.field();
  char c = cur.peek();
  if (c == '[') {
    std::size_t end = cur.s.find(']', cur.pos);
    if (end == std::string_view::npos) raise(Errc::parse_error, "unterminated element literal");
    auto v = f.parse(cur.s.substr(cur.pos, end - cur.pos + 1));
    if (!v) raise(Errc::parse_error, "bad field element in polynomial");
    cur.pos = end + 1;
    coeff = f.mul(coeff, *v);
    return;
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    std::uint64_t v = parse_number(cur);
    coeff = f.mul(coeff, static_cast<std::uint16_t>(v % f.p()));
    return;
  }
  if (!ident_start(c)) raise(Errc::parse_error, std::string("unexpected character '") + c + "'");
  std::size_t start = cur.pos;
  cur.skip_ws();
  start = cur.pos;
  while (cur.pos < cur.s.size() && ident_char(cur.s[cur.pos])) ++cur.pos;
  std::string name(cur.s.substr(start, cur.pos - start));
  auto var = ring.var_index(name);
  if (!var) raise(Errc::parse_error, "unknown variable '" + name + "'");
  poly::Exp e = 1;
  if (cur.peek() == '^') {
    cur.take();
    e = static_cast<poly::Exp>(parse_number(cur));
  }
  mono.e[*var] += e;
}

}  // namespace

poly::Polynomial parse_polynomial(const poly::Ring& ring, std::string_view textv) {
  const gf::Field& f = ring.field();
  Cursor cur{textv};
  std::vector<poly::Term> terms;
  bool negative = false;
  if (cur.peek() == '-') {
    cur.take();
    negative = true;
  } else if (cur.peek() == '+') {
    cur.take();
  }
  while (true) {
    std::uint16_t coeff = gf::Field::one();
    poly::Monomial mono = poly::Monomial::one(ring.nvars());
    parse_factor(ring, cur, coeff, mono);
    while (cur.peek() == '*') {
      cur.take();
      parse_factor(ring, cur, coeff, mono);
    }
    if (negative) coeff = f.neg(coeff);
    terms.push_back(poly::Term{std::move(mono), coeff});
    if (cur.done()) break;
    char op = cur.take();
    if (op == '+')
      negative = false;
    else if (op == '-')
      negative = true;
    else
      raise(Errc::parse_error, std::string("expected '+' or '-', got '") + op + "'");
    if (cur.done()) raise(Errc::parse_error, "dangling operator");
  }
  return poly::Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace evoclass::text
