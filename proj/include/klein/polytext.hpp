// Text form of polynomials: "x0^6 + 2*x0^3*x1*x3^2 - 12*x0*x1*x2*x3*x4*x5".
// Terms are separated by + or -, a term is a product of factors joined by *,
// a factor is an integer (optionally p/q) or a variable with an optional
// ^exponent.  '#' starts a comment running to the end of the line.

#ifndef KLEIN_POLYTEXT_HPP_
#define KLEIN_POLYTEXT_HPP_

#include "multipoly.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace klein {

class ParseError : public std::runtime_error {
public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_, column_;
};

inline std::vector<std::string> indexed_names(const std::string& stem, int n) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i)
    v.push_back(stem + std::to_string(i));
  return v;
}

// x12, x13, ..., x45: coordinates on wedge^2 of a 5-dimensional space.
inline std::vector<std::string> pair_names() {
  std::vector<std::string> v;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      v.push_back("x" + std::to_string(i) + std::to_string(j));
  return v;
}

namespace impl {

class PolyParser {
public:
  PolyParser(const std::string& src, const std::vector<std::string>& names) : s_(src), names_(names) {
    for (std::size_t i = 0; i < names.size(); ++i)
      index_[names[i]] = i;
  }

  MultiPoly<Rational> parse() {
    MultiPoly<Rational> out(names_.size());
    skip();
    if (at_end())
      error("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        advance();
        skip();
      } else if (!first) {
        error(std::string("expected '+' or '-', found '") + peek() + "'");
      }
      parse_term(out, sign);
      first = false;
      skip();
    }
    return out;
  }

private:
  void parse_term(MultiPoly<Rational>& out, int sign) {
    Rational c = sign;
    Monomial m(names_.size(), 0);
    while (true) {
      parse_factor(c, m);
      skip();
      if (!at_end() && peek() == '*') {
        advance();
        skip();
        continue;
      }
      break;
    }
    out.add_term(m, c);
  }

  void parse_factor(Rational& c, Monomial& m) {
    if (at_end())
      error("unexpected end of input");
    const char ch = peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Integer num(read_digits());
      Integer den = 1;
      if (!at_end() && peek() == '/') {
        advance();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
          error("expected denominator");
        den = Integer(read_digits());
        if (den == 0)
          error("zero denominator");
      }
      c *= Rational(num, den);
      c.canonicalize();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const int l = line_, col = col_;
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
        name += peek();
        advance();
      }
      const auto it = index_.find(name);
      if (it == index_.end())
        throw ParseError(l, col, "unknown variable '" + name + "'");
      unsigned e = 1;
      skip();
      if (!at_end() && peek() == '^') {
        advance();
        skip();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
          error("expected exponent");
        const std::string d = read_digits();
        if (d.size() > 4)
          error("exponent too large");
        e = static_cast<unsigned>(std::stoul(d));
      }
      m[it->second] = static_cast<std::uint16_t>(m[it->second] + e);
      return;
    }
    error(std::string("unexpected character '") + ch + "'");
  }

  std::string read_digits() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      d += peek();
      advance();
    }
    return d;
  }

  void skip() {
    while (pos_ < s_.size()) {
      const char ch = s_[pos_];
      if (ch == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n')
          advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  [[noreturn]] void error(const std::string& what) const { throw ParseError(line_, col_, what); }

  const std::string& s_;
  const std::vector<std::string>& names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

} // namespace impl

inline MultiPoly<Rational> parse_polynomial(const std::string& text, const std::vector<std::string>& names) {
  return impl::PolyParser(text, names).parse();
}

inline MultiPoly<Rational> parse_polynomial(const std::string& text, int nvars) {
  return parse_polynomial(text, indexed_names("x", nvars));
}

// Several polynomials, one per ';' or blank-line separated block.
inline std::vector<MultiPoly<Rational>> parse_polynomial_list(const std::string& text,
                                                              const std::vector<std::string>& names) {
  std::vector<MultiPoly<Rational>> out;
  std::string block;
  std::istringstream in(text);
  std::string line;
  auto flush = [&] {
    bool blank = true;
    for (char ch : block)
      if (!std::isspace(static_cast<unsigned char>(ch)))
        blank = false;
    if (!blank)
      out.push_back(parse_polynomial(block, names));
    block.clear();
  };
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    std::size_t start = 0, semi;
    while ((semi = line.find(';', start)) != std::string::npos) {
      block += line.substr(start, semi - start);
      flush();
      start = semi + 1;
    }
    block += line.substr(start) + "\n";
  }
  flush();
  return out;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class C>
std::string format_polynomial(const MultiPoly<C>& f, const std::vector<std::string>& names) {
  if (names.size() != f.nvars())
    throw std::invalid_argument("name list does not match arity");
  if (f.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0)
        continue;
      if (!mono.empty())
        mono += "*";
      mono += names[i];
      if (m[i] > 1)
        mono += "^" + std::to_string(m[i]);
    }
    std::string coeff;
    bool negative = false;
    if constexpr (std::is_same_v<C, Rational>) {
      negative = c < 0;
      const Rational a = negative ? Rational(-c) : c;
      if (a != 1 || mono.empty())
        coeff = to_string(a);
    } else {
      if (c.is_rational()) {
        const Rational r = c.to_rational();
        negative = r < 0;
        const Rational a = negative ? Rational(-r) : r;
        if (a != 1 || mono.empty())
          coeff = to_string(a);
      } else {
        coeff = "(" + scalar_str(c) + ")";
      }
    }
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += coeff;
    if (!coeff.empty() && !mono.empty())
      out += "*";
    out += mono;
    first = false;
  }
  return out;
}

template <class C>
std::string format_polynomial(const MultiPoly<C>& f) {
  return format_polynomial(f, indexed_names("x", static_cast<int>(f.nvars())));
}

} // namespace klein

#endif
