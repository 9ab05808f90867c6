#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mzv/ncpoly.hpp"
#include "mzv/products.hpp"

namespace mzv {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line, col;
};

// Abstract syntax of the small expression language:
//   expr := ["-"] term (("+"|"-") term)*
//   term := (rational "*")? atom | rational
//   atom := word | "1" | call | "(" expr ")"
//   call := cc(e,e) | sh(e,e) | st(e,e) | dn(n,e) | d(e) | phi(e) | lx(e)
//         | pw(e,n,prod)           with prod in {cc, sh, st}
// Words match /[xy]+/, rationals /[0-9]+(\/[0-9]+)?/; whitespace is
// insignificant; every expression evaluates to an NCPoly.
struct Expr {
  enum class Kind { number, word, sum, scale, call };

  Kind kind = Kind::number;
  Rational value;               // number literal or scale factor
  Word word;                    // word literal
  std::vector<Expr> children;   // sum terms, scale operand, call arguments
  std::vector<int> signs;       // +1/-1 per sum term
  std::string func;             // call name
  long long int_arg = 0;        // dn's n, pw's n
  ProductKind prod = ProductKind::concat;  // pw's product
};

// Throws ParseError with 1-based line/column on syntax errors.
Expr parse_expr(std::string_view text);

// Total except for the documented domain errors (e.g. st on non-H1 input).
NCPoly evaluate(const Expr& e);

NCPoly parse_poly(std::string_view text);

}  // namespace mzv
