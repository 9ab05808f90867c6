#pragma once

#include <map>
#include <string>

#include "mzv/rational.hpp"
#include "mzv/word.hpp"

namespace mzv {

struct Membership {
  bool in_H1;  // every nonconstant word ends in y       (Q + Hy)
  bool in_H0;  // additionally every such word starts in x (Q + xHy)
};

// An element of Q<x,y>: a finite rational combination of words, always in
// canonical form (no zero coefficients, terms ordered by weight then lex).
// operator* is concatenation, the ring product of the free algebra.
class NCPoly {
 public:
  NCPoly() = default;
  explicit NCPoly(const Rational& c);
  explicit NCPoly(int c);
  static NCPoly monomial(const Word& w, const Rational& c = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Word, Rational>& terms() const { return terms_; }
  Rational coefficient(const Word& w) const;
  Rational constant_term() const { return coefficient(Word{}); }

  void add_term(const Word& w, const Rational& c);

  NCPoly& operator+=(const NCPoly& rhs);
  NCPoly& operator-=(const NCPoly& rhs);
  NCPoly& operator*=(const Rational& c);
  NCPoly operator-() const;

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const Rational& c) { return a *= c; }
  friend NCPoly operator*(const Rational& c, NCPoly a) { return a *= c; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);  // concatenation

  friend bool operator==(const NCPoly&, const NCPoly&) = default;

  // Sum of the terms whose word has length exactly n.
  NCPoly weight_project(std::size_t n) const;
  // Drops every term of weight greater than cap.
  NCPoly weight_truncate(std::size_t cap) const;
  std::size_t min_weight() const;  // 0 for the zero polynomial
  std::size_t max_weight() const;
  bool homogeneous_of_weight(std::size_t n) const;

  Membership membership() const;
  bool in_H1() const { return membership().in_H1; }
  bool in_H0() const { return membership().in_H0; }
  // Zero constant term and every word ending in y (the subspace Hy).
  bool in_Hy() const;

  // Signed sum of "c*w" pieces in canonical order, e.g. "xyy - xxy",
  // "2*xyy + yxy", "3/2". The zero polynomial prints as "0".
  std::string str() const;

 private:
  std::map<Word, Rational> terms_;
};

NCPoly concat(const NCPoly& a, const NCPoly& b);

const NCPoly& nc_one();
const NCPoly& nc_x();
const NCPoly& nc_y();
const NCPoly& nc_z();  // z = x + y

NCPoly zk(unsigned k);                // z_k = x^{k-1} y
NCPoly xpow(std::size_t n);           // x^n
NCPoly ypow(std::size_t n);           // y^n
NCPoly zpow(std::size_t n);           // (x + y)^n, concatenation power
NCPoly neg_ypow(std::size_t n);       // (-y)^n

}  // namespace mzv
