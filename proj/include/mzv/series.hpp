#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mzv/ncpoly.hpp"
#include "mzv/products.hpp"

namespace mzv {

enum class Param : int { X = 0, Y = 1, Z = 2 };

// Exponent triple (a, b, c) of the commuting parameter monomial X^a Y^b Z^c.
struct ExpTriple {
  int a = 0, b = 0, c = 0;

  int total() const { return a + b + c; }
  int operator[](Param p) const;

  static ExpTriple unit(Param p, int e = 1);
  ExpTriple operator+(const ExpTriple& rhs) const { return {a + rhs.a, b + rhs.b, c + rhs.c}; }

  friend bool operator==(const ExpTriple&, const ExpTriple&) = default;
  auto operator<=>(const ExpTriple&) const = default;  // lexicographic (a, b, c)

  std::string str() const;  // "(a,b,c)"
};

// A formal series in the commuting parameters X, Y, Z with NCPoly
// coefficients, truncated at total parameter degree order_cap. An optional
// word-weight cap additionally projects every coefficient to weight <= W.
// Parameters commute with words; coefficients collect to the left of the
// parameter monomial.
class ParamSeries {
 public:
  explicit ParamSeries(int order_cap, std::optional<int> weight_cap = std::nullopt);

  static ParamSeries constant(const NCPoly& p, int order_cap,
                              std::optional<int> weight_cap = std::nullopt);
  static ParamSeries one(int order_cap, std::optional<int> weight_cap = std::nullopt);

  int order_cap() const { return order_cap_; }
  std::optional<int> weight_cap() const { return weight_cap_; }

  bool is_zero() const { return terms_.empty(); }
  const std::map<ExpTriple, NCPoly>& terms() const { return terms_; }
  const NCPoly& coefficient(const ExpTriple& t) const;

  // Adds p at the triple t, silently discarding anything beyond the caps.
  void add_term(const ExpTriple& t, const NCPoly& p);

  ParamSeries& operator+=(const ParamSeries& rhs);
  ParamSeries& operator-=(const ParamSeries& rhs);
  ParamSeries& operator*=(const Rational& c);
  ParamSeries operator-() const;

  friend ParamSeries operator+(ParamSeries a, const ParamSeries& b) { return a += b; }
  friend ParamSeries operator-(ParamSeries a, const ParamSeries& b) { return a -= b; }

  // Equal iff the order caps agree and every coefficient agrees.
  friend bool operator==(const ParamSeries& a, const ParamSeries& b) {
    return a.order_cap_ == b.order_cap_ && a.terms_ == b.terms_;
  }

  // "(a,b,c): <NCPoly>" lines sorted by exponent triple.
  std::string str() const;

 private:
  int order_cap_;
  std::optional<int> weight_cap_;
  std::map<ExpTriple, NCPoly> terms_;
};

// The concatenation-geometric series 1/(1 - seed*P) = sum_i seed^i P^i,
// truncated at the cap. The seed must have zero constant term.
ParamSeries geometric(const NCPoly& seed, Param p, int order_cap,
                      std::optional<int> weight_cap = std::nullopt);

// 1/(1 - sum_j seed_j P_j), same precondition on every seed.
ParamSeries geometric_multi(const std::vector<std::pair<NCPoly, Param>>& seeds, int order_cap,
                            std::optional<int> weight_cap = std::nullopt);

// Bilinear lift of the chosen product to series; caps must agree.
ParamSeries series_product(const ParamSeries& s, const ParamSeries& t, ProductKind kind);

// The harmonic inverse g with g * s = 1 up to the cap, computed order by
// order. Requires coefficient 1 at (0,0,0) and H1 coefficients.
ParamSeries harmonic_inverse(const ParamSeries& s);

// Re-truncation to a smaller (or equal) order cap.
ParamSeries truncate(const ParamSeries& s, int new_cap);

}  // namespace mzv
