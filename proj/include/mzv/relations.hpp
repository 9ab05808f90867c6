#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mzv/linalg.hpp"
#include "mzv/ncpoly.hpp"
#include "mzv/series.hpp"

namespace mzv {

// A target written as sum coeff * partial_n(w) over the listed terms.
struct CertificateTerm {
  unsigned n;
  Word w;  // in xHy, weight(w) + n = weight
  Rational coeff;
};

struct Certificate {
  unsigned weight;
  NCPoly target;
  std::vector<CertificateTerm> terms;

  // Re-expands the terms and compares with the target, exactly.
  bool verify() const;
};

struct Discrepancy {
  ExpTriple at;  // series exponent triple, or the (a,b,c) tuple for sweeps
  NCPoly lhs, rhs;
};

struct IdentityReport {
  std::string name;
  std::vector<std::pair<std::string, long long>> params;
  bool pass = false;
  std::optional<Discrepancy> discrepancy;

  std::string str() const;  // one line: "name{params}: pass|FAIL ..."
};

class NotInSpanError : public std::domain_error {
 public:
  NotInSpanError(std::string msg, NCPoly residual)
      : std::domain_error(std::move(msg)), residual_(std::move(residual)) {}
  const NCPoly& residual() const { return residual_; }

 private:
  NCPoly residual_;
};

// F_n(a), defined by sum_{j=0}^n (-y)^j * F_{n-j}(a) = (-y)^{a+1+n}; lies in Hy.
NCPoly F(unsigned n, unsigned a);

// sum_{j=0}^{cap} F_j(a) P^j as a series in the given parameter.
ParamSeries F_series(unsigned a, Param p, int cap);

// The weight-k element x(x^{k-a-b-2} sh y^b)y^{a+1} - x^{k-a-b-1}(x^b sh y^a)y.
// Requires k >= a + b + 2.
NCPoly rsf_element(unsigned a, unsigned b, unsigned k);

// The same combination before applying Lx phi:
// (z^c sh (-y)^b)(-y)^{a+1} - z^c(z^b sh (-y)^a)(-y).
NCPoly eq5_element(unsigned a, unsigned b, unsigned c);

struct DerivationGenerator {
  unsigned n;
  Word w;        // monomial in xHy of weight k - n
  NCPoly image;  // partial_n(w)
};

// All (n, w) with n >= 1 and w in xHy of weight k - n >= 2, sorted by
// ascending n then lexicographic w; spans the weight-k graded piece of
// sum_n partial_n(xHy). Requires k >= 3.
std::vector<DerivationGenerator> derivation_generators(unsigned k);

// Expresses a homogeneous weight-k element of H0 in the span of
// derivation_generators(k). Throws NotInSpanError (with the residual after
// projection) when the target lies outside the span.
Certificate decompose(const NCPoly& target, unsigned k);

// Proposition 2 sweep member: checks
//   (z^c sh (-y)^b)(-y)^{a+1} - z^c(z^b sh (-y)^a)(-y)
//     = sum_{j=0}^{b-1} (-y)^{b-j} * z^c F_j(a)
// exactly, and records whether the opposite global sign would also hold.
IdentityReport prop2_check(unsigned a, unsigned b, unsigned c);

// A witness (i, q) list with every q in Hy and
// sum_i y^i * q_i equal to eq5_element(a, b, c).
struct Prop1Witness {
  unsigned i;
  NCPoly q;
};
std::vector<Prop1Witness> prop1_certificate(unsigned a, unsigned b, unsigned c);

enum class IdentityName {
  lemma1,             // (1/(1+yY)) Phi(1/(1-zZ)) = 1/(1-zZ) sh 1/(1+yY)
  lemma2,             // Phi^{-1}(-y/(1+yX)) = (1/(1-zY) sh 1/(1+yX)) (-y)
  eq7,                // Phi(1/(1+yX-zY) (-y)) = -y/(1+yX)
  eq8,                // 1/(1+yX) * sum_j F_j(a) X^j = (-y)^{a+1}/(1+yX)
  phi_factorization,  // Phi = exp(-dY) o Delta_{-Y}
  closed_form,        // 1/(1-zY) sh 1/(1+yX) = 1/(1+yX-zY)
};

std::optional<IdentityName> identity_name_from_string(const std::string& s);
const char* identity_name_str(IdentityName name);

// Verifies the named identity with all series truncated at total parameter
// degree <= cap; exact coefficient-wise comparison. eq8 takes the extra
// parameter a.
IdentityReport identity_check(IdentityName name, int cap, unsigned a = 0);

// Rank-based comparison of two generator sets; pass iff spans are equal.
struct SpanComparison {
  std::size_t lhs_rank = 0, rhs_rank = 0, union_rank = 0;
  bool equal() const { return lhs_rank == rhs_rank && rhs_rank == union_rank; }
};
SpanComparison compare_spans(const std::vector<NCPoly>& lhs, const std::vector<NCPoly>& rhs);

// Weight-w slice of the graded span identity
//   exp(sum partial_n/n)(xHy) = Lx phi(1/(1+y) * Hy).
IdentityReport eq4_span_check(unsigned w);

}  // namespace mzv
