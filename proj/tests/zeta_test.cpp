#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mzv/operators.hpp"
#include "mzv/relations.hpp"
#include "mzv/zeta.hpp"

using namespace mzv;

namespace {
constexpr long long kM = 100000;  // unit-test cutoff; the acceptance suite uses 10^6
NCPoly M(const char* s) { return NCPoly::monomial(Word::from_string(s)); }
}  // namespace

TEST_SUITE("zeta") {

TEST_CASE("depth-1 values against independent constants") {
  const double pi = std::numbers::pi;
  const EvalResult z2 = zeta_num({{2}}, kM);
  CHECK(std::abs(z2.value - pi * pi / 6.0) <= z2.tail_bound + roundoff_allowance(kM, 1));
  CHECK(z2.tail_bound == doctest::Approx(2.0 / kM).epsilon(1e-12));
  const EvalResult z4 = zeta_num({{4}}, kM);
  CHECK(std::abs(z4.value - pi * pi * pi * pi / 90.0) <=
        z4.tail_bound + roundoff_allowance(kM, 1));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(zeta_num({{1, 2}}, kM), std::domain_error);
  CHECK_THROWS_AS(zeta_num({{2}}, 5), std::domain_error);
  CHECK_THROWS_AS(Z_num(M("y"), kM), std::domain_error);
  CHECK_THROWS_AS(Z_num(M("yx"), kM), std::domain_error);
}

TEST_CASE("Z is exact on constants and linear on terms") {
  const EvalResult one = Z_num(nc_one(), kM);
  CHECK(one.value == 1.0);
  CHECK(one.tail_bound == 0.0);
  const EvalResult diff = Z_num(M("xxy") - M("xyy"), kM);  // zeta(3) = zeta(2,1)
  CHECK(std::abs(diff.value) <= diff.tail_bound + roundoff_allowance(kM, 2));
}

TEST_CASE("monotone refinement through weight 7") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const Word& m : words_of_weight(n - 2)) {
      const Word w = Word::single(Letter::x).concat(m).concat(Word::single(Letter::y));
      const Composition c = composition_of_word(w);
      const EvalResult coarse = zeta_num(c, 100000);
      const EvalResult fine = zeta_num(c, 1000000);
      CHECK(std::abs(coarse.value - fine.value) <= coarse.tail_bound);
    }
  }
}

TEST_CASE("kernel checks") {
  CHECK(kernel_check(partial_n(M("xy"), 1), kM));
  CHECK(kernel_check(rsf_element(0, 2, 4), kM));
  CHECK_FALSE(kernel_check(M("xxy"), kM));  // zeta(3) is far from zero
}

TEST_CASE("homomorphism checks") {
  CHECK(homomorphism_check(M("xy"), M("xy"), ProductKind::shuffle, kM));
  CHECK(homomorphism_check(M("xy"), M("xy"), ProductKind::harmonic, kM));
  CHECK(homomorphism_check(nc_one(), M("xxy"), ProductKind::shuffle, kM));
  CHECK_THROWS_AS(homomorphism_check(M("xy"), M("xy"), ProductKind::concat, kM),
                  std::domain_error);
}

}  // TEST_SUITE
