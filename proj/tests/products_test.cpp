#include <doctest.h>

#include <random>

#include "mzv/products.hpp"
#include "mzv/verify.hpp"
#include "oracles.hpp"

using namespace mzv;
using testing::pascal_binomial;
using testing::shuffle_oracle;
using testing::stuffle_oracle;

namespace {
Word W(const char* s) { return Word::from_string(s); }
NCPoly M(const char* s) { return NCPoly::monomial(W(s)); }
}  // namespace

TEST_SUITE("products") {

TEST_CASE("shuffle base cases and frozen values") {
  CHECK(shuffle(M("x"), M("y")) == M("xy") + M("yx"));
  CHECK(shuffle(M("xy"), M("y")) == 2 * M("xyy") + M("yxy"));
  CHECK(shuffle(M("xy"), M("y")) == shuffle_oracle(W("xy"), W("y")));
  const NCPoly w = M("yxx") - 2 * M("xy");
  CHECK(shuffle(nc_one(), w) == w);
  CHECK(shuffle(w, nc_one()) == w);
}

TEST_CASE("shuffle matches the interleaving oracle") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const Word u = random_word(rng, rng() % 5);
    const Word v = random_word(rng, rng() % 5);
    CHECK(shuffle(NCPoly::monomial(u), NCPoly::monomial(v)) == shuffle_oracle(u, v));
  }
}

TEST_CASE("harmonic base cases and frozen values") {
  CHECK(harmonic(M("y"), M("y")) == 2 * M("yy") + M("xy"));
  CHECK(harmonic(M("y"), M("xy")) == M("yxy") + M("xyy") + M("xxy"));
  const NCPoly w = M("xyy") + 3 * M("y");
  CHECK(harmonic(nc_one(), w) == w);
  CHECK(harmonic(w, nc_one()) == w);
}

TEST_CASE("harmonic requires H1 operands") {
  CHECK_THROWS_AS(harmonic(M("x"), M("y")), std::domain_error);
  CHECK_THROWS_AS(harmonic(M("y"), M("yx")), std::domain_error);
}

TEST_CASE("harmonic matches the overlapping-placement oracle") {
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 100; ++trial) {
    const Word u = random_h1_word(rng, rng() % 5);
    const Word v = random_h1_word(rng, rng() % 5);
    CHECK(harmonic(NCPoly::monomial(u), NCPoly::monomial(v)) == stuffle_oracle(u, v));
  }
}

TEST_CASE("commutativity and associativity on random triples") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t l1 = rng() % 3, l2 = rng() % 3, l3 = rng() % 3;
    const NCPoly p = NCPoly::monomial(random_word(rng, l1));
    const NCPoly q = NCPoly::monomial(random_word(rng, l2));
    const NCPoly r = NCPoly::monomial(random_word(rng, l3));
    CHECK(shuffle(p, q) == shuffle(q, p));
    CHECK(shuffle(shuffle(p, q), r) == shuffle(p, shuffle(q, r)));
    const NCPoly hp = NCPoly::monomial(random_h1_word(rng, l1));
    const NCPoly hq = NCPoly::monomial(random_h1_word(rng, l2));
    const NCPoly hr = NCPoly::monomial(random_h1_word(rng, l3));
    CHECK(harmonic(hp, hq) == harmonic(hq, hp));
    CHECK(harmonic(harmonic(hp, hq), hr) == harmonic(hp, harmonic(hq, hr)));
  }
}

TEST_CASE("closure in the subalgebras") {
  std::mt19937_64 rng(104);
  for (int trial = 0; trial < 40; ++trial) {
    const NCPoly p = NCPoly::monomial(random_h1_word(rng, 1 + rng() % 4));
    const NCPoly q = NCPoly::monomial(random_h1_word(rng, 1 + rng() % 4));
    CHECK(shuffle(p, q).in_H1());
    CHECK(harmonic(p, q).in_H1());
    const NCPoly a =
        NCPoly::monomial(Word::single(Letter::x).concat(random_h1_word(rng, 1 + rng() % 3)));
    const NCPoly b =
        NCPoly::monomial(Word::single(Letter::x).concat(random_h1_word(rng, 1 + rng() % 3)));
    CHECK(shuffle(a, b).in_H0());
    CHECK(harmonic(a, b).in_H0());
  }
}

TEST_CASE("weight additivity on homogeneous inputs") {
  const NCPoly p = zpow(2), q = zpow(3);
  CHECK(shuffle(p, q).homogeneous_of_weight(5));
  const NCPoly hp = harmonic(zk(2), zk(2));
  CHECK(hp.homogeneous_of_weight(4));
}

TEST_CASE("shuffle coefficient sum is binomial(m+n, m)") {
  std::mt19937_64 rng(105);
  for (int trial = 0; trial < 20; ++trial) {
    const Word u = random_word(rng, 1 + rng() % 5);
    const Word v = random_word(rng, 1 + rng() % 5);
    if (u == v) continue;
    const NCPoly sh = shuffle(NCPoly::monomial(u), NCPoly::monomial(v));
    Rational sum = 0;
    for (const auto& [w, c] : sh.terms()) sum += c;
    CHECK(sum == pascal_binomial(static_cast<unsigned>(u.length() + v.length()),
                                 static_cast<unsigned>(u.length())));
  }
}

TEST_CASE("power") {
  CHECK(power(-nc_y(), 2, ProductKind::concat) == M("yy"));
  CHECK(power(nc_y(), 2, ProductKind::shuffle) == 2 * M("yy"));
  CHECK(power(nc_y(), 0, ProductKind::harmonic) == nc_one());
  CHECK(power(nc_z(), 3, ProductKind::concat) == zpow(3));
}

}  // TEST_SUITE
