#include <doctest.h>

#include <random>

#include "mzv/operators.hpp"
#include "mzv/products.hpp"
#include "mzv/verify.hpp"

using namespace mzv;

namespace {
Word W(const char* s) { return Word::from_string(s); }
NCPoly M(const char* s) { return NCPoly::monomial(W(s)); }

// Independent route for dmap: the derivation determined by x -> xy, y -> yy.
NCPoly dmap_by_leibniz(const NCPoly& p) {
  NCPoly r;
  for (const auto& [w, c] : p.terms()) {
    for (std::size_t i = 0; i < w.length(); ++i) {
      const NCPoly img = w.at(i) == Letter::x ? M("xy") : M("yy");
      r += NCPoly::monomial(w.prefix(i), c) * img * NCPoly::monomial(w.suffix(i + 1));
    }
  }
  return r;
}

NCPoly random_poly(std::mt19937_64& rng, std::size_t max_len, int terms) {
  NCPoly p;
  for (int t = 0; t < terms; ++t)
    p.add_term(random_word(rng, rng() % (max_len + 1)),
               Rational(static_cast<long>(rng() % 9) - 4));
  return p;
}
}  // namespace

TEST_SUITE("operators") {

TEST_CASE("partial_n generator images and Leibniz expansion") {
  CHECK(partial_n(nc_x(), 1) == M("xy"));
  CHECK(partial_n(nc_y(), 1) == -M("xy"));
  CHECK(partial_n(M("xy"), 1) == M("xyy") - M("xxy"));
  CHECK(partial_n(nc_one(), 3).is_zero());
  CHECK(partial_n(nc_x(), 2) == nc_x() * nc_z() * nc_y());
  CHECK_THROWS_AS(partial_n(nc_x(), 0), std::domain_error);
}

TEST_CASE("partial_n satisfies the Leibniz rule") {
  std::mt19937_64 rng(301);
  for (unsigned n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const NCPoly p = random_poly(rng, 3, 2), q = random_poly(rng, 3, 2);
      CHECK(partial_n(p * q, n) == partial_n(p, n) * q + p * partial_n(q, n));
    }
  }
}

TEST_CASE("partial_n raises weight by n and maps xHy into xHy") {
  for (unsigned n = 1; n <= 4; ++n) {
    const NCPoly img = partial_n(M("xyxy"), n);
    CHECK(img.homogeneous_of_weight(4 + n));
    CHECK(img.in_H0());
    CHECK(partial_n(M("xyx"), n).homogeneous_of_weight(3 + n));
  }
  // outside xHy the image can leave H0: the derivation relation's domain matters
  CHECK(partial_n(M("yx"), 1) == -M("xyx") + M("yxy"));
  CHECK_FALSE(partial_n(M("yx"), 1).in_H0());
}

TEST_CASE("dmap frozen values, Leibniz route agreement") {
  CHECK(dmap(nc_x()) == M("xy"));
  CHECK(dmap(nc_y()) == M("yy"));
  CHECK(dmap(nc_one()).is_zero());
  std::mt19937_64 rng(302);
  for (int trial = 0; trial < 20; ++trial) {
    const NCPoly p = random_poly(rng, 5, 3);
    CHECK(dmap(p) == dmap_by_leibniz(p));
  }
  for (int trial = 0; trial < 10; ++trial) {
    const NCPoly p = random_poly(rng, 4, 2), q = random_poly(rng, 4, 2);
    CHECK(dmap(p * q) == dmap(p) * q + p * dmap(q));
  }
}

TEST_CASE("phi letter images, involution, multiplicativity") {
  CHECK(phi(nc_x()) == nc_x() + nc_y());
  CHECK(phi(nc_y()) == -nc_y());
  CHECK(phi(M("xy")) == -M("xy") - M("yy"));
  CHECK(phi(phi(M("xxy"))) == M("xxy"));
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 20; ++trial) {
    const NCPoly p = random_poly(rng, 4, 2), q = random_poly(rng, 4, 2);
    CHECK(phi(phi(p)) == p);
    CHECK(phi(p * q) == phi(p) * phi(q));
  }
}

TEST_CASE("Lx") {
  CHECK(Lx(nc_y()) == M("xy"));
  CHECK(Lx(nc_one()) == nc_x());
  CHECK(Lx(M("yy") + nc_y()) == M("xyy") + M("xy"));
}

TEST_CASE("delta_Y generator images") {
  const int cap = 3;
  const ParamSeries dx = delta_Y(ParamSeries::constant(nc_x(), cap));
  CHECK(dx.coefficient({0, 0, 0}) == nc_x());
  CHECK(dx.coefficient({0, 1, 0}) == M("xy"));
  CHECK(dx.coefficient({0, 2, 0}) == M("xyy"));
  const ParamSeries dz = delta_Y(ParamSeries::constant(nc_z(), cap));
  CHECK(dz == ParamSeries::constant(nc_z(), cap));
  CHECK(delta_Y(ParamSeries::one(cap)) == ParamSeries::one(cap));
}

TEST_CASE("exp_dY first orders and closed form") {
  const int cap = 4;
  const ParamSeries ex = exp_dY(ParamSeries::constant(nc_x(), cap), +1);
  CHECK(ex.coefficient({0, 1, 0}) == M("xy"));
  const ParamSeries ey = exp_dY(ParamSeries::constant(nc_y(), cap), +1);
  CHECK(ey.coefficient({0, 1, 0}) == M("yy"));
  for (const NCPoly& gen : {nc_x(), nc_y()}) {
    const ParamSeries s = ParamSeries::constant(gen, cap);
    CHECK(exp_dY(s, +1) == exp_dY_closed(s, +1));
    CHECK(exp_dY(s, -1) == exp_dY_closed(s, -1));
  }
}

TEST_CASE("exp_dY mutual inverses") {
  const int cap = 4;
  const ParamSeries s = ParamSeries::constant(M("xxy"), cap);
  CHECK(exp_dY(exp_dY(s, +1), -1) == s);
  CHECK(exp_dY(exp_dY(s, -1), +1) == s);
}

TEST_CASE("phi_yY on generators") {
  const int cap = 3;
  const ParamSeries px = phi_yY(ParamSeries::constant(nc_x(), cap));
  CHECK(px == ParamSeries::constant(nc_x(), cap));
  const ParamSeries pz = phi_yY(ParamSeries::constant(nc_z(), cap));
  CHECK(pz.coefficient({0, 0, 0}) == nc_z());
  CHECK(pz.coefficient({0, 1, 0}) == -(nc_z() * nc_y()));
  CHECK(phi_yY(ParamSeries::one(cap)) == ParamSeries::one(cap));
}

TEST_CASE("phi_yY is multiplicative") {
  const int cap = 4;
  std::mt19937_64 rng(304);
  for (int trial = 0; trial < 8; ++trial) {
    const ParamSeries s = ParamSeries::constant(random_poly(rng, 3, 2), cap);
    const ParamSeries t = ParamSeries::constant(random_poly(rng, 3, 2), cap);
    CHECK(phi_yY(series_product(s, t, ProductKind::concat)) ==
          series_product(phi_yY(s), phi_yY(t), ProductKind::concat));
  }
}

TEST_CASE("phi_yY_inv frozen orders and round trips") {
  const int cap = 4;
  const ParamSeries inv = phi_yY_inv(ParamSeries::constant(-nc_y(), cap));
  CHECK(inv.coefficient({0, 0, 0}) == -nc_y());
  CHECK(inv.coefficient({0, 1, 0}) == -M("yy") - M("xy"));
  const ParamSeries s = ParamSeries::constant(M("xy"), cap);
  CHECK(phi_yY_inv(phi_yY(s)) == s);
  CHECK(phi_yY(phi_yY_inv(s)) == s);
}

TEST_CASE("exp_derivation_sum truncations") {
  CHECK(exp_derivation_sum(M("xy"), 2) == M("xy"));
  CHECK(exp_derivation_sum(M("xy"), 3) == M("xy") + M("xyy") - M("xxy"));
  CHECK(exp_derivation_sum(NCPoly{}, 6).is_zero());
}

}  // TEST_SUITE
