#include <doctest.h>

#include <random>

#include "mzv/operators.hpp"
#include "mzv/parser.hpp"
#include "mzv/verify.hpp"

using namespace mzv;

namespace {
NCPoly M(const char* s) { return NCPoly::monomial(Word::from_string(s)); }
}  // namespace

TEST_SUITE("parser") {

TEST_CASE("words, sums, rationals") {
  CHECK(parse_poly("xyy - xxy") == M("xyy") - M("xxy"));
  CHECK(parse_poly("1") == nc_one());
  CHECK(parse_poly("3/2*xy") == Rational(3, 2) * M("xy"));
  CHECK(parse_poly("-xy + 2*yy") == -M("xy") + 2 * M("yy"));
  CHECK(parse_poly("2") == NCPoly(2));
  CHECK(parse_poly("  xy\n+ yx ") == M("xy") + M("yx"));
  CHECK(parse_poly("(xy - yy) - xy") == -M("yy"));
}

TEST_CASE("function calls") {
  CHECK(parse_poly("dn(1, xy)") == M("xyy") - M("xxy"));
  CHECK(parse_poly("cc(x, y)") == M("xy"));
  CHECK(parse_poly("sh(xy, y)") == 2 * M("xyy") + M("yxy"));
  CHECK(parse_poly("st(y, y)") == 2 * M("yy") + M("xy"));
  CHECK(parse_poly("d(x)") == M("xy"));
  CHECK(parse_poly("phi(xy)") == -M("xy") - M("yy"));
  CHECK(parse_poly("lx(yy)") == M("xyy"));
  CHECK(parse_poly("pw(y, 2, sh)") == 2 * M("yy"));
  CHECK(parse_poly("pw(y, 0, st)") == nc_one());
  CHECK(parse_poly("pw(x + y, 2, cc)") == zpow(2));
  CHECK(parse_poly("2*sh(x, y) - cc(x, y)") == M("xy") + 2 * M("yx"));
}

TEST_CASE("syntax errors carry positions") {
  CHECK_THROWS_AS(parse_poly("sh(x,"), ParseError);
  try {
    parse_poly("sh(x,");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col == 6);
  }
  CHECK_THROWS_AS(parse_poly("foo(x)"), ParseError);
  CHECK_THROWS_AS(parse_poly("xy +"), ParseError);
  CHECK_THROWS_AS(parse_poly("pw(x, 2, zz)"), ParseError);
  CHECK_THROWS_AS(parse_poly("dn(0, xy)"), ParseError);
  CHECK_THROWS_AS(parse_poly("dn(1/2, xy)"), ParseError);
  CHECK_THROWS_AS(parse_poly("xy xy"), ParseError);
  CHECK_THROWS_AS(parse_poly(""), ParseError);
}

TEST_CASE("domain errors pass through") {
  CHECK_THROWS_AS(parse_poly("st(x, y)"), std::domain_error);
}

TEST_CASE("printing then parsing is the identity") {
  std::mt19937_64 rng(501);
  for (int trial = 0; trial < 60; ++trial) {
    NCPoly p;
    const int terms = static_cast<int>(rng() % 5);
    for (int t = 0; t < terms; ++t) {
      const long num = static_cast<long>(rng() % 13) - 6;
      const long den = 1 + static_cast<long>(rng() % 4);
      p.add_term(random_word(rng, rng() % 9), Rational(num, den));
    }
    CHECK(parse_poly(p.str()) == p);
  }
  CHECK(parse_poly(NCPoly{}.str()).is_zero());
}

}  // TEST_SUITE
