#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "mzv/ncpoly.hpp"
#include "mzv/word.hpp"

using namespace mzv;

namespace {
Word W(const char* s) { return Word::from_string(s); }
}  // namespace

TEST_SUITE("word") {

TEST_CASE("construction and basic stats") {
  CHECK(W("1").empty());
  CHECK(W("1").weight() == 0);
  CHECK(W("xyy").weight() == 3);
  CHECK(W("xyy").depth() == 2);
  CHECK(W("xyy").str() == "xyy");
  CHECK(W("1").str() == "1");
  CHECK_THROWS_AS(W("xa"), std::domain_error);
}

TEST_CASE("concatenation is associative with unit") {
  CHECK(W("x").concat(W("y")) == W("xy"));
  CHECK(W("1").concat(W("xyx")) == W("xyx"));
  CHECK(W("xyx").concat(W("1")) == W("xyx"));
  CHECK(W("xy").concat(W("yx")).concat(W("x")) == W("xy").concat(W("yx").concat(W("x"))));
}

TEST_CASE("canonical order: weight first, then lex with x < y") {
  CHECK(W("1") < W("x"));
  CHECK(W("x") < W("y"));
  CHECK(W("y") < W("xx"));
  CHECK(W("xy") < W("yx"));
  CHECK(W("xxy") < W("xyx"));
  std::vector<Word> all = words_of_weight(3);
  CHECK(all.size() == 8);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(all.front() == W("xxx"));
  CHECK(all.back() == W("yyy"));
}

TEST_CASE("concat examples at the polynomial level") {
  CHECK(nc_x() * nc_y() == NCPoly::monomial(W("xy")));
  const NCPoly p = NCPoly::monomial(W("yx"), 3) + nc_one();
  CHECK(nc_one() * p == p);
  CHECK(nc_z() * nc_y() == NCPoly::monomial(W("xy")) + NCPoly::monomial(W("yy")));
}

TEST_CASE("weight_project") {
  const NCPoly p = NCPoly::monomial(W("xy")) + NCPoly::monomial(W("xxy"));
  CHECK(p.weight_project(2) == NCPoly::monomial(W("xy")));
  CHECK(NCPoly::monomial(W("xy")).weight_project(5).is_zero());
  CHECK((nc_one() + nc_y()).weight_project(0) == nc_one());
}

TEST_CASE("grading sums back and concat adds weights") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    NCPoly p;
    for (int t = 0; t < 6; ++t) {
      std::string s;
      const std::size_t len = rng() % 7;
      for (std::size_t i = 0; i < len; ++i) s += (rng() % 2) ? 'y' : 'x';
      p.add_term(Word::from_string(s.empty() ? "1" : s),
                 Rational(static_cast<long>(rng() % 9) - 4));
    }
    NCPoly sum;
    for (std::size_t n = 0; n <= p.max_weight(); ++n) sum += p.weight_project(n);
    CHECK(sum == p);
  }
  const NCPoly h2 = zpow(2), h3 = zpow(3);
  CHECK((h2 * h3).homogeneous_of_weight(5));
}

TEST_CASE("membership flags") {
  CHECK(NCPoly::monomial(W("xy")).in_H1());
  CHECK(NCPoly::monomial(W("xy")).in_H0());
  CHECK_FALSE(NCPoly::monomial(W("yx")).in_H1());
  CHECK_FALSE(NCPoly::monomial(W("yx")).in_H0());
  CHECK(nc_one().in_H1());
  CHECK(nc_one().in_H0());
  CHECK(NCPoly::monomial(W("yy")).in_H1());
  CHECK_FALSE(NCPoly::monomial(W("yy")).in_H0());
}

TEST_CASE("composition dictionary") {
  CHECK(word_of_composition({{2, 1}}) == W("xyy"));
  CHECK(word_of_composition({{3}}) == W("xxy"));
  CHECK(composition_of_word(W("xyxy")) == Composition{{2, 2}});
  CHECK_THROWS_AS(composition_of_word(W("yx")), std::domain_error);
  CHECK_THROWS_AS(composition_of_word(W("1")), std::domain_error);
  CHECK_THROWS_AS(word_of_composition({{}}), std::domain_error);
}

TEST_CASE("composition bijection is exhaustive through weight 12") {
  // words in Hy of length <= 12 <-> compositions of weight <= 12
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const Word& m : words_of_weight(n - 1)) {
      const Word w = m.concat(Word::single(Letter::y));
      const Composition c = composition_of_word(w);
      CHECK(c.weight() == n);
      CHECK(word_of_composition(c) == w);
    }
  }
}

TEST_CASE("z_k equals x^{k-1} y") {
  for (unsigned k = 1; k <= 12; ++k)
    CHECK(zk(k) == xpow(k - 1) * nc_y());
}

TEST_CASE("canonical form is stable under term order and cancellation") {
  NCPoly a;
  a.add_term(W("xy"), Rational(1) / 2);
  a.add_term(W("yy"), -3);
  a.add_term(W("xy"), Rational(1) / 2);
  NCPoly b;
  b.add_term(W("yy"), -3);
  b.add_term(W("xy"), 1);
  CHECK(a == b);
  CHECK((a - b).is_zero());
  CHECK((a - a).term_count() == 0);
}

TEST_CASE("text form") {
  CHECK(NCPoly{}.str() == "0");
  CHECK((NCPoly::monomial(W("xyy")) - NCPoly::monomial(W("xxy"))).str() == "-xxy + xyy");
  CHECK((2 * NCPoly::monomial(W("xyy")) + NCPoly::monomial(W("yxy"))).str() == "2*xyy + yxy");
  CHECK((-NCPoly::monomial(W("xy"))).str() == "-xy");
  CHECK(NCPoly(Rational(3) / 2).str() == "3/2");
  CHECK((nc_one() + NCPoly::monomial(W("y"), Rational(-1) / 3)).str() == "1 - 1/3*y");
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/2") == Rational(3) / 2);
  CHECK(parse_rational("-4/6") == Rational(-2) / 3);
  CHECK(parse_rational("7") == 7);
  CHECK(rational_str(Rational(-2) / 3) == "-2/3");
  CHECK(rational_str(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

}  // TEST_SUITE
