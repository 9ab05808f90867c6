#include "mzv/operators.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace mzv {

namespace {

// Generic derivation determined by its images of x and y.
NCPoly apply_derivation(const NCPoly& p, const NCPoly& img_x, const NCPoly& img_y) {
  NCPoly r;
  for (const auto& [w, c] : p.terms()) {
    for (std::size_t i = 0; i < w.length(); ++i) {
      const NCPoly& img = w.at(i) == Letter::x ? img_x : img_y;
      NCPoly piece = NCPoly::monomial(w.prefix(i), c) * img * NCPoly::monomial(w.suffix(i + 1));
      r += piece;
    }
  }
  return r;
}

// Multiplicative extension of letter images given as series; the image of a
// word is the concat product of its letter images, truncated at the caps.
ParamSeries apply_letter_map(const ParamSeries& s, const ParamSeries& img_x,
                             const ParamSeries& img_y) {
  ParamSeries r(s.order_cap(), s.weight_cap());
  std::map<Word, ParamSeries> word_cache;
  for (const auto& [t, poly] : s.terms()) {
    for (const auto& [w, c] : poly.terms()) {
      auto it = word_cache.find(w);
      if (it == word_cache.end()) {
        ParamSeries img = ParamSeries::one(s.order_cap(), s.weight_cap());
        for (std::size_t i = 0; i < w.length(); ++i)
          img = series_product(img, w.at(i) == Letter::x ? img_x : img_y, ProductKind::concat);
        it = word_cache.emplace(w, std::move(img)).first;
      }
      for (const auto& [ti, pi] : it->second.terms()) r.add_term(t + ti, c * pi);
    }
  }
  return r;
}

ParamSeries one_plus_yY(int cap, std::optional<int> wcap) {
  ParamSeries s = ParamSeries::one(cap, wcap);
  s.add_term(ExpTriple::unit(Param::Y), nc_y());
  return s;
}

// 1/(1+yY) as a Y-series.
ParamSeries h_series(int cap, std::optional<int> wcap) {
  return geometric(-nc_y(), Param::Y, cap, wcap);
}

// Splits w as v x^j with v empty or ending in y; returns (v, j).
std::pair<Word, std::size_t> split_trailing_x(const Word& w) {
  std::size_t j = 0;
  while (j < w.length() && w.at(w.length() - 1 - j) == Letter::x) ++j;
  return {w.prefix(w.length() - j), j};
}

ParamSeries apply_phi_like(const ParamSeries& s, bool inverse) {
  const int cap = s.order_cap();
  const auto wcap = s.weight_cap();
  const ParamSeries h = h_series(cap, wcap);
  const ParamSeries front = inverse ? harmonic_inverse(h) : one_plus_yY(cap, wcap);
  ParamSeries r(cap, wcap);
  std::map<Word, ParamSeries> word_cache;
  for (const auto& [t, poly] : s.terms()) {
    for (const auto& [w, c] : poly.terms()) {
      auto it = word_cache.find(w);
      if (it == word_cache.end()) {
        auto [v, xrun] = split_trailing_x(w);
        ParamSeries img = inverse
            ? series_product(front,
                             series_product(h, ParamSeries::constant(NCPoly::monomial(v), cap, wcap),
                                            ProductKind::concat),
                             ProductKind::harmonic)
            : series_product(front,
                             series_product(h, ParamSeries::constant(NCPoly::monomial(v), cap, wcap),
                                            ProductKind::harmonic),
                             ProductKind::concat);
        if (xrun > 0)
          img = series_product(img, ParamSeries::constant(xpow(xrun), cap, wcap),
                               ProductKind::concat);
        it = word_cache.emplace(w, std::move(img)).first;
      }
      for (const auto& [ti, pi] : it->second.terms()) r.add_term(t + ti, c * pi);
    }
  }
  return r;
}

}  // namespace

NCPoly partial_n(const NCPoly& p, unsigned n) {
  if (n < 1) throw std::domain_error("partial_n requires n >= 1");
  const NCPoly image = nc_x() * zpow(n - 1) * nc_y();
  return apply_derivation(p, image, -image);
}

NCPoly dmap(const NCPoly& p) { return shuffle(nc_y(), p) - nc_y() * p; }

NCPoly phi(const NCPoly& p) {
  NCPoly r;
  for (const auto& [w, c] : p.terms()) {
    NCPoly img(c);
    for (std::size_t i = 0; i < w.length(); ++i)
      img = img * (w.at(i) == Letter::x ? nc_z() : -nc_y());
    r += img;
  }
  return r;
}

NCPoly Lx(const NCPoly& p) { return nc_x() * p; }

NCPoly exp_derivation_sum(const NCPoly& p, std::size_t weight_cap) {
  NCPoly result = p.weight_truncate(weight_cap);
  NCPoly cur = result;
  for (unsigned m = 1; !cur.is_zero(); ++m) {
    // D(cur)/m with D = sum_n partial_n / n, keeping weight <= cap
    NCPoly next;
    for (const auto& [w, c] : cur.terms()) {
      const NCPoly mono = NCPoly::monomial(w, c);
      for (unsigned n = 1; w.weight() + n <= weight_cap; ++n)
        next += partial_n(mono, n) * (Rational(1) / Rational(n));
    }
    cur = next * (Rational(1) / Rational(m));
    result += cur;
  }
  return result;
}

ParamSeries delta_Y(const ParamSeries& s) {
  const int cap = s.order_cap();
  const auto wcap = s.weight_cap();
  // x -> x/(1-yY); y = z - x -> y - sum_{j>=1} x y^j Y^j
  ParamSeries img_x(cap, wcap), img_y(cap, wcap);
  img_y.add_term({}, nc_y());
  for (int j = 0; j <= cap; ++j) {
    const NCPoly xyj = nc_x() * ypow(static_cast<std::size_t>(j));
    img_x.add_term(ExpTriple::unit(Param::Y, j), xyj);
    if (j >= 1) img_y.add_term(ExpTriple::unit(Param::Y, j), -xyj);
  }
  return apply_letter_map(s, img_x, img_y);
}

ParamSeries exp_dY(const ParamSeries& s, int sign) {
  if (sign != 1 && sign != -1) throw std::domain_error("exp_dY sign must be +1 or -1");
  const int cap = s.order_cap();
  ParamSeries r(cap, s.weight_cap());
  for (const auto& [t, poly] : s.terms()) {
    NCPoly cur = poly;
    r.add_term(t, cur);
    for (int m = 1; m + t.total() <= cap && !cur.is_zero(); ++m) {
      cur = dmap(cur) * (Rational(sign) / Rational(m));
      r.add_term(t + ExpTriple::unit(Param::Y, m), cur);
    }
  }
  return r;
}

ParamSeries exp_dY_closed(const ParamSeries& s, int sign) {
  if (sign != 1 && sign != -1) throw std::domain_error("exp_dY sign must be +1 or -1");
  const int cap = s.order_cap();
  const auto wcap = s.weight_cap();
  // x -> x/(1 - sign yY), y -> y/(1 - sign yY)
  ParamSeries img_x(cap, wcap), img_y(cap, wcap);
  Rational scale = 1;
  for (int j = 0; j <= cap; ++j) {
    const NCPoly yj = ypow(static_cast<std::size_t>(j));
    img_x.add_term(ExpTriple::unit(Param::Y, j), scale * (nc_x() * yj));
    img_y.add_term(ExpTriple::unit(Param::Y, j), scale * (nc_y() * yj));
    scale *= sign;
  }
  return apply_letter_map(s, img_x, img_y);
}

ParamSeries phi_yY(const ParamSeries& s) { return apply_phi_like(s, false); }

ParamSeries phi_yY_inv(const ParamSeries& s) { return apply_phi_like(s, true); }

}  // namespace mzv
