#include "mzv/series.hpp"

#include <stdexcept>

namespace mzv {

int ExpTriple::operator[](Param p) const {
  switch (p) {
    case Param::X: return a;
    case Param::Y: return b;
    case Param::Z: return c;
  }
  return 0;
}

ExpTriple ExpTriple::unit(Param p, int e) {
  switch (p) {
    case Param::X: return {e, 0, 0};
    case Param::Y: return {0, e, 0};
    case Param::Z: return {0, 0, e};
  }
  return {};
}

std::string ExpTriple::str() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

ParamSeries::ParamSeries(int order_cap, std::optional<int> weight_cap)
    : order_cap_(order_cap), weight_cap_(weight_cap) {
  if (order_cap < 0) throw std::domain_error("negative series order cap");
}

ParamSeries ParamSeries::constant(const NCPoly& p, int order_cap, std::optional<int> weight_cap) {
  ParamSeries s(order_cap, weight_cap);
  s.add_term({}, p);
  return s;
}

ParamSeries ParamSeries::one(int order_cap, std::optional<int> weight_cap) {
  return constant(nc_one(), order_cap, weight_cap);
}

const NCPoly& ParamSeries::coefficient(const ExpTriple& t) const {
  static const NCPoly zero{};
  auto it = terms_.find(t);
  return it == terms_.end() ? zero : it->second;
}

void ParamSeries::add_term(const ExpTriple& t, const NCPoly& p) {
  if (t.a < 0 || t.b < 0 || t.c < 0) throw std::domain_error("negative parameter exponent");
  if (t.total() > order_cap_) return;
  NCPoly q = weight_cap_ ? p.weight_truncate(static_cast<std::size_t>(*weight_cap_)) : p;
  if (q.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(t, std::move(q));
  if (!inserted) {
    it->second += q;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamSeries& ParamSeries::operator+=(const ParamSeries& rhs) {
  if (rhs.order_cap_ != order_cap_) throw std::domain_error("series cap mismatch");
  for (const auto& [t, p] : rhs.terms_) add_term(t, p);
  return *this;
}

ParamSeries& ParamSeries::operator-=(const ParamSeries& rhs) {
  if (rhs.order_cap_ != order_cap_) throw std::domain_error("series cap mismatch");
  for (const auto& [t, p] : rhs.terms_) add_term(t, -p);
  return *this;
}

ParamSeries& ParamSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, p] : terms_) p *= c;
  return *this;
}

ParamSeries ParamSeries::operator-() const {
  ParamSeries s = *this;
  for (auto& [t, p] : s.terms_) p = -p;
  return s;
}

std::string ParamSeries::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [t, p] : terms_) {
    if (!out.empty()) out += "\n";
    out += t.str() + ": " + p.str();
  }
  return out;
}

ParamSeries geometric(const NCPoly& seed, Param p, int order_cap,
                      std::optional<int> weight_cap) {
  return geometric_multi({{seed, p}}, order_cap, weight_cap);
}

ParamSeries geometric_multi(const std::vector<std::pair<NCPoly, Param>>& seeds, int order_cap,
                            std::optional<int> weight_cap) {
  for (const auto& [seed, p] : seeds)
    if (seed.constant_term() != 0)
      throw std::domain_error("geometric series seed must have zero constant term");
  ParamSeries result = ParamSeries::one(order_cap, weight_cap);
  ParamSeries layer = result;  // (sum_j seed_j P_j)^m, built incrementally
  for (int m = 1; m <= order_cap; ++m) {
    ParamSeries next(order_cap, weight_cap);
    for (const auto& [t, coeff] : layer.terms())
      for (const auto& [seed, p] : seeds) next.add_term(t + ExpTriple::unit(p), coeff * seed);
    if (next.is_zero()) break;
    result += next;
    layer = std::move(next);
  }
  return result;
}

ParamSeries series_product(const ParamSeries& s, const ParamSeries& t, ProductKind kind) {
  if (s.order_cap() != t.order_cap()) throw std::domain_error("series cap mismatch");
  if (s.weight_cap() != t.weight_cap()) throw std::domain_error("series weight cap mismatch");
  ParamSeries r(s.order_cap(), s.weight_cap());
  for (const auto& [ta, pa] : s.terms()) {
    for (const auto& [tb, pb] : t.terms()) {
      if (ta.total() + tb.total() > s.order_cap()) continue;
      r.add_term(ta + tb, product(pa, pb, kind));
    }
  }
  return r;
}

ParamSeries harmonic_inverse(const ParamSeries& s) {
  if (s.coefficient({}) != nc_one())
    throw std::domain_error("harmonic_inverse requires constant coefficient 1");
  const int cap = s.order_cap();
  ParamSeries g = ParamSeries::one(cap, s.weight_cap());
  // g_t = -sum_{0 < t'' <= t} g_{t - t''} * s_{t''}, ascending total degree
  for (int n = 1; n <= cap; ++n) {
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; a + b <= n; ++b) {
        const ExpTriple t{a, b, n - a - b};
        NCPoly acc;
        for (const auto& [tt, sp] : s.terms()) {
          if (tt.total() == 0) continue;
          if (tt.a > t.a || tt.b > t.b || tt.c > t.c) continue;
          const NCPoly& gprev = g.coefficient({t.a - tt.a, t.b - tt.b, t.c - tt.c});
          if (gprev.is_zero()) continue;
          acc += harmonic(gprev, sp);
        }
        g.add_term(t, -acc);
      }
    }
  }
  return g;
}

ParamSeries truncate(const ParamSeries& s, int new_cap) {
  if (new_cap > s.order_cap())
    throw std::domain_error("cannot truncate to a larger cap");
  ParamSeries r(new_cap, s.weight_cap());
  for (const auto& [t, p] : s.terms()) r.add_term(t, p);
  return r;
}

}  // namespace mzv
