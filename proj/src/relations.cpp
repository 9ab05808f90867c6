#include "mzv/relations.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <random>

#include "mzv/operators.hpp"
#include "mzv/products.hpp"

namespace mzv {

namespace {

std::string tuple_suffix(const std::vector<std::pair<std::string, long long>>& params) {
  std::string s = "{";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ",";
    s += params[i].first + "=" + std::to_string(params[i].second);
  }
  return s + "}";
}

IdentityReport make_report(std::string name,
                           std::vector<std::pair<std::string, long long>> params, bool pass,
                           std::optional<Discrepancy> disc = std::nullopt) {
  IdentityReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.pass = pass;
  r.discrepancy = std::move(disc);
  return r;
}

// First differing exponent triple of two series, as a Discrepancy.
std::optional<Discrepancy> first_difference(const ParamSeries& lhs, const ParamSeries& rhs) {
  std::map<ExpTriple, int> triples;
  for (const auto& [t, p] : lhs.terms()) triples[t] = 1;
  for (const auto& [t, p] : rhs.terms()) triples[t] = 1;
  for (const auto& [t, unused] : triples) {
    if (lhs.coefficient(t) != rhs.coefficient(t))
      return Discrepancy{t, lhs.coefficient(t), rhs.coefficient(t)};
  }
  return std::nullopt;
}

IdentityReport series_equality_report(std::string name,
                                      std::vector<std::pair<std::string, long long>> params,
                                      const ParamSeries& lhs, const ParamSeries& rhs) {
  auto disc = first_difference(lhs, rhs);
  return make_report(std::move(name), std::move(params), !disc.has_value(), std::move(disc));
}

}  // namespace

std::string IdentityReport::str() const {
  std::string s = name + tuple_suffix(params) + ": " + (pass ? "pass" : "FAIL");
  if (!pass && discrepancy) {
    s += " at " + discrepancy->at.str() + "  lhs = " + discrepancy->lhs.str() +
         "  rhs = " + discrepancy->rhs.str();
  }
  return s;
}

bool Certificate::verify() const {
  NCPoly sum;
  for (const auto& term : terms) {
    if (term.w.weight() + term.n != weight) return false;
    sum += term.coeff * partial_n(NCPoly::monomial(term.w), term.n);
  }
  return sum == target && target.homogeneous_of_weight(weight);
}

NCPoly F(unsigned n, unsigned a) {
  static std::map<std::pair<unsigned, unsigned>, NCPoly> cache;
  static std::mutex mutex;
  const auto key = std::make_pair(n, a);
  {
    std::scoped_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  NCPoly result = neg_ypow(a + 1 + n);
  for (unsigned j = 1; j <= n; ++j) result -= harmonic(neg_ypow(j), F(n - j, a));
  std::scoped_lock lock(mutex);
  return cache.emplace(key, std::move(result)).first->second;
}

ParamSeries F_series(unsigned a, Param p, int cap) {
  ParamSeries s(cap);
  for (int j = 0; j <= cap; ++j) s.add_term(ExpTriple::unit(p, j), F(static_cast<unsigned>(j), a));
  return s;
}

NCPoly rsf_element(unsigned a, unsigned b, unsigned k) {
  if (k < a + b + 2) throw std::domain_error("rsf_element requires k >= a + b + 2");
  const unsigned c = k - a - b - 2;
  NCPoly first = nc_x() * shuffle(xpow(c), ypow(b)) * ypow(a + 1);
  NCPoly second = xpow(c + 1) * shuffle(xpow(b), ypow(a)) * nc_y();
  return first - second;
}

NCPoly eq5_element(unsigned a, unsigned b, unsigned c) {
  NCPoly first = shuffle(zpow(c), neg_ypow(b)) * neg_ypow(a + 1);
  NCPoly second = zpow(c) * shuffle(zpow(b), neg_ypow(a)) * (-nc_y());
  return first - second;
}

std::vector<DerivationGenerator> derivation_generators(unsigned k) {
  if (k < 3) throw std::domain_error("derivation_generators requires k >= 3");
  std::vector<DerivationGenerator> gens;
  for (unsigned n = 1; n + 2 <= k; ++n) {
    const std::size_t mid = k - n - 2;  // letters between the leading x and trailing y
    for (const Word& m : words_of_weight(mid)) {
      Word w = Word::single(Letter::x).concat(m).concat(Word::single(Letter::y));
      gens.push_back({n, w, partial_n(NCPoly::monomial(w), n)});
    }
  }
  return gens;
}

namespace {

// Reduced generator system for one weight, shared across decompositions.
struct SpanSolver {
  std::vector<DerivationGenerator> gens;
  std::vector<Word> row_words;  // canonical order
  std::map<Word, std::size_t> row_index;
  std::unique_ptr<ReducedSystem> system;
};

const SpanSolver& span_solver(unsigned k) {
  static std::map<unsigned, std::unique_ptr<SpanSolver>> cache;
  static std::mutex mutex;
  std::scoped_lock lock(mutex);
  auto it = cache.find(k);
  if (it != cache.end()) return *it->second;

  auto solver = std::make_unique<SpanSolver>();
  solver->gens = derivation_generators(k);
  for (const auto& gen : solver->gens)
    for (const auto& [w, c] : gen.image.terms()) solver->row_index.emplace(w, 0);
  for (auto& [w, idx] : solver->row_index) {
    idx = solver->row_words.size();
    solver->row_words.push_back(w);
  }
  RatMatrix a(solver->row_words.size(), solver->gens.size());
  for (std::size_t j = 0; j < solver->gens.size(); ++j)
    for (const auto& [w, c] : solver->gens[j].image.terms())
      a(solver->row_index.at(w), j) = c;
  solver->system = std::make_unique<ReducedSystem>(std::move(a));
  return *cache.emplace(k, std::move(solver)).first->second;
}

}  // namespace

Certificate decompose(const NCPoly& target, unsigned k) {
  Certificate cert{k, target, {}};
  if (target.is_zero()) return cert;
  if (!target.homogeneous_of_weight(k))
    throw std::domain_error("decompose target must be homogeneous of weight k");
  if (!target.in_H0()) throw std::domain_error("decompose target must lie in H0");
  if (k < 3) throw NotInSpanError("no derivation generators below weight 3", target);

  const SpanSolver& solver = span_solver(k);
  // Any target word outside the generators' support is unreachable.
  NCPoly unreachable;
  std::vector<Rational> b(solver.row_words.size());
  for (const auto& [w, c] : target.terms()) {
    auto it = solver.row_index.find(w);
    if (it == solver.row_index.end())
      unreachable.add_term(w, c);
    else
      b[it->second] = c;
  }
  LinearSolution sol = solver.system->solve(b);
  if (!sol.consistent || !unreachable.is_zero()) {
    NCPoly residual = unreachable;  // sol.residual is empty when consistent
    for (std::size_t i = 0; i < sol.residual.size(); ++i)
      residual.add_term(solver.row_words[i], sol.residual[i]);
    throw NotInSpanError("target not in the derivation span at weight " + std::to_string(k),
                         residual);
  }
  for (std::size_t j = 0; j < solver.gens.size(); ++j) {
    if (sol.x[j] == 0) continue;
    cert.terms.push_back({solver.gens[j].n, solver.gens[j].w, sol.x[j]});
  }
  return cert;
}

IdentityReport prop2_check(unsigned a, unsigned b, unsigned c) {
  const NCPoly lhs = eq5_element(a, b, c);
  NCPoly rhs;
  for (unsigned j = 0; j < b; ++j) rhs += harmonic(neg_ypow(b - j), zpow(c) * F(j, a));
  const bool pass = lhs == rhs;
  const bool paper_sign = lhs == -rhs;
  std::optional<Discrepancy> disc;
  if (!pass)
    disc = Discrepancy{{static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)}, lhs, rhs};
  return make_report("prop2",
                     {{"a", a}, {"b", b}, {"c", c}, {"paper_printed_sign_holds", paper_sign}},
                     pass, std::move(disc));
}

std::vector<Prop1Witness> prop1_certificate(unsigned a, unsigned b, unsigned c) {
  std::vector<Prop1Witness> out;
  for (unsigned j = 0; j < b; ++j) {
    const unsigned i = b - j;
    NCPoly q = zpow(c) * F(j, a);
    if (i % 2) q = -q;  // fold the sign of (-y)^i into the witness
    out.push_back({i, std::move(q)});
  }
  return out;
}

std::optional<IdentityName> identity_name_from_string(const std::string& s) {
  if (s == "lemma1") return IdentityName::lemma1;
  if (s == "lemma2") return IdentityName::lemma2;
  if (s == "eq7") return IdentityName::eq7;
  if (s == "eq8") return IdentityName::eq8;
  if (s == "phi_factorization") return IdentityName::phi_factorization;
  if (s == "closed_form") return IdentityName::closed_form;
  return std::nullopt;
}

const char* identity_name_str(IdentityName name) {
  switch (name) {
    case IdentityName::lemma1: return "lemma1";
    case IdentityName::lemma2: return "lemma2";
    case IdentityName::eq7: return "eq7";
    case IdentityName::eq8: return "eq8";
    case IdentityName::phi_factorization: return "phi_factorization";
    case IdentityName::closed_form: return "closed_form";
  }
  return "?";
}

namespace {

ParamSeries minus_y_over_one_plus_yX(int cap) {
  return series_product(ParamSeries::constant(-nc_y(), cap), geometric(-nc_y(), Param::X, cap),
                        ProductKind::concat);
}

IdentityReport check_lemma1(int cap) {
  const ParamSeries h = geometric(-nc_y(), Param::Y, cap);
  const ParamSeries geo_z = geometric(nc_z(), Param::Z, cap);
  const ParamSeries lhs = series_product(h, phi_yY(geo_z), ProductKind::concat);
  const ParamSeries rhs = series_product(geo_z, h, ProductKind::shuffle);
  return series_equality_report("lemma1", {{"cap", cap}}, lhs, rhs);
}

IdentityReport check_lemma2(int cap) {
  const ParamSeries lhs = phi_yY_inv(minus_y_over_one_plus_yX(cap));
  const ParamSeries sh = series_product(geometric(nc_z(), Param::Y, cap),
                                        geometric(-nc_y(), Param::X, cap), ProductKind::shuffle);
  const ParamSeries rhs =
      series_product(sh, ParamSeries::constant(-nc_y(), cap), ProductKind::concat);
  return series_equality_report("lemma2", {{"cap", cap}}, lhs, rhs);
}

IdentityReport check_eq7(int cap) {
  const ParamSeries inner = geometric_multi({{-nc_y(), Param::X}, {nc_z(), Param::Y}}, cap);
  const ParamSeries lhs = phi_yY(
      series_product(inner, ParamSeries::constant(-nc_y(), cap), ProductKind::concat));
  const ParamSeries rhs = minus_y_over_one_plus_yX(cap);
  return series_equality_report("eq7", {{"cap", cap}}, lhs, rhs);
}

IdentityReport check_eq8(int cap, unsigned a) {
  const ParamSeries geo_x = geometric(-nc_y(), Param::X, cap);
  const ParamSeries lhs = series_product(geo_x, F_series(a, Param::X, cap), ProductKind::harmonic);
  const ParamSeries rhs =
      series_product(ParamSeries::constant(neg_ypow(a + 1), cap), geo_x, ProductKind::concat);
  return series_equality_report("eq8", {{"cap", cap}, {"a", a}}, lhs, rhs);
}

IdentityReport check_phi_factorization(int cap) {
  std::vector<NCPoly> inputs = {nc_x(), nc_z()};
  // a few fixed pseudorandom polynomials over all of H
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  for (int i = 0; i < 4; ++i) {
    NCPoly p;
    const int nterms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < nterms; ++t) {
      const std::size_t len = rng() % 5;
      std::string s;
      for (std::size_t j = 0; j < len; ++j) s += (rng() % 2) ? 'y' : 'x';
      p.add_term(Word::from_string(s.empty() ? "1" : s),
                 Rational(static_cast<long>(rng() % 5) - 2));
    }
    if (!p.is_zero()) inputs.push_back(p);
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const ParamSeries s = ParamSeries::constant(inputs[i], cap);
    const ParamSeries lhs = phi_yY(s);
    const ParamSeries rhs = exp_dY(delta_Y(s), -1);
    if (auto disc = first_difference(lhs, rhs)) {
      return make_report("phi_factorization", {{"cap", cap}, {"input", static_cast<long long>(i)}},
                         false, std::move(disc));
    }
  }
  return make_report("phi_factorization",
                     {{"cap", cap}, {"inputs", static_cast<long long>(inputs.size())}}, true);
}

IdentityReport check_closed_form(int cap) {
  const ParamSeries lhs = series_product(geometric(nc_z(), Param::Y, cap),
                                         geometric(-nc_y(), Param::X, cap), ProductKind::shuffle);
  const ParamSeries rhs = geometric_multi({{-nc_y(), Param::X}, {nc_z(), Param::Y}}, cap);
  return series_equality_report("closed_form", {{"cap", cap}}, lhs, rhs);
}

}  // namespace

IdentityReport identity_check(IdentityName name, int cap, unsigned a) {
  if (cap < 1) throw std::domain_error("identity_check requires cap >= 1");
  switch (name) {
    case IdentityName::lemma1: return check_lemma1(cap);
    case IdentityName::lemma2: return check_lemma2(cap);
    case IdentityName::eq7: return check_eq7(cap);
    case IdentityName::eq8: return check_eq8(cap, a);
    case IdentityName::phi_factorization: return check_phi_factorization(cap);
    case IdentityName::closed_form: return check_closed_form(cap);
  }
  throw std::logic_error("unknown identity name");
}

SpanComparison compare_spans(const std::vector<NCPoly>& lhs, const std::vector<NCPoly>& rhs) {
  std::map<Word, std::size_t> col_index;
  for (const auto* side : {&lhs, &rhs})
    for (const auto& p : *side)
      for (const auto& [w, c] : p.terms()) col_index.emplace(w, 0);
  std::size_t ncols = 0;
  for (auto& [w, idx] : col_index) idx = ncols++;
  auto fill = [&](const std::vector<NCPoly>& gens, RatMatrix& m, std::size_t row0) {
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (const auto& [w, c] : gens[i].terms()) m(row0 + i, col_index.at(w)) = c;
  };
  RatMatrix ml(lhs.size(), ncols), mr(rhs.size(), ncols), mu(lhs.size() + rhs.size(), ncols);
  fill(lhs, ml, 0);
  fill(rhs, mr, 0);
  fill(lhs, mu, 0);
  fill(rhs, mu, lhs.size());
  return {matrix_rank(std::move(ml)), matrix_rank(std::move(mr)), matrix_rank(std::move(mu))};
}

IdentityReport eq4_span_check(unsigned w) {
  if (w < 2) throw std::domain_error("eq4_span_check requires w >= 2");
  std::vector<NCPoly> lhs, rhs;
  for (unsigned v = 2; v <= w; ++v) {
    for (const Word& m : words_of_weight(v - 2)) {
      const Word mono = Word::single(Letter::x).concat(m).concat(Word::single(Letter::y));
      lhs.push_back(exp_derivation_sum(NCPoly::monomial(mono), w).weight_project(w));
    }
  }
  NCPoly geo;  // 1/(1+y) = sum_i (-y)^i, truncated by weight
  for (unsigned i = 0; i <= w; ++i) geo += neg_ypow(i);
  for (unsigned v = 1; v + 1 <= w; ++v) {
    for (const Word& m : words_of_weight(v - 1)) {
      const Word u = m.concat(Word::single(Letter::y));
      rhs.push_back(Lx(phi(harmonic(geo, NCPoly::monomial(u)))).weight_project(w));
    }
  }
  const SpanComparison cmp = compare_spans(lhs, rhs);
  return make_report("eq4",
                     {{"w", w},
                      {"lhs_rank", static_cast<long long>(cmp.lhs_rank)},
                      {"rhs_rank", static_cast<long long>(cmp.rhs_rank)},
                      {"union_rank", static_cast<long long>(cmp.union_rank)}},
                     cmp.equal());
}

}  // namespace mzv
