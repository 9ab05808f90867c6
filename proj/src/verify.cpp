#include "mzv/verify.hpp"

#include <cmath>
#include <numbers>

#include "mzv/operators.hpp"
#include "mzv/products.hpp"
#include "mzv/zeta.hpp"

namespace mzv {

namespace {

IdentityReport report(std::string name, std::vector<std::pair<std::string, long long>> params,
                      bool pass, std::optional<Discrepancy> disc = std::nullopt) {
  IdentityReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.pass = pass;
  r.discrepancy = std::move(disc);
  return r;
}

Discrepancy poly_disc(long long index, const NCPoly& lhs, const NCPoly& rhs) {
  return {{static_cast<int>(index), 0, 0}, lhs, rhs};
}

NCPoly hand(std::initializer_list<std::pair<const char*, int>> terms) {
  NCPoly p;
  for (const auto& [w, c] : terms) p.add_term(Word::from_string(w), c);
  return p;
}

}  // namespace

Word random_word(std::mt19937_64& rng, std::size_t len) {
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s += (rng() % 2) ? 'y' : 'x';
  return Word::from_string(s.empty() ? "1" : s);
}

Word random_h1_word(std::mt19937_64& rng, std::size_t len) {
  if (len == 0) return Word{};
  std::string s;
  for (std::size_t i = 0; i + 1 < len; ++i) s += (rng() % 2) ? 'y' : 'x';
  s += 'y';
  return Word::from_string(s);
}

std::vector<IdentityReport> check_algebra_laws(const SuiteOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  const auto max_total = static_cast<std::size_t>(opts.laws_max_total_weight);
  long long shuffle_fail = -1, harmonic_fail = -1;
  std::optional<Discrepancy> shuffle_disc, harmonic_disc;
  for (long long trial = 0; trial < opts.laws_triples; ++trial) {
    const std::size_t l1 = rng() % (max_total + 1);
    const std::size_t l2 = rng() % (max_total - l1 + 1);
    const std::size_t l3 = rng() % (max_total - l1 - l2 + 1);
    {
      const NCPoly p = NCPoly::monomial(random_word(rng, l1));
      const NCPoly q = NCPoly::monomial(random_word(rng, l2));
      const NCPoly r = NCPoly::monomial(random_word(rng, l3));
      const NCPoly assoc_l = shuffle(shuffle(p, q), r), assoc_r = shuffle(p, shuffle(q, r));
      const NCPoly comm_l = shuffle(p, q), comm_r = shuffle(q, p);
      if ((assoc_l != assoc_r || comm_l != comm_r) && shuffle_fail < 0) {
        shuffle_fail = trial;
        shuffle_disc = assoc_l != assoc_r ? poly_disc(trial, assoc_l, assoc_r)
                                          : poly_disc(trial, comm_l, comm_r);
      }
    }
    {
      const NCPoly p = NCPoly::monomial(random_h1_word(rng, l1));
      const NCPoly q = NCPoly::monomial(random_h1_word(rng, l2));
      const NCPoly r = NCPoly::monomial(random_h1_word(rng, l3));
      const NCPoly assoc_l = harmonic(harmonic(p, q), r), assoc_r = harmonic(p, harmonic(q, r));
      const NCPoly comm_l = harmonic(p, q), comm_r = harmonic(q, p);
      if ((assoc_l != assoc_r || comm_l != comm_r) && harmonic_fail < 0) {
        harmonic_fail = trial;
        harmonic_disc = assoc_l != assoc_r ? poly_disc(trial, assoc_l, assoc_r)
                                           : poly_disc(trial, comm_l, comm_r);
      }
    }
  }
  return {
      report("shuffle_laws",
             {{"triples", opts.laws_triples}, {"max_total_weight", opts.laws_max_total_weight}},
             shuffle_fail < 0, std::move(shuffle_disc)),
      report("harmonic_laws",
             {{"triples", opts.laws_triples}, {"max_total_weight", opts.laws_max_total_weight}},
             harmonic_fail < 0, std::move(harmonic_disc)),
  };
}

std::vector<IdentityReport> check_prop2(const SuiteOptions& opts) {
  std::vector<IdentityReport> out;
  long long tuples = 0, failures = 0;
  for (unsigned a = 0; static_cast<int>(a) <= opts.prop2_max_sum; ++a) {
    for (unsigned b = 0; static_cast<int>(a + b) <= opts.prop2_max_sum; ++b) {
      for (unsigned c = 0; static_cast<int>(a + b + c) <= opts.prop2_max_sum; ++c) {
        ++tuples;
        IdentityReport r = prop2_check(a, b, c);
        if (!r.pass) {
          ++failures;
          out.push_back(std::move(r));
        }
      }
    }
  }
  out.insert(out.begin(),
             report("prop2_sweep",
                    {{"max_sum", opts.prop2_max_sum}, {"tuples", tuples}, {"failures", failures}},
                    failures == 0));
  // frozen hand expansions
  const NCPoly l010 = eq5_element(0, 1, 0);
  const NCPoly e010 = hand({{"xy", 1}, {"yy", 2}});
  out.push_back(report("prop2_hand_010", {}, l010 == e010 && prop2_check(0, 1, 0).pass,
                       l010 == e010 ? std::nullopt : std::optional(poly_disc(0, l010, e010))));
  const NCPoly l011 = eq5_element(0, 1, 1);
  const NCPoly e011 = hand({{"xxy", 1}, {"xyy", 2}, {"yxy", 2}, {"yyy", 3}});
  out.push_back(report("prop2_hand_011", {}, l011 == e011 && prop2_check(0, 1, 1).pass,
                       l011 == e011 ? std::nullopt : std::optional(poly_disc(0, l011, e011))));
  return out;
}

std::vector<IdentityReport> check_lemma_identities(const SuiteOptions& opts) {
  std::vector<IdentityReport> out;
  out.push_back(identity_check(IdentityName::lemma1, opts.cap));
  out.push_back(identity_check(IdentityName::lemma2, opts.cap));
  out.push_back(identity_check(IdentityName::eq7, opts.cap));
  for (unsigned a = 0; a <= opts.eq8_max_a; ++a)
    out.push_back(identity_check(IdentityName::eq8, opts.cap, a));
  out.push_back(identity_check(IdentityName::phi_factorization, opts.cap));
  out.push_back(identity_check(IdentityName::closed_form, opts.cap));
  return out;
}

std::vector<IdentityReport> check_operator_sanity(const SuiteOptions& opts) {
  std::vector<IdentityReport> out;
  std::mt19937_64 rng(opts.seed + 1);
  {
    bool pass = true;
    std::optional<Discrepancy> disc;
    for (std::size_t n = 0; n <= 10 && pass; ++n) {
      for (const Word& w : words_of_weight(n)) {
        const NCPoly p = NCPoly::monomial(w);
        if (phi(phi(p)) != p) {
          pass = false;
          disc = poly_disc(static_cast<long long>(n), phi(phi(p)), p);
          break;
        }
      }
    }
    for (int t = 0; t < 20 && pass; ++t) {
      NCPoly p = NCPoly::monomial(random_word(rng, rng() % 6));
      NCPoly q = NCPoly::monomial(random_word(rng, rng() % 6));
      if (phi(p * q) != phi(p) * phi(q)) {
        pass = false;
        disc = poly_disc(t, phi(p * q), phi(p) * phi(q));
      }
    }
    out.push_back(report("phi_involution", {{"max_weight", 10}}, pass, std::move(disc)));
  }
  {
    const int cap = opts.cap;
    bool pass = true;
    std::vector<NCPoly> inputs = {nc_x(), nc_y(), nc_z()};
    for (int t = 0; t < 4; ++t)
      inputs.push_back(NCPoly::monomial(random_word(rng, 1 + rng() % 4),
                                        Rational(static_cast<long>(rng() % 7) - 3)));
    for (const NCPoly& p : inputs) {
      if (p.is_zero()) continue;
      const ParamSeries s = ParamSeries::constant(p, cap);
      for (int sign : {+1, -1})
        if (exp_dY(s, sign) != exp_dY_closed(s, sign)) pass = false;
      if (exp_dY(exp_dY(s, +1), -1) != s || exp_dY(exp_dY(s, -1), +1) != s) pass = false;
    }
    out.push_back(report("exp_dY_closed_form_and_inverse", {{"cap", cap}}, pass));
  }
  {
    const int cap = 5;
    bool pass = true;
    for (int t = 0; t < 10 && pass; ++t) {
      ParamSeries s(cap);
      for (int k = 0; k < 4; ++k) {
        const int a = static_cast<int>(rng() % 3), b = static_cast<int>(rng() % 3);
        if (a + b > cap) continue;
        s.add_term({a, b, 0}, NCPoly::monomial(random_h1_word(rng, 1 + rng() % 4),
                                               Rational(static_cast<long>(rng() % 5) - 2)));
      }
      if (phi_yY_inv(phi_yY(s)) != s || phi_yY(phi_yY_inv(s)) != s) pass = false;
    }
    out.push_back(report("phi_yY_roundtrip", {{"cap", cap}}, pass));
  }
  {
    // containment over the derivation relation's domain xHy (the statement
    // behind eq3; on general words the image can leave H0)
    bool pass = true;
    for (std::size_t wlen = 2; wlen <= 8 && pass; ++wlen) {
      for (const Word& m : words_of_weight(wlen - 2)) {
        const Word w = Word::single(Letter::x).concat(m).concat(Word::single(Letter::y));
        for (unsigned n = 1; n <= 6; ++n) {
          const NCPoly img = partial_n(NCPoly::monomial(w), n);
          if (!img.in_H0() || !img.homogeneous_of_weight(wlen + n)) {
            pass = false;
            break;
          }
        }
        if (!pass) break;
      }
    }
    out.push_back(report("partial_images_in_H0", {{"max_weight", 8}, {"max_n", 6}}, pass));
  }
  return out;
}

std::vector<IdentityReport> check_theorem(const SuiteOptions& opts) {
  std::vector<IdentityReport> out;
  long long cases = 0, failures = 0;
  std::optional<Discrepancy> disc;
  for (unsigned k = 3; static_cast<int>(k) <= opts.theorem_max_k; ++k) {
    for (unsigned a = 0; a + 2 <= k; ++a) {
      for (unsigned b = 0; a + b + 2 <= k; ++b) {
        ++cases;
        const NCPoly target = rsf_element(a, b, k);
        bool ok = false;
        try {
          ok = decompose(target, k).verify();
        } catch (const NotInSpanError& e) {
          if (!disc) disc = poly_disc(k, target, e.residual());
        }
        if (!ok) ++failures;
      }
    }
  }
  out.push_back(report("theorem_sweep",
                       {{"max_k", opts.theorem_max_k}, {"cases", cases}, {"failures", failures}},
                       failures == 0, std::move(disc)));
  const Certificate cert = decompose(rsf_element(0, 1, 3), 3);
  const bool k3_exact = cert.terms.size() == 1 && cert.terms[0].n == 1 &&
                        cert.terms[0].w == Word::from_string("xy") && cert.terms[0].coeff == 1;
  out.push_back(report("theorem_k3_exact", {}, k3_exact));
  return out;
}

std::vector<IdentityReport> check_prop1(const SuiteOptions& opts) {
  std::vector<IdentityReport> out;
  {
    long long cases = 0, failures = 0;
    std::optional<Discrepancy> disc;
    for (unsigned a = 0; static_cast<int>(a) <= opts.prop1_max_sum; ++a) {
      for (unsigned b = 0; static_cast<int>(a + b) <= opts.prop1_max_sum; ++b) {
        for (unsigned c = 0; static_cast<int>(a + b + c) <= opts.prop1_max_sum; ++c) {
          ++cases;
          const auto witnesses = prop1_certificate(a, b, c);
          NCPoly sum;
          bool in_hy = true;
          for (const auto& wit : witnesses) {
            sum += harmonic(ypow(wit.i), wit.q);
            if (!wit.q.in_Hy()) in_hy = false;
          }
          const NCPoly lhs = eq5_element(a, b, c);
          if (sum != lhs || !in_hy) {
            ++failures;
            if (!disc) disc = poly_disc(static_cast<long long>(cases), lhs, sum);
          }
        }
      }
    }
    out.push_back(report("prop1_witnesses",
                         {{"max_sum", opts.prop1_max_sum}, {"cases", cases}, {"failures", failures}},
                         failures == 0, std::move(disc)));
  }
  {
    long long cases = 0, failures = 0;
    std::optional<Discrepancy> disc;
    for (unsigned k = 3; static_cast<int>(k) <= opts.prop1_consistency_max_k; ++k) {
      for (unsigned a = 0; a + 2 <= k; ++a) {
        for (unsigned b = 0; a + b + 2 <= k; ++b) {
          ++cases;
          const NCPoly lhs = Lx(phi(eq5_element(a, b, k - a - b - 2)));
          const NCPoly rhs = rsf_element(a, b, k);
          if (lhs != rhs) {
            ++failures;
            if (!disc) disc = poly_disc(k, lhs, rhs);
          }
        }
      }
    }
    out.push_back(report("prop1_consistency_route",
                         {{"max_k", opts.prop1_consistency_max_k},
                          {"cases", cases},
                          {"failures", failures}},
                         failures == 0, std::move(disc)));
  }
  return out;
}

std::vector<IdentityReport> check_eq4(const SuiteOptions& opts) {
  std::vector<IdentityReport> out;
  for (unsigned w = 2; static_cast<int>(w) <= opts.eq4_max_weight; ++w)
    out.push_back(eq4_span_check(w));
  return out;
}

std::vector<IdentityReport> check_numeric(const SuiteOptions& opts) {
  std::vector<IdentityReport> out;
  const long long M = opts.M;
  {
    long long cases = 0, failures = 0;
    for (unsigned k = 3; k <= 7; ++k)
      for (const auto& gen : derivation_generators(k)) {
        ++cases;
        if (!kernel_check(gen.image, M)) ++failures;
      }
    out.push_back(report("numeric_kernel_generators",
                         {{"max_weight", 7}, {"M", M}, {"cases", cases}, {"failures", failures}},
                         failures == 0));
  }
  {
    long long cases = 0, failures = 0;
    for (unsigned k = 3; k <= 7; ++k)
      for (unsigned a = 0; a + 2 <= k; ++a)
        for (unsigned b = 0; a + b + 2 <= k; ++b) {
          ++cases;
          if (!kernel_check(rsf_element(a, b, k), M)) ++failures;
        }
    out.push_back(report("numeric_kernel_rsf",
                         {{"max_k", 7}, {"M", M}, {"cases", cases}, {"failures", failures}},
                         failures == 0));
  }
  {
    // all ordered pairs of admissible words with total weight <= 5
    std::vector<Word> admissible;
    for (std::size_t n = 2; n <= 3; ++n)
      for (const Word& m : words_of_weight(n - 2))
        admissible.push_back(
            Word::single(Letter::x).concat(m).concat(Word::single(Letter::y)));
    long long cases = 0, failures = 0;
    for (const Word& u : admissible)
      for (const Word& v : admissible) {
        if (u.weight() + v.weight() > 5) continue;
        for (ProductKind kind : {ProductKind::shuffle, ProductKind::harmonic}) {
          ++cases;
          if (!homomorphism_check(NCPoly::monomial(u), NCPoly::monomial(v), kind, M)) ++failures;
        }
      }
    out.push_back(report("numeric_homomorphism",
                         {{"max_total_weight", 5}, {"M", M}, {"cases", cases},
                          {"failures", failures}},
                         failures == 0));
  }
  {
    const bool rejected = !kernel_check(NCPoly::monomial(Word::from_string("xxy")), M);
    out.push_back(report("numeric_negative_control", {{"M", M}}, rejected));
  }
  {
    const EvalResult z2 = zeta_num({{2}}, M), z4 = zeta_num({{4}}, M);
    const double pi = std::numbers::pi;
    const bool ok2 = std::abs(z2.value - pi * pi / 6.0) <= z2.tail_bound + roundoff_allowance(M, 1);
    const bool ok4 =
        std::abs(z4.value - pi * pi * pi * pi / 90.0) <= z4.tail_bound + roundoff_allowance(M, 1);
    out.push_back(report("numeric_depth1_constants", {{"M", M}}, ok2 && ok4));
  }
  return out;
}

std::vector<IdentityReport> run_suite(const std::string& name, const SuiteOptions& opts) {
  auto append = [](std::vector<IdentityReport>& into, std::vector<IdentityReport>&& from) {
    for (auto& r : from) into.push_back(std::move(r));
  };
  std::vector<IdentityReport> out;
  if (name == "products") return check_algebra_laws(opts);
  if (name == "prop2") return check_prop2(opts);
  if (name == "lemmas") {
    out = check_lemma_identities(opts);
    append(out, check_operator_sanity(opts));
    return out;
  }
  if (name == "eq4") return check_eq4(opts);
  if (name == "theorem") {
    out = check_theorem(opts);
    append(out, check_prop1(opts));
    return out;
  }
  if (name == "numeric") return check_numeric(opts);
  if (name == "all") {
    append(out, check_algebra_laws(opts));
    append(out, check_prop2(opts));
    append(out, check_lemma_identities(opts));
    append(out, check_operator_sanity(opts));
    append(out, check_theorem(opts));
    append(out, check_prop1(opts));
    append(out, check_eq4(opts));
    append(out, check_numeric(opts));
    return out;
  }
  throw std::domain_error("unknown suite '" + name +
                          "' (expected products|prop2|lemmas|eq4|theorem|numeric|all)");
}

}  // namespace mzv
