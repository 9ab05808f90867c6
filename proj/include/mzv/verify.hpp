#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mzv/relations.hpp"

namespace mzv {

struct SuiteOptions {
  int cap = 6;                      // series truncation for the identity checks
  int eq4_max_weight = 8;           // top weight of the graded span sweep
  int theorem_max_k = 10;           // top weight of the decomposition sweep
  int prop2_max_sum = 6;            // a+b+c bound
  int prop1_max_sum = 5;            // a+b+c bound for witnesses
  int prop1_consistency_max_k = 8;  // Lx phi route vs rsf_element
  int laws_triples = 200;           // random triples for the algebra laws
  int laws_max_total_weight = 9;
  unsigned eq8_max_a = 4;
  long long M = 1000000;            // numeric summation cutoff
  std::uint64_t seed = 0x5eed0001ULL;
};

// Deterministic generators used by the suites and the property tests.
Word random_word(std::mt19937_64& rng, std::size_t len);
Word random_h1_word(std::mt19937_64& rng, std::size_t len);  // ends in y when len >= 1

std::vector<IdentityReport> check_algebra_laws(const SuiteOptions& opts);
std::vector<IdentityReport> check_prop2(const SuiteOptions& opts);
std::vector<IdentityReport> check_lemma_identities(const SuiteOptions& opts);
std::vector<IdentityReport> check_operator_sanity(const SuiteOptions& opts);
std::vector<IdentityReport> check_theorem(const SuiteOptions& opts);
std::vector<IdentityReport> check_prop1(const SuiteOptions& opts);
std::vector<IdentityReport> check_eq4(const SuiteOptions& opts);
std::vector<IdentityReport> check_numeric(const SuiteOptions& opts);

// Suites by CLI name: products, prop2, lemmas, eq4, theorem, numeric, all.
// Throws std::domain_error for an unknown name.
std::vector<IdentityReport> run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace mzv
