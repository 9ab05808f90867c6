#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mzv/json_io.hpp"
#include "mzv/parser.hpp"
#include "mzv/relations.hpp"
#include "mzv/verify.hpp"
#include "mzv/zeta.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void print_eval(const mzv::EvalResult& r, bool json) {
  if (json) {
    std::cout << mzv::to_json(r).dump(2) << "\n";
  } else {
    std::cout << "value = " << format_double(r.value)
              << "\ntail_bound = " << format_double(r.tail_bound) << "\nM = " << r.M << "\n";
  }
}

mzv::Composition parse_index(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '(') s.erase(s.begin());
  if (!s.empty() && s.back() == ')') s.pop_back();
  mzv::Composition c;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = std::min(s.find(',', pos), s.size());
    const std::string part = s.substr(pos, comma - pos);
    std::size_t used = 0;
    const long v = std::stol(part, &used);
    if (used != part.size() || v < 1) throw std::domain_error("invalid index part '" + part + "'");
    c.parts.push_back(static_cast<std::uint32_t>(v));
    pos = comma + 1;
    if (comma == s.size()) break;
  }
  return c;
}

int run_expand(const std::string& expr_text, bool json) {
  const mzv::NCPoly p = mzv::parse_poly(expr_text);
  if (json) {
    nlohmann::ordered_json j;
    j["poly"] = p.str();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << p.str() << "\n";
  }
  return kExitOk;
}

int run_decompose(unsigned a, unsigned b, unsigned k, bool json) {
  const mzv::NCPoly target = mzv::rsf_element(a, b, k);
  try {
    const mzv::Certificate cert = mzv::decompose(target, k);
    if (json) {
      std::cout << mzv::to_json(cert).dump(2) << "\n";
    } else {
      std::cout << "weight: " << cert.weight << "\ntarget: " << cert.target.str() << "\nterms:\n";
      for (const auto& term : cert.terms)
        std::cout << "  " << mzv::rational_str(term.coeff) << " * dn(" << term.n << ", "
                  << term.w.str() << ")\n";
    }
    return kExitOk;
  } catch (const mzv::NotInSpanError& e) {
    std::cerr << "not in span: " << e.what() << "\nresidual: " << e.residual().str() << "\n";
    return kExitCheckFailed;
  }
}

int run_verify(const std::string& suite, const mzv::SuiteOptions& opts, bool json) {
  const std::vector<mzv::IdentityReport> reports = mzv::run_suite(suite, opts);
  std::size_t failures = 0;
  if (json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      arr.push_back(mzv::to_json(r));
      if (!r.pass) ++failures;
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << r.str() << "\n";
      if (!r.pass) ++failures;
    }
    std::cout << "suite " << suite << ": " << (reports.size() - failures) << "/" << reports.size()
              << " checks passed\n";
  }
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computer algebra for multiple zeta value relations"};
  app.require_subcommand(1);
  app.fallthrough();  // let subcommands pass --json up to the app
  bool json = false;
  app.add_flag("--json", json, "emit JSON instead of text");

  auto* expand = app.add_subcommand("expand", "evaluate an expression to a polynomial");
  std::string expr_text;
  expand->add_option("expr", expr_text, "expression, e.g. \"sh(xy,y)\"")->required();

  auto* decompose =
      app.add_subcommand("decompose", "write the restricted-sum element as derivation terms");
  unsigned dec_a = 0, dec_b = 0, dec_k = 0;
  decompose->add_option("--a", dec_a, "trailing-y exponent a")->required();
  decompose->add_option("--b", dec_b, "shuffle exponent b")->required();
  decompose->add_option("--k", dec_k, "total weight k (>= a+b+2)")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("--suite", suite, "products|prop2|lemmas|eq4|theorem|numeric|all")
      ->required();
  std::optional<int> cap_opt;
  std::optional<int> max_weight_opt;
  std::optional<long long> m_opt;
  verify->add_option("--cap", cap_opt, "series truncation order (default 6)");
  verify->add_option("--max-weight", max_weight_opt,
                     "weight bound for the eq4 and theorem sweeps (defaults 8 and 10)");
  verify->add_option("--M", m_opt, "numeric summation cutoff (default 1000000)");

  auto* eval = app.add_subcommand("eval", "numerically evaluate a zeta value");
  std::string eval_word, eval_index;
  long long eval_m = 1000000;
  eval->add_option("--word", eval_word, "admissible word, e.g. xxy");
  eval->add_option("--index", eval_index, "MZV index, e.g. \"(2,1)\"");
  eval->add_option("--M", eval_m, "summation cutoff (default 1000000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (expand->parsed()) return run_expand(expr_text, json);
    if (decompose->parsed()) return run_decompose(dec_a, dec_b, dec_k, json);
    if (verify->parsed()) {
      mzv::SuiteOptions opts;
      if (cap_opt) opts.cap = *cap_opt;
      if (max_weight_opt) {
        opts.eq4_max_weight = *max_weight_opt;
        opts.theorem_max_k = *max_weight_opt;
      }
      if (m_opt) opts.M = *m_opt;
      return run_verify(suite, opts, json);
    }
    if (eval->parsed()) {
      if (eval_word.empty() == eval_index.empty())
        throw std::domain_error("eval requires exactly one of --word or --index");
      const mzv::Composition c = eval_word.empty()
                                     ? parse_index(eval_index)
                                     : mzv::composition_of_word(mzv::Word::from_string(eval_word));
      print_eval(mzv::zeta_num(c, eval_m), json);
      return kExitOk;
    }
  } catch (const mzv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
