#include "mzv/json_io.hpp"

namespace mzv {

using nlohmann::ordered_json;

ordered_json to_json(const Certificate& cert) {
  ordered_json j;
  j["weight"] = cert.weight;
  j["target"] = cert.target.str();
  j["terms"] = ordered_json::array();
  for (const auto& term : cert.terms) {
    ordered_json t;
    t["n"] = term.n;
    t["word"] = term.w.str();
    t["coeff"] = rational_str(term.coeff);
    j["terms"].push_back(std::move(t));
  }
  return j;
}

ordered_json to_json(const IdentityReport& report) {
  ordered_json j;
  j["name"] = report.name;
  ordered_json params;
  for (const auto& [key, value] : report.params) params[key] = value;
  j["params"] = std::move(params);
  j["pass"] = report.pass;
  if (report.discrepancy) {
    ordered_json d;
    d["at"] = {report.discrepancy->at.a, report.discrepancy->at.b, report.discrepancy->at.c};
    d["lhs"] = report.discrepancy->lhs.str();
    d["rhs"] = report.discrepancy->rhs.str();
    j["discrepancy"] = std::move(d);
  }
  return j;
}

ordered_json to_json(const EvalResult& result) {
  ordered_json j;
  j["value"] = result.value;
  j["tail_bound"] = result.tail_bound;
  j["M"] = result.M;
  return j;
}

}  // namespace mzv
