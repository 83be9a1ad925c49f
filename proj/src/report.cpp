#include "perfmat/report.hpp"

namespace perfmat {

nlohmann::ordered_json to_json(const VerificationRecord& r) {
  nlohmann::ordered_json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["degrees"] = r.degrees.degrees;
  j["perfmat"] = r.perfmat.str();
  j["perm"] = r.perm.str();
  j["gibson"] = to_string(r.gibson);
  j["matching_cmp"] = to_string(r.matching_cmp);
  j["bm_cmp"] = to_string(r.bm_cmp);
  j["structure"] = r.structure;
  j["oracle_even"] = r.oracle_even ? nlohmann::ordered_json(r.oracle_even->str())
                                   : nlohmann::ordered_json(nullptr);
  j["oracle_all"] = r.oracle_all ? nlohmann::ordered_json(r.oracle_all->str())
                                 : nlohmann::ordered_json(nullptr);
  j["pass"] = r.pass;
  return j;
}

nlohmann::ordered_json to_json(const RunSummary& s) {
  nlohmann::ordered_json j;
  j["graphs_processed"] = std::to_string(s.graphs_processed);
  j["violations"] = s.violations;
  j["equality_cases"] = std::to_string(s.equality_cases);
  j["gibson_equality_cases"] = std::to_string(s.gibson_equality_cases);
  j["max_ratio_seen"] = s.max_ratio_seen;
  return j;
}

nlohmann::ordered_json to_json(const FactorialProductBound& b) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(b.kind);
  j["zero"] = b.zero;
  auto exps = nlohmann::ordered_json::array();
  for (const auto& [p, e] : b.exponents) {
    exps.push_back({std::to_string(p),
                    boost::multiprecision::numerator(e).str(),
                    boost::multiprecision::denominator(e).str()});
  }
  j["exponents"] = exps;
  j["integral"] = b.integral();
  if (b.integral()) j["value"] = b.materialize().str();
  j["log_value"] = b.zero ? nlohmann::ordered_json("-inf")
                          : nlohmann::ordered_json(log_value(b));
  return j;
}

nlohmann::ordered_json to_json(const ExtremalReport& r) {
  nlohmann::ordered_json j;
  j["degrees"] = r.degrees.degrees;
  j["realizations"] = std::to_string(r.realizations);
  j["max_perfmat"] = r.max_perfmat.str();
  j["witness"] = r.best_graph6;
  j["matching_cmp"] = to_string(r.matching_cmp);
  j["witness_structure"] = r.witness_structure;
  j["equality_feasible"] = r.equality_feasible;
  j["equality_attained"] = r.equality_attained;
  return j;
}

}  // namespace perfmat
