#include "ncgb/groebner.hpp"

namespace ncgb {

nlohmann::json CompositionReport::to_json() const {
  nlohmann::json failed_list = nlohmann::json::array();
  for (const auto& f : failed) {
    failed_list.push_back({
        {"first", f.first_label},
        {"second", f.second_label},
        {"kind", to_string(f.obstruction.kind)},
        {"superposition", f.obstruction.superposition.to_string()},
        {"remainder", f.remainder.to_string()},
    });
  }
  return {{"bound", bound}, {"checked", checked}, {"failed", failed_list}};
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row = {
        {"multidegree", r.multidegree.exponents},
        {"normal", r.normal},
        {"reference", r.reference},
    };
    if (r.oracle) row["oracle"] = *r.oracle;
    rows_json.push_back(std::move(row));
  }
  nlohmann::json j = {
      {"schema", kReportSchema},
      {"bound", bound},
      {"n", n},
      {"rows", rows_json},
      {"members_reduce_to_zero", members_reduce_to_zero},
  };
  if (compositions)
    j["compositions"] = compositions->to_json();
  else
    j["compositions"] = {{"checked", 0}, {"failed", nlohmann::json::array()}};
  j["verdict"] = passed() ? "pass" : "fail";
  return j;
}

}  // namespace ncgb
