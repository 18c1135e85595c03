#include "potalg/json_io.hpp"

namespace potalg {

using nlohmann::json;

json to_json(const DimReport& r) {
  json j;
  j["per_degree"] = r.per_degree;
  if (r.total)
    j["total"] = *r.total;
  else
    j["total"] = "Infinite";
  j["method"] = DimReport::method_name(r.method);
  j["verdict"] = r.verdict;
  return j;
}

json to_json(const SliceReport& r) {
  json j;
  j["k"] = r.k;
  j["dims"] = r.dims;
  j["ranks"] = r.ranks;
  j["exact"] = r.exact_at;
  j["euler_defect"] = r.euler_defect;
  return j;
}

json to_json(const GapReport& r) {
  json j;
  if (r.dim_a)
    j["dim_a"] = *r.dim_a;
  else
    j["dim_a"] = "Infinite";
  j["dim_b"] = r.dim_b;
  if (r.gap)
    j["gap"] = *r.gap;
  else
    j["gap"] = nullptr;
  j["multiple_of_four"] = r.multiple_of_four;
  if (r.squares) {
    json arr = json::array();
    for (const auto& [k, mult] : *r.squares)
      arr.push_back({{"k", k}, {"multiplicity", mult}});
    j["squares"] = arr;
  } else {
    j["squares"] = nullptr;
  }
  return j;
}

}  // namespace potalg
