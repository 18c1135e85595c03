#pragma once

#include <json.hpp>

#include "potalg/abelian.hpp"
#include "potalg/groebner.hpp"
#include "potalg/potential_complex.hpp"

namespace potalg {

nlohmann::json to_json(const DimReport& r);
nlohmann::json to_json(const SliceReport& r);
nlohmann::json to_json(const GapReport& r);

}  // namespace potalg
