#pragma once

#include <json.hpp>

#include "adjalg/central.hpp"
#include "adjalg/ends.hpp"
#include "adjalg/group.hpp"
#include "adjalg/hopf.hpp"

namespace adjalg {

using nlohmann::json;

// Rationals are serialized as "num/den" strings throughout.
json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j);

// "group-v1": {"elements": [names], "table": [[index]]}
json group_to_json(const Group& g);
Group group_from_json(const json& j);

// "hopf-v1": sparse structure constants; mult/comult as [i, j, k, "num/den"].
json hopf_to_json(const HopfAlgebra& h);
HopfAlgebra hopf_raw_from_json(const json& j);  // no axiom check
HopfPtr hopf_from_json(const json& j);          // checked

// "hopfmap-v1": {"source": <hopf-v1 | {"builtin": name}>, "target": ..., "matrix": [[...]]}
HopfMap hopfmap_from_json(const json& j);

// Reports
json end_to_json(const EndObject& e);
json algebra_to_json(const CentralAlgebra& a, bool connected);

json load_json_file(const std::string& path);

}  // namespace adjalg
