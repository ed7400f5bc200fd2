#pragma once

#include <string>

#include <json.hpp>

#include "betaexp/branching.hpp"
#include "betaexp/normalize.hpp"
#include "betaexp/stats.hpp"

namespace betaexp::io {

using nlohmann::json;

/// Version tag written into every JSON document.
inline constexpr int kSchemaVersion = 1;

json to_json(const Beta& beta);
/// {"decimal", "coefficients" (lowest power first), "radius", "width"}.
json to_json(const FieldValue& v, unsigned digits = 20);
json to_json(const CoverWord& c, unsigned digits = 20);
json to_json(const UniversalResult& r, unsigned digits = 20);
json to_json(const FinitaryResult& r, unsigned digits = 20);
json to_json(const BranchTree& t, unsigned digits = 20);
json to_json(const std::vector<GammaPath>& paths);
json to_json(const UniquenessVerdict& v, unsigned digits = 20);
json to_json(const ComplexityProfile& p);
json to_json(const BlockFrequencyTable& t);
json to_json(const NormalityDeviation& d);

/// Graphviz rendering; branch nodes are drawn as double circles.
std::string to_dot(const BranchTree& t);

/// "block,count,freq" with a header row.
std::string to_csv(const BlockFrequencyTable& t);
/// "n,count" with a header row.
std::string to_csv(const ComplexityProfile& p);

}  // namespace betaexp::io
