#pragma once

#include <nlohmann/json.hpp>

#include "regionbound/arrangement1d.hpp"
#include "regionbound/arrangement2d.hpp"
#include "regionbound/bound.hpp"
#include "regionbound/histogram.hpp"
#include "regionbound/net1d.hpp"

namespace regionbound {

using Json = nlohmann::json;

// Big integers are decimal strings and rationals "num/den" strings
// throughout. Readers throw std::invalid_argument on malformed input.

Json histogram_to_json(const Histogram& h);
Histogram histogram_from_json(const Json& j);

Json arrangement_to_json(const OrientedArrangement1D& arrangement);
OrientedArrangement1D arrangement1d_from_json(const Json& j);

Json arrangement_to_json(const OrientedArrangement2D& arrangement);
OrientedArrangement2D arrangement2d_from_json(const Json& j);

Json net_to_json(const ReluNet1D& net);
ReluNet1D net_from_json(const Json& j);

Json counterexample_to_json(const Tau2Counterexample& counterexample);

/// {"bound", "family", "conjectured", "architecture", "per_layer_histograms"}.
Json bound_to_json(const ComposedBound& bound, std::string_view family,
                   const Architecture& arch);

Json matrix_to_json(const BoundMatrix& matrix);

}  // namespace regionbound
