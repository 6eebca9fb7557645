#pragma once

#include <string>
#include <vector>

#include "zastava/rational_function.hpp"

namespace zastava {

/// Isolated torus fixed point with its tangent weights (nonzero linear forms).
struct FixedPointDatum {
  std::string label;
  std::vector<Polynomial> tangent_weights;
};

/// Sum over fixed points of 1 / prod(weights). Throws UsageError on a zero or non-linear weight.
RationalFunction localized_integral(const std::vector<FixedPointDatum>& points);

/// Unique fixed point g = z^d, h = 0 of the degree-d based quasi-maps to P^1, over sl2_ring().
FixedPointDatum sl2_quasimap_fixed_point(int d);

/// Reads {"label", "weights": [...], "variables"?} or an array of such objects.
/// Variables default to ["a1", "h"].
std::vector<FixedPointDatum> fixed_points_from_json(const std::string& text);

}  // namespace zastava
