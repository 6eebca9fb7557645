#include "zastava/localization.hpp"

#include "json.hpp"
#include "zastava/errors.hpp"
#include "zastava/sl2.hpp"

namespace zastava {

namespace {

void require_linear(const Polynomial& w, const std::string& label) {
  if (w.is_zero()) throw UsageError("zero tangent weight at '" + label + "': fixed point is not isolated");
  for (const auto& [m, c] : w.terms()) {
    if (m.degree != 1) throw UsageError("tangent weight at '" + label + "' is not a linear form");
  }
}

}  // namespace

RationalFunction localized_integral(const std::vector<FixedPointDatum>& points) {
  if (points.empty()) throw UsageError("no fixed points");
  const RingPtr ring = points.front().tangent_weights.empty() ? sl2_ring() : points.front().tangent_weights[0].ring();
  RationalFunction total(ring);
  for (const auto& p : points) {
    Polynomial det = Polynomial::constant(ring, 1);
    for (const auto& w : p.tangent_weights) {
      require_linear(w, p.label);
      det = det * w;
    }
    total += RationalFunction(Polynomial::constant(ring, 1), det);
  }
  return total;
}

FixedPointDatum sl2_quasimap_fixed_point(int d) {
  if (d < 1) throw UsageError("quasi-map degree must be at least 1");
  // (g, h) with g monic of degree d, deg h < d. Rotating z with weight hbar and scaling h with
  // weight a, the coefficients g_i and h_i of z^i have weights (d - i) hbar and a + (d - i) hbar.
  // The cotangent weights are their negatives; in even dimension the determinant is the same.
  const RingPtr ring = sl2_ring();
  const Polynomial a = Polynomial::variable(ring, 0);
  const Polynomial h = Polynomial::variable(ring, 1);
  FixedPointDatum p{"g=z^" + std::to_string(d) + ",h=0", {}};
  for (int i = 1; i <= d; ++i) p.tangent_weights.push_back(h.scaled(i));
  for (int i = 1; i <= d; ++i) p.tangent_weights.push_back(a + h.scaled(i));
  return p;
}

std::vector<FixedPointDatum> fixed_points_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    std::vector<nlohmann::json> items;
    if (j.is_array()) {
      items.assign(j.begin(), j.end());
    } else {
      items.push_back(j);
    }
    std::vector<std::string> names{"a1", "h"};
    if (!items.empty() && items.front().contains("variables")) names = items.front().at("variables").get<std::vector<std::string>>();
    const RingPtr ring = make_ring(names);
    std::vector<FixedPointDatum> out;
    for (const auto& item : items) {
      if (item.contains("variables") && item.at("variables").get<std::vector<std::string>>() != names) {
        throw UsageError("fixed points use different variables");
      }
      FixedPointDatum p{item.value("label", std::string("y") + std::to_string(out.size())), {}};
      for (const auto& w : item.at("weights")) {
        const RationalFunction f = parse_rational_function(w.get<std::string>(), ring);
        if (!f.is_polynomial()) throw UsageError("tangent weight '" + w.get<std::string>() + "' is not a polynomial");
        p.tangent_weights.push_back(f.numerator());
        require_linear(p.tangent_weights.back(), p.label);
      }
      out.push_back(std::move(p));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed fixed-point JSON: ") + e.what());
  }
}

}  // namespace zastava
