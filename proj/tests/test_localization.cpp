#include "doctest.h"
#include "zastava/errors.hpp"
#include "zastava/localization.hpp"
#include "zastava/sl2.hpp"

using namespace zastava;

namespace {

Polynomial lin(const std::string& s, const RingPtr& r) { return parse_rational_function(s, r).numerator(); }

}  // namespace

TEST_CASE("localized integrals") {
  const RingPtr r = sl2_ring();
  CHECK(localized_integral({{"p", {lin("h", r)}}}) == parse_rational_function("1/h", r));
  CHECK(localized_integral({{"p", {lin("h", r), lin("a1 + h", r)}}}) == closed_form_a(1));
  CHECK(localized_integral({{"0", {lin("a1", r)}}, {"inf", {lin("-a1", r)}}}).is_zero());
  CHECK_THROWS_AS(localized_integral({}), UsageError);
  CHECK_THROWS_AS(localized_integral({{"p", {Polynomial(r)}}}), UsageError);
  CHECK_THROWS_AS(localized_integral({{"p", {lin("a1*h", r)}}}), UsageError);
  CHECK_THROWS_AS(localized_integral({{"p", {lin("h + 1", r)}}}), UsageError);
}

TEST_CASE("sl2 quasi-map fixed point") {
  const RingPtr r = sl2_ring();
  auto p = sl2_quasimap_fixed_point(1);
  CHECK(p.tangent_weights == std::vector<Polynomial>{lin("h", r), lin("a1 + h", r)});
  p = sl2_quasimap_fixed_point(2);
  CHECK(p.tangent_weights == std::vector<Polynomial>{lin("h", r), lin("2*h", r), lin("a1 + h", r), lin("a1 + 2*h", r)});
  CHECK_THROWS_AS(sl2_quasimap_fixed_point(0), UsageError);
  for (int d = 1; d <= 12; ++d) {
    const auto q = sl2_quasimap_fixed_point(d);
    CHECK(q.tangent_weights.size() == static_cast<std::size_t>(2 * d));
    const RationalFunction value = localized_integral({q});
    CHECK(value == closed_form_a(d));
    CHECK(homogeneous_degree(value) == -2 * d);
  }
}

TEST_CASE("homogeneity") {
  const RingPtr r = make_ring({"a1", "a2", "h"});
  const std::vector<FixedPointDatum> pts{{"x", {lin("a1", r), lin("a2 - a1", r), lin("h", r)}},
                                         {"y", {lin("-a1", r), lin("a2", r), lin("h + a1", r)}}};
  CHECK(homogeneous_degree(localized_integral(pts)) == -3);
}

TEST_CASE("fixed points from JSON") {
  auto pts = fixed_points_from_json(R"({"label": "q1", "weights": ["h", "a1 + h"]})");
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].label == "q1");
  CHECK(localized_integral(pts) == closed_form_a(1));
  pts = fixed_points_from_json(
      R"([{"label": "0", "weights": ["x"], "variables": ["x"]}, {"label": "inf", "weights": ["-x"], "variables": ["x"]}])");
  CHECK(localized_integral(pts).is_zero());
  CHECK_THROWS_AS(fixed_points_from_json(R"({"weights": ["0"]})"), UsageError);
  CHECK_THROWS_AS(fixed_points_from_json(R"({"weights": ["q"]})"), UsageError);
  CHECK_THROWS_AS(fixed_points_from_json(R"({"weights": ["1/h"]})"), UsageError);
  CHECK_THROWS_AS(fixed_points_from_json(R"({"label": 3)"), UsageError);
}
