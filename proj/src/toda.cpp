#include "zastava/toda.hpp"

#include "json.hpp"

#include "zastava/errors.hpp"

namespace zastava {

TodaOperator::TodaOperator(const CartanDatum& working, const RingPtr& ring, PotentialWeights weights)
    : working_(working),
      ring_(ring),
      form_(form_matrix(working)),
      a_(a_pairings(working, ring)),
      eps_over_mark_(ring),
      h_(RationalFunction::variable(ring, "h")) {
  if (working.affine()) {
    const Content marks = null_vector(working);
    eps_over_mark_ = RationalFunction::variable(ring, "eps").scaled(BigRational(1, marks[working.rank() - 1]));
  }
  for (std::size_t i = 0; i < working.rank(); ++i) {
    potential_.push_back(RationalFunction::constant(ring, weights == PotentialWeights::uniform ? 2 : form_(i, i)));
  }
}

RationalFunction TodaOperator::eigen_term(const Content& theta) const {
  if (theta.size() != working_.rank()) throw UsageError("content has the wrong length");
  RationalFunction linear(ring_);
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (theta[i]) linear += a_[i].scaled(theta[i]);
  }
  RationalFunction out = h_.scaled(2) * linear + (h_ * h_).scaled(form_pairing(form_, theta, theta));
  if (working_.affine()) out += eps_over_mark_.scaled(theta[theta.size() - 1]);
  return out;
}

namespace {

std::vector<TodaResidual> residuals(const SeriesTable& z, AlgebraKind kind, PotentialWeights weights) {
  const CartanDatum g = build_cartan(z.algebra);
  if (g.kind != kind) throw UsageError("table kind does not match the Toda operator");
  const CartanDatum working = dualize(g);
  if (!same_ring(z.ring, series_ring(working))) throw UsageError("table ring does not match the algebra");
  const TodaOperator op(working, z.ring, weights);
  std::vector<TodaResidual> out;
  for (const auto& [theta, value] : z.entries) {
    RationalFunction r = op.eigen_term(theta) * value;
    for (std::size_t i = 0; i < theta.size(); ++i) {
      if (theta[i] == 0) continue;
      const Content below = theta - Content::simple(theta.size(), i);
      if (!z.entries.count(below)) throw UsageError("table is not downward closed at " + theta.to_string());
      r -= op.potential(i) * z.at(below);
    }
    out.push_back({theta, r});
  }
  return out;
}

}  // namespace

std::vector<TodaResidual> check_finite_toda(const SeriesTable& z, PotentialWeights weights) {
  return residuals(z, AlgebraKind::finite, weights);
}

std::vector<TodaResidual> check_affine_toda(const SeriesTable& z, PotentialWeights weights) {
  return residuals(z, AlgebraKind::affine, weights);
}

std::string residual_report_json(const std::vector<TodaResidual>& rs) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& r : rs) {
    nlohmann::ordered_json e;
    e["content"] = r.theta.coeffs();
    e["residual"] = r.residual.is_zero() ? std::string("0") : r.residual.to_string();
    e["ok"] = r.ok();
    j.push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

}  // namespace zastava
