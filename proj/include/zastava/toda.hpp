#pragma once

#include <string>
#include <vector>

#include "zastava/partition.hpp"

namespace zastava {

/// Quadratic Toda operator unfolded on coefficients:
/// eigen_term(theta) Z_theta = sum_i potential(i) Z_(theta - alpha_i).
class TodaOperator {
 public:
  TodaOperator(const CartanDatum& working, const RingPtr& ring, PotentialWeights weights);

  /// eps n_0/mark_0 + 2h(a, theta) + h^2 (theta, theta); the eps term only for affine data.
  RationalFunction eigen_term(const Content& theta) const;
  const RationalFunction& potential(std::size_t i) const { return potential_[i]; }
  const CartanDatum& working() const noexcept { return working_; }

 private:
  CartanDatum working_;
  RingPtr ring_;
  FormMatrix form_;
  std::vector<RationalFunction> a_;
  RationalFunction eps_over_mark_;
  RationalFunction h_;
  std::vector<RationalFunction> potential_;
};

struct TodaResidual {
  Content theta;
  RationalFunction residual;
  bool ok() const { return residual.is_zero(); }
};

std::vector<TodaResidual> check_finite_toda(const SeriesTable& z,
                                            PotentialWeights weights = PotentialWeights::root_lengths);
std::vector<TodaResidual> check_affine_toda(const SeriesTable& z,
                                            PotentialWeights weights = PotentialWeights::root_lengths);

/// [{"content": [...], "residual": "...", "ok": bool}, ...]
std::string residual_report_json(const std::vector<TodaResidual>& residuals);

}  // namespace zastava
