#pragma once

#include <map>
#include <string>

#include "zastava/lie.hpp"
#include "zastava/verma.hpp"

namespace zastava {

/// Coefficients Z_theta of a partition-function series, keyed by content over the simple roots
/// of the dual algebra.
struct SeriesTable {
  /// Type name of the algebra whose quasi-map spaces are counted (before dualization).
  std::string algebra;
  AlgebraKind kind = AlgebraKind::finite;
  int cap = 0;
  RingPtr ring;
  std::map<Content, RationalFunction, HeightOrder> entries;
  /// Symbolic prefactor; empty for Z tables, "q^(a/hbar)" for J tables.
  std::string prefactor;

  const RationalFunction& at(const Content& theta) const;
  /// Entry or zero when theta is outside the table.
  RationalFunction value_or_zero(const Content& theta) const;
  friend bool operator==(const SeriesTable& x, const SeriesTable& y) {
    return x.algebra == y.algebra && x.kind == y.kind && x.cap == y.cap && same_ring(x.ring, y.ring) &&
           x.entries == y.entries && x.prefactor == y.prefactor;
  }
};

/// Weight of e^{alpha_i} in the quadratic Toda operator.
/// root_lengths: (alpha_i, alpha_i), matching Chevalley-normalized Whittaker vectors.
/// uniform: 2 for every node.
enum class PotentialWeights { root_lengths, uniform };

/// Variables a1..ar over the finite nodes, eps for affine data, then h.
RingPtr series_ring(const CartanDatum& working);

/// lambda(h_i) = a_i/h + 1 on finite nodes. On the affine node the level pairs to eps/(2h):
/// lambda(h_0) = (eps/(2h) - sum_i comark_i a_i)/(comark_0 h) + 1.
LowestWeight standard_weight(const CartanDatum& working, const RingPtr& ring);

/// (a, alpha_i) for every node: d_i a_i on finite nodes, and on the affine node the value
/// forced by (a, delta) = 0.
std::vector<RationalFunction> a_pairings(const CartanDatum& working, const RingPtr& ring);

SeriesTable z_series_whittaker(const CartanDatum& g, int cap, Limits limits = {});
SeriesTable z_series_affine_whittaker(const CartanDatum& g, int cap, Limits limits = {});
SeriesTable z_series_toda(const CartanDatum& g, int cap, PotentialWeights weights = PotentialWeights::root_lengths);
SeriesTable z_series_affine_toda(const CartanDatum& g, int cap,
                                 PotentialWeights weights = PotentialWeights::root_lengths);

/// Same coefficients tagged with the prefactor q^(a/hbar). Finite tables only.
SeriesTable j_function(const SeriesTable& z);

/// Multiplies Z_theta by prod_i d_i^(-n_i); carries root_lengths solutions to uniform ones.
SeriesTable rescale_to_uniform(const SeriesTable& z);

inline constexpr const char* kJPrefactor = "q^(a/hbar)";

std::string to_json(const SeriesTable& t);
SeriesTable table_from_json(const std::string& text);
/// Columns content,value; affine tables add theta,d. J tables start with a prefactor row.
std::string to_csv(const SeriesTable& t);

}  // namespace zastava
