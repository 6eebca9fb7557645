#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "zastava/ring.hpp"

namespace zastava {

/// Integer vector over simple-root indices: the coefficients of a sum of simple roots.
class Content {
 public:
  Content() = default;
  explicit Content(std::size_t rank) : c_(rank, 0) {}
  explicit Content(std::vector<int> coeffs) : c_(std::move(coeffs)) {}
  static Content simple(std::size_t rank, std::size_t i) {
    Content c(rank);
    c.c_.at(i) = 1;
    return c;
  }

  std::size_t size() const noexcept { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  const std::vector<int>& coeffs() const noexcept { return c_; }

  bool is_zero() const;
  /// All coefficients non-negative.
  bool is_positive() const;
  /// Componentwise x <= *this.
  bool dominates(const Content& x) const;

  Content operator+(const Content& o) const;
  Content operator-(const Content& o) const;
  Content operator*(int k) const;

  friend bool operator==(const Content&, const Content&) = default;
  friend auto operator<=>(const Content&, const Content&) = default;

  std::string to_string() const;

 private:
  std::vector<int> c_;
};

/// Sum of coefficients; equals the pairing with the half-sum of positive coroots.
int height(const Content& c);

/// Orders contents by height, then lexicographically.
struct HeightOrder {
  bool operator()(const Content& a, const Content& b) const {
    const int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  }
};

/// All positive contents of the given rank with height at most `cap`, in HeightOrder.
std::vector<Content> contents_up_to(std::size_t rank, int cap);

enum class AlgebraKind { finite, affine };

/// Symmetrizable Cartan matrix in the convention A_ij = <alpha_i^vee, alpha_j>.
/// Affine data carry their 0-node as the last index.
struct CartanDatum {
  std::string label;
  AlgebraKind kind = AlgebraKind::finite;
  std::vector<std::vector<int>> matrix;
  /// d_i with d_i A_ij = d_j A_ji, scaled so the largest finite-node value is 1.
  std::vector<BigRational> symmetrizers;

  std::size_t rank() const noexcept { return matrix.size(); }
  bool affine() const noexcept { return kind == AlgebraKind::affine; }
  /// Number of simple roots of the underlying finite algebra.
  std::size_t finite_rank() const noexcept { return affine() ? rank() - 1 : rank(); }
};

/// Validates a matrix and computes its symmetrizers. Throws UsageError on invalid data.
CartanDatum make_cartan(std::string label, std::vector<std::vector<int>> matrix, AlgebraKind kind);

/// Catalog lookup: A1..A4, B2, B3, C2, C3, D4, G2, A1~, A2~, each optionally wrapped as dual(...).
CartanDatum build_cartan(const std::string& type_name);
std::vector<std::string> catalog_names();

/// Langlands dual: transposed Cartan matrix.
CartanDatum dualize(const CartanDatum& c);

/// Normalized invariant form B_ij = (alpha_i, alpha_j); long finite roots have squared length 2.
struct FormMatrix {
  std::vector<std::vector<BigRational>> entries;
  BigRational operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }
};
FormMatrix form_matrix(const CartanDatum& c);
BigRational form_pairing(const FormMatrix& b, const Content& x, const Content& y);

struct PositiveRoot {
  Content root;
  int multiplicity = 1;
  bool imaginary = false;
};

/// Positive roots up to the height cap (0 means all; finite kind only).
std::vector<PositiveRoot> positive_roots(const CartanDatum& c, int height_cap);

/// Marks: primitive positive integer kernel vector of A (affine only).
Content null_vector(const CartanDatum& c);
/// Comarks: primitive positive integer kernel vector of A^T (affine only).
Content conull_vector(const CartanDatum& c);

/// Number of ways to write theta as a sum of positive roots, imaginary roots counted with multiplicity.
BigInt kostant_partition(const CartanDatum& c, const Content& theta);

}  // namespace zastava
