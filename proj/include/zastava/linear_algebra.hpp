#pragma once

#include <cstddef>
#include <vector>

#include "zastava/rational_function.hpp"

namespace zastava {

/// Dense row-major matrix of rational functions over one ring.
class Matrix {
 public:
  Matrix(RingPtr ring, std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const RingPtr& ring() const noexcept { return ring_; }

  RationalFunction& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const RationalFunction& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  static Matrix identity(RingPtr ring, std::size_t n);
  std::vector<RationalFunction> multiply(const std::vector<RationalFunction>& x) const;

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RationalFunction> data_;
};

/// Solution of an integral system in fraction-free form: x[pivots[k]] = numerators[k] / denominator,
/// every other unknown is 0.
struct FractionFreeSolution {
  std::vector<std::size_t> pivots;
  std::vector<IntPolynomial> numerators;
  IntPolynomial denominator;
};

/// Fraction-free (Bareiss) elimination of the augmented system [m | b] over Z[x].
/// Free unknowns are set to 0; the result is checked by substitution into every row.
/// Throws SolveError carrying the offending row when the system is inconsistent.
FractionFreeSolution solve_fraction_free(const std::vector<std::vector<IntPolynomial>>& m,
                                         const std::vector<IntPolynomial>& b);

/// Exact solution of m x = b over the fraction field. Rows are cleared of denominators and
/// handed to solve_fraction_free, so free unknowns are 0 and the result is verified.
std::vector<RationalFunction> solve_consistent(const Matrix& m, const std::vector<RationalFunction>& b);

/// Rank of a rational matrix with the chosen pivot columns (Gaussian elimination over Q).
struct RationalRank {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};
RationalRank rational_rank(std::vector<std::vector<BigRational>> m);

}  // namespace zastava
