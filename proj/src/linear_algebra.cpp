#include "zastava/linear_algebra.hpp"

#include <numeric>
#include <utility>

namespace zastava {

Matrix::Matrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, RationalFunction(ring_)) {}

Matrix Matrix::identity(RingPtr ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RationalFunction::constant(ring, BigRational(1));
  return m;
}

std::vector<RationalFunction> Matrix::multiply(const std::vector<RationalFunction>& x) const {
  if (x.size() != cols_) throw UsageError("matrix-vector size mismatch");
  std::vector<RationalFunction> out(rows_, RationalFunction(ring_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero() && !x[c].is_zero()) out[r] += (*this)(r, c) * x[c];
    }
  }
  return out;
}

FractionFreeSolution solve_fraction_free(const std::vector<std::vector<IntPolynomial>>& m,
                                         const std::vector<IntPolynomial>& b) {
  const std::size_t rows = m.size();
  if (b.size() != rows) throw UsageError("right-hand side has the wrong length");
  if (rows == 0) throw UsageError("empty linear system");
  const std::size_t cols = m[0].size();
  const RingPtr ring = b[0].ring();
  for (const auto& row : m) {
    if (row.size() != cols) throw UsageError("ragged matrix");
  }

  // a[i] = [row | rhs]; order[i] is the caller's index of the row now at position i.
  std::vector<std::vector<IntPolynomial>> a(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    a[i] = m[i];
    a[i].push_back(b[i]);
  }
  std::vector<std::size_t> order(rows);
  std::iota(order.begin(), order.end(), 0);

  IntPolynomial previous = IntPolynomial::constant(ring, BigInt(1));
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i][col].is_zero()) continue;
      if (best == rows || a[i][col].size() < a[best][col].size()) best = i;
    }
    if (best == rows) continue;
    std::swap(a[r], a[best]);
    std::swap(order[r], order[best]);
    const IntPolynomial& p = a[r][col];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const IntPolynomial factor = a[i][col];
      for (std::size_t j = col + 1; j <= cols; ++j) {
        IntPolynomial v = p * a[i][j];
        if (!factor.is_zero() && !a[r][j].is_zero()) v -= factor * a[r][j];
        a[i][j] = previous.is_constant() && previous.constant_value() == 1 ? std::move(v)
                                                                          : exact_quotient(v, previous);
      }
      a[i][col] = IntPolynomial(ring);
    }
    previous = p;
    pivots.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!a[i][cols].is_zero()) {
      throw SolveError("inconsistent linear system (row " + std::to_string(order[i]) + ")", order[i]);
    }
  }

  FractionFreeSolution sol;
  sol.pivots = pivots;
  sol.denominator = previous;
  sol.numerators.assign(r, IntPolynomial(ring));
  for (std::size_t k = r; k-- > 0;) {
    IntPolynomial acc = previous * a[k][cols];
    for (std::size_t j = k + 1; j < r; ++j) {
      if (!a[k][pivots[j]].is_zero()) acc -= a[k][pivots[j]] * sol.numerators[j];
    }
    sol.numerators[k] = exact_quotient(acc, a[k][pivots[k]]);
  }

  // Substitute back into the original rows.
  for (std::size_t i = 0; i < rows; ++i) {
    IntPolynomial lhs(ring);
    for (std::size_t k = 0; k < r; ++k) {
      if (!m[i][pivots[k]].is_zero()) lhs += m[i][pivots[k]] * sol.numerators[k];
    }
    if (lhs != b[i] * sol.denominator) {
      throw SolveError("inconsistent linear system (row " + std::to_string(i) + ")", i);
    }
  }
  return sol;
}

std::vector<RationalFunction> solve_consistent(const Matrix& m, const std::vector<RationalFunction>& b) {
  if (b.size() != m.rows()) throw UsageError("right-hand side has the wrong length");
  const RingPtr& ring = m.ring();
  std::vector<std::vector<IntPolynomial>> im(m.rows());
  std::vector<IntPolynomial> ib;
  ib.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<RationalFunction> row;
    row.reserve(m.cols() + 1);
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    row.push_back(b[r]);
    CommonDenominator cd = common_denominator(row, ring);
    BigInt scale = 1;
    for (const auto& p : cd.nums) {
      for (const auto& [mono, c] : p.terms()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    }
    auto to_int = [&](const Polynomial& p) {
      std::vector<IntPolynomial::Term> terms;
      terms.reserve(p.size());
      for (const auto& [mono, c] : p.terms()) terms.emplace_back(mono, BigInt(c.get_num() * (scale / c.get_den())));
      return IntPolynomial::from_sorted_terms(ring, std::move(terms));
    };
    for (std::size_t c = 0; c < m.cols(); ++c) im[r].push_back(to_int(cd.nums[c]));
    ib.push_back(to_int(cd.nums[m.cols()]));
  }
  FractionFreeSolution sol = solve_fraction_free(im, ib);
  std::vector<RationalFunction> x(m.cols(), RationalFunction(ring));
  for (std::size_t k = 0; k < sol.pivots.size(); ++k) {
    x[sol.pivots[k]] = RationalFunction::from_parts(BigRational(1), sol.numerators[k], sol.denominator);
  }
  return x;
}

RationalRank rational_rank(std::vector<std::vector<BigRational>> m) {
  RationalRank out;
  const std::size_t rows = m.size();
  if (rows == 0) return out;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][col]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(m[i][col]) == 0) continue;
      const BigRational f = m[i][col] / m[r][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    out.pivot_columns.push_back(col);
    ++r;
  }
  out.rank = r;
  return out;
}

}  // namespace zastava
