#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zastava/errors.hpp"
#include "zastava/ring.hpp"

namespace zastava {

namespace detail {

inline bool coeff_divides(const BigInt& d, const BigInt& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}
inline bool coeff_divides(const BigRational& d, const BigRational&) { return sgn(d) != 0; }

inline BigInt coeff_quotient(const BigInt& n, const BigInt& d) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}
inline BigRational coeff_quotient(const BigRational& n, const BigRational& d) { return n / d; }

inline void canonicalize(BigInt&) {}
inline void canonicalize(BigRational& q) { q.canonicalize(); }

}  // namespace detail

/// Sparse multivariate polynomial with coefficients in C (BigInt or BigRational).
/// Terms are kept sorted by decreasing graded-lex monomial with no zero coefficients.
template <class C>
class BasicPolynomial {
 public:
  using Coeff = C;
  using Term = std::pair<Monomial, C>;

  BasicPolynomial() = default;
  explicit BasicPolynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static BasicPolynomial constant(RingPtr ring, C c) {
    BasicPolynomial p(std::move(ring));
    if (sgn(c) != 0) p.terms_.emplace_back(Monomial::unit(), std::move(c));
    return p;
  }
  static BasicPolynomial variable(RingPtr ring, std::size_t i) {
    if (i >= ring->size()) throw UsageError("variable index out of range");
    BasicPolynomial p(std::move(ring));
    p.terms_.emplace_back(Monomial::variable(i), C(1));
    return p;
  }
  static BasicPolynomial monomial(RingPtr ring, const Monomial& m, C c) {
    BasicPolynomial p(std::move(ring));
    if (sgn(c) != 0) p.terms_.emplace_back(m, std::move(c));
    return p;
  }
  /// Builds a canonical polynomial from arbitrary (possibly repeated or zero) terms.
  static BasicPolynomial from_terms(RingPtr ring, std::vector<Term> terms) {
    BasicPolynomial p(std::move(ring));
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grlex_compare(a.first, b.first) > 0; });
    for (auto& t : terms) {
      detail::canonicalize(t.second);
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
      } else {
        if (!p.terms_.empty() && sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
    return p;
  }
  /// Trusted constructor: terms must already be canonical.
  static BasicPolynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
    BasicPolynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree == 0);
  }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  C constant_value() const { return terms_.empty() ? C(0) : (is_constant() ? terms_[0].second : C(0)); }
  /// Coefficient of the constant monomial.
  C constant_term() const {
    if (!terms_.empty() && terms_.back().first.degree == 0) return terms_.back().second;
    return C(0);
  }
  const Term& leading_term() const { return terms_.front(); }
  const C& leading_coeff() const { return terms_.front().second; }
  const Monomial& leading_monomial() const { return terms_.front().first; }

  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max<unsigned>(d, t.first[var]);
    return d;
  }
  /// Total degree; -1 for the zero polynomial.
  int total_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().first.degree); }

  BasicPolynomial operator-() const {
    BasicPolynomial r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend BasicPolynomial operator+(const BasicPolynomial& a, const BasicPolynomial& b) {
    return combine(a, b, false);
  }
  friend BasicPolynomial operator-(const BasicPolynomial& a, const BasicPolynomial& b) {
    return combine(a, b, true);
  }
  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    if (a.is_zero() || b.is_zero()) return BasicPolynomial(a.ring_);
    if (a.terms_.size() == 1) return b.times_term(a.terms_[0].first, a.terms_[0].second);
    if (b.terms_.size() == 1) return a.times_term(b.terms_[0].first, b.terms_[0].second);
    std::unordered_map<Monomial, C, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& kv : acc) {
      if (sgn(kv.second) != 0) out.emplace_back(kv.first, std::move(kv.second));
    }
    std::sort(out.begin(), out.end(),
              [](const Term& x, const Term& y) { return grlex_compare(x.first, y.first) > 0; });
    return from_sorted_terms(a.ring_, std::move(out));
  }
  BasicPolynomial& operator+=(const BasicPolynomial& o) { return *this = *this + o; }
  BasicPolynomial& operator-=(const BasicPolynomial& o) { return *this = *this - o; }
  BasicPolynomial& operator*=(const BasicPolynomial& o) { return *this = *this * o; }

  BasicPolynomial scaled(const C& c) const {
    if (sgn(c) == 0) return BasicPolynomial(ring_);
    BasicPolynomial r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }
  BasicPolynomial times_term(const Monomial& m, const C& c) const {
    if (sgn(c) == 0) return BasicPolynomial(ring_);
    BasicPolynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(t.first * m, t.second * c);
    return r;
  }

  BasicPolynomial pow(unsigned n) const {
    BasicPolynomial result = constant(ring_, C(1));
    BasicPolynomial base = *this;
    while (n) {
      if (n & 1U) result = result * base;
      n >>= 1U;
      if (n) base = base * base;
    }
    return result;
  }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].first == b.terms_[i].first) || a.terms_[i].second != b.terms_[i].second) return false;
    }
    return true;
  }
  friend bool operator!=(const BasicPolynomial& a, const BasicPolynomial& b) { return !(a == b); }

  /// Exact quotient a / b, or nullopt when b does not divide a.
  friend std::optional<BasicPolynomial> divide_exact(const BasicPolynomial& a, const BasicPolynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
    if (a.is_zero()) return BasicPolynomial(a.ring_);
    if (b.terms_.size() == 1) {
      const auto& [mb, cb] = b.terms_[0];
      BasicPolynomial q(a.ring_);
      q.terms_.reserve(a.terms_.size());
      for (const auto& [m, c] : a.terms_) {
        if (!mb.divides(m) || !detail::coeff_divides(cb, c)) return std::nullopt;
        q.terms_.emplace_back(mb.quotient_of(m), detail::coeff_quotient(c, cb));
      }
      return q;
    }
    const auto& [lm, lc] = b.terms_[0];
    std::vector<Term> quotient;
    BasicPolynomial rem = a;
    while (!rem.is_zero()) {
      const auto& [rm, rc] = rem.terms_[0];
      if (!lm.divides(rm) || !detail::coeff_divides(lc, rc)) return std::nullopt;
      Monomial qm = lm.quotient_of(rm);
      C qc = detail::coeff_quotient(rc, lc);
      rem = rem - b.times_term(qm, qc);
      quotient.emplace_back(qm, std::move(qc));
    }
    return from_sorted_terms(a.ring_, std::move(quotient));
  }

  /// Exact quotient; throws InternalError when the division is not exact.
  friend BasicPolynomial exact_quotient(const BasicPolynomial& a, const BasicPolynomial& b) {
    auto q = divide_exact(a, b);
    if (!q) throw InternalError("expected exact polynomial division");
    return std::move(*q);
  }

 private:
  static BasicPolynomial combine(const BasicPolynomial& a, const BasicPolynomial& b, bool subtract) {
    require_same_ring(a.ring_, b.ring_);
    BasicPolynomial r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int c = grlex_compare(a.terms_[i].first, b.terms_[j].first);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        r.terms_.emplace_back(b.terms_[j].first, subtract ? C(-b.terms_[j].second) : b.terms_[j].second);
        ++j;
      } else {
        C s = subtract ? C(a.terms_[i].second - b.terms_[j].second) : C(a.terms_[i].second + b.terms_[j].second);
        if (sgn(s) != 0) r.terms_.emplace_back(a.terms_[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) {
      r.terms_.emplace_back(b.terms_[j].first, subtract ? C(-b.terms_[j].second) : b.terms_[j].second);
    }
    return r;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

using Polynomial = BasicPolynomial<BigRational>;
using IntPolynomial = BasicPolynomial<BigInt>;

/// p = scale * primitive with primitive integral, content 1 and positive leading coefficient.
/// The zero polynomial maps to (0, 0).
struct PrimitiveSplit {
  BigRational scale;
  IntPolynomial primitive;
};
PrimitiveSplit primitive_split(const Polynomial& p);
/// Same for an integer polynomial; the scale is an integer (the signed content).
std::pair<BigInt, IntPolynomial> primitive_split(const IntPolynomial& p);

Polynomial to_rational(const IntPolynomial& p);
Polynomial to_rational(const IntPolynomial& p, const BigRational& scale);

/// Greatest common divisor in Z[x], with positive leading coefficient (integer content included).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
/// Greatest common divisor over Q: primitive integral with positive leading coefficient; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

BigRational evaluate(const Polynomial& p, std::span<const BigRational> point);
BigRational evaluate(const IntPolynomial& p, std::span<const BigRational> point);

/// Treats p as univariate in `var`; entry k holds the coefficient of var^k.
std::vector<IntPolynomial> split_by_variable(const IntPolynomial& p, std::size_t var);
IntPolynomial join_by_variable(const std::vector<IntPolynomial>& coeffs, std::size_t var, const RingPtr& ring);

/// Re-expresses p in a ring whose variable list contains all variables p uses.
Polynomial change_ring(const Polynomial& p, const RingPtr& target);

}  // namespace zastava
