#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "zastava/polynomial.hpp"

namespace zastava {

/// Element of Q(x_1, ..., x_n) in canonical form.
///
/// Stored as scale * num / den where num and den are primitive integral
/// polynomials with positive graded-lex leading coefficient and gcd(num, den) = 1.
/// Zero is scale 0 with num = den = 1. Two rational functions are equal iff
/// their stored components are equal.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(RingPtr ring);
  RationalFunction(const Polynomial& p);  // NOLINT(google-explicit-constructor)
  RationalFunction(const Polynomial& num, const Polynomial& den);

  static RationalFunction constant(RingPtr ring, const BigRational& c);
  static RationalFunction variable(RingPtr ring, std::size_t i);
  static RationalFunction variable(RingPtr ring, const std::string& name);
  /// Assembles scale * num / den from integer parts, cancelling common factors.
  static RationalFunction from_parts(const BigRational& scale, const IntPolynomial& num, const IntPolynomial& den);

  const RingPtr& ring() const noexcept { return num_.ring(); }
  bool is_zero() const noexcept { return sgn(scale_) == 0; }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  bool is_constant() const noexcept { return is_zero() || (num_.is_constant() && den_.is_constant()); }

  /// Numerator including the rational scale.
  Polynomial numerator() const;
  /// Primitive integral denominator with positive leading coefficient.
  Polynomial denominator() const;
  const BigRational& scale() const noexcept { return scale_; }
  const IntPolynomial& primitive_numerator() const noexcept { return num_; }
  const IntPolynomial& primitive_denominator() const noexcept { return den_; }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction scaled(const BigRational& c) const;
  RationalFunction inverse() const;
  RationalFunction pow(int n) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.scale_ == b.scale_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  /// Canonical text "(numerator) / (denominator)", terms in decreasing graded-lex order.
  std::string to_string() const;

 private:
  BigRational scale_ = 0;
  IntPolynomial num_;
  IntPolynomial den_;
};

/// Exact value at a point given per ring variable. Throws PoleError when the denominator vanishes.
BigRational evaluate(const RationalFunction& f, std::span<const BigRational> point);
BigRational evaluate(const RationalFunction& f, const std::map<std::string, BigRational>& point);

/// Substitutes values[i] (rational functions in `target`) for variable i of f's ring.
RationalFunction substitute(const RationalFunction& f, std::span<const RationalFunction> values,
                            const RingPtr& target);

/// Total-degree homogeneity test; returns the degree (num minus den) when homogeneous.
std::optional<int> homogeneous_degree(const RationalFunction& f);

/// Renders a polynomial as "3*a*h - h^2" ("0" for zero).
std::string to_string(const Polynomial& p);
std::string to_string(const IntPolynomial& p);

/// Parses expressions built from rationals, variables, + - * / ^ and parentheses.
/// Every identifier must be a variable of `ring`.
RationalFunction parse_rational_function(const std::string& text, const RingPtr& ring);

/// Common-denominator form: values[i] = nums[i] / den.
struct CommonDenominator {
  std::vector<Polynomial> nums;
  Polynomial den;
};
CommonDenominator common_denominator(std::span<const RationalFunction> values, const RingPtr& ring);

}  // namespace zastava
