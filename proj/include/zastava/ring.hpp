#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace zastava {

using BigInt = mpz_class;
/// Arbitrary-precision rational; GMP keeps it reduced with a positive denominator.
using BigRational = mpq_class;

/// Upper bound on the number of variables of a polynomial ring.
inline constexpr std::size_t kMaxVars = 8;

/// Ordered list of variable names. Variable 0 is the most significant in the
/// lexicographic tie-break of the graded-lex order.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Index of a variable, or -1 when absent.
  int index_of(const std::string& name) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);
bool same_ring(const RingPtr& a, const RingPtr& b);
/// Throws UsageError unless both rings carry the same variable list.
void require_same_ring(const RingPtr& a, const RingPtr& b);

/// Exponent vector with its total degree cached.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t degree = 0;

  static Monomial unit() { return {}; }
  static Monomial variable(std::size_t i, unsigned power = 1);

  std::uint16_t operator[](std::size_t i) const { return exp[i]; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// o / *this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree == b.degree && a.exp == b.exp;
  }
};

/// Graded-lexicographic comparison: -1, 0, +1.
inline int grlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
  }
  return 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto e : m.exp) {
      h ^= e;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace zastava
