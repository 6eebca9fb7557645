#include "zastava/ring.hpp"

#include <algorithm>

#include "zastava/errors.hpp"

namespace zastava {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars) {
    throw UsageError("polynomial ring supports at most " + std::to_string(kMaxVars) + " variables");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw UsageError("empty variable name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw UsageError("duplicate variable name '" + names_[i] + "'");
    }
  }
}

int Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw UsageError("operands live in different polynomial rings");
}

Monomial Monomial::variable(std::size_t i, unsigned power) {
  Monomial m;
  m.exp.at(i) = static_cast<std::uint16_t>(power);
  m.degree = power;
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(exp[i]) + o.exp[i];
    if (e > 0xFFFF) throw ArithmeticError("exponent overflow");
    r.exp[i] = static_cast<std::uint16_t>(e);
  }
  r.degree = degree + o.degree;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree > o.degree) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp[i] > o.exp[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(o.exp[i] - exp[i]);
  r.degree = o.degree - degree;
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp[i] = std::min(exp[i], o.exp[i]);
    r.degree += r.exp[i];
  }
  return r;
}

}  // namespace zastava
