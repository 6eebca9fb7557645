#include "zastava/polynomial.hpp"

#include <utility>

namespace zastava {

namespace {

BigInt integer_content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial with_positive_lead(IntPolynomial p) {
  if (!p.is_zero() && sgn(p.leading_coeff()) < 0) return -p;
  return p;
}

IntPolynomial one_like(const IntPolynomial& p) { return IntPolynomial::constant(p.ring(), BigInt(1)); }

using UPoly = std::vector<IntPolynomial>;

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

IntPolynomial content_of(const UPoly& u, const RingPtr& ring) {
  IntPolynomial g(ring);
  for (const auto& c : u) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? with_positive_lead(c) : gcd(g, c);
    if (g.is_constant()) {
      // integer content is irrelevant for primitive inputs, but keep it honest
      if (g.constant_value() == 1) break;
    }
  }
  return g;
}

void divide_all(UPoly& u, const IntPolynomial& d) {
  if (d.is_constant() && d.constant_value() == 1) return;
  for (auto& c : u) c = exact_quotient(c, d);
}

/// lc(B)^(degA-degB+1) * A mod B, coefficients in Z[other variables].
UPoly pseudo_remainder(const UPoly& a, const UPoly& b) {
  UPoly r = a;
  const std::size_t db = b.size() - 1;
  const IntPolynomial& lb = b.back();
  int e = static_cast<int>(a.size()) - static_cast<int>(db);
  while (!r.empty() && r.size() - 1 >= db) {
    const std::size_t shift = r.size() - 1 - db;
    IntPolynomial lr = r.back();
    for (auto& c : r) c = c * lb;
    for (std::size_t k = 0; k <= db; ++k) r[k + shift] -= lr * b[k];
    trim(r);
    --e;
  }
  if (e > 0 && !r.empty()) {
    IntPolynomial f = lb.pow(static_cast<unsigned>(e));
    for (auto& c : r) c = c * f;
  }
  return r;
}

/// gcd of two polynomials, primitive with respect to the main variable, via subresultant PRS.
UPoly subresultant_gcd(UPoly a, UPoly b, const RingPtr& ring) {
  if (a.size() < b.size()) std::swap(a, b);
  const IntPolynomial one = IntPolynomial::constant(ring, BigInt(1));
  if (b.size() == 1) return {one};
  IntPolynomial g = one;
  IntPolynomial h = one;
  for (;;) {
    const unsigned delta = static_cast<unsigned>(a.size() - b.size());
    UPoly r = pseudo_remainder(a, b);
    if (r.empty()) break;
    if (r.size() == 1) return {one};
    a = std::move(b);
    IntPolynomial divisor = g * h.pow(delta);
    divide_all(r, divisor);
    b = std::move(r);
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact_quotient(g.pow(delta), h.pow(delta - 1));
    }
  }
  IntPolynomial c = content_of(b, ring);
  divide_all(b, c);
  return b;
}

IntPolynomial gcd_primitive(const IntPolynomial& a, const IntPolynomial& b);

IntPolynomial monomial_gcd(const IntPolynomial& mono, const IntPolynomial& other) {
  Monomial m = mono.leading_monomial();
  for (const auto& [mo, c] : other.terms()) m = m.gcd(mo);
  return IntPolynomial::monomial(mono.ring(), m, BigInt(1));
}

IntPolynomial gcd_primitive(const IntPolynomial& a, const IntPolynomial& b) {
  const RingPtr& ring = a.ring();
  if (a.is_constant() || b.is_constant()) return one_like(a);
  if (a == b) return a;
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);

  const std::size_t n = ring->size();
  int main_var = -1;
  unsigned best = 0;
  for (std::size_t v = 0; v < n; ++v) {
    unsigned da = a.degree_in(v);
    unsigned db = b.degree_in(v);
    if ((da == 0) != (db == 0)) {
      // The gcd cannot involve v: reduce the side that has it to its content in v.
      const IntPolynomial& with = da ? a : b;
      const IntPolynomial& without = da ? b : a;
      IntPolynomial c = content_of(split_by_variable(with, v), ring);
      auto [k, cp] = primitive_split(c);
      return gcd_primitive(cp, without);
    }
    if (da && (main_var < 0 || std::max(da, db) < best)) {
      main_var = static_cast<int>(v);
      best = std::max(da, db);
    }
  }
  const auto v = static_cast<std::size_t>(main_var);
  UPoly ua = split_by_variable(a, v);
  UPoly ub = split_by_variable(b, v);
  IntPolynomial ca = content_of(ua, ring);
  IntPolynomial cb = content_of(ub, ring);
  divide_all(ua, ca);
  divide_all(ub, cb);
  IntPolynomial c = gcd(ca, cb);
  UPoly g = subresultant_gcd(std::move(ua), std::move(ub), ring);
  IntPolynomial result = join_by_variable(g, v, ring) * c;
  auto [k, prim] = primitive_split(result);
  return prim;
}

}  // namespace

std::pair<BigInt, IntPolynomial> primitive_split(const IntPolynomial& p) {
  if (p.is_zero()) return {BigInt(0), p};
  BigInt c = integer_content(p);
  if (sgn(p.leading_coeff()) < 0) c = -c;
  if (c == 1) return {c, p};
  std::vector<IntPolynomial::Term> terms;
  terms.reserve(p.size());
  for (const auto& [m, k] : p.terms()) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), k.get_mpz_t(), c.get_mpz_t());
    terms.emplace_back(m, std::move(q));
  }
  return {c, IntPolynomial::from_sorted_terms(p.ring(), std::move(terms))};
}

PrimitiveSplit primitive_split(const Polynomial& p) {
  if (p.is_zero()) return {BigRational(0), IntPolynomial(p.ring())};
  BigInt den_lcm = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<IntPolynomial::Term> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    BigInt k = den_lcm / c.get_den();
    k *= c.get_num();
    terms.emplace_back(m, std::move(k));
  }
  auto [content, prim] = primitive_split(IntPolynomial::from_sorted_terms(p.ring(), std::move(terms)));
  BigRational scale(content, den_lcm);
  scale.canonicalize();
  return {scale, std::move(prim)};
}

Polynomial to_rational(const IntPolynomial& p) { return to_rational(p, BigRational(1)); }

Polynomial to_rational(const IntPolynomial& p, const BigRational& scale) {
  if (sgn(scale) == 0) return Polynomial(p.ring());
  std::vector<Polynomial::Term> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) terms.emplace_back(m, BigRational(c) * scale);
  return Polynomial::from_sorted_terms(p.ring(), std::move(terms));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero()) return with_positive_lead(b);
  if (b.is_zero()) return with_positive_lead(a);
  auto [ca, pa] = primitive_split(a);
  auto [cb, pb] = primitive_split(b);
  BigInt c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPolynomial g = gcd_primitive(pa, pb);
  return c == 1 ? g : g.scaled(c);
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() && b.is_zero()) return Polynomial(a.ring());
  if (a.is_zero()) return to_rational(primitive_split(b).primitive);
  if (b.is_zero()) return to_rational(primitive_split(a).primitive);
  return to_rational(gcd_primitive(primitive_split(a).primitive, primitive_split(b).primitive));
}

namespace {
template <class C>
BigRational evaluate_impl(const BasicPolynomial<C>& p, std::span<const BigRational> point) {
  if (point.size() != p.ring()->size()) throw UsageError("evaluation point has the wrong dimension");
  std::vector<std::vector<BigRational>> powers(point.size());
  BigRational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    BigRational t = c;
    for (std::size_t i = 0; i < point.size(); ++i) {
      const unsigned e = m[i];
      if (!e) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(BigRational(1));
      while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
      t *= pw[e];
    }
    sum += t;
  }
  return sum;
}
}  // namespace

BigRational evaluate(const Polynomial& p, std::span<const BigRational> point) { return evaluate_impl(p, point); }
BigRational evaluate(const IntPolynomial& p, std::span<const BigRational> point) { return evaluate_impl(p, point); }

std::vector<IntPolynomial> split_by_variable(const IntPolynomial& p, std::size_t var) {
  std::vector<std::vector<IntPolynomial::Term>> buckets(p.degree_in(var) + 1);
  for (const auto& [m, c] : p.terms()) {
    Monomial r = m;
    const unsigned e = r.exp[var];
    r.exp[var] = 0;
    r.degree -= e;
    buckets[e].emplace_back(r, c);
  }
  std::vector<IntPolynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(IntPolynomial::from_terms(p.ring(), std::move(b)));
  return out;
}

IntPolynomial join_by_variable(const std::vector<IntPolynomial>& coeffs, std::size_t var, const RingPtr& ring) {
  std::vector<IntPolynomial::Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Monomial shift = Monomial::variable(var, static_cast<unsigned>(k));
    for (const auto& [m, c] : coeffs[k].terms()) terms.emplace_back(m * shift, c);
  }
  return IntPolynomial::from_terms(ring, std::move(terms));
}

Polynomial change_ring(const Polynomial& p, const RingPtr& target) {
  if (same_ring(p.ring(), target)) return Polynomial::from_sorted_terms(target, {p.terms().begin(), p.terms().end()});
  const Ring& src = *p.ring();
  std::vector<int> map(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) map[i] = target->index_of(src.name(i));
  std::vector<Polynomial::Term> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    Monomial r;
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (!m[i]) continue;
      if (map[i] < 0) throw UsageError("variable '" + src.name(i) + "' is not in the target ring");
      r.exp[static_cast<std::size_t>(map[i])] = m[i];
    }
    r.degree = m.degree;
    terms.emplace_back(r, c);
  }
  return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace zastava
