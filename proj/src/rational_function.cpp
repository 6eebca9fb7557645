#include "zastava/rational_function.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace zastava {

namespace {

bool is_one(const IntPolynomial& p) { return p.is_constant() && p.constant_value() == 1; }

IntPolynomial one(const RingPtr& ring) { return IntPolynomial::constant(ring, BigInt(1)); }

/// gcd of two primitive polynomials with positive leading coefficient.
IntPolynomial primitive_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (is_one(a) || is_one(b)) return one(a.ring());
  if (a == b) return a;
  return gcd(a, b);
}

IntPolynomial divide_out(const IntPolynomial& p, const IntPolynomial& d) {
  return is_one(d) ? p : exact_quotient(p, d);
}

}  // namespace

RationalFunction::RationalFunction(RingPtr ring) : num_(one(ring)), den_(one(ring)) {}

RationalFunction::RationalFunction(const Polynomial& p) {
  auto [scale, prim] = primitive_split(p);
  if (sgn(scale) == 0) {
    *this = RationalFunction(p.ring());
    return;
  }
  scale_ = scale;
  num_ = std::move(prim);
  den_ = one(p.ring());
}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
  require_same_ring(num.ring(), den.ring());
  if (den.is_zero()) throw ArithmeticError("rational function with zero denominator");
  auto [sn, pn] = primitive_split(num);
  auto [sd, pd] = primitive_split(den);
  *this = from_parts(sn / sd, pn, pd);
}

RationalFunction RationalFunction::constant(RingPtr ring, const BigRational& c) {
  RationalFunction r(std::move(ring));
  r.scale_ = c;
  return r;
}

RationalFunction RationalFunction::variable(RingPtr ring, std::size_t i) {
  return RationalFunction(Polynomial::variable(std::move(ring), i));
}

RationalFunction RationalFunction::variable(RingPtr ring, const std::string& name) {
  int i = ring->index_of(name);
  if (i < 0) throw UsageError("unknown variable '" + name + "'");
  return variable(std::move(ring), static_cast<std::size_t>(i));
}

RationalFunction RationalFunction::from_parts(const BigRational& scale, const IntPolynomial& num,
                                              const IntPolynomial& den) {
  require_same_ring(num.ring(), den.ring());
  if (den.is_zero()) throw ArithmeticError("rational function with zero denominator");
  RationalFunction r(num.ring());
  if (sgn(scale) == 0 || num.is_zero()) return r;
  auto [cn, pn] = primitive_split(num);
  auto [cd, pd] = primitive_split(den);
  IntPolynomial g = primitive_gcd(pn, pd);
  r.scale_ = scale * BigRational(cn) / BigRational(cd);
  r.num_ = divide_out(pn, g);
  r.den_ = divide_out(pd, g);
  return r;
}

Polynomial RationalFunction::numerator() const { return to_rational(num_, scale_); }
Polynomial RationalFunction::denominator() const { return to_rational(den_); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.scale_ = -r.scale_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.num_ == b.num_ && a.den_ == b.den_) {
    RationalFunction r = a;
    r.scale_ += b.scale_;
    if (sgn(r.scale_) == 0) return RationalFunction(a.ring());
    return r;
  }
  const IntPolynomial g = primitive_gcd(a.den_, b.den_);
  const IntPolynomial da = divide_out(a.den_, g);
  const IntPolynomial db = divide_out(b.den_, g);
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.scale_.get_den_mpz_t(), b.scale_.get_den_mpz_t());
  const BigInt ka = a.scale_.get_num() * (l / a.scale_.get_den());
  const BigInt kb = b.scale_.get_num() * (l / b.scale_.get_den());
  IntPolynomial t = (a.num_ * db).scaled(ka) + (b.num_ * da).scaled(kb);
  if (t.is_zero()) return RationalFunction(a.ring());
  auto [c, p] = primitive_split(t);
  const IntPolynomial h = primitive_gcd(p, g);
  RationalFunction r(a.ring());
  r.scale_ = BigRational(c, l);
  r.scale_.canonicalize();
  r.num_ = divide_out(p, h);
  r.den_ = divide_out(g, h) * da * db;
  return r;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return RationalFunction(a.ring());
  const IntPolynomial g1 = primitive_gcd(a.num_, b.den_);
  const IntPolynomial g2 = primitive_gcd(b.num_, a.den_);
  RationalFunction r(a.ring());
  r.scale_ = a.scale_ * b.scale_;
  r.num_ = divide_out(a.num_, g1) * divide_out(b.num_, g2);
  r.den_ = divide_out(a.den_, g2) * divide_out(b.den_, g1);
  return r;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::scaled(const BigRational& c) const {
  if (sgn(c) == 0) return RationalFunction(ring());
  RationalFunction r = *this;
  r.scale_ *= c;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero rational function");
  RationalFunction r = *this;
  r.scale_ = 1 / scale_;
  std::swap(r.num_, r.den_);
  return r;
}

RationalFunction RationalFunction::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RationalFunction r = constant(ring(), BigRational(1));
  if (n == 0) return r;
  if (is_zero()) return *this;
  BigRational s;
  mpq_set_ui(s.get_mpq_t(), 1, 1);
  for (int i = 0; i < n; ++i) s *= scale_;
  r.scale_ = s;
  r.num_ = num_.pow(static_cast<unsigned>(n));
  r.den_ = den_.pow(static_cast<unsigned>(n));
  return r;
}

std::string RationalFunction::to_string() const {
  return "(" + zastava::to_string(numerator()) + ") / (" + zastava::to_string(denominator()) + ")";
}

BigRational evaluate(const RationalFunction& f, std::span<const BigRational> point) {
  if (f.is_zero()) return BigRational(0);
  BigRational d = evaluate(f.primitive_denominator(), point);
  if (sgn(d) == 0) throw PoleError("denominator vanishes at the evaluation point");
  return f.scale() * evaluate(f.primitive_numerator(), point) / d;
}

BigRational evaluate(const RationalFunction& f, const std::map<std::string, BigRational>& point) {
  const Ring& ring = *f.ring();
  std::vector<BigRational> values(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) {
    auto it = point.find(ring.name(i));
    if (it == point.end()) throw UsageError("no value given for variable '" + ring.name(i) + "'");
    values[i] = it->second;
  }
  return evaluate(f, values);
}

namespace {

/// Evaluates an integral polynomial at values[i] = A_i / B_i (A_i carrying the scale)
/// as numerator / prod B_i^{deg_i p}; returns the numerator.
struct SubstitutionPowers {
  std::vector<IntPolynomial> num_base;
  std::vector<BigRational> scale_base;
  std::vector<IntPolynomial> den_base;
  std::vector<std::vector<IntPolynomial>> num_pow, den_pow;
  std::vector<std::vector<BigRational>> scale_pow;

  const IntPolynomial& num(std::size_t i, unsigned e) {
    auto& v = num_pow[i];
    if (v.empty()) v.push_back(one(num_base[i].ring()));
    while (v.size() <= e) v.push_back(v.back() * num_base[i]);
    return v[e];
  }
  const IntPolynomial& den(std::size_t i, unsigned e) {
    auto& v = den_pow[i];
    if (v.empty()) v.push_back(one(den_base[i].ring()));
    while (v.size() <= e) v.push_back(v.back() * den_base[i]);
    return v[e];
  }
  const BigRational& scale(std::size_t i, unsigned e) {
    auto& v = scale_pow[i];
    if (v.empty()) v.emplace_back(1);
    while (v.size() <= e) v.push_back(v.back() * scale_base[i]);
    return v[e];
  }
};

Polynomial substitute_numerator(const IntPolynomial& p, SubstitutionPowers& pw, const RingPtr& target,
                                std::vector<unsigned>& degrees) {
  const std::size_t n = degrees.size();
  for (std::size_t i = 0; i < n; ++i) degrees[i] = p.degree_in(i);
  Polynomial acc(target);
  std::vector<Polynomial::Term> pending;
  for (const auto& [m, c] : p.terms()) {
    IntPolynomial t = IntPolynomial::constant(target, BigInt(1));
    BigRational s = c;
    for (std::size_t i = 0; i < n; ++i) {
      if (!degrees[i]) continue;
      const unsigned e = m[i];
      if (e) {
        t = t * pw.num(i, e);
        s *= pw.scale(i, e);
      }
      if (degrees[i] > e) t = t * pw.den(i, degrees[i] - e);
    }
    acc += to_rational(t, s);
  }
  return acc;
}

}  // namespace

RationalFunction substitute(const RationalFunction& f, std::span<const RationalFunction> values,
                            const RingPtr& target) {
  const std::size_t n = f.ring()->size();
  if (values.size() != n) throw UsageError("substitution needs one value per variable");
  for (const auto& v : values) require_same_ring(v.ring(), target);
  if (f.is_zero()) return RationalFunction(target);
  SubstitutionPowers pw;
  pw.num_pow.resize(n);
  pw.den_pow.resize(n);
  pw.scale_pow.resize(n);
  for (const auto& v : values) {
    pw.num_base.push_back(v.is_zero() ? IntPolynomial(target) : v.primitive_numerator());
    pw.scale_base.push_back(v.scale());
    pw.den_base.push_back(v.primitive_denominator());
  }
  std::vector<unsigned> deg_num(n), deg_den(n);
  Polynomial qn = substitute_numerator(f.primitive_numerator(), pw, target, deg_num);
  Polynomial qd = substitute_numerator(f.primitive_denominator(), pw, target, deg_den);
  if (qd.is_zero()) throw PoleError("denominator vanishes under substitution");
  auto [sn, in] = primitive_split(qn);
  auto [sd, id] = primitive_split(qd);
  if (sgn(sn) == 0) return RationalFunction(target);
  for (std::size_t i = 0; i < n; ++i) {
    if (deg_den[i] > deg_num[i]) in = in * pw.den(i, deg_den[i] - deg_num[i]);
    if (deg_num[i] > deg_den[i]) id = id * pw.den(i, deg_num[i] - deg_den[i]);
  }
  return RationalFunction::from_parts(f.scale() * sn / sd, in, id);
}

std::optional<int> homogeneous_degree(const RationalFunction& f) {
  auto degree_of = [](const IntPolynomial& p) -> std::optional<int> {
    const int d = p.total_degree();
    for (const auto& [m, c] : p.terms()) {
      if (static_cast<int>(m.degree) != d) return std::nullopt;
    }
    return d;
  };
  if (f.is_zero()) return std::nullopt;
  auto dn = degree_of(f.primitive_numerator());
  auto dd = degree_of(f.primitive_denominator());
  if (!dn || !dd) return std::nullopt;
  return *dn - *dd;
}

namespace {

template <class C>
std::string render(const BasicPolynomial<C>& p) {
  if (p.is_zero()) return "0";
  const Ring& ring = *p.ring();
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    BigRational mag = BigRational(c);
    if (negative) mag = -mag;
    std::string mono;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += '*';
      mono += ring.name(i);
      if (m[i] > 1) mono += '^' + std::to_string(m[i]);
    }
    if (mono.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag.get_str() << '*' << mono;
    }
  }
  return os.str();
}

class Parser {
 public:
  Parser(const std::string& text, RingPtr ring) : s_(text), ring_(std::move(ring)) {}

  RationalFunction parse() {
    RationalFunction r = expression();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw UsageError("cannot parse '" + s_ + "' at offset " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  RationalFunction expression() {
    RationalFunction acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }
  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        RationalFunction d = unary();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else {
        return acc;
      }
    }
  }
  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    RationalFunction base = primary();
    if (accept('^')) {
      skip();
      bool neg = accept('-');
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an integer exponent");
      int e = std::stoi(s_.substr(start, pos_ - start));
      if (neg && base.is_zero()) fail("zero to a negative power");
      base = base.pow(neg ? -e : e);
    }
    return base;
  }
  RationalFunction primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expression();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RationalFunction::constant(ring_, BigRational(BigInt(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      const int idx = ring_->index_of(name);
      if (idx < 0) fail("unknown variable '" + name + "'");
      return RationalFunction::variable(ring_, static_cast<std::size_t>(idx));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Polynomial& p) { return render(p); }
std::string to_string(const IntPolynomial& p) { return render(p); }

RationalFunction parse_rational_function(const std::string& text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

CommonDenominator common_denominator(std::span<const RationalFunction> values, const RingPtr& ring) {
  IntPolynomial lcm = one(ring);
  for (const auto& v : values) {
    require_same_ring(v.ring(), ring);
    const IntPolynomial& d = v.primitive_denominator();
    if (is_one(d) || d == lcm) continue;
    lcm = lcm * divide_out(d, primitive_gcd(lcm, d));
  }
  CommonDenominator out{{}, to_rational(lcm)};
  out.nums.reserve(values.size());
  for (const auto& v : values) {
    if (v.is_zero()) {
      out.nums.emplace_back(ring);
      continue;
    }
    out.nums.push_back(to_rational(v.primitive_numerator() * divide_out(lcm, v.primitive_denominator()), v.scale()));
  }
  return out;
}

}  // namespace zastava
