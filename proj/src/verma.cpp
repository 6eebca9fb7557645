#include "zastava/verma.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

#include "zastava/errors.hpp"

namespace zastava {

namespace {

std::string pair_key(const Word& u, const Word& w) {
  std::string key;
  key.reserve(u.size() + w.size() + 1);
  for (int x : u) key.push_back(static_cast<char>('a' + x));
  key.push_back('|');
  for (int x : w) key.push_back(static_cast<char>('a' + x));
  return key;
}

bool same_content(const Word& u, const Word& w) {
  if (u.size() != w.size()) return false;
  std::array<int, kMaxVars> count{};
  for (int x : u) ++count[static_cast<std::size_t>(x)];
  for (int x : w) --count[static_cast<std::size_t>(x)];
  return std::all_of(count.begin(), count.end(), [](int c) { return c == 0; });
}

IntPolynomial shift(const IntPolynomial& p, const IntPolynomial& one, int s) {
  return s == 0 ? p : p + one.scaled(BigInt(s));
}
BigRational shift(const BigRational& p, const BigRational& one, int s) { return p + one * s; }
RationalFunction shift(const RationalFunction& p, const RationalFunction& one, int s) {
  return s == 0 ? p : p + one.scaled(BigRational(s));
}

bool is_zero(const IntPolynomial& p) { return p.is_zero(); }
bool is_zero(const BigRational& q) { return sgn(q) == 0; }
bool is_zero(const RationalFunction& f) { return f.is_zero(); }

RationalFunction specialize(const IntPolynomial& p, const LowestWeight& lambda) {
  return substitute(RationalFunction(to_rational(p)), lambda.values, lambda.hbar.ring());
}

void check_weight(const CartanDatum& working, const LowestWeight& lambda) {
  if (lambda.values.size() != working.rank()) throw UsageError("lowest weight has the wrong length");
  for (const auto& v : lambda.values) require_same_ring(v.ring(), lambda.hbar.ring());
}

}  // namespace

Content word_content(const Word& w, std::size_t rank) {
  Content c(rank);
  for (int x : w) {
    if (x < 0 || static_cast<std::size_t>(x) >= rank) throw UsageError("word letter out of range");
    ++c[static_cast<std::size_t>(x)];
  }
  return c;
}

std::vector<Word> words_of_content(const Content& theta) {
  if (!theta.is_positive()) return {};
  Word w;
  for (std::size_t i = 0; i < theta.size(); ++i) w.insert(w.end(), static_cast<std::size_t>(theta[i]), static_cast<int>(i));
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

BigInt word_count(const Content& theta) {
  if (!theta.is_positive()) return 0;
  BigInt total = 1;
  unsigned long placed = 0;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    for (int k = 1; k <= theta[i]; ++k) {
      ++placed;
      total = total * placed / k;
    }
  }
  return total;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "v";
  std::ostringstream os;
  for (int x : w) os << 'e' << x << ' ';
  os << 'v';
  return os.str();
}

template <class C>
PairingEngine<C>::PairingEngine(const CartanDatum& working, std::vector<C> lambda, C one)
    : working_(working), lambda_(std::move(lambda)), one_(std::move(one)), zero_(one_ - one_) {
  if (lambda_.size() != working_.rank()) throw UsageError("lowest weight has the wrong length");
}

template <class C>
std::vector<std::pair<Word, C>> PairingEngine<C>::lower(std::size_t i, const Word& u) const {
  std::vector<std::pair<Word, C>> out;
  int tail = 0;
  for (std::size_t m = u.size(); m-- > 0;) {
    const auto letter = static_cast<std::size_t>(u[m]);
    if (letter == i) {
      C coeff = -shift(lambda_[i], one_, tail);
      if (!is_zero(coeff)) {
        Word rest;
        rest.reserve(u.size() - 1);
        rest.insert(rest.end(), u.begin(), u.begin() + static_cast<std::ptrdiff_t>(m));
        rest.insert(rest.end(), u.begin() + static_cast<std::ptrdiff_t>(m) + 1, u.end());
        out.emplace_back(std::move(rest), std::move(coeff));
      }
    }
    tail += working_.matrix[i][letter];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

template <class C>
const C& PairingEngine<C>::pair(const Word& u, const Word& w) {
  if (!same_content(u, w)) return zero_;
  if (u.empty()) return one_;
  std::string key = pair_key(u, w);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const Word rest(u.begin() + 1, u.end());
  C value = zero_;
  for (const auto& [sub, coeff] : lower(static_cast<std::size_t>(u[0]), w)) {
    const C& inner = pair(rest, sub);
    if (!is_zero(inner)) value = value + coeff * inner;
  }
  return memo_.emplace(std::move(key), std::move(value)).first->second;
}

template class PairingEngine<IntPolynomial>;
template class PairingEngine<BigRational>;
template class PairingEngine<RationalFunction>;

WordCombination apply_lowering(const CartanDatum& working, std::size_t i, const Word& u, const LowestWeight& lambda) {
  check_weight(working, lambda);
  if (i >= working.rank()) throw UsageError("generator index out of range");
  const RingPtr& ring = lambda.hbar.ring();
  PairingEngine<RationalFunction> engine(working, lambda.values, RationalFunction::constant(ring, 1));
  return engine.lower(i, u);
}

VermaModel::VermaModel(const CartanDatum& working, Limits limits)
    : limits_(limits),
      ring_([&] {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < working.rank(); ++i) names.push_back("l" + std::to_string(i + 1));
        return make_ring(names);
      }()),
      engine_(working,
              [&] {
                std::vector<IntPolynomial> l;
                for (std::size_t i = 0; i < working.rank(); ++i) l.push_back(IntPolynomial::variable(ring_, i));
                return l;
              }(),
              IntPolynomial::constant(ring_, BigInt(1))) {}

void VermaModel::check_limits(const Content& theta) const {
  if (theta.size() != working().rank()) throw UsageError("content has the wrong length");
  if (!theta.is_positive()) throw UsageError("content must be positive");
  const int cap = working().affine() ? limits_.affine_height : limits_.finite_height;
  const auto support = std::count_if(theta.coeffs().begin(), theta.coeffs().end(), [](int x) { return x != 0; });
  if (support > 1 && height(theta) > cap) {
    throw ResourceError("weight space " + theta.to_string() + " exceeds the height limit " + std::to_string(cap));
  }
}

std::vector<std::vector<IntPolynomial>> VermaModel::generic_gram(const Content& theta) {
  check_limits(theta);
  const auto words = words_of_content(theta);
  std::vector<std::vector<IntPolynomial>> g(words.size());
  for (std::size_t r = 0; r < words.size(); ++r) {
    for (const auto& w : words) g[r].push_back(engine_.pair(words[r], w));
  }
  return g;
}

const GenericWhittaker& VermaModel::generic_whittaker(const Content& theta) {
  if (auto it = whittaker_.find(theta); it != whittaker_.end()) return it->second;
  check_limits(theta);
  GenericWhittaker gw;
  gw.theta = theta;
  gw.words = words_of_content(theta);
  const std::size_t n = gw.words.size();
  const std::size_t dim = static_cast<std::size_t>(kostant_partition(working(), theta).get_ui());

  // pick words independent at a rational point; independence there certifies it generically
  std::vector<std::size_t> basis;
  std::mt19937_64 rng(0x5eed + static_cast<unsigned>(height(theta)));
  std::uniform_int_distribution<int> num(-97, 97), den(1, 31);
  for (int attempt = 0; attempt < 16 && basis.size() != dim; ++attempt) {
    std::vector<BigRational> point;
    for (std::size_t i = 0; i < working().rank(); ++i) {
      BigRational q(num(rng), den(rng));
      q.canonicalize();
      point.push_back(q);
    }
    PairingEngine<BigRational> numeric(working(), point, BigRational(1));
    std::vector<std::vector<BigRational>> g(n, std::vector<BigRational>(n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) g[r][c] = numeric.pair(gw.words[r], gw.words[c]);
    }
    basis = rational_rank(std::move(g)).pivot_columns;
  }
  if (basis.size() != dim) throw InternalError("no weight-space basis found for " + theta.to_string());

  std::vector<std::vector<IntPolynomial>> columns(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s : basis) columns[r].push_back(engine_.pair(gw.words[r], gw.words[s]));
  }
  std::vector<std::vector<IntPolynomial>> square;
  for (std::size_t s : basis) square.push_back(columns[s]);
  const IntPolynomial one = IntPolynomial::constant(ring_, BigInt(1));
  const FractionFreeSolution sol = solve_fraction_free(square, std::vector<IntPolynomial>(dim, one));
  if (sol.pivots.size() != dim) throw InternalError("singular weight-space basis for " + theta.to_string());

  std::vector<IntPolynomial> x(dim, IntPolynomial(ring_));
  for (std::size_t k = 0; k < dim; ++k) x[sol.pivots[k]] = sol.numerators[k];
  // the solution must satisfy the equation of every word, not only the basis words
  for (std::size_t r = 0; r < n; ++r) {
    IntPolynomial lhs(ring_);
    for (std::size_t k = 0; k < dim; ++k) lhs = lhs + columns[r][k] * x[k];
    if (lhs != sol.denominator) {
      throw InternalError("Whittaker system inconsistent at word " + word_to_string(gw.words[r]));
    }
  }
  IntPolynomial total(ring_);
  for (const auto& xi : x) total = total + xi;
  gw.support = basis;
  gw.numerators = std::move(x);
  gw.denominator = sol.denominator;
  gw.norm_factor = RationalFunction::from_parts(1, total, sol.denominator);
  return whittaker_.emplace(theta, std::move(gw)).first->second;
}

WeightSpaceModel gram_matrix(VermaModel& model, const Content& theta, const LowestWeight& lambda) {
  check_weight(model.working(), lambda);
  const auto g = model.generic_gram(theta);
  WeightSpaceModel out{theta, words_of_content(theta), Matrix(lambda.hbar.ring(), g.size(), g.size())};
  for (std::size_t r = 0; r < g.size(); ++r) {
    for (std::size_t c = 0; c < g.size(); ++c) out.gram(r, c) = specialize(g[r][c], lambda);
  }
  return out;
}

WhittakerComponent whittaker_component(VermaModel& model, const Content& theta, const LowestWeight& lambda) {
  check_weight(model.working(), lambda);
  const GenericWhittaker& gw = model.generic_whittaker(theta);
  const RingPtr& ring = lambda.hbar.ring();
  const int k = height(theta);
  WhittakerComponent out{theta, gw.words, std::vector<RationalFunction>(gw.words.size(), RationalFunction(ring)),
                         RationalFunction(ring)};
  const RationalFunction scale = lambda.hbar.pow(-k);
  for (std::size_t j = 0; j < gw.support.size(); ++j) {
    const auto c = RationalFunction::from_parts(1, gw.numerators[j], gw.denominator);
    out.coefficients[gw.support[j]] = substitute(c, lambda.values, ring) * scale;
  }
  out.norm = whittaker_norm(model, theta, lambda);
  return out;
}

RationalFunction whittaker_norm(VermaModel& model, const Content& theta, const LowestWeight& lambda) {
  check_weight(model.working(), lambda);
  const GenericWhittaker& gw = model.generic_whittaker(theta);
  return substitute(gw.norm_factor, lambda.values, lambda.hbar.ring()) * lambda.hbar.pow(-2 * height(theta));
}

bool verify_whittaker(VermaModel& model, const Content& theta, const LowestWeight& lambda,
                      const std::map<Content, WhittakerComponent>& components) {
  check_weight(model.working(), lambda);
  auto find = [&](const Content& t) -> const WhittakerComponent& {
    auto it = components.find(t);
    if (it == components.end()) throw UsageError("missing Whittaker component " + t.to_string());
    return it->second;
  };
  const WhittakerComponent& top = find(theta);
  const RingPtr& ring = lambda.hbar.ring();
  const RationalFunction inv_hbar = lambda.hbar.inverse();
  auto& engine = model.engine();
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (theta[i] == 0) continue;
    const Content below = theta - Content::simple(theta.size(), i);
    const WhittakerComponent& low = find(below);
    // f_i w_theta as a combination with coefficients in the symbol ring, per source word
    std::vector<std::vector<std::pair<Word, IntPolynomial>>> lowered(top.words.size());
    for (std::size_t u = 0; u < top.words.size(); ++u) {
      if (!top.coefficients[u].is_zero()) lowered[u] = engine.lower(i, top.words[u]);
    }
    for (const Word& x : words_of_content(below)) {
      RationalFunction lhs(ring), rhs(ring);
      for (std::size_t u = 0; u < top.words.size(); ++u) {
        if (top.coefficients[u].is_zero()) continue;
        IntPolynomial p(model.symbol_ring());
        for (const auto& [sub, coeff] : lowered[u]) p = p + coeff * engine.pair(sub, x);
        if (!p.is_zero()) lhs += top.coefficients[u] * specialize(p, lambda);
      }
      for (std::size_t u = 0; u < low.words.size(); ++u) {
        if (low.coefficients[u].is_zero()) continue;
        const IntPolynomial& p = engine.pair(low.words[u], x);
        if (!p.is_zero()) rhs += low.coefficients[u] * specialize(p, lambda);
      }
      if (lhs != rhs * inv_hbar) return false;
    }
  }
  return true;
}

int dual_sign_component(const Content& theta) { return height(theta) % 2 == 0 ? 1 : -1; }

}  // namespace zastava
