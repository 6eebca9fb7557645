#include "zastava/lie.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "zastava/errors.hpp"
#include "zastava/linear_algebra.hpp"

namespace zastava {

bool Content::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

bool Content::is_positive() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x >= 0; });
}

bool Content::dominates(const Content& x) const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (x.c_[i] > c_[i]) return false;
  }
  return true;
}

Content Content::operator+(const Content& o) const {
  Content r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_.at(i);
  return r;
}

Content Content::operator-(const Content& o) const {
  Content r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_.at(i);
  return r;
}

Content Content::operator*(int k) const {
  Content r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

std::string Content::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ']';
  return os.str();
}

int height(const Content& c) { return std::accumulate(c.coeffs().begin(), c.coeffs().end(), 0); }

std::vector<Content> contents_up_to(std::size_t rank, int cap) {
  std::vector<Content> out;
  Content cur(rank);
  // odometer over all vectors with coefficient sum <= cap
  auto rec = [&](auto&& self, std::size_t i, int budget) -> void {
    if (i == rank) {
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= budget; ++k) {
      cur[i] = k;
      self(self, i + 1, budget - k);
    }
    cur[i] = 0;
  };
  if (cap >= 0) rec(rec, 0, cap);
  std::sort(out.begin(), out.end(), HeightOrder{});
  return out;
}

namespace {

/// Kernel of an integer matrix as a primitive integer vector; requires corank 1.
std::vector<BigInt> kernel_vector(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<BigRational>> m(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
  }
  // reduced row echelon form
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < n; ++col) {
    std::size_t p = r;
    while (p < n && sgn(m[p][col]) == 0) ++p;
    if (p == n) continue;
    std::swap(m[r], m[p]);
    const BigRational inv = 1 / m[r][col];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || sgn(m[i][col]) == 0) continue;
      const BigRational f = m[i][col];
      for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }
  if (r != n - 1) throw UsageError("affine Cartan matrix must have corank 1");
  std::size_t free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::vector<BigRational> v(n);
  v[free_col] = 1;
  for (std::size_t k = 0; k < r; ++k) v[pivot_col[k]] = -m[k][free_col];
  BigInt l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<BigInt> out(n);
  BigInt g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  for (auto& x : out) x /= g;
  if (out[0] < 0) {
    for (auto& x : out) x = -x;
  }
  return out;
}

Content to_content(const std::vector<BigInt>& v) {
  Content c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = static_cast<int>(v[i].get_si());
  return c;
}

std::vector<std::vector<int>> transpose(const std::vector<std::vector<int>>& a) {
  std::vector<std::vector<int>> t(a.size(), std::vector<int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

std::vector<std::vector<int>> type_a(std::size_t n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

const std::map<std::string, std::pair<std::vector<std::vector<int>>, AlgebraKind>>& catalog() {
  static const std::map<std::string, std::pair<std::vector<std::vector<int>>, AlgebraKind>> c = {
      {"A1", {type_a(1), AlgebraKind::finite}},
      {"A2", {type_a(2), AlgebraKind::finite}},
      {"A3", {type_a(3), AlgebraKind::finite}},
      {"A4", {type_a(4), AlgebraKind::finite}},
      {"B2", {{{2, -1}, {-2, 2}}, AlgebraKind::finite}},
      {"B3", {{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}, AlgebraKind::finite}},
      {"C2", {{{2, -2}, {-1, 2}}, AlgebraKind::finite}},
      {"C3", {{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}, AlgebraKind::finite}},
      {"D4", {{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}, AlgebraKind::finite}},
      {"G2", {{{2, -1}, {-3, 2}}, AlgebraKind::finite}},
      {"A1~", {{{2, -2}, {-2, 2}}, AlgebraKind::affine}},
      {"A2~", {{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}, AlgebraKind::affine}},
  };
  return c;
}

}  // namespace

CartanDatum make_cartan(std::string label, std::vector<std::vector<int>> matrix, AlgebraKind kind) {
  const std::size_t n = matrix.size();
  if (n == 0 || n > kMaxVars) throw UsageError("Cartan matrix rank out of range");
  for (const auto& row : matrix) {
    if (row.size() != n) throw UsageError("Cartan matrix must be square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i][i] != 2) throw UsageError("Cartan matrix diagonal must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (matrix[i][j] > 0) throw UsageError("Cartan matrix off-diagonal entries must be <= 0");
      if ((matrix[i][j] == 0) != (matrix[j][i] == 0)) throw UsageError("Cartan matrix is not symmetrizable");
    }
  }
  // propagate d_j = d_i A_ij / A_ji over the Dynkin graph
  std::vector<BigRational> d(n, BigRational(0));
  d[0] = 1;
  std::queue<std::size_t> todo;
  todo.push(0);
  while (!todo.empty()) {
    const std::size_t i = todo.front();
    todo.pop();
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || matrix[i][j] == 0 || sgn(d[j]) != 0) continue;
      d[j] = d[i] * matrix[i][j] / matrix[j][i];
      todo.push(j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(d[i]) == 0) throw UsageError("Dynkin diagram must be connected");
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i] * matrix[i][j] != d[j] * matrix[j][i]) throw UsageError("Cartan matrix is not symmetrizable");
    }
  }
  const std::size_t finite_nodes = kind == AlgebraKind::affine ? n - 1 : n;
  if (finite_nodes == 0) throw UsageError("affine datum needs at least two nodes");
  BigRational top = *std::max_element(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(finite_nodes));
  for (auto& x : d) x /= top;

  CartanDatum c{std::move(label), kind, std::move(matrix), std::move(d)};
  std::vector<std::vector<BigRational>> q(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) q[i][j] = c.matrix[i][j];
  }
  const std::size_t rank = rational_rank(q).rank;
  if (kind == AlgebraKind::finite) {
    if (rank != n) throw UsageError("finite Cartan matrix must be nonsingular");
  } else {
    const Content marks = null_vector(c);
    for (std::size_t i = 0; i < n; ++i) {
      if (marks[i] <= 0) throw UsageError("affine Cartan matrix needs a positive null vector");
    }
  }
  return c;
}

CartanDatum build_cartan(const std::string& type_name) {
  const std::string prefix = "dual(";
  if (type_name.rfind(prefix, 0) == 0 && type_name.size() > prefix.size() + 1 && type_name.back() == ')') {
    CartanDatum inner = build_cartan(type_name.substr(prefix.size(), type_name.size() - prefix.size() - 1));
    CartanDatum d = dualize(inner);
    d.label = type_name;
    return d;
  }
  auto it = catalog().find(type_name);
  if (it == catalog().end()) throw UsageError("unknown Cartan type '" + type_name + "'");
  return make_cartan(type_name, it->second.first, it->second.second);
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : catalog()) names.push_back(k);
  return names;
}

CartanDatum dualize(const CartanDatum& c) {
  return make_cartan("dual(" + c.label + ")", transpose(c.matrix), c.kind);
}

FormMatrix form_matrix(const CartanDatum& c) {
  const std::size_t n = c.rank();
  FormMatrix b{std::vector<std::vector<BigRational>>(n, std::vector<BigRational>(n))};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b.entries[i][j] = c.symmetrizers[i] * c.matrix[i][j];
  }
  return b;
}

BigRational form_pairing(const FormMatrix& b, const Content& x, const Content& y) {
  BigRational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j]) s += b.entries[i][j] * x[i] * y[j];
    }
  }
  return s;
}

namespace {

/// Positive roots of a finite-type matrix by root-string closure from the simple roots.
std::vector<Content> finite_roots(const std::vector<std::vector<int>>& a, int height_cap) {
  const std::size_t n = a.size();
  std::set<Content> all;
  std::vector<Content> level;
  for (std::size_t i = 0; i < n; ++i) level.push_back(Content::simple(n, i));
  std::vector<Content> out;
  int h = 1;
  while (!level.empty() && (height_cap <= 0 || h <= height_cap)) {
    for (const auto& r : level) {
      all.insert(r);
      out.push_back(r);
    }
    std::set<Content> next;
    for (const auto& beta : level) {
      for (std::size_t i = 0; i < n; ++i) {
        const Content ai = Content::simple(n, i);
        if (beta == ai) continue;
        int p = 0;
        while (true) {
          Content down = beta - ai * (p + 1);
          if (!down.is_positive() || !all.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * a[i][j];
        if (p - pairing > 0) next.insert(beta + ai);
      }
    }
    level.assign(next.begin(), next.end());
    ++h;
    if (h > 1000) throw InternalError("root closure does not terminate; matrix is not of finite type");
  }
  return out;
}

}  // namespace

std::vector<PositiveRoot> positive_roots(const CartanDatum& c, int height_cap) {
  std::vector<PositiveRoot> out;
  if (!c.affine()) {
    for (auto& r : finite_roots(c.matrix, height_cap)) out.push_back({std::move(r), 1, false});
    return out;
  }
  if (height_cap <= 0) throw UsageError("affine root enumeration needs a positive height cap");
  const std::size_t n = c.rank();
  const std::size_t m = n - 1;
  std::vector<std::vector<int>> sub(m, std::vector<int>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) sub[i][j] = c.matrix[i][j];
  }
  const Content delta = null_vector(c);
  std::vector<Content> fin;
  for (auto& r : finite_roots(sub, 0)) {
    std::vector<int> v = r.coeffs();
    v.push_back(0);
    fin.emplace_back(std::move(v));
  }
  // untwisted shape: alpha_0 = delta - highest root
  const Content& highest = *std::max_element(fin.begin(), fin.end(), HeightOrder{});
  if (delta[m] != 1 || delta - highest != Content::simple(n, m)) {
    throw UsageError("affine root enumeration supports untwisted types only");
  }
  const int hd = height(delta);
  for (int k = 0; k * hd - height(highest) <= height_cap; ++k) {
    const Content shift = delta * k;
    for (const auto& b : fin) {
      Content up = b + shift;
      if (height(up) <= height_cap) out.push_back({up, 1, false});
      if (k > 0) {
        Content down = shift - b;
        if (height(down) <= height_cap) out.push_back({down, 1, false});
      }
    }
    if (k > 0 && k * hd <= height_cap) out.push_back({shift, static_cast<int>(m), true});
  }
  std::sort(out.begin(), out.end(),
            [](const PositiveRoot& x, const PositiveRoot& y) { return HeightOrder{}(x.root, y.root); });
  return out;
}

Content null_vector(const CartanDatum& c) {
  if (!c.affine()) throw UsageError("null vector requested for a finite-type datum");
  return to_content(kernel_vector(c.matrix));
}

Content conull_vector(const CartanDatum& c) {
  if (!c.affine()) throw UsageError("null vector requested for a finite-type datum");
  return to_content(kernel_vector(transpose(c.matrix)));
}

BigInt kostant_partition(const CartanDatum& c, const Content& theta) {
  if (theta.size() != c.rank()) throw UsageError("content has the wrong length");
  if (!theta.is_positive()) return 0;
  if (theta.is_zero()) return 1;
  const std::size_t n = theta.size();
  // mixed-radix index over the box [0, theta]
  std::vector<std::size_t> stride(n);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    stride[i] = total;
    total *= static_cast<std::size_t>(theta[i]) + 1;
  }
  auto index_of = [&](const Content& x) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) idx += stride[i] * static_cast<std::size_t>(x[i]);
    return idx;
  };
  std::vector<BigInt> ways(total, BigInt(0));
  ways[0] = 1;
  for (const auto& r : positive_roots(c, height(theta))) {
    if (!theta.dominates(r.root)) continue;
    const std::size_t offset = index_of(r.root);
    for (int copy = 0; copy < r.multiplicity; ++copy) {
      // increasing index order makes this an unbounded knapsack over the box
      Content x(n);
      for (std::size_t idx = 0; idx < total; ++idx) {
        if (x.dominates(r.root)) ways[idx] += ways[idx - offset];
        for (std::size_t i = 0; i < n; ++i) {
          if (x[i] < theta[i]) {
            ++x[i];
            break;
          }
          x[i] = 0;
        }
      }
    }
  }
  return ways[total - 1];
}

}  // namespace zastava
