#include "zastava/partition.hpp"

#include "json.hpp"
#include <sstream>

#include "zastava/errors.hpp"
#include "zastava/toda.hpp"

namespace zastava {

const RationalFunction& SeriesTable::at(const Content& theta) const {
  auto it = entries.find(theta);
  if (it == entries.end()) throw UsageError("no entry for content " + theta.to_string());
  return it->second;
}

RationalFunction SeriesTable::value_or_zero(const Content& theta) const {
  auto it = entries.find(theta);
  return it == entries.end() ? RationalFunction(ring) : it->second;
}

RingPtr series_ring(const CartanDatum& working) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < working.finite_rank(); ++i) names.push_back("a" + std::to_string(i + 1));
  if (working.affine()) names.push_back("eps");
  names.push_back("h");
  return make_ring(names);
}

namespace {

RationalFunction var(const RingPtr& ring, const std::string& name) { return RationalFunction::variable(ring, name); }
RationalFunction cst(const RingPtr& ring, const BigRational& c) { return RationalFunction::constant(ring, c); }

std::vector<RationalFunction> a_symbols(const CartanDatum& working, const RingPtr& ring) {
  std::vector<RationalFunction> a;
  for (std::size_t i = 0; i < working.finite_rank(); ++i) a.push_back(var(ring, "a" + std::to_string(i + 1)));
  return a;
}

void require_kind(const CartanDatum& c, AlgebraKind kind) {
  if (c.kind != kind) {
    throw UsageError(kind == AlgebraKind::affine ? "'" + c.label + "' is not an affine type"
                                                 : "'" + c.label + "' is an affine type");
  }
}

SeriesTable empty_table(const CartanDatum& g, const CartanDatum& working, int cap) {
  if (cap < 0) throw UsageError("cap must be non-negative");
  SeriesTable t;
  t.algebra = g.label;
  t.kind = g.kind;
  t.cap = cap;
  t.ring = series_ring(working);
  return t;
}

SeriesTable whittaker_table(const CartanDatum& g, int cap, Limits limits) {
  const CartanDatum working = dualize(g);
  SeriesTable t = empty_table(g, working, cap);
  const LowestWeight lambda = standard_weight(working, t.ring);
  VermaModel model(working, limits);
  for (const auto& theta : contents_up_to(working.rank(), cap)) {
    RationalFunction norm = whittaker_norm(model, theta, lambda);
    t.entries.emplace(theta, dual_sign_component(theta) > 0 ? norm : -norm);
  }
  return t;
}

SeriesTable toda_table(const CartanDatum& g, int cap, PotentialWeights weights) {
  const CartanDatum working = dualize(g);
  SeriesTable t = empty_table(g, working, cap);
  const TodaOperator op(working, t.ring, weights);
  for (const auto& theta : contents_up_to(working.rank(), cap)) {
    if (theta.is_zero()) {
      t.entries.emplace(theta, cst(t.ring, 1));
      continue;
    }
    RationalFunction rhs(t.ring);
    for (std::size_t i = 0; i < theta.size(); ++i) {
      if (theta[i] > 0) rhs += op.potential(i) * t.at(theta - Content::simple(theta.size(), i));
    }
    t.entries.emplace(theta, rhs / op.eigen_term(theta));
  }
  return t;
}

std::string content_field(const Content& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ";" : "") + std::to_string(c[i]);
  return s;
}

std::string rational_field(const BigRational& q) { return q.get_str(); }

}  // namespace

LowestWeight standard_weight(const CartanDatum& working, const RingPtr& ring) {
  const RationalFunction h = var(ring, "h");
  const RationalFunction one = cst(ring, 1);
  const auto a = a_symbols(working, ring);
  LowestWeight lambda{{}, h};
  for (const auto& ai : a) lambda.values.push_back(ai / h + one);
  if (working.affine()) {
    const Content comarks = conull_vector(working);
    const std::size_t n0 = working.rank() - 1;
    RationalFunction level = var(ring, "eps") / h.scaled(2);
    for (std::size_t i = 0; i < a.size(); ++i) level -= a[i].scaled(comarks[i]);
    lambda.values.push_back(level / h.scaled(comarks[n0]) + one);
  }
  return lambda;
}

std::vector<RationalFunction> a_pairings(const CartanDatum& working, const RingPtr& ring) {
  const auto a = a_symbols(working, ring);
  std::vector<RationalFunction> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i].scaled(working.symmetrizers[i]));
  if (working.affine()) {
    const Content marks = null_vector(working);
    RationalFunction s(ring);
    for (std::size_t i = 0; i < a.size(); ++i) s -= out[i].scaled(marks[i]);
    out.push_back(s.scaled(BigRational(1, marks[working.rank() - 1])));
  }
  return out;
}

SeriesTable z_series_whittaker(const CartanDatum& g, int cap, Limits limits) {
  require_kind(g, AlgebraKind::finite);
  return whittaker_table(g, cap, limits);
}

SeriesTable z_series_affine_whittaker(const CartanDatum& g, int cap, Limits limits) {
  require_kind(g, AlgebraKind::affine);
  return whittaker_table(g, cap, limits);
}

SeriesTable z_series_toda(const CartanDatum& g, int cap, PotentialWeights weights) {
  require_kind(g, AlgebraKind::finite);
  return toda_table(g, cap, weights);
}

SeriesTable z_series_affine_toda(const CartanDatum& g, int cap, PotentialWeights weights) {
  require_kind(g, AlgebraKind::affine);
  return toda_table(g, cap, weights);
}

SeriesTable j_function(const SeriesTable& z) {
  if (z.kind == AlgebraKind::affine) throw UsageError("no J-function for affine type '" + z.algebra + "'");
  if (!z.prefactor.empty()) throw UsageError("table already carries a prefactor");
  SeriesTable j = z;
  j.prefactor = kJPrefactor;
  return j;
}

SeriesTable rescale_to_uniform(const SeriesTable& z) {
  const CartanDatum working = dualize(build_cartan(z.algebra));
  SeriesTable out = z;
  for (auto& [theta, value] : out.entries) {
    BigRational f = 1;
    for (std::size_t i = 0; i < theta.size(); ++i) {
      for (int k = 0; k < theta[i]; ++k) f /= working.symmetrizers[i];
    }
    value = value.scaled(f);
  }
  return out;
}

std::string to_json(const SeriesTable& t) {
  nlohmann::ordered_json j;
  j["algebra"] = t.algebra;
  j["cap"] = t.cap;
  j["variables"] = t.ring->names();
  if (!t.prefactor.empty()) j["prefactor"] = t.prefactor;
  auto entries = nlohmann::ordered_json::array();
  for (const auto& [theta, value] : t.entries) {
    nlohmann::ordered_json e;
    e["content"] = theta.coeffs();
    e["value"] = value.to_string();
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

SeriesTable table_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const CartanDatum g = build_cartan(j.at("algebra").get<std::string>());
    const CartanDatum working = dualize(g);
    SeriesTable t = empty_table(g, working, j.at("cap").get<int>());
    if (j.contains("variables") && j.at("variables").get<std::vector<std::string>>() != t.ring->names()) {
      throw UsageError("table variables do not match the algebra");
    }
    if (j.contains("prefactor")) t.prefactor = j.at("prefactor").get<std::string>();
    for (const auto& e : j.at("entries")) {
      Content theta(e.at("content").get<std::vector<int>>());
      if (theta.size() != working.rank() || !theta.is_positive() || height(theta) > t.cap) {
        throw UsageError("bad content " + theta.to_string());
      }
      if (!t.entries.emplace(theta, parse_rational_function(e.at("value").get<std::string>(), t.ring)).second) {
        throw UsageError("duplicate content " + theta.to_string());
      }
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed table JSON: ") + e.what());
  }
}

std::string to_csv(const SeriesTable& t) {
  std::ostringstream os;
  if (!t.prefactor.empty()) os << "prefactor," << t.prefactor << '\n';
  const bool affine = t.kind == AlgebraKind::affine;
  Content marks;
  if (affine) marks = null_vector(dualize(build_cartan(t.algebra)));
  os << (affine ? "content,theta,d,value\n" : "content,value\n");
  for (const auto& [c, value] : t.entries) {
    os << content_field(c);
    if (affine) {
      const std::size_t n0 = c.size() - 1;
      const BigRational d(c[n0], marks[n0]);
      std::string fin;
      for (std::size_t i = 0; i < n0; ++i) fin += (i ? ";" : "") + rational_field(c[i] - d * marks[i]);
      os << ',' << fin << ',' << rational_field(d);
    }
    os << ',' << value.to_string() << '\n';
  }
  return os.str();
}

}  // namespace zastava
