#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "zastava/cli.hpp"
#include "zastava/errors.hpp"
#include "zastava/localization.hpp"
#include "zastava/partition.hpp"
#include "zastava/sl2.hpp"
#include "zastava/toda.hpp"
#include "zastava/verma.hpp"

using namespace zastava;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int cli(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = run_cli(args, o, e);
  if (out) *out = o.str();
  return code;
}

// tables shared between criteria
std::map<std::string, SeriesTable> finite_tables;
std::map<std::string, SeriesTable> affine_tables;

const SeriesTable& finite_table(const std::string& name, int cap) {
  const std::string key = name + "/" + std::to_string(cap);
  auto it = finite_tables.find(key);
  if (it == finite_tables.end()) it = finite_tables.emplace(key, z_series_whittaker(build_cartan(name), cap)).first;
  return it->second;
}

Outcome sl2_golden_series() {
  Outcome r;
  const auto z = finite_table("A1", 12);
  for (int d = 0; d <= 12; ++d) {
    if (z.at(Content(std::vector<int>{d})) != closed_form_a(d)) r.fail("d = " + std::to_string(d));
  }
  return r;
}

Outcome localization() {
  Outcome r;
  // degree 0 is a point with no tangent weights
  if (localized_integral({FixedPointDatum{"point", {}}}) != closed_form_a(0)) r.fail("d = 0");
  for (int d = 1; d <= 12; ++d) {
    if (localized_integral({sl2_quasimap_fixed_point(d)}) != closed_form_a(d)) r.fail("d = " + std::to_string(d));
  }
  return r;
}

Outcome finite_cross_oracle() {
  Outcome r;
  for (const auto& [name, cap] : std::vector<std::pair<std::string, int>>{{"A2", 8}, {"B2", 6}, {"G2", 6}}) {
    const auto& w = finite_table(name, cap);
    const auto t = z_series_toda(build_cartan(name), cap);
    if (w.entries.size() != t.entries.size()) r.fail(name + " entry count");
    for (const auto& [theta, value] : t.entries) {
      if (w.value_or_zero(theta) != value) r.fail(name + " at " + theta.to_string());
    }
  }
  return r;
}

Outcome affine_cross_oracle() {
  Outcome r;
  const CartanDatum g = build_cartan("A1~");
  const auto w = z_series_affine_whittaker(g, 5);
  const auto t = z_series_affine_toda(g, 5);
  if (w.entries.size() != t.entries.size()) r.fail("entry count");
  for (const auto& [theta, value] : t.entries) {
    if (w.value_or_zero(theta) != value) r.fail("at " + theta.to_string());
  }
  affine_tables.emplace("A1~", w);
  return r;
}

Outcome toda_residuals() {
  Outcome r;
  std::size_t checked = 0;
  for (const auto& [key, table] : finite_tables) {
    for (const auto& res : check_finite_toda(table)) {
      ++checked;
      if (!res.ok()) r.fail(key + " at " + res.theta.to_string());
    }
  }
  for (const auto& [key, table] : affine_tables) {
    for (const auto& res : check_affine_toda(table)) {
      ++checked;
      if (!res.ok()) r.fail(key + " at " + res.theta.to_string());
    }
  }
  if (r.ok) r.detail = std::to_string(checked) + " residuals";
  return r;
}

// counts multisets of roots summing to theta
long brute_force_partitions(const std::vector<Content>& roots, const Content& theta, std::size_t max_idx) {
  if (theta.is_zero()) return 1;
  long total = 0;
  for (std::size_t k = 0; k <= max_idx; ++k) {
    const Content next = theta - roots[k];
    if (next.is_positive()) total += brute_force_partitions(roots, next, k);
  }
  return total;
}

Outcome dimension_law() {
  Outcome r;
  std::mt19937_64 rng(20261018);
  std::uniform_int_distribution<int> num(-1000, 1000), den(1, 1000);
  for (const auto& name : {"A2", "B2"}) {
    const CartanDatum c = build_cartan(name);
    VermaModel model(c);
    for (const auto& theta : contents_up_to(c.rank(), 6)) {
      std::vector<BigRational> point;
      for (std::size_t i = 0; i < c.rank(); ++i) point.emplace_back(num(rng), den(rng));
      const auto g = model.generic_gram(theta);
      std::vector<std::vector<BigRational>> m(g.size());
      for (std::size_t row = 0; row < g.size(); ++row) {
        for (const auto& p : g[row]) m[row].push_back(evaluate(p, point));
      }
      if (rational_rank(m).rank != kostant_partition(c, theta)) r.fail(std::string(name) + " rank at " + theta.to_string());
    }
  }
  for (const auto& name : {"A2", "B2", "G2"}) {
    const CartanDatum c = build_cartan(name);
    std::vector<Content> roots;
    for (const auto& root : positive_roots(c, 8)) roots.push_back(root.root);
    for (const auto& theta : contents_up_to(c.rank(), 8)) {
      if (kostant_partition(c, theta) != brute_force_partitions(roots, theta, roots.size() - 1)) {
        r.fail(std::string(name) + " Kostant at " + theta.to_string());
      }
    }
  }
  return r;
}

Outcome whittaker_property() {
  Outcome r;
  for (const auto& [name, cap] : std::vector<std::pair<std::string, int>>{{"A1", 12}, {"A2", 6}}) {
    const CartanDatum working = dualize(build_cartan(name));
    VermaModel model(working);
    const RingPtr ring = series_ring(working);
    const LowestWeight lambda = standard_weight(working, ring);
    std::map<Content, WhittakerComponent> components;
    for (const auto& theta : contents_up_to(working.rank(), cap)) {
      components.emplace(theta, whittaker_component(model, theta, lambda));
    }
    for (const auto& [theta, w] : components) {
      if (!verify_whittaker(model, theta, lambda, components)) r.fail(name + " at " + theta.to_string());
    }
  }
  return r;
}

Outcome sl2_commutators() {
  Outcome r;
  const RingPtr ring = make_ring({"l"});
  const auto l = RationalFunction::variable(ring, 0);
  auto combine = [](Sl2Vector x, const Sl2Vector& y, const BigRational& k) {
    for (const auto& [d, c] : y) {
      RationalFunction& slot = x.try_emplace(d, RationalFunction(c.ring())).first->second;
      slot += c.scaled(k);
      if (slot.is_zero()) x.erase(d);
    }
    return x;
  };
  auto op = [&](Sl2Op o, const Sl2Vector& v) { return sl2_apply(o, v, l); };
  for (int d = 0; d <= 20; ++d) {
    const Sl2Vector m{{d, RationalFunction::constant(ring, 1)}};
    const Sl2Vector ef = combine(op(Sl2Op::e, op(Sl2Op::f, m)), op(Sl2Op::f, op(Sl2Op::e, m)), -1);
    const Sl2Vector he = combine(op(Sl2Op::h, op(Sl2Op::e, m)), op(Sl2Op::e, op(Sl2Op::h, m)), -1);
    const Sl2Vector hf = combine(op(Sl2Op::h, op(Sl2Op::f, m)), op(Sl2Op::f, op(Sl2Op::h, m)), -1);
    if (ef != op(Sl2Op::h, m)) r.fail("[e,f] at d = " + std::to_string(d));
    if (he != combine({}, op(Sl2Op::e, m), 2)) r.fail("[h,e] at d = " + std::to_string(d));
    if (hf != combine({}, op(Sl2Op::f, m), -2)) r.fail("[h,f] at d = " + std::to_string(d));
  }
  return r;
}

Outcome homogeneity() {
  Outcome r;
  for (const auto& key : {"A1/12", "A2/8"}) {
    for (const auto& [theta, value] : finite_tables.at(key).entries) {
      const auto deg = homogeneous_degree(value);
      if (!deg || *deg != -2 * height(theta)) r.fail(std::string(key) + " at " + theta.to_string());
    }
  }
  return r;
}

Outcome cli_contract() {
  Outcome r;
  for (const auto& type : {"A1", "A2", "B2", "G2", "A1~"}) {
    std::string first, second;
    if (cli({"z", "--type", type, "--cap", "4"}, &first) != 0) r.fail(std::string("z ") + type);
    cli({"z", "--type", type, "--cap", "4"}, &second);
    if (first != second || to_json(table_from_json(first)) != first) r.fail(std::string("round trip ") + type);
  }
  const std::vector<std::pair<std::vector<std::string>, int>> codes{
      {{"verify", "--type", "A1", "--cap", "12"}, 0},
      {{"verify", "--type", "A2", "--cap", "8"}, 0},
      {{"verify", "--type", "A1~", "--cap", "5"}, 0},
      {{"verify", "--type", "E7", "--cap", "2"}, 2},
      {{"verify", "--type", "A2", "--cap", "9"}, 3},
      {{"jfun", "--type", "A1~", "--cap", "2"}, 2},
  };
  for (const auto& [args, expected] : codes) {
    if (cli(args) != expected) r.fail(args[2] + " cap " + args[4] + " exit code");
  }
  for (const auto& [type, content] : std::vector<std::pair<std::string, std::string>>{
           {"A1", "7"}, {"A2", "2;1"}, {"B2", "1;2"}, {"G2", "2;1"}, {"A1~", "2;1"}}) {
    const std::vector<std::string> base{"verify", "--type", type, "--cap", type == "A1" ? "8" : "4"};
    std::vector<std::string> mutated = base;
    mutated.insert(mutated.end(), {"--perturb", content});
    if (cli(base) != 0 || cli(mutated) != 1) r.fail("mutation " + type + " " + content);
  }
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"sl2 series equals closed form (d <= 12)", sl2_golden_series},
      {"localization equals closed form (d <= 12)", localization},
      {"Whittaker equals Toda on A2/8, B2/6, G2/6", finite_cross_oracle},
      {"affine Whittaker equals affine Toda on A1~/5", affine_cross_oracle},
      {"Toda residuals vanish on all computed tables", toda_residuals},
      {"gram rank equals Kostant count, Kostant equals enumeration", dimension_law},
      {"Whittaker defining property on A1/12, A2/6", whittaker_property},
      {"sl2 commutation relations (d <= 20)", sl2_commutators},
      {"homogeneity of degree -2 height on A1, A2", homogeneity},
      {"CLI round trip, exit codes, mutation", cli_contract},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [title, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome result;
    try {
      result = check();
    } catch (const std::exception& e) {
      result.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (result.ok ? "PASS" : "FAIL") << " criterion " << index << ": " << title;
    if (!result.detail.empty()) line << " [" << result.detail << "]";
    line.precision(2);
    line << std::fixed << " (" << seconds << " s)";
    std::cout << line.str() << std::endl;
    if (!result.ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
