#include "zastava/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "zastava/errors.hpp"
#include "zastava/localization.hpp"
#include "zastava/partition.hpp"
#include "zastava/sl2.hpp"
#include "zastava/toda.hpp"

namespace zastava {

namespace {

struct RunConfig {
  std::string type_name;
  int cap = 0;
  std::string format = "json";
  std::string output_path;
  std::uint64_t seed = 1;
  std::string perturb;
  std::string input_path;
  std::string weights = "root-lengths";
  int quasimap_degree = 0;
};

class Mismatch : public Error {
 public:
  using Error::Error;
};

Content parse_content(const std::string& text, std::size_t rank) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, text.find(';') != std::string::npos ? ';' : ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw UsageError("bad content '" + text + "'");
    }
  }
  if (v.size() != rank) throw UsageError("content '" + text + "' needs " + std::to_string(rank) + " entries");
  return Content(std::move(v));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output_path);
  if (!f) throw UsageError("cannot write '" + cfg.output_path + "'");
  f << text;
}

std::string render(const SeriesTable& t, const std::string& format) {
  return format == "csv" ? to_csv(t) : to_json(t);
}

PotentialWeights parse_weights(const std::string& s) {
  return s == "uniform" ? PotentialWeights::uniform : PotentialWeights::root_lengths;
}

SeriesTable z_table(const CartanDatum& g, int cap) {
  return g.affine() ? z_series_affine_whittaker(g, cap) : z_series_whittaker(g, cap);
}

void require_zero(const std::vector<TodaResidual>& rs, const std::string& what) {
  for (const auto& r : rs) {
    if (!r.ok()) throw Mismatch(what + " residual nonzero at content " + r.theta.to_string());
  }
}

void report(std::ostream& out, const std::string& check, const std::string& detail) {
  out << check << ": ok (" << detail << ")\n";
}

void run_verify(const RunConfig& cfg, std::ostream& out) {
  const CartanDatum g = build_cartan(cfg.type_name);
  if (cfg.cap < 0) throw UsageError("cap must be non-negative");
  out << "verify " << g.label << " cap " << cfg.cap << "\n";
  SeriesTable whittaker = z_table(g, cfg.cap);
  if (!cfg.perturb.empty()) {
    const Content c = parse_content(cfg.perturb, dualize(g).rank());
    auto it = whittaker.entries.find(c);
    if (it == whittaker.entries.end()) throw UsageError("content " + c.to_string() + " is outside the table");
    it->second += RationalFunction::constant(whittaker.ring, 1);
    out << "perturbed entry " << c.to_string() << "\n";
  }
  const SeriesTable toda = g.affine() ? z_series_affine_toda(g, cfg.cap) : z_series_toda(g, cfg.cap);
  for (const auto& [theta, value] : whittaker.entries) {
    if (value != toda.at(theta)) throw Mismatch("whittaker and toda differ at content " + theta.to_string());
  }
  report(out, "whittaker-vs-toda", std::to_string(whittaker.entries.size()) + " entries");
  require_zero(g.affine() ? check_affine_toda(whittaker) : check_finite_toda(whittaker), "toda");
  report(out, "toda-residuals", std::to_string(whittaker.entries.size()) + " contents");

  // rank law at a seeded rational point
  const CartanDatum working = dualize(g);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> num(-1000, 1000), den(1, 1000);
  std::vector<BigRational> point;
  for (std::size_t i = 0; i < working.rank(); ++i) {
    point.emplace_back(num(rng), den(rng));
    point.back().canonicalize();
  }
  PairingEngine<BigRational> numeric(working, point, BigRational(1));
  for (const auto& [theta, value] : whittaker.entries) {
    const auto words = words_of_content(theta);
    std::vector<std::vector<BigRational>> m(words.size(), std::vector<BigRational>(words.size()));
    for (std::size_t r = 0; r < words.size(); ++r) {
      for (std::size_t c = 0; c < words.size(); ++c) m[r][c] = numeric.pair(words[r], words[c]);
    }
    if (rational_rank(std::move(m)).rank != kostant_partition(working, theta)) {
      throw Mismatch("gram rank differs from the Kostant count at content " + theta.to_string());
    }
  }
  report(out, "rank-law", "seed " + std::to_string(cfg.seed));

  VermaModel model(working);
  const LowestWeight lambda = standard_weight(working, whittaker.ring);
  std::map<Content, WhittakerComponent> components;
  for (const auto& [theta, value] : whittaker.entries) components.emplace(theta, whittaker_component(model, theta, lambda));
  for (const auto& [theta, w] : components) {
    if (!verify_whittaker(model, theta, lambda, components)) {
      throw Mismatch("f_i w differs from w/hbar at content " + theta.to_string());
    }
  }
  report(out, "whittaker-property", std::to_string(components.size()) + " components");

  if (g.kind == AlgebraKind::finite && g.label == "A1") {
    for (const auto& [theta, value] : whittaker.entries) {
      const int d = theta[0];
      if (value != closed_form_a(d)) throw Mismatch("closed form differs at content " + theta.to_string());
      if (d > 0 && localized_integral({sl2_quasimap_fixed_point(d)}) != value) {
        throw Mismatch("localization differs at content " + theta.to_string());
      }
    }
    report(out, "closed-form", "d <= " + std::to_string(cfg.cap));
    report(out, "localization", "d <= " + std::to_string(cfg.cap));
  }
  out << "all checks passed\n";
}

void run_localize(const RunConfig& cfg, std::ostream& out) {
  std::vector<FixedPointDatum> points;
  if (!cfg.input_path.empty()) {
    points = fixed_points_from_json(read_file(cfg.input_path));
  } else if (cfg.quasimap_degree > 0) {
    points.push_back(sl2_quasimap_fixed_point(cfg.quasimap_degree));
  } else {
    throw UsageError("localize needs --input or --quasimap");
  }
  emit(cfg, localized_integral(points).to_string() + "\n", out);
}

int run_check(const RunConfig& cfg, std::ostream& out) {
  const SeriesTable t = table_from_json(read_file(cfg.input_path));
  const auto rs = t.kind == AlgebraKind::affine ? check_affine_toda(t, parse_weights(cfg.weights))
                                                : check_finite_toda(t, parse_weights(cfg.weights));
  emit(cfg, residual_report_json(rs), out);
  for (const auto& r : rs) {
    if (!r.ok()) return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partition functions of Zastava spaces via Whittaker vectors and Toda recursions"};
  app.name("zastava");
  app.require_subcommand(1);
  RunConfig cfg;
  const std::vector<std::string> formats{"json", "csv"};

  auto add_table_options = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.type_name, "Cartan type, e.g. A2, G2, A1~, dual(B2)")->required();
    sub->add_option("--cap", cfg.cap, "height bound")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember(formats));
    sub->add_option("--out", cfg.output_path, "output file");
    sub->add_option("--seed", cfg.seed, "seed for randomized checks");
  };
  auto* z = app.add_subcommand("z", "partition function table from Whittaker norms");
  add_table_options(z);
  auto* verify = app.add_subcommand("verify", "cross-check every oracle for one type");
  verify->add_option("--type", cfg.type_name, "Cartan type")->required();
  verify->add_option("--cap", cfg.cap, "height bound")->required()->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", cfg.seed, "seed for the rank check");
  verify->add_option("--perturb", cfg.perturb, "add 1 to the Whittaker entry at this content, e.g. 1;1");
  auto* jfun = app.add_subcommand("jfun", "equivariant J-function table");
  add_table_options(jfun);
  auto* localize = app.add_subcommand("localize", "fixed-point localization of the unit class");
  localize->add_option("--input", cfg.input_path, "fixed-point JSON")->check(CLI::ExistingFile);
  localize->add_option("--quasimap", cfg.quasimap_degree, "degree of the SL(2) quasi-map space")
      ->check(CLI::PositiveNumber);
  localize->add_option("--out", cfg.output_path, "output file");
  auto* check = app.add_subcommand("check", "Toda residuals of a table JSON");
  check->add_option("--input", cfg.input_path, "table JSON")->required()->check(CLI::ExistingFile);
  check->add_option("--weights", cfg.weights, "root-lengths or uniform")
      ->check(CLI::IsMember({"root-lengths", "uniform"}));
  check->add_option("--out", cfg.output_path, "output file");

  std::vector<const char*> argv{"zastava"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (z->parsed()) {
      emit(cfg, render(z_table(build_cartan(cfg.type_name), cfg.cap), cfg.format), out);
    } else if (jfun->parsed()) {
      const CartanDatum g = build_cartan(cfg.type_name);
      if (g.affine()) throw UsageError("the J-function is not defined for affine type '" + g.label + "'");
      emit(cfg, render(j_function(z_series_whittaker(g, cfg.cap)), cfg.format), out);
    } else if (verify->parsed()) {
      run_verify(cfg, out);
    } else if (localize->parsed()) {
      run_localize(cfg, out);
    } else if (check->parsed()) {
      return run_check(cfg, out);
    }
    return kExitOk;
  } catch (const Mismatch& e) {
    out << "MISMATCH: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
}

}  // namespace zastava
