#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "fpbl/asymptotics.hpp"
#include "fpbl/combinatorics.hpp"
#include "fpbl/distance.hpp"
#include "fpbl/enumerate.hpp"
#include "fpbl/errors.hpp"
#include "fpbl/io.hpp"
#include "fpbl/pmf.hpp"
#include "fpbl/random.hpp"
#include "fpbl/samplers.hpp"
#include "fpbl/series.hpp"
#include "verify_defaults.hpp"

namespace fpbl::cli {

namespace {

using Json = nlohmann::json;

struct RunConfig {
  std::string format = "csv";
  std::string out_path;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::string mode;  // empty: per-command default

  std::optional<std::size_t> n;
  std::optional<std::size_t> n_max;
  std::string n_grid;
  std::string q;
  std::string q_grid;
  std::string tau;
  std::size_t samples = 0;
  std::size_t count = 1000;
  std::string emit = "fp";
  int theorem = 0;
  bool lemma1 = false;
  std::optional<double> tolerance;
  std::string kind = "lemma1";
  unsigned m = 1;
  double sigma = 3.0 / std::numbers::sqrt2;
  std::string config_path;
};

struct Context {
  RunConfig cfg;
  std::ostream* out;
  std::ostream* err;
  OutputFormat format() const { return parse_output_format(cfg.format); }
};

std::optional<Pattern3> tau_of(const RunConfig& c) {
  if (c.tau.empty() || c.tau == "none") return std::nullopt;
  return parse_pattern3(c.tau);
}

Rational q_of(const RunConfig& c, const char* fallback = nullptr) {
  if (c.q.empty()) {
    if (fallback) return parse_rational(fallback);
    throw CLI::ValidationError("--q", "this command needs --q");
  }
  Rational q = parse_rational(c.q);
  if (sgn(q) <= 0) throw CLI::ValidationError("--q", "q must be positive");
  return q;
}

std::vector<std::size_t> parse_grid(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long long v = std::stoull(item, &pos);
    if (pos != item.size()) throw CLI::ValidationError("--n-grid", "bad entry '" + item + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw CLI::ValidationError("--n-grid", "empty grid");
  return out;
}

std::vector<Rational> parse_q_grid(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    Rational q = parse_rational(item);
    if (sgn(q) <= 0) throw CLI::ValidationError("--q-grid", "q must be positive");
    out.push_back(q);
  }
  return out;
}

std::size_t require_n(const RunConfig& c) {
  if (!c.n) throw CLI::ValidationError("--n", "this command needs --n");
  return *c.n;
}

PmfOptions pmf_options(const RunConfig& c) {
  PmfOptions o;
  o.seed = c.seed;
  o.stream_id = c.stream;
  if (c.samples) o.samples = c.samples;
  return o;
}

void emit(const Context& ctx, const Table& t) {
  if (ctx.cfg.out_path.empty()) {
    write_table(t, ctx.format(), *ctx.out);
    return;
  }
  std::ofstream f(ctx.cfg.out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + ctx.cfg.out_path);
  write_table(t, ctx.format(), f);
}

void emit_text(const Context& ctx, const std::string& text) {
  if (ctx.cfg.out_path.empty()) {
    *ctx.out << text;
    return;
  }
  std::ofstream f(ctx.cfg.out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + ctx.cfg.out_path);
  f << text;
}

std::vector<BigInt> counts_for(std::size_t n, const std::optional<Pattern3>& tau, const std::string& mode) {
  const auto budgets = SeriesBudgets::from_environment();
  if (!tau) return unrestricted_weights(Rational(1), n);
  if (has_series(*tau)) {
    if (mode == "eval" || n > budgets.exact_poly) {
      return column_series(n, n, SeriesMode::exact_eval, budgets).exact_row(n);
    }
    auto c = g_series_poly(n, budgets).polynomials()[n].coeffs();
    c.resize(n + 1);
    return c;
  }
  std::vector<BigInt> out;
  for (auto x : fixed_point_counts(n, tau)) out.emplace_back(static_cast<unsigned long>(x));
  return out;
}

int cmd_count(const Context& ctx) {
  const auto& c = ctx.cfg;
  const std::size_t n = require_n(c);
  const auto tau = tau_of(c);
  if (c.mode == "scaled-float") {
    if (!tau || !has_series(*tau)) throw Refusal("count --mode scaled-float needs tau in {132,321,213}");
    const auto table = column_series(n, n, SeriesMode::scaled_float);
    Table t;
    t.columns = {"k", "scaled"};
    const auto row = table.row(n);
    for (std::size_t k = 0; k < row.size(); ++k) t.rows.push_back({std::uint64_t{k}, row[k]});
    emit(ctx, t);
    return kOk;
  }
  if (c.mode == "monte-carlo") throw Refusal("count supports --mode exact, eval or scaled-float");
  emit(ctx, counts_to_table(counts_for(n, tau, c.mode)));
  return kOk;
}

int cmd_zn(const Context& ctx) {
  const auto& c = ctx.cfg;
  const auto tau = tau_of(c);
  const std::size_t n_max = c.n ? *c.n : c.n_max ? *c.n_max : throw CLI::ValidationError("--n", "zn needs --n or --n-max");
  SeriesTable table;
  if (tau && has_series(*tau)) {
    if (c.q.empty()) {
      table = g_series_poly(n_max);
    } else if (c.mode == "scaled-float") {
      const double q = q_of(c).get_d();
      const double growth = growth_rate(q);
      const auto cols = weighted_columns(q, 1.0 / growth, n_max, n_max);
      std::vector<double> v;
      for (std::size_t n = 0; n <= n_max; ++n) {
        const auto row = cols.row(n);
        long double s = 0;
        for (double x : row) s += x;
        v.push_back(static_cast<double>(s));
      }
      table = SeriesTable{"Z_n(q)/" + format_double(growth) + "^n", q_of(c), SeriesMode::scaled_float, std::move(v)};
    } else {
      table = g_series_eval(q_of(c), n_max);
    }
  } else {
    const Rational q = q_of(c);
    std::vector<Rational> v;
    for (std::size_t n = 0; n <= n_max; ++n) {
      if (!tau) {
        v.push_back(unrestricted_Z(q, n));
        continue;
      }
      Rational z = 0, qk = 1;
      for (auto a : fixed_point_counts(n, tau)) {
        z += qk * static_cast<unsigned long>(a);
        qk *= q;
      }
      v.push_back(z);
    }
    table = SeriesTable{tau ? "Z_n(q," + to_string(*tau) + ")" : "Z_n(q)", q, SeriesMode::exact_eval, std::move(v)};
  }
  Table t = series_to_table(table);
  if (c.n) {
    std::erase_if(t.rows, [&](const std::vector<Cell>& r) { return std::get<std::uint64_t>(r[0]) != *c.n; });
  }
  emit(ctx, t);
  return kOk;
}

PmfMode pmf_mode(const std::string& mode, PmfMode fallback) {
  if (mode.empty()) return fallback;
  return parse_pmf_mode(mode);
}

int cmd_pmf(const Context& ctx) {
  const auto& c = ctx.cfg;
  MeasureSpec spec{require_n(c), q_of(c, "1"), tau_of(c)};
  const auto pmf = fp_pmf(spec, pmf_mode(c.mode, PmfMode::exact), pmf_options(c));
  if (ctx.format() == OutputFormat::json) {
    emit_text(ctx, pmf_to_json(pmf));
  } else {
    emit(ctx, pmf_to_table(pmf));
  }
  return kOk;
}

int cmd_sample(const Context& ctx) {
  const auto& c = ctx.cfg;
  const std::size_t n = require_n(c);
  const Rational q = q_of(c, "1");
  const auto tau = tau_of(c);
  const bool perm = c.emit == "perm";
  if (!perm && c.emit != "fp") throw CLI::ValidationError("--emit", "expected fp or perm");
  RandomSource rng(c.seed, c.stream);

  Table t;
  t.meta = {{"seed", std::to_string(c.seed)},
            {"stream_id", std::to_string(c.stream)},
            {"n", std::to_string(n)},
            {"q", to_string(q)},
            {"tau", tau ? to_string(*tau) : "none"}};
  t.columns = {"sample_index", "fp"};
  if (perm) t.columns.push_back("perm");

  auto push = [&](std::size_t i, std::size_t fp, const Permutation* p) {
    std::vector<Cell> row{std::uint64_t{i}, std::uint64_t{fp}};
    if (p) row.push_back(p->to_string());
    t.rows.push_back(std::move(row));
  };

  if (!tau) {
    UnrestrictedSampler s(n, q);
    for (std::size_t i = 0; i < c.count; ++i) {
      if (perm) {
        const auto p = s(rng);
        push(i, fixed_points(p), &p);
      } else {
        push(i, s.sample_fp(rng), nullptr);
      }
    }
  } else if (perm || !has_series(*tau)) {
    BiasedAvoiderSampler s(n, q, *tau);
    t.meta.emplace_back("route", s.route() == BiasedAvoiderSampler::Route::rejection ? "rejection" : "enumeration");
    std::size_t attempts = 0;
    for (std::size_t i = 0; i < c.count; ++i) {
      const auto d = s(rng);
      attempts += d.attempts;
      push(i, fixed_points(d.permutation), perm ? &d.permutation : nullptr);
    }
    t.meta.emplace_back("attempts", std::to_string(attempts));
  } else {
    const auto budgets = SeriesBudgets::from_environment();
    const PmfMode fallback = n <= std::min<std::size_t>(200, budgets.exact_poly) ? PmfMode::exact : PmfMode::scaled_float;
    FixedPointCountSampler s(MeasureSpec{n, q, tau}, pmf_mode(c.mode, fallback), pmf_options(c));
    for (std::size_t i = 0; i < c.count; ++i) push(i, s(rng), nullptr);
  }
  emit(ctx, t);
  return kOk;
}

Json load_defaults(const RunConfig& c) {
  if (c.config_path.empty()) return Json::parse(kVerifyDefaults);
  std::ifstream f(c.config_path);
  if (!f) throw std::runtime_error("cannot open " + c.config_path);
  return Json::parse(f);
}

void verdict(const Context& ctx, bool pass, const std::string& detail) {
  *ctx.err << (pass ? "PASS " : "FAIL ") << detail << '\n';
}

int cmd_verify(const Context& ctx) {
  const auto& c = ctx.cfg;
  const Json defaults = load_defaults(c);
  const Rational q = q_of(c);

  if (c.lemma1) {
    const auto& d = defaults.at("lemma1");
    const auto grid = !c.n_grid.empty() ? parse_grid(c.n_grid)
                                        : std::vector<std::size_t>{c.n ? *c.n : d.at("n").get<std::size_t>()};
    const double band = c.tolerance ? *c.tolerance
                                    : compare(q, 3) == 0 ? d.at("band_critical").get<double>() : d.at("band").get<double>();
    ConvergenceParams p;
    p.q = q;
    const auto table = convergence_table(ConvergenceKind::lemma1, p, grid);
    emit(ctx, convergence_to_table(table));
    const auto& last = table.rows.back();
    const bool pass = std::fabs(last.ratio - 1) <= band;
    verdict(ctx, pass,
            "lemma1 q=" + to_string(q) + " n=" + std::to_string(last.n) + " ratio=" + format_double(last.ratio) +
                " band=" + format_double(band));
    return pass ? kOk : kFail;
  }

  if (c.theorem < 1 || c.theorem > 5) throw CLI::ValidationError("--theorem", "expected 1..5 (or --lemma1)");
  const auto& d = defaults.at("theorems").at(std::to_string(c.theorem));
  const auto law = limit_law(c.theorem, q);
  const auto grid = !c.n_grid.empty() ? parse_grid(c.n_grid)
                                      : std::vector<std::size_t>{c.n ? *c.n : d.at("n").get<std::size_t>()};
  const double tol = c.tolerance ? *c.tolerance : d.at("tolerance").get<double>();
  PmfOptions options = pmf_options(c);
  if (!c.samples && d.contains("samples")) options.samples = d.at("samples").get<std::size_t>();
  const PmfMode mode = pmf_mode(c.mode, parse_pmf_mode(d.at("mode").get<std::string>()));

  const auto rows = distance_table(c.theorem, q, grid, mode, options);
  emit(ctx, distances_to_table(rows, q, law));

  const auto worst = std::max_element(rows.begin(), rows.end(), [](auto& a, auto& b) { return a.n < b.n; });
  const bool pass = worst->distance < tol;
  bool decreasing = true;
  for (std::size_t i = 1; i < rows.size(); ++i) decreasing = decreasing && rows[i].distance < rows[i - 1].distance;
  std::string detail = "theorem=" + std::to_string(c.theorem) + " q=" + to_string(q) + " n=" + std::to_string(worst->n) +
                       " " + worst->metric + "=" + format_double(worst->distance) + " tolerance=" + format_double(tol);
  if (rows.size() > 1) detail += decreasing ? " decreasing=yes" : " decreasing=no";
  verdict(ctx, pass, detail);
  return pass ? kOk : kFail;
}

int cmd_asym(const Context& ctx) {
  const auto& c = ctx.cfg;
  if (c.kind == "regime") {
    const Rational q = q_of(c);
    const auto p = lemma1(q);
    Table t;
    t.columns = {"q", "regime", "zeta", "prefactor", "polynomial_power", "growth_base", "formula"};
    t.rows.push_back({to_string(q), to_string(p.regime), to_string(p.zeta), p.prefactor, to_string(p.polynomial_power),
                      p.growth_base, p.formula_id});
    emit(ctx, t);
    return kOk;
  }
  if (c.kind == "predict") {
    const Rational q = q_of(c);
    const std::size_t n = require_n(c);
    Table t;
    t.columns = {"n", "q", "log_predicted", "predicted"};
    const auto lg = static_cast<double>(lemma1_predict(q, n, ValueScale::log));
    const auto lin = static_cast<double>(lemma1_predict(q, n, ValueScale::linear));
    t.rows.push_back({std::uint64_t{n}, to_string(q), lg, std::isfinite(lin) ? Cell{lin} : Cell{}});
    emit(ctx, t);
    return kOk;
  }
  if (c.kind == "rayleigh") {
    Table t;
    t.columns = {"m", "sigma", "moment"};
    t.rows.push_back({std::uint64_t{c.m}, c.sigma, rayleigh_moment(c.m, c.sigma)});
    emit(ctx, t);
    return kOk;
  }
  ConvergenceParams p;
  p.q = q_of(c, c.kind == "moments" ? "3" : nullptr);
  p.m = c.m;
  p.theorem_id = c.theorem ? c.theorem : 1;
  p.mode = pmf_mode(c.mode, PmfMode::exact);
  p.options = pmf_options(c);
  const auto grid = !c.n_grid.empty() ? parse_grid(c.n_grid) : std::vector<std::size_t>{require_n(c)};
  const auto table = convergence_table(parse_convergence_kind(c.kind), p, grid);
  emit(ctx, convergence_to_table(table));
  if (table.kind != "distance") *ctx.err << "monotone_tail=" << (table.monotone_tail ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_explore(const Context& ctx) {
  const auto& c = ctx.cfg;
  const auto tau = tau_of(c);
  if (!tau) throw CLI::ValidationError("--tau", "explore needs --tau");
  const std::size_t n_max = c.n_max ? *c.n_max : c.n ? *c.n : 10;
  std::vector<Rational> qs = !c.q_grid.empty() ? parse_q_grid(c.q_grid) : std::vector<Rational>{q_of(c, "1")};
  EnumerationLimits limits;
  if (n_max > limits.avoider_cap) {
    throw Refusal("explore enumerates S_n(tau) and needs n_max <= " + std::to_string(limits.avoider_cap));
  }
  Table t;
  t.columns = {"n", "q", "tau", "mean", "variance", "factorial2", "mean_exact"};
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<BigInt> counts;
    for (auto x : fixed_point_counts(n, tau, limits)) counts.emplace_back(static_cast<unsigned long>(x));
    for (const auto& q : qs) {
      const auto pmf = pmf_from_counts(MeasureSpec{n, q, tau}, counts, Provenance::enumeration);
      const Rational mean = exact_moment(pmf, 1, MomentKind::raw);
      const Rational f2 = n >= 2 ? exact_moment(pmf, 2, MomentKind::factorial) : Rational(0);
      const Rational var = f2 + mean - mean * mean;
      t.rows.push_back({std::uint64_t{n}, to_string(q), to_string(*tau), mean.get_d(), var.get_d(), f2.get_d(),
                        to_string(mean)});
    }
  }
  emit(ctx, t);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx;
  ctx.out = &out;
  ctx.err = &err;
  RunConfig& c = ctx.cfg;

  CLI::App app{"Fixed points of biased and pattern-avoiding random permutations", "fpbl"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", c.out_path, "Write the table to PATH instead of stdout");
  app.add_option("--seed", c.seed, "RNG seed");
  app.add_option("--stream", c.stream, "RNG stream id");
  app.add_option("--mode", c.mode, "Computation mode")
      ->check(CLI::IsMember({"exact", "eval", "scaled-float", "monte-carlo"}));

  auto add_n = [&](CLI::App* s) { s->add_option("--n", c.n, "Length"); };
  auto add_q = [&](CLI::App* s) { s->add_option("--q", c.q, "Bias, rational 'a/b' or decimal"); };
  auto add_tau = [&](CLI::App* s) {
    s->add_option("--tau", c.tau, "Pattern")->check(CLI::IsMember({"123", "132", "213", "231", "312", "321", "none"}));
  };

  auto* count = app.add_subcommand("count", "Counts a_{k,n} of avoiders with k fixed points");
  add_n(count);
  add_tau(count);

  auto* zn = app.add_subcommand("zn", "Partition function Z_n(q,tau)");
  add_n(zn);
  zn->add_option("--n-max", c.n_max, "Emit n = 0..n-max");
  add_q(zn);
  add_tau(zn);

  auto* pmf = app.add_subcommand("pmf", "Law of the number of fixed points");
  add_n(pmf);
  add_q(pmf);
  add_tau(pmf);
  pmf->add_option("--samples", c.samples, "Monte-Carlo sample count");

  auto* sample = app.add_subcommand("sample", "Draw fixed-point counts or permutations");
  add_n(sample);
  add_q(sample);
  add_tau(sample);
  sample->add_option("--count", c.count, "Number of draws");
  sample->add_option("--emit", c.emit, "fp or perm")->check(CLI::IsMember({"fp", "perm"}));

  auto* verify = app.add_subcommand("verify", "Check a limit theorem or the growth lemma at finite n");
  add_n(verify);
  add_q(verify);
  verify->add_option("--theorem", c.theorem, "Theorem 1..5");
  verify->add_flag("--lemma1", c.lemma1, "Check Z_n(q,tau) against its leading-order asymptotics");
  verify->add_option("--n-grid", c.n_grid, "Comma-separated lengths");
  verify->add_option("--samples", c.samples, "Monte-Carlo sample count");
  verify->add_option("--tolerance", c.tolerance, "Override the configured tolerance");
  verify->add_option("--config", c.config_path, "Tolerance defaults (JSON)");

  auto* asym = app.add_subcommand("asym", "Asymptotic predictions and convergence tables");
  asym->add_option("--kind", c.kind, "regime, predict, lemma1, moments, distance or rayleigh")
      ->check(CLI::IsMember({"regime", "predict", "lemma1", "moments", "distance", "rayleigh"}));
  add_n(asym);
  add_q(asym);
  asym->add_option("--n-grid", c.n_grid, "Comma-separated lengths");
  asym->add_option("--m", c.m, "Moment order");
  asym->add_option("--sigma", c.sigma, "Rayleigh scale");
  asym->add_option("--theorem", c.theorem, "Theorem for --kind distance");
  asym->add_option("--samples", c.samples, "Monte-Carlo sample count");

  auto* explore = app.add_subcommand("explore", "Brute-force fixed-point moments for any pattern");
  add_tau(explore);
  explore->add_option("--n-max", c.n_max, "Largest n");
  add_q(explore);
  explore->add_option("--q-grid", c.q_grid, "Comma-separated q values");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*count) return cmd_count(ctx);
    if (*zn) return cmd_zn(ctx);
    if (*pmf) return cmd_pmf(ctx);
    if (*sample) return cmd_sample(ctx);
    if (*verify) return cmd_verify(ctx);
    if (*asym) return cmd_asym(ctx);
    if (*explore) return cmd_explore(ctx);
  } catch (const Refusal& e) {
    err << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kUsage;
}

}  // namespace fpbl::cli
