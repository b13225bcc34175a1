// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#include "wlsq/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "wlsq/cli/config_file.hpp"
#include "wlsq/cli/csv.hpp"
#include "wlsq/cli/grid.hpp"
#include "wlsq/closed_form.hpp"
#include "wlsq/config.hpp"
#include "wlsq/errors.hpp"
#include "wlsq/monte_carlo.hpp"
#include "wlsq/spectra.hpp"

#ifndef WLSQ_VERSION
#define WLSQ_VERSION "dev"
#endif

namespace wlsq::cli {

namespace {

constexpr double kZThreshold = 5.0;

// Raw flag storage. A flag only takes effect if it was given; otherwise the config file,
// then the built-in default, supplies the value.
struct Knobs {
  double n = 0, mu = 0, p = 0, alpha = 0, beta = 0, gamma = 0, sigma = 0;
  std::string seed;
  double n_theta = 0, n_noise = 0;
  std::size_t workers = 1;
  std::string config_path;
  std::string out_path;
  std::map<std::string, CLI::Option*> given;
};

const std::map<std::string, std::string>& defaults() {
  static const std::map<std::string, std::string> d = {
      {"n", "16"},     {"mu", "2"},     {"alpha", "0"},      {"beta", "0"},
      {"gamma", "0"},  {"sigma", "0"},  {"seed", "0"},       {"n-theta", "1000"},
      {"n-noise", "10"}};
  return d;
}

void add_model_flags(CLI::App* app, Knobs& k) {
  k.given["n"] = app->add_option("--n", k.n, "number of data points N");
  k.given["mu"] = app->add_option("--mu", k.mu, "P / N (integer >= 1)");
  k.given["p"] = app->add_option("--p", k.p, "learned width p (default N)");
  k.given["alpha"] = app->add_option("--alpha", k.alpha, "data-side weight exponent");
  k.given["beta"] = app->add_option("--beta", k.beta, "parameter-side weight exponent");
  k.given["gamma"] = app->add_option("--gamma", k.gamma, "prior decay exponent (>= 0)");
  k.given["sigma"] = app->add_option("--sigma", k.sigma, "noise level (>= 0)");
  k.given["seed"] = app->add_option("--seed", k.seed, "master RNG seed (unsigned 64-bit)");
  app->add_option("--config", k.config_path, "key = value file; flags take precedence");
}

void add_sim_flags(CLI::App* app, Knobs& k) {
  k.given["n-theta"] = app->add_option("--n-theta", k.n_theta, "theta draws per noise replicate");
  k.given["n-noise"] = app->add_option("--n-noise", k.n_noise, "noise replicates");
  app->add_option("--workers", k.workers, "worker threads (0 = all cores); results do not depend on it");
}

class Resolver {
 public:
  explicit Resolver(const Knobs& k) : k_(k) {
    if (!k.config_path.empty()) file_ = load_config_file(k.config_path);
    static const char* known[] = {"n",     "mu",    "p",     "alpha",   "beta",
                                  "gamma", "sigma", "seed",  "n-theta", "n-noise"};
    for (const auto& [key, _] : file_)
      if (std::find(std::begin(known), std::end(known), key) == std::end(known))
        throw ConfigError(k.config_path + ": unknown key '" + key + "'");
  }

  std::optional<std::string> text(const std::string& key) const {
    if (auto it = k_.given.find(key); it != k_.given.end() && it->second->count() > 0)
      return it->second->as<std::string>();
    if (auto it = file_.find(key); it != file_.end()) return it->second;
    if (auto it = defaults().find(key); it != defaults().end()) return it->second;
    return std::nullopt;
  }

  double real(const std::string& key) const { return parse_number(*text(key), key); }

  std::size_t count(const std::string& key) const { return to_count(real(key), key); }

  std::uint64_t seed() const {
    const std::string s = *text("seed");
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      throw ConfigError("invalid seed '" + s + "' (expected an unsigned 64-bit integer)");
    return v;
  }

  static std::size_t to_count(double v, const std::string& key) {
    if (!(v >= 1.0) || v != std::floor(v) || v > 1e15)
      throw ConfigError(key + " must be a positive integer (got " + format_double(v) + ")");
    return static_cast<std::size_t>(v);
  }

  ExperimentConfig config() const {
    const std::size_t N = count("n");
    const std::size_t mu = count("mu");
    const auto p_text = text("p");
    const std::size_t p = p_text ? to_count(parse_number(*p_text, "p"), "p") : N;
    return make_config(N, mu, p, real("alpha"), real("beta"), real("gamma"), real("sigma"), seed());
  }

 private:
  const Knobs& k_;
  std::map<std::string, std::string> file_;
};

std::string describe(const ExperimentConfig& c) {
  std::ostringstream s;
  s << "N=" << c.N << " P=" << c.P << " mu=" << c.mu() << " p=" << c.p
    << " alpha=" << format_double(c.alpha) << " beta=" << format_double(c.beta)
    << " gamma=" << format_double(c.gamma) << " sigma=" << format_double(c.sigma)
    << " seed=" << c.seed;
  return s.str();
}

std::vector<std::string> provenance(const std::string& command, const ExperimentConfig& c) {
  return {std::string("wlsq ") + WLSQ_VERSION, "command: " + command, "config: " + describe(c)};
}

// Opens --out if given; otherwise hands back the fallback stream.
struct Sink {
  std::unique_ptr<std::ofstream> file;
  std::ostream* stream;

  Sink(const std::string& path, std::ostream& fallback) : stream(&fallback) {
    if (path.empty()) return;
    file = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file) throw ConfigError("cannot open output file '" + path + "'");
    stream = file.get();
  }
  std::ostream& operator*() { return *stream; }
};

// ---------------------------------------------------------------- theory

int cmd_theory(const Knobs& k, std::ostream& out) {
  const ExperimentConfig c = Resolver(k).config();
  c.validate();
  const TheoryError t = evaluate_theory(c);

  write_provenance(out, provenance("theory", c));
  out << "regime:    " << to_string(t.regime) << '\n'
      << "e_clean:   " << format_double(t.e_clean) << '\n'
      << "e_noise:   " << format_double(t.e_noise) << '\n'
      << "var_noise: " << format_double(t.var_noise) << '\n'
      << "e_total:   " << format_double(t.total()) << '\n';

  if (!k.out_path.empty()) {
    Sink sink(k.out_path, out);
    write_provenance(*sink, provenance("theory", c));
    write_csv_row(*sink, {"regime", "e_clean", "e_noise", "var_noise", "e_total"});
    write_csv_row(*sink, {std::string(to_string(t.regime)), format_double(t.e_clean),
                          format_double(t.e_noise), format_double(t.var_noise),
                          format_double(t.total())});
  }
  return kExitOk;
}

// ---------------------------------------------------------------- simulate

int cmd_simulate(const Knobs& k, bool assert_z, std::ostream& out, std::ostream& err) {
  const Resolver r(k);
  const ExperimentConfig c = r.config();
  c.validate();
  const std::size_t n_theta = r.count("n-theta");
  const std::size_t n_noise = r.count("n-noise");

  SimulationReport rep = simulate_generalization(c, n_theta, n_noise, {k.workers, true});

  std::string theory_note;
  try {
    rep.attach_theory(evaluate_theory(c).total());
  } catch (const ConfigError& e) {
    theory_note = e.what();
  }

  auto lines = provenance("simulate", c);
  lines.push_back("n_theta=" + std::to_string(n_theta) + " n_noise=" + std::to_string(n_noise));
  write_provenance(out, lines);
  out << "mean_error:         " << format_double(rep.mean_error) << '\n'
      << "std_error:          " << format_double(rep.std_error) << '\n'
      << "noise_var_estimate: " << format_double(rep.noise_var_estimate) << '\n'
      << "clean_mean:         " << format_double(rep.clean_mean) << '\n'
      << "noise_mean:         " << format_double(rep.noise_mean) << '\n';

  bool pass = true;
  if (!rep.theory_total) {
    out << "theory_total:       unavailable (" << theory_note << ")\n";
    pass = false;
  } else {
    out << "theory_total:       " << format_double(*rep.theory_total) << '\n';
    if (rep.z_score) {
      pass = std::abs(*rep.z_score) <= kZThreshold;
      out << "z_score:            " << format_double(*rep.z_score) << '\n'
          << "check:              |z| <= 5 " << (pass ? "pass" : "FAIL") << '\n';
    } else if (rep.exact_match) {
      out << "z_score:            undefined (theory is 0); exact match\n";
    } else {
      pass = false;
      out << "z_score:            undefined; estimate differs from theory\n";
    }
  }

  if (!k.out_path.empty()) {
    Sink sink(k.out_path, out);
    write_provenance(*sink, lines);
    write_csv_row(*sink, {"mean_error", "std_error", "noise_var_estimate", "n_theta", "n_noise",
                          "seed", "theory_total", "z_score"});
    write_csv_row(*sink, {format_double(rep.mean_error), format_double(rep.std_error),
                          format_double(rep.noise_var_estimate), std::to_string(n_theta),
                          std::to_string(n_noise), std::to_string(c.seed),
                          format_optional(rep.theory_total), format_optional(rep.z_score)});
  }

  if (assert_z && !pass) {
    err << "statistical check failed\n";
    return kExitStatistical;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  std::string var;
  std::string grid;
  std::string series;
  bool simulate = false;
  bool singular_values = false;
};

void set_variable(ExperimentConfig& c, const std::string& var, double v) {
  if (var == "p") {
    c.p = Resolver::to_count(v, "p");
  } else if (var == "alpha") {
    c.alpha = v;
  } else if (var == "beta") {
    c.beta = v;
  } else if (var == "gamma") {
    c.gamma = v;
  } else if (var == "sigma") {
    c.sigma = v;
  } else {
    throw ConfigError("cannot sweep '" + var + "' (choose one of p, alpha, beta, gamma, sigma)");
  }
}

std::vector<std::string> sweep_row(ExperimentConfig c, const std::string& var, double value,
                                   bool simulate, std::size_t n_theta, std::size_t n_noise) {
  std::vector<std::string> row(std::size(kSweepHeader));
  row[0] = format_double(value);
  try {
    set_variable(c, var, value);
    c.validate();
    row[1] = std::string(to_string(c.regime()));
    const TheoryError t = evaluate_theory(c);
    row[2] = format_double(t.e_clean);
    row[3] = format_double(t.e_noise);
    row[4] = format_double(t.var_noise);
    row[5] = format_double(t.total());
    if (simulate) {
      SimulationReport rep = simulate_generalization(c, n_theta, n_noise, {1, true});
      rep.attach_theory(t.total());
      row[6] = format_double(rep.mean_error);
      row[7] = format_double(rep.std_error);
      row[8] = format_optional(rep.z_score);
    }
  } catch (const ConfigError& e) {
    row[9] = e.what();
  } catch (const NumericalError& e) {
    row[9] = e.what();
  }
  return row;
}

// Evaluates fn(i) for i < n on `workers` threads; results land in index order.
template <class Fn>
auto parallel_map(std::size_t n, std::size_t workers, Fn fn) {
  std::vector<decltype(fn(std::size_t{}))> results(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) results[i] = fn(i);
  };
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, n);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return results;
}

int cmd_singular_values(const ExperimentConfig& c, const SweepArgs& s, const std::vector<double>& grid,
                        const Knobs& k, std::ostream& out) {
  if (s.var != "alpha") throw ConfigError("--singular-values sweeps alpha only");
  if (!s.series.empty()) throw ConfigError("--singular-values does not take --series");
  if (c.p >= c.N) throw ConfigError("--singular-values needs p < N");

  const auto spectra = parallel_map(grid.size(), k.workers, [&](std::size_t i) {
    return weighted_tail_singular_values(c.N, c.p, grid[i]);
  });

  Sink sink(k.out_path, out);
  auto lines = provenance("sweep", c);
  lines.push_back("singular values of Lambda_N^alpha Psi_tail; alpha grid=" + s.grid);
  write_provenance(*sink, lines);
  write_csv_row(*sink, {"swept_value", "index", "singular_value"});
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (Eigen::Index j = 0; j < spectra[i].size(); ++j)
      write_csv_row(*sink, {format_double(grid[i]), std::to_string(j), format_double(spectra[i][j])});
  return kExitOk;
}

int cmd_sweep(const Knobs& k, const SweepArgs& s, std::ostream& out) {
  const Resolver r(k);
  const ExperimentConfig base = r.config();
  // Only N and P need to be valid up front; p and the swept value are checked per row.
  {
    ExperimentConfig probe = base;
    probe.p = 1;
    probe.validate();
  }
  const std::vector<double> grid = parse_grid(s.grid);
  if (s.singular_values) return cmd_singular_values(base, s, grid, k, out);

  // --series var=v1,v2 repeats the sweep for each value and prepends a series_value column.
  std::string series_var;
  std::vector<double> series_values{0.0};
  if (!s.series.empty()) {
    const auto eq = s.series.find('=');
    if (eq == std::string::npos) throw ConfigError("--series expects var=v1,v2,...");
    series_var = s.series.substr(0, eq);
    if (series_var == s.var) throw ConfigError("--series variable must differ from --sweep");
    series_values = parse_grid(s.series.substr(eq + 1));
    ExperimentConfig probe = base;
    set_variable(probe, series_var, series_values.front());
  }

  const std::size_t n_theta = s.simulate ? r.count("n-theta") : 0;
  const std::size_t n_noise = s.simulate ? r.count("n-noise") : 0;

  const std::size_t per_series = grid.size();
  const auto rows = parallel_map(series_values.size() * per_series, k.workers, [&](std::size_t i) {
    ExperimentConfig c = base;
    if (!series_var.empty()) set_variable(c, series_var, series_values[i / per_series]);
    return sweep_row(c, s.var, grid[i % per_series], s.simulate, n_theta, n_noise);
  });

  Sink sink(k.out_path, out);
  auto lines = provenance("sweep", base);
  lines.push_back("sweep=" + s.var + " grid=" + s.grid +
                  (series_var.empty() ? std::string() : " series=" + s.series));
  lines.push_back(s.simulate ? "simulate: n_theta=" + std::to_string(n_theta) +
                                   " n_noise=" + std::to_string(n_noise)
                             : std::string("simulate: off"));
  write_provenance(*sink, lines);

  std::vector<std::string> header(std::begin(kSweepHeader), std::end(kSweepHeader));
  if (!series_var.empty()) header.insert(header.begin(), "series_value");
  write_csv_row(*sink, header);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (series_var.empty()) {
      write_csv_row(*sink, rows[i]);
    } else {
      std::vector<std::string> row = rows[i];
      row.insert(row.begin(), format_double(series_values[i / per_series]));
      write_csv_row(*sink, row);
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
  std::string kind;
  unsigned n = 3;
  double sigma_k = 1.0;
  unsigned degree = 2;
  std::size_t k_max = 10;
  double zeta = 1.0;
  bool k_max_given = false;
};

int cmd_spectrum(const SpectrumArgs& a, const std::string& out_path, std::ostream& out) {
  KernelSpectrum s;
  std::string params;
  if (a.kind == "gaussian") {
    s = gaussian_sphere_spectrum(a.n, a.sigma_k, a.k_max);
    params = "n=" + std::to_string(a.n) + " sigma_k=" + format_double(a.sigma_k);
  } else if (a.kind == "polynomial") {
    s = a.k_max_given ? polynomial_sphere_spectrum(a.n, a.degree, a.k_max)
                      : polynomial_sphere_spectrum(a.n, a.degree);
    params = "n=" + std::to_string(a.n) + " d=" + std::to_string(a.degree);
  } else if (a.kind == "ntk") {
    s = ntk_decay_spectrum(a.n, a.k_max);
    params = "n=" + std::to_string(a.n);
  } else if (a.kind == "algebraic") {
    s = algebraic_decay_spectrum(a.zeta, a.k_max);
    params = "zeta=" + format_double(a.zeta);
  } else {
    throw ConfigError("unknown spectrum kind '" + a.kind +
                      "' (choose gaussian, polynomial, ntk or algebraic)");
  }

  Sink sink(out_path, out);
  write_provenance(*sink, {std::string("wlsq ") + WLSQ_VERSION, "command: spectrum",
                           "kind=" + a.kind + " " + params + " k_max=" +
                               std::to_string(s.entries.empty() ? 0 : s.entries.back().order)});
  write_csv_row(*sink, {"k", "multiplicity", "eigenvalue"});
  for (const auto& e : s.entries)
    write_csv_row(*sink, {std::to_string(e.order), std::to_string(e.multiplicity),
                          format_double(e.eigenvalue)});
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted least-squares random Fourier feature regression: theory, simulation, sweeps"};
  app.set_version_flag("--version", std::string("wlsq ") + WLSQ_VERSION);
  app.require_subcommand(1);

  Knobs theory_k, sim_k, sweep_k;
  auto* theory = app.add_subcommand("theory", "closed-form generalization error");
  add_model_flags(theory, theory_k);
  theory->add_option("--out", theory_k.out_path, "also write a one-row CSV here");

  bool assert_z = false;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate with a z-score against theory");
  add_model_flags(simulate, sim_k);
  add_sim_flags(simulate, sim_k);
  simulate->add_flag("--assert", assert_z, "exit 4 unless |z| <= 5 (or an exact match)");
  simulate->add_option("--out", sim_k.out_path, "also write a one-row CSV here");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "theory (and optional simulation) over a grid");
  add_model_flags(sweep, sweep_k);
  add_sim_flags(sweep, sweep_k);
  sweep->add_option("--sweep", sweep_args.var, "variable: p, alpha, beta, gamma or sigma")->required();
  sweep->add_option("--grid", sweep_args.grid, "start:stop:step (stop exclusive) or v1,v2,...")->required();
  sweep->add_option("--series", sweep_args.series, "var=v1,v2,... repeat the sweep per value");
  sweep->add_flag("--simulate", sweep_args.simulate, "fill the mc_* columns");
  sweep->add_flag("--singular-values", sweep_args.singular_values,
                  "emit singular values of Lambda_N^alpha Psi_tail per alpha instead");
  sweep->add_option("--out", sweep_k.out_path, "CSV path (default stdout)");

  SpectrumArgs spec_args;
  std::string spectrum_out;
  auto* spectrum = app.add_subcommand("spectrum", "kernel eigenvalue spectra on the sphere");
  spectrum->add_option("--kind", spec_args.kind, "gaussian, polynomial, ntk or algebraic")->required();
  spectrum->add_option("--n", spec_args.n, "sphere S^{n-1} dimension n (>= 2)");
  spectrum->add_option("--sigma-k", spec_args.sigma_k, "Gaussian kernel width");
  spectrum->add_option("--degree", spec_args.degree, "polynomial degree d");
  auto* kmax = spectrum->add_option("--k-max", spec_args.k_max, "largest order k");
  spectrum->add_option("--zeta", spec_args.zeta, "algebraic decay exponent");
  spectrum->add_option("--out", spectrum_out, "CSV path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*theory) return cmd_theory(theory_k, out);
    if (*simulate) return cmd_simulate(sim_k, assert_z, out, err);
    if (*sweep) return cmd_sweep(sweep_k, sweep_args, out);
    if (*spectrum) {
      spec_args.k_max_given = kmax->count() > 0;
      return cmd_spectrum(spec_args, spectrum_out, out);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitConfig;
}

}  // namespace wlsq::cli
