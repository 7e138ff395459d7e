#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "szeta/convolution.hpp"
#include "szeta/errors.hpp"
#include "szeta/experiments.hpp"
#include "szeta/io.hpp"
#include "szeta/resonator.hpp"
#include "szeta/s_function.hpp"
#include "szeta/zeros.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace szeta;

namespace {

// Subcommand options that may also come from the config file. An option given
// on the command line wins over the file.
struct Binding {
  const CLI::App* owner;
  CLI::Option* option;
  std::string key;
  std::function<void(const Config&)> load;
};

struct Registry {
  std::vector<Binding> items;

  void add(CLI::App* sub, const std::string& name, double& v, const std::string& help) {
    items.push_back({sub, sub->add_option("--" + name, v, help)->capture_default_str(), name,
                     [&v, name](const Config& c) { v = c.get_double(name, v); }});
  }
  void add(CLI::App* sub, const std::string& name, std::uint64_t& v, const std::string& help) {
    items.push_back({sub, sub->add_option("--" + name, v, help)->capture_default_str(), name,
                     [&v, name](const Config& c) { v = c.get_u64(name, v); }});
  }
  void add(CLI::App* sub, const std::string& name, std::string& v, const std::string& help) {
    items.push_back({sub, sub->add_option("--" + name, v, help)->capture_default_str(), name,
                     [&v, name](const Config& c) { v = c.get_string(name).value_or(v); }});
  }
  void add(CLI::App* sub, const std::string& name, std::vector<double>& v, const std::string& help) {
    items.push_back({sub, sub->add_option("--" + name, v, help)->delimiter(','), name,
                     [&v, name](const Config& c) { v = c.get_doubles(name, v); }});
  }

  void apply(const CLI::App* active, const Config& c) const {
    for (const auto& b : items)
      if (b.owner == active && b.option->count() == 0 && c.has(b.key)) b.load(c);
  }
};

Rational parse_rational(const std::string& s) {
  const auto dot = s.find('.');
  try {
    if (dot == std::string::npos) return Rational(s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    Rational scale = 1;
    for (std::size_t i = dot + 1; i < s.size(); ++i) scale *= 10;
    return Rational(digits) / scale;
  } catch (const std::exception&) {
    throw PreconditionError("not a rational number: " + s);
  }
}

std::vector<std::uint64_t> to_primes(const std::vector<double>& xs) {
  std::vector<std::uint64_t> out;
  for (double x : xs) {
    if (!(x >= 2.0) || x != std::floor(x)) throw PreconditionError("prime list entries must be integers >= 2");
    out.push_back(static_cast<std::uint64_t>(x));
  }
  return out;
}

KernelParams make_kernel(double a, double lambda, const std::string& sign) {
  if (sign != "plus" && sign != "minus") throw PreconditionError("--sign must be plus or minus");
  KernelParams k{a, lambda, sign == "plus" ? KernelSign::plus : KernelSign::minus};
  k.validate();
  return k;
}

std::vector<double> read_points(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw PreconditionError("cannot open points file " + path);
  std::vector<double> out;
  std::string line;
  while (std::getline(f, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    double x;
    while (ss >> x) out.push_back(x);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Argument of the zeta function: evaluation, kernels, resonators and experiments"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, out_path, format = "csv";
  std::uint64_t seed = 1;
  int threads = 0;
  app.add_option("--config", config_path, "key=value file supplying option defaults");
  app.add_option("--seed", seed, "64-bit seed for every random choice")->capture_default_str();
  app.add_option("--out", out_path, "write the result here instead of stdout");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--threads", threads, "worker threads (OpenMP builds)");

  Registry reg;

  // Shared numeric settings.
  double abs_tol = 1e-10;
  double a = 0.3, lambda = 3.0;
  std::string sign = "plus";
  auto kernel_opts = [&](CLI::App* sub) {
    reg.add(sub, "a", a, "kernel scale parameter, 0 < a < 1/3");
    reg.add(sub, "lambda", lambda, "kernel frequency parameter");
    reg.add(sub, "sign", sign, "plus or minus");
  };

  auto* zeta_cmd = app.add_subcommand("zeta", "zeta(sigma + i t)");
  double sigma = 0.5;
  std::vector<double> ts;
  reg.add(zeta_cmd, "sigma", sigma, "real part");
  reg.add(zeta_cmd, "t", ts, "imaginary parts, comma separated");
  reg.add(zeta_cmd, "abs-tol", abs_tol, "absolute tolerance");

  auto* s_cmd = app.add_subcommand("s", "S(t) by argument tracking and by zero counting");
  reg.add(s_cmd, "t", ts, "heights, comma separated");
  reg.add(s_cmd, "abs-tol", abs_tol, "absolute tolerance of zeta evaluations");

  auto* zeros_cmd = app.add_subcommand("zeros", "critical-line zeros in [lo, hi], certified by the argument principle");
  double lo = 0.0, hi = 100.0;
  reg.add(zeros_cmd, "lo", lo, "lower end");
  reg.add(zeros_cmd, "hi", hi, "upper end");

  auto* kernel_cmd = app.add_subcommand("kernel-check", "verify the four kernel properties");
  double tol = 1e-6;
  kernel_opts(kernel_cmd);
  reg.add(kernel_cmd, "tol", tol, "tolerance of the numeric checks");

  auto* conv_cmd = app.add_subcommand("convolve", "kernel-smoothed S against the prime sum D");
  double t0 = 1e4 + 0.37, window = 0.0, C_r = 10.0;
  std::string synthetic;
  kernel_opts(conv_cmd);
  reg.add(conv_cmd, "t0", t0, "centre of the smoothing");
  reg.add(conv_cmd, "window", window, "half-width of the integration window (default log t0)");
  reg.add(conv_cmd, "C_r", C_r, "constant of the residual bound C_r (log T)^(a/2)");
  reg.add(conv_cmd, "synthetic-zeros", synthetic, "file of off-line zeros 'gamma beta' whose contribution is added");

  auto* lemma_cmd = app.add_subcommand("lemma1-check", "both sides of the smoothed log zeta identity");
  double max_residual = 1e-4;
  double lemma_sigma = 0.6;
  double t_single = 50.0;
  double lemma_tol = 1e-5;
  kernel_opts(lemma_cmd);
  reg.add(lemma_cmd, "sigma", lemma_sigma, "real part, 1/2 < sigma < 1");
  reg.add(lemma_cmd, "t0", t_single, "height");
  reg.add(lemma_cmd, "tol", lemma_tol, "quadrature tolerance");
  reg.add(lemma_cmd, "max-residual", max_residual, "certification threshold");

  auto* res_cmd = app.add_subcommand("resonator-report", "restrictions, moments and Rankin bounds of a resonator");
  double P = 0.0, Q = 0.0, A = 0.0, V = 0.0, T = 1e6;
  std::uint64_t N = 0;
  std::string A2;
  std::vector<double> primes;
  BoundConstants bc;
  kernel_opts(res_cmd);
  reg.add(res_cmd, "P", P, "lower end of the prime window");
  reg.add(res_cmd, "Q", Q, "upper end of the prime window");
  reg.add(res_cmd, "A", A, "resonator amplitude");
  reg.add(res_cmd, "A2", A2, "exact A^2 as p/q or a decimal (enables rational arithmetic)");
  reg.add(res_cmd, "primes", primes, "explicit prime window, comma separated");
  reg.add(res_cmd, "N", N, "length of the resonator");
  reg.add(res_cmd, "V", V, "target value; with T alone, parameters are chosen from it");
  reg.add(res_cmd, "T", T, "height scale");
  reg.add(res_cmd, "kappa", bc.kappa, "upper V-range constant");
  reg.add(res_cmd, "b_const", bc.b_const, "A = b V");
  reg.add(res_cmd, "d_threshold", bc.d_threshold, "threshold standing in for A^2 / log P -> infinity");
  reg.add(res_cmd, "c_exceptional", bc.c_exceptional, "prefactor of the exceptional-set bound");
  reg.add(res_cmd, "c2_exceptional", bc.c2_exceptional, "exponent constant of the exceptional-set bound");

  auto* clt_cmd = app.add_subcommand("clt", "distribution of pi S(t) / sqrt(log log T / 2) on [T, 2T]");
  std::uint64_t samples = 10000, bins = 40;
  reg.add(clt_cmd, "T", T, "height scale");
  reg.add(clt_cmd, "samples", samples, "number of random heights");
  reg.add(clt_cmd, "bins", bins, "histogram bins on [-4, 4]");

  auto* tail_cmd = app.add_subcommand("tail", "measure of {t in [T, 2T] : +-S(t) >= V}");
  std::vector<double> Vs{0.0, 0.5, 1.0};
  reg.add(tail_cmd, "T", T, "height scale");
  reg.add(tail_cmd, "V", Vs, "thresholds, comma separated");
  reg.add(tail_cmd, "samples", samples, "number of random heights");

  auto* hunt_cmd = app.add_subcommand("hunt", "resonator-weighted search for large S(t)");
  std::uint64_t budget = 200;
  std::string hunt_A2 = "2";
  std::vector<double> hunt_primes{2, 3, 5, 7, 11, 13, 17, 19};
  std::uint64_t hunt_N = 9699690;
  double hunt_lambda = 0.0;
  reg.add(hunt_cmd, "T", T, "height scale");
  reg.add(hunt_cmd, "primes", hunt_primes, "resonator primes, comma separated");
  reg.add(hunt_cmd, "A2", hunt_A2, "exact A^2");
  reg.add(hunt_cmd, "N", hunt_N, "resonator length");
  reg.add(hunt_cmd, "budget", budget, "S evaluations per arm");
  reg.add(hunt_cmd, "a", a, "kernel scale parameter");
  reg.add(hunt_cmd, "lambda", hunt_lambda, "kernel frequency parameter (default log log T)");

  auto* sep_cmd = app.add_subcommand("separate", "greedy separation and short-window measure bounds");
  std::string points_path;
  std::vector<double> points;
  double delta = 0.0, A_S = 1.0;
  kernel_opts(sep_cmd);
  reg.add(sep_cmd, "points", points, "ascending heights, comma separated");
  reg.add(sep_cmd, "points-file", points_path, "file of ascending heights");
  reg.add(sep_cmd, "delta", delta, "minimum gap (default 3 log T)");
  reg.add(sep_cmd, "T", T, "height scale");
  reg.add(sep_cmd, "V", V, "threshold; when positive, smoothed S and window bounds are computed");
  reg.add(sep_cmd, "A_S", A_S, "constant of S(t) <= A_S log t");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Config cfg;
    if (!config_path.empty()) cfg = Config::load(config_path);
    if (app.get_option("--seed")->count() == 0) seed = cfg.get_u64("seed", seed);
    if (app.get_option("--threads")->count() == 0) threads = static_cast<int>(cfg.get_u64("threads", 0));
    if (app.get_option("--format")->count() == 0) format = cfg.get_string("format").value_or(format);
    if (format != "csv" && format != "json") throw PreconditionError("format must be csv or json");
    CLI::App* active = app.get_subcommands().front();
    reg.apply(active, cfg);
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    EvalPrecision prec;
    prec.abs_tol = abs_tol;
    RunResult r;
    r.command = active->get_name();
    r.inputs.push_back({"seed", seed});
    bool certified = true;
    std::string failure;

    if (active == zeta_cmd) {
      if (ts.empty()) throw PreconditionError("zeta: give at least one --t");
      r.inputs.push_back({"sigma", sigma});
      r.inputs.push_back({"abs_tol", abs_tol});
      r.columns = {"sigma", "t", "re", "im", "abs"};
      for (double t : ts) {
        const cplx z = zeta(cplx(sigma, t), prec);
        r.add_row({sigma, t, z.real(), z.imag(), std::abs(z)});
      }
    } else if (active == s_cmd) {
      if (ts.empty()) throw PreconditionError("s: give at least one --t");
      r.columns = {"t", "s_arg", "s_count", "theta", "z", "n_t"};
      for (double t : ts) {
        const auto c = critical_sample(t, prec);
        r.add_row({c.t, c.s_arg, c.s_count, c.theta, c.z, c.n_t});
      }
    } else if (active == zeros_cmd) {
      r.inputs.push_back({"lo", lo});
      r.inputs.push_back({"hi", hi});
      const auto list = build_zero_list(lo, hi, prec);
      r.columns = {"index", "gamma"};
      long idx = static_cast<long>(list.count(lo, 0.0));
      for (double g : list.ordinates()) r.add_row({++idx, g});
      r.summary.push_back({"count", list.ordinates().size()});
      r.summary.push_back({"count_below_lo", list.count(lo, 0.0)});
    } else if (active == kernel_cmd) {
      const auto k = make_kernel(a, lambda, sign);
      r.inputs.push_back({"a", a});
      r.inputs.push_back({"lambda", lambda});
      r.inputs.push_back({"sign", sign});
      r.inputs.push_back({"tol", tol});
      const auto rep = verify_kernel_properties(k, tol);
      r.columns = {"property", "pass", "residual", "grid"};
      for (const auto& c : rep.checks) r.add_row({c.id, c.pass, c.residual, c.grid});
      r.summary.push_back({"fitted_constant", rep.fitted_constant});
      r.summary.push_back({"l2_norm", kernel_l2_norm(k)});
      certified = rep.all_pass();
      failure = "kernel property check failed";
    } else if (active == conv_cmd) {
      const auto k = make_kernel(a, lambda, sign);
      const double W = window > 0.0 ? window : std::log(t0);
      const auto sm = smoothed_S(t0, k, W, prec);
      const auto Dp = build_D_coefficients(k);
      const double D = k.s() * Dp.eval_cos(t0);
      double zc = 0.0;
      if (!synthetic.empty()) zc = zeros_contribution(t0, k, HypotheticalZeroSet(load_synthetic_zeros(synthetic)));
      const double logT = std::log(t0);
      const double bound = C_r * std::pow(logT, a / 2.0);
      r.inputs.push_back({"t0", t0});
      r.inputs.push_back({"a", a});
      r.inputs.push_back({"lambda", lambda});
      r.inputs.push_back({"sign", sign});
      r.inputs.push_back({"window", W});
      r.columns = {"t0", "smoothed_S", "D", "residual", "residual_bound", "zeros_contribution", "quadrature_error",
                   "tail_bound", "ordinates"};
      const double residual = std::abs(sm.value - D);
      r.add_row({t0, sm.value, D, residual, bound, zc, sm.quadrature_error, sm.tail_bound, sm.ordinates_in_window});
      r.summary.push_back({"fitted_C_r", residual / std::pow(logT, a / 2.0)});
    } else if (active == lemma_cmd) {
      const auto k = make_kernel(a, lambda, sign);
      const auto res = lemma1_check(lemma_sigma, t_single, k, prec, lemma_tol);
      r.inputs.push_back({"sigma", lemma_sigma});
      r.inputs.push_back({"t0", t_single});
      r.inputs.push_back({"a", a});
      r.inputs.push_back({"lambda", lambda});
      r.inputs.push_back({"sign", sign});
      r.inputs.push_back({"tol", lemma_tol});
      r.columns = {"sigma", "t", "integral_re", "integral_im", "series_re", "series_im", "pole_re", "pole_im",
                   "residual", "truncation"};
      r.add_row({res.sigma, res.t, res.integral.real(), res.integral.imag(), res.series.real(), res.series.imag(),
                 res.pole_term.real(), res.pole_term.imag(), res.residual, res.truncation});
      r.summary.push_back({"evaluations", res.evaluations});
      certified = res.residual <= max_residual;
      failure = "lemma1 residual " + std::to_string(res.residual) + " exceeds " + std::to_string(max_residual);
    } else if (active == res_cmd) {
      const auto k = make_kernel(a, lambda, sign);
      ResonatorConfig c;
      if (N == 0 && A == 0.0 && A2.empty()) {
        if (!(V > 0.0)) throw PreconditionError("resonator-report: give V (with T) or a full P, Q, A, N configuration");
        c = choose_parameters(V, T, a, bc).config;
      } else {
        if (N == 0) throw PreconditionError("resonator-report: N is required");
        if (!A2.empty()) {
          std::vector<std::uint64_t> list = to_primes(primes);
          if (list.empty()) list = arith::primes_in_range(P, Q).primes;
          c = make_toy_config(list, parse_rational(A2), N, P, Q);
        } else {
          c = make_config(P, Q, A, N, a, T);
        }
        c.T = T;
        c.a = a;
      }
      r.inputs.push_back({"P", c.P});
      r.inputs.push_back({"Q", c.Q});
      r.inputs.push_back({"A", c.A});
      r.inputs.push_back({"N", c.N});
      r.inputs.push_back({"T", c.T});
      r.inputs.push_back({"a", a});
      r.inputs.push_back({"lambda", lambda});
      r.inputs.push_back({"primes", c.window.size()});
      const auto rep = check_restrictions(c, bc);
      r.columns = {"restriction", "holds", "detail"};
      for (const auto& it : rep.items) r.add_row({it.id, it.holds, it.detail});
      const auto mr = ratio_report(c, k);
      const auto rt = rankin_tail(c);
      const auto dm = divisor_mass(c);
      r.summary.push_back({"exact_arithmetic", c.exact()});
      r.summary.push_back({"bump_mass", mr.bump_mass});
      r.summary.push_back({"m1", mr.m1});
      r.summary.push_back({"m2_main", mr.m2_main});
      r.summary.push_back({"fourth_diag", mr.fourth_diag});
      r.summary.push_back({"ratio", mr.ratio});
      r.summary.push_back({"ratio_bound", mr.ratio_bound});
      r.summary.push_back({"min_weight", mr.min_weight});
      r.summary.push_back({"window_flag", mr.window_flag});
      r.summary.push_back({"rankin_tail_exact", rt.exact_ratio});
      r.summary.push_back({"rankin_tail_bound", rt.bound});
      r.summary.push_back({"divisor_D", dm.D});
      r.summary.push_back({"divisor_mass_exact", dm.exact_ratio});
      r.summary.push_back({"divisor_mass_bound", dm.bound});
      if (V > 0.0 && c.T > 0.0) {
        const double logT = std::log(c.T);
        if (mr.ratio >= 8.0 * V)
          r.summary.push_back({"measure_lower_bound", measure_lower_bound(mr, V, logT)});
        else
          r.summary.push_back({"measure_lower_bound", "ratio below 8V"});
        r.summary.push_back({"exceptional_bound", exceptional_measure_bound(V, c.T, lambda, bc.c2_exceptional,
                                                                             bc.c_exceptional)});
      }
    } else if (active == clt_cmd) {
      const auto res = clt_histogram(T, samples, bins, seed, prec);
      r.inputs.push_back({"T", T});
      r.inputs.push_back({"samples", samples});
      r.inputs.push_back({"bins", bins});
      r.columns = {"bin_lo", "bin_hi", "count", "normal_expected"};
      const double width = (res.histogram.hi - res.histogram.lo) / static_cast<double>(bins);
      for (std::size_t i = 0; i < bins; ++i) {
        const double b0 = res.histogram.lo + width * static_cast<double>(i);
        const double b1 = b0 + width;
        const double p = 0.5 * (std::erfc(-b1 / std::numbers::sqrt2) - std::erfc(-b0 / std::numbers::sqrt2));
        r.add_row({b0, b1, res.histogram.counts[i], p * static_cast<double>(samples)});
      }
      r.summary.push_back({"ks", res.ks});
      r.summary.push_back({"mean", res.mean});
      r.summary.push_back({"stderr_mean", res.stderr_mean});
      r.summary.push_back({"variance", res.variance});
    } else if (active == tail_cmd) {
      if (samples == 0) throw PreconditionError("tail: need samples > 0");
      r.inputs.push_back({"T", T});
      r.inputs.push_back({"samples", samples});
      const auto grid = grid_points({T, 2.0 * T, samples, GridMode::random}, seed);
      auto s = sample_S(grid, prec);
      auto neg = s;
      for (auto& v : neg) v = -v;
      r.columns = {"V", "side", "hits", "samples", "measure", "ci_lo", "ci_hi", "one_sided"};
      for (double v : Vs) {
        for (int side = 0; side < 2; ++side) {
          const auto e = tail_from_samples(side == 0 ? s : neg, v, T);
          r.add_row({v, side == 0 ? "+S" : "-S", e.hits, e.samples, e.measure_estimate, e.ci_lo, e.ci_hi,
                     e.one_sided});
        }
      }
    } else if (active == hunt_cmd) {
      const double lam = hunt_lambda > 0.0 ? hunt_lambda : std::log(std::log(T));
      const auto k = make_kernel(a, lam, "plus");
      const auto c = make_toy_config(to_primes(hunt_primes), parse_rational(hunt_A2), hunt_N);
      r.inputs.push_back({"T", T});
      r.inputs.push_back({"A2", hunt_A2});
      r.inputs.push_back({"N", hunt_N});
      r.inputs.push_back({"budget", budget});
      r.inputs.push_back({"a", a});
      r.inputs.push_back({"lambda", lam});
      const auto res = resonance_hunt(T, c, k, budget, seed, {}, prec);
      r.columns = {"arm", "rank", "t", "t_eval", "S", "D", "weight"};
      for (int arm = 0; arm < 2; ++arm) {
        const auto& list = arm == 0 ? res.candidates : res.uniform;
        for (std::size_t i = 0; i < list.size(); ++i)
          r.add_row({arm == 0 ? "weighted" : "uniform", i + 1, list[i].t, list[i].t_eval, list[i].S, list[i].D,
                     list[i].weight});
      }
      r.summary.push_back({"weighted_mean_D", res.weighted_mean_D});
      r.summary.push_back({"weighted_mean_D_stderr", res.weighted_mean_D_stderr});
      r.summary.push_back({"uniform_mean_D", res.uniform_mean_D});
      r.summary.push_back({"uniform_mean_D_stderr", res.uniform_mean_D_stderr});
      r.summary.push_back({"m2_over_m1", res.m2_over_m1});
      r.summary.push_back({"acceptance_rate", res.acceptance_rate});
      r.summary.push_back({"grid_step", res.grid_step});
      r.summary.push_back({"peak_offset", res.peak_offset});
      r.summary.push_back({"best_abs_S_weighted", res.best_abs_S_weighted});
      r.summary.push_back({"best_abs_S_uniform", res.best_abs_S_uniform});
    } else if (active == sep_cmd) {
      auto pts = points;
      if (!points_path.empty()) {
        const auto more = read_points(points_path);
        pts.insert(pts.end(), more.begin(), more.end());
      }
      const double logT = std::log(T);
      const double d = delta > 0.0 ? delta : 3.0 * logT;
      const auto kept = greedy_separation(pts, d);
      r.inputs.push_back({"delta", d});
      r.inputs.push_back({"T", T});
      r.inputs.push_back({"V", V});
      r.columns = {"t", "smoothed_S", "window_bound"};
      double total = 0.0;
      const auto k = make_kernel(a, lambda, sign);
      for (double t : kept) {
        if (V > 0.0) {
          const double W = std::log(t);
          const auto sm = smoothed_S(t, k, W, prec);
          const bool ok = sm.value >= 2.5 * V;
          const double b = ok ? window_measure_bound(t, V, k, logT, sm.value, A_S) : 0.0;
          total += b;
          r.add_row({t, sm.value, b});
        } else {
          r.add_row({t, nullptr, nullptr});
        }
      }
      r.summary.push_back({"input_points", pts.size()});
      r.summary.push_back({"kept_points", kept.size()});
      if (V > 0.0) r.summary.push_back({"total_measure_bound", total});
    }

    const auto fmt = format == "json" ? OutputFormat::json : OutputFormat::csv;
    if (out_path.empty()) {
      write_result(std::cout, r, fmt);
    } else {
      std::ofstream f(out_path);
      if (!f) throw PreconditionError("cannot write " + out_path);
      write_result(f, r, fmt);
    }
    if (!certified) throw CertificationError(failure);
    return 0;
  } catch (const Error& e) {
    std::cerr << "szeta: " << e.what() << '\n';
    return static_cast<int>(e.error_class());
  } catch (const std::exception& e) {
    std::cerr << "szeta: " << e.what() << '\n';
    return 2;
  }
}
