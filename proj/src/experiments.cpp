#include "szeta/experiments.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <exception>
#include <numbers>
#include <numeric>
#include <random>

#include "szeta/errors.hpp"
#include "szeta/s_function.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace szeta {

namespace {

constexpr double kPi = std::numbers::pi;

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

struct MeanStderr {
  double mean = 0.0;
  double stderr_mean = 0.0;
};

MeanStderr plain_stats(std::span<const double> xs) {
  MeanStderr out;
  if (xs.empty()) return out;
  const double n = static_cast<double>(xs.size());
  out.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  if (xs.size() < 2) return out;
  double ss = 0.0;
  for (double x : xs) ss += (x - out.mean) * (x - out.mean);
  out.stderr_mean = std::sqrt(ss / (n - 1.0) / n);
  return out;
}

// Batch means: correlated chain output split into contiguous batches.
MeanStderr batch_stats(std::span<const double> xs, std::size_t batches) {
  if (batches < 2 || xs.size() < 2 * batches) return plain_stats(xs);
  const std::size_t len = xs.size() / batches;
  std::vector<double> means(batches);
  for (std::size_t b = 0; b < batches; ++b)
    means[b] = std::accumulate(xs.begin() + b * len, xs.begin() + (b + 1) * len, 0.0) / static_cast<double>(len);
  auto s = plain_stats(means);
  s.mean = std::accumulate(xs.begin(), xs.begin() + batches * len, 0.0) / static_cast<double>(batches * len);
  return s;
}

double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

void GridSpec::validate() const {
  if (!(t_lo < t_hi)) throw PreconditionError("grid: need t_lo < t_hi");
  if (count == 0) throw PreconditionError("grid: need a positive sample count");
  if (mode == GridMode::resonator_weighted)
    throw PreconditionError("grid: resonator-weighted points come from resonance_hunt");
}

std::vector<double> grid_points(const GridSpec& g, std::uint64_t seed) {
  g.validate();
  std::vector<double> ts(g.count);
  if (g.mode == GridMode::uniform) {
    const double h = (g.t_hi - g.t_lo) / static_cast<double>(g.count);
    for (std::size_t i = 0; i < g.count; ++i) ts[i] = g.t_lo + h * (static_cast<double>(i) + 0.5);
  } else {
    std::mt19937_64 rng(seed);
    for (auto& t : ts) t = uniform_in(rng, g.t_lo, g.t_hi);
  }
  return ts;
}

std::vector<double> sample_S(std::span<const double> ts, const EvalPrecision& prec) {
  std::vector<double> out(ts.size());
  std::exception_ptr failure;
  const auto n = static_cast<long>(ts.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = s_by_argument(ts[i], prec);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

double ks_normal(std::vector<double> xs) {
  if (xs.empty()) throw PreconditionError("ks_normal: empty sample");
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double F = normal_cdf(xs[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - F, F - static_cast<double>(i) / n});
  }
  return d;
}

CltResult clt_histogram(double T, std::size_t samples, std::size_t bins, std::uint64_t seed, const EvalPrecision& prec) {
  if (!(T >= 1e3)) throw PreconditionError("clt_histogram: need T >= 1e3");
  if (samples < 100) throw PreconditionError("clt_histogram: need at least 100 samples");
  if (bins == 0) throw PreconditionError("clt_histogram: need at least one bin");
  CltResult r;
  r.T = T;
  r.seed = seed;
  r.ts = grid_points({T, 2.0 * T, samples, GridMode::random}, seed);
  const auto s = sample_S(r.ts, prec);
  const double scale = kPi / std::sqrt(0.5 * std::log(std::log(T)));
  r.normalized.resize(s.size());
  std::transform(s.begin(), s.end(), r.normalized.begin(), [&](double v) { return scale * v; });

  r.histogram = {-4.0, 4.0, std::vector<std::size_t>(bins, 0)};
  const double width = 8.0 / static_cast<double>(bins);
  for (double x : r.normalized) {
    const auto b = static_cast<long>(std::floor((x + 4.0) / width));
    r.histogram.counts[static_cast<std::size_t>(std::clamp(b, 0L, static_cast<long>(bins) - 1))]++;
  }
  const auto st = plain_stats(r.normalized);
  r.mean = st.mean;
  r.stderr_mean = st.stderr_mean;
  r.variance = st.stderr_mean * st.stderr_mean * static_cast<double>(samples);
  r.ks = ks_normal(r.normalized);
  return r;
}

TailEstimate tail_from_samples(std::span<const double> values, double V, double length) {
  if (values.empty()) throw PreconditionError("tail: need samples");
  TailEstimate e;
  e.V = V;
  e.samples = values.size();
  e.hits = static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [V](double s) { return s >= V; }));
  const double n = static_cast<double>(e.samples);
  const double p = static_cast<double>(e.hits) / n;
  e.measure_estimate = p * length;
  if (e.hits == 0) {
    e.one_sided = true;
    e.ci_lo = 0.0;
    e.ci_hi = (1.0 - std::pow(0.05, 1.0 / n)) * length;
    return e;
  }
  const double z = 1.959963984540054;
  const double denom = 1.0 + z * z / n;
  const double center = (p + z * z / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n)) / denom;
  e.ci_lo = std::max(0.0, center - half) * length;
  e.ci_hi = std::min(1.0, center + half) * length;
  return e;
}

TailResult tail_measure(double T, double V, std::size_t samples, std::uint64_t seed, const EvalPrecision& prec) {
  if (!(T > 0.0)) throw PreconditionError("tail_measure: need T > 0");
  if (samples == 0) throw PreconditionError("tail_measure: need samples > 0");
  const auto ts = grid_points({T, 2.0 * T, samples, GridMode::random}, seed);
  auto s = sample_S(ts, prec);
  TailResult r;
  r.plus = tail_from_samples(s, V, T);
  for (auto& v : s) v = -v;
  r.minus = tail_from_samples(s, V, T);
  return r;
}

double kernel_peak_offset(const KernelParams& k) {
  k.validate();
  const double q = kPi / (2.0 * k.center());
  const double lo = k.sign == KernelSign::plus ? -2.0 * q : 0.0;
  const double hi = k.sign == KernelSign::plus ? 0.0 : 2.0 * q;
  auto neg = [&](double u) { return -k.s() * kernel(k, u); };
  return boost::math::tools::brent_find_minima(neg, lo, hi, 40).first;
}

HuntResult resonance_hunt(double T, const ResonatorConfig& config, const KernelParams& k, std::size_t budget,
                          std::uint64_t seed, const HuntOptions& opt, const EvalPrecision& prec) {
  k.validate();
  if (!(T >= 1e3)) throw PreconditionError("resonance_hunt: need T >= 1e3");
  if (!(opt.jump_probability >= 0.0 && opt.jump_probability <= 1.0) || opt.neighbor_reach < 1 || opt.thin == 0)
    throw PreconditionError("resonance_hunt: invalid chain options");
  for (auto p : config.window.primes)
    if (config.A / std::sqrt(static_cast<double>(p)) > 1.0) throw PreconditionError("resonance_hunt: f(p) > 1");

  HuntResult out;
  ResonatorConfig cfg = config;
  cfg.T = T;
  out.m2_over_m1 = m2_main(cfg, k) / m1(cfg, MomentMode::exact);
  out.peak_offset = kernel_peak_offset(k);
  if (budget == 0) return out;

  const DirichletPoly R = resonator_poly(cfg);
  const DirichletPoly Dp = build_D_coefficients(k);
  const double freq = std::max({1.0, R.max_log_n(), Dp.max_log_n()});
  out.grid_step = kPi / (8.0 * freq);
  const auto cells = static_cast<std::uint64_t>(std::floor(T / out.grid_step));
  auto point = [&](std::uint64_t i) { return T + out.grid_step * (static_cast<double>(i) + 0.5); };
  auto weight = [&](std::uint64_t i) {
    const double t = point(i);
    return std::norm(R.eval(t)) * bump::phi(t / T);
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::uint64_t> any_cell(0, cells - 1);
  std::uniform_int_distribution<int> step(1, opt.neighbor_reach);

  std::uint64_t state = any_cell(rng);
  double w = weight(state);
  while (w == 0.0) {
    state = any_cell(rng);
    w = weight(state);
  }
  std::size_t accepted = 0, proposed = 0;
  auto advance = [&] {
    std::uint64_t next;
    if (unit(rng) < opt.jump_probability) {
      next = any_cell(rng);
    } else {
      const int d = step(rng) * (unit(rng) < 0.5 ? -1 : 1);
      const auto cand = static_cast<long long>(state) + d;
      if (cand < 0 || cand >= static_cast<long long>(cells)) {
        ++proposed;
        return;
      }
      next = static_cast<std::uint64_t>(cand);
    }
    ++proposed;
    const double wn = weight(next);
    if (wn >= w || unit(rng) * w < wn) {
      state = next;
      w = wn;
      ++accepted;
    }
  };
  for (std::size_t i = 0; i < opt.burn_in; ++i) advance();

  std::vector<double> d_chain;
  const std::size_t steps = std::max(opt.chain_samples, budget * opt.thin);
  d_chain.reserve(steps);
  std::vector<HuntCandidate> picked;
  for (std::size_t i = 1; i <= steps; ++i) {
    advance();
    const double t = point(state);
    d_chain.push_back(Dp.eval_cos(t));
    if (i % opt.thin == 0 && picked.size() < budget) picked.push_back({t, t + out.peak_offset, 0.0, d_chain.back(), w});
  }
  out.acceptance_rate = proposed ? static_cast<double>(accepted) / static_cast<double>(proposed) : 0.0;
  const auto ws = batch_stats(d_chain, opt.batches);
  out.weighted_mean_D = ws.mean;
  out.weighted_mean_D_stderr = ws.stderr_mean;

  std::vector<double> d_uniform(opt.chain_samples);
  std::vector<HuntCandidate> flat;
  for (auto& d : d_uniform) d = Dp.eval_cos(uniform_in(rng, T, 2.0 * T));
  const auto us = plain_stats(d_uniform);
  out.uniform_mean_D = us.mean;
  out.uniform_mean_D_stderr = us.stderr_mean;
  for (std::size_t i = 0; i < budget; ++i) {
    const double t = uniform_in(rng, T, 2.0 * T);
    flat.push_back({t, t + out.peak_offset, 0.0, Dp.eval_cos(t), std::norm(R.eval(t)) * bump::phi(t / T)});
  }

  if (opt.evaluate_S) {
    std::vector<double> ts;
    for (const auto& c : picked) ts.push_back(c.t_eval);
    for (const auto& c : flat) ts.push_back(c.t_eval);
    const auto s = sample_S(ts, prec);
    for (std::size_t i = 0; i < picked.size(); ++i) picked[i].S = s[i];
    for (std::size_t i = 0; i < flat.size(); ++i) flat[i].S = s[picked.size() + i];
  }
  auto by_S = [](const HuntCandidate& a, const HuntCandidate& b) { return a.S > b.S; };
  std::sort(picked.begin(), picked.end(), by_S);
  std::sort(flat.begin(), flat.end(), by_S);
  auto best_abs = [](const std::vector<HuntCandidate>& v) {
    double m = 0.0;
    for (const auto& c : v) m = std::max(m, std::abs(c.S));
    return m;
  };
  out.best_abs_S_weighted = best_abs(picked);
  out.best_abs_S_uniform = best_abs(flat);
  out.candidates = std::move(picked);
  out.uniform = std::move(flat);
  return out;
}

std::vector<double> greedy_separation(std::span<const double> points, double delta) {
  if (!(delta >= 0.0)) throw PreconditionError("greedy_separation: need delta >= 0");
  if (!std::is_sorted(points.begin(), points.end())) throw PreconditionError("greedy_separation: points must be ascending");
  std::vector<double> out;
  for (double p : points)
    if (out.empty() || p - out.back() >= delta) out.push_back(p);
  return out;
}

double window_measure_bound(double t0, double V, const KernelParams& k, double logT, double smoothed_value,
                            double A_S) {
  if (!(V > 0.0) || !(logT > 0.0) || !(A_S > 0.0)) throw PreconditionError("window_measure_bound: need V, log T, A_S > 0");
  if (!(t0 > 0.0)) throw PreconditionError("window_measure_bound: need t0 > 0");
  if (!(smoothed_value >= 2.5 * V))
    throw PreconditionError("window_measure_bound: smoothed value " + std::to_string(smoothed_value) +
                            " is below 2.5 V = " + std::to_string(2.5 * V));
  const double L2 = kernel_l2_norm(k);
  const double x = (smoothed_value - 2.0 * V) / (A_S * logT * L2);
  return x * x;
}

}  // namespace szeta
