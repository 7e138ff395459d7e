#pragma once

// Monte-Carlo studies of S(t) on [T, 2T]: the Gaussian limit, tail measures,
// resonator-weighted searches for large values, and the short-window measure
// bound used after a greedy separation of large smoothed values.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "szeta/convolution.hpp"
#include "szeta/resonator.hpp"

namespace szeta {

enum class GridMode { uniform, random, resonator_weighted };

struct GridSpec {
  double t_lo = 0.0;
  double t_hi = 0.0;
  std::size_t count = 0;
  GridMode mode = GridMode::random;

  void validate() const;
};

// Sample points of a grid; random mode draws from the seed.
std::vector<double> grid_points(const GridSpec& g, std::uint64_t seed);

// Evaluates S (by argument tracking) at every point, in parallel when built
// with OpenMP. Results are in input order.
std::vector<double> sample_S(std::span<const double> ts, const EvalPrecision& prec = {});

struct Histogram {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<std::size_t> counts;
};

struct CltResult {
  double T = 0.0;
  std::uint64_t seed = 0;
  std::vector<double> ts;
  std::vector<double> normalized;  // pi S(t) / sqrt(log log T / 2)
  Histogram histogram;
  double ks = 0.0;
  double mean = 0.0;
  double stderr_mean = 0.0;
  double variance = 0.0;
};

// Kolmogorov-Smirnov distance of a sample to the standard normal CDF.
double ks_normal(std::vector<double> xs);

CltResult clt_histogram(double T, std::size_t samples, std::size_t bins, std::uint64_t seed,
                        const EvalPrecision& prec = {});

struct TailEstimate {
  double V = 0.0;
  double measure_estimate = 0.0;
  std::size_t samples = 0;
  std::size_t hits = 0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  bool one_sided = false;  // no hits: ci_hi is the one-sided 95% upper bound
};

// 95% Wilson interval for hits / n, scaled by `length`. With no hits the
// upper end is the exact one-sided 95% bound 1 - 0.05^{1/n}.
TailEstimate tail_from_samples(std::span<const double> values, double V, double length);

struct TailResult {
  TailEstimate plus;   // S >= V
  TailEstimate minus;  // -S >= V
};

TailResult tail_measure(double T, double V, std::size_t samples, std::uint64_t seed, const EvalPrecision& prec = {});

struct HuntCandidate {
  double t = 0.0;       // accepted resonator point
  double t_eval = 0.0;  // t shifted to the kernel peak, where S is evaluated
  double S = 0.0;
  double D = 0.0;
  double weight = 0.0;  // |R(t)|^2 Phi(t / T)
};

struct HuntOptions {
  // Metropolis steps between recorded points.
  std::size_t thin = 20;
  std::size_t burn_in = 2000;
  // Chain length used for the weighted mean of D (D is cheap).
  std::size_t chain_samples = 200'000;
  // Probability of an independent uniform proposal instead of a neighbor move.
  double jump_probability = 0.2;
  // Neighbor moves span up to this many grid steps.
  int neighbor_reach = 8;
  // Batches for the batch-means standard error.
  std::size_t batches = 50;
  // Evaluate S at all; false leaves S = 0 (for cheap D statistics).
  bool evaluate_S = true;
};

struct HuntResult {
  std::vector<HuntCandidate> candidates;  // ranked by S, largest first
  std::vector<HuntCandidate> uniform;     // equal-budget uniform sample
  double weighted_mean_D = 0.0;
  double weighted_mean_D_stderr = 0.0;
  double uniform_mean_D = 0.0;
  double uniform_mean_D_stderr = 0.0;
  double m2_over_m1 = 0.0;
  double acceptance_rate = 0.0;
  double grid_step = 0.0;
  double peak_offset = 0.0;
  double best_abs_S_weighted = 0.0;
  double best_abs_S_uniform = 0.0;
};

// Samples t in [T, 2T] with density proportional to |R(t)|^2 Phi(t / T) by a
// Metropolis chain on a uniform grid, evaluates D and S, and compares with a
// uniform sample of the same size. `budget` is the number of S evaluations
// per arm. S is taken at t + u*, u* the maximizer of the kernel, since the
// kernel average of S around t is what D tracks.
HuntResult resonance_hunt(double T, const ResonatorConfig& config, const KernelParams& k, std::size_t budget,
                          std::uint64_t seed, const HuntOptions& opt = {}, const EvalPrecision& prec = {});

// Location of the maximum of s K(u) (s the kernel sign) nearest 0.
double kernel_peak_offset(const KernelParams& k);

// Greedy left-to-right subset with consecutive gaps >= delta.
std::vector<double> greedy_separation(std::span<const double> points, double delta);

// ((smoothed - 2V) / (A_S log T L2))^2 with L2 = (int K_+^2)^{1/2}. Requires
// smoothed >= 2.5 V.
double window_measure_bound(double t0, double V, const KernelParams& k, double logT, double smoothed_value,
                            double A_S = 1.0);

}  // namespace szeta
