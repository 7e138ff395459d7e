#pragma once

// The convolution identity for log zeta against K, its S(t) form
//   int S(t + u) K(u) du = D(t) + Z(t) + error,
// and the pieces on either side: the prime-power polynomial D, the
// contribution Z of zeros right of the critical line, and the smoothed S.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "szeta/dirichlet.hpp"
#include "szeta/kernels.hpp"
#include "szeta/zeros.hpp"

namespace szeta {

// Zeros with 1/2 < beta < 1 and gamma > 0; synthetic test inputs.
class HypotheticalZeroSet {
 public:
  HypotheticalZeroSet() = default;
  explicit HypotheticalZeroSet(std::vector<ZeroRecord> zeros);

  const std::vector<ZeroRecord>& zeros() const noexcept { return zeros_; }
  std::size_t size() const noexcept { return zeros_.size(); }
  bool empty() const noexcept { return zeros_.empty(); }

 private:
  std::vector<ZeroRecord> zeros_;
};

// Prime powers n with |log n - 2 lambda / 3| < a lambda and coefficients
// (1 / 2 pi) (Lambda(n) / log n) omega-hat((log n - 2 lambda / 3) / (a lambda)) n^{-1/2}.
// D(t) is eval_cos(t) of the result.
DirichletPoly build_D_coefficients(const KernelParams& k);

// 2 Im sum_rho int_0^{beta - 1/2} K(gamma - t - i alpha) d alpha.
double zeros_contribution(double t, const KernelParams& k, const HypotheticalZeroSet& zeros, double tol = 1e-10);

// Worst single-zero magnitude max_{delta <= offset} |2 Im int_0^delta K(x - i alpha) d alpha|
// at distance x = gamma - t.
double zero_contribution_envelope(double x, double offset, const KernelParams& k, int steps = 16);

// C_z (theta^2 e^{lambda theta} lambda log T + 1).
double zeros_bound(const KernelParams& k, double theta_t, double logT, double C_z = 1.0);

struct ZerosCalibration {
  double C_z = 0.0;
  double worst_theta = 0.0;
  std::size_t zeros_per_configuration = 0;
};

// Fits C_z so that zeros_bound dominates every zero configuration with
// density at most lambda log T per unit height on |gamma - t| <= log^2 T and
// offsets at most theta, for theta on `thetas`. The fit sums per-zero
// envelopes over the densest lattice, which dominates every such set.
ZerosCalibration calibrate_zeros_constant(const KernelParams& k, double logT, std::span<const double> thetas);

struct SmoothedS {
  double value = 0.0;
  double quadrature_error = 0.0;
  // Envelope of the dropped |u| > window part, using |S| <= log(|t| + 2) + log u scale.
  double tail_bound = 0.0;
  std::size_t ordinates_in_window = 0;
};

// int_{-window}^{window} s S(t + u) K(u) du, s the kernel's sign. S is taken
// from a certified zero list on [t - window, t + window], and the domain is
// split at every ordinate inside. Panels are at most 1 / lambda wide.
SmoothedS smoothed_S(double t, const KernelParams& k, double window, const EvalPrecision& prec = {},
                     double tol = 1e-8);

// Same integral for an arbitrary piecewise-smooth profile. `breaks` lists
// points where the profile may jump.
SmoothedS smoothed_profile(const std::function<double(double)>& profile, std::span<const double> breaks, double t,
                           const KernelParams& k, double window, double tol = 1e-8);

struct Lemma1Result {
  double sigma = 0.0;
  double t = 0.0;
  cplx integral;     // int log zeta(sigma + i(t + u)) K(u) du
  cplx series;       // sum Lambda(n)/log n hat K(log n) n^{-sigma - it}
  cplx pole_term;    // -2 pi int_0^{1 - sigma} K(-t - i alpha) d alpha
  double residual = 0.0;
  double truncation = 0.0;  // U: the integral is taken over |u| <= U
  std::size_t evaluations = 0;
};

// Both sides of the convolution identity at abscissa sigma, computed
// independently. No zeros lie right of sigma >= 0.6 at accessible heights;
// the pole of zeta at 1 enters as a zero of multiplicity -1.
Lemma1Result lemma1_check(double sigma, double t, const KernelParams& k, const EvalPrecision& prec = {},
                          double tol = 1e-6);

}  // namespace szeta
