#include "szeta/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "szeta/arith.hpp"
#include "szeta/errors.hpp"
#include "szeta/quadrature.hpp"
#include "szeta/s_function.hpp"

namespace szeta {

namespace {

constexpr double kPi = std::numbers::pi;

double alpha_integral_im(double x, double depth, const KernelParams& k, double tol) {
  if (depth <= 0.0) return 0.0;
  quad::Options opt;
  opt.abs_tol = tol;
  auto f = [&](double alpha) { return kernel(k, cplx(x, -alpha)).imag(); };
  return quad::integrate(f, 0.0, depth, opt).value;
}

}  // namespace

HypotheticalZeroSet::HypotheticalZeroSet(std::vector<ZeroRecord> zeros) : zeros_(std::move(zeros)) {
  for (const auto& z : zeros_) {
    if (!(z.beta > 0.5 && z.beta < 1.0)) throw PreconditionError("hypothetical zeros need 1/2 < beta < 1");
    if (!(z.gamma > 0.0)) throw PreconditionError("hypothetical zeros need gamma > 0");
  }
}

DirichletPoly build_D_coefficients(const KernelParams& k) {
  k.validate();
  const double c = k.center();
  const double w = k.width();
  const double lo = std::exp(c - w);
  const double hi = std::exp(c + w);
  if (hi > 1e15) throw CapacityError("build_D_coefficients: window reaches beyond 1e15");
  std::vector<DirichletTerm> terms;
  const auto first = static_cast<std::uint64_t>(std::max(2.0, std::floor(lo)));
  const auto last = static_cast<std::uint64_t>(std::ceil(hi));
  for (std::uint64_t n = first; n <= last; ++n) {
    const double logn = std::log(static_cast<double>(n));
    if (!(std::abs(logn - c) < w)) continue;
    const double vm = arith::von_mangoldt(n);
    if (vm == 0.0) continue;
    const double coeff = vm / logn * omega_hat((logn - c) / w) / std::sqrt(static_cast<double>(n)) / (2.0 * kPi);
    terms.push_back({n, coeff});
  }
  return DirichletPoly(std::move(terms));
}

double zeros_contribution(double t, const KernelParams& k, const HypotheticalZeroSet& zeros, double tol) {
  k.validate();
  if (zeros.empty()) return 0.0;
  const double per_zero = tol / static_cast<double>(zeros.size());
  double sum = 0.0;
  for (const auto& z : zeros.zeros()) sum += alpha_integral_im(z.gamma - t, z.beta - 0.5, k, 0.5 * per_zero);
  return 2.0 * sum;
}

double zero_contribution_envelope(double x, double offset, const KernelParams& k, int steps) {
  if (offset <= 0.0) return 0.0;
  const double h = offset / steps;
  double cum = 0.0, worst = 0.0;
  for (int j = 0; j < steps; ++j) {
    quad::Options opt;
    opt.abs_tol = 1e-14;
    auto f = [&](double alpha) { return kernel(k, cplx(x, -alpha)).imag(); };
    cum += quad::integrate(f, h * j, h * (j + 1), opt).value;
    worst = std::max(worst, std::abs(2.0 * cum));
  }
  return worst;
}

double zeros_bound(const KernelParams& k, double theta_t, double logT, double C_z) {
  if (!(theta_t >= 0.0 && theta_t <= 0.5)) throw PreconditionError("zeros_bound: need 0 <= theta_t <= 1/2");
  return C_z * (theta_t * theta_t * std::exp(k.lambda * theta_t) * k.lambda * logT + 1.0);
}

ZerosCalibration calibrate_zeros_constant(const KernelParams& k, double logT, std::span<const double> thetas) {
  k.validate();
  const double w = k.width();
  const double spacing = 1.0 / (k.lambda * logT);
  const double reach = logT * logT;
  const auto half = static_cast<long>(std::floor(reach / spacing));
  ZerosCalibration cal;
  cal.zeros_per_configuration = static_cast<std::size_t>(2 * half + 1);
  for (double theta : thetas) {
    double total = zero_contribution_envelope(0.0, theta, k);
    for (double dir : {-1.0, 1.0}) {
      for (long j = 1; j <= half; ++j) {
        const double x = dir * spacing * static_cast<double>(j);
        const double e = zero_contribution_envelope(x, theta, k);
        total += e;
        // Envelopes decay like x^-2; the rest of the lattice is negligible.
        if (std::abs(x) * w > 10.0 && e * static_cast<double>(half - j) < 1e-12 * total) break;
      }
    }
    const double ratio = total / zeros_bound(k, theta, logT, 1.0);
    if (ratio > cal.C_z) {
      cal.C_z = ratio;
      cal.worst_theta = theta;
    }
  }
  return cal;
}

SmoothedS smoothed_profile(const std::function<double(double)>& profile, std::span<const double> breaks, double t,
                           const KernelParams& k, double window, double tol) {
  k.validate();
  if (!(window > 0.0)) throw PreconditionError("smoothed_S: need window > 0");
  std::vector<double> points{-window, window};
  for (double b : breaks) {
    const double u = b - t;
    if (u > -window && u < window) points.push_back(u);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  quad::Options opt;
  opt.abs_tol = tol;
  opt.max_width = 1.0 / k.lambda;
  auto f = [&](double u) { return k.s() * profile(t + u) * kernel(k, u); };
  const auto r = quad::integrate_breakpoints(f, points, opt);

  SmoothedS out;
  out.value = r.value;
  out.quadrature_error = r.error;
  out.ordinates_in_window = points.size() - 2;
  out.tail_bound = 8.0 / (kPi * k.width() * window) * (std::log(std::abs(t) + window + 2.0) + 1.0);
  return out;
}

SmoothedS smoothed_S(double t, const KernelParams& k, double window, const EvalPrecision& prec, double tol) {
  k.validate();
  if (!(t - window > 0.0)) throw PreconditionError("smoothed_S: need t - window > 0");
  const ZeroList list = build_zero_list(t - window, t + window, prec);
  auto profile = [&](double x) { return list.count(x, 0.0) - rs_theta(x) / kPi - 1.0; };
  auto out = smoothed_profile(profile, list.ordinates(), t, k, window, tol);
  out.ordinates_in_window = list.ordinates().size();
  return out;
}

Lemma1Result lemma1_check(double sigma, double t, const KernelParams& k, const EvalPrecision& prec, double tol) {
  k.validate();
  if (!(sigma > 0.5 && sigma < 1.0)) throw PreconditionError("lemma1_check: need 1/2 < sigma < 1");
  if (!(tol > 0.0)) throw PreconditionError("lemma1_check: need tol > 0");
  if (t == 0.0) throw PreconditionError("lemma1_check: need t != 0");
  const double w = k.width();
  const double beta = k.center();

  Lemma1Result res;
  res.sigma = sigma;
  res.t = t;

  // Series side: hat K vanishes beyond log n = 2 lambda / 3 + a lambda.
  const double n_max = std::exp(beta + w);
  if (n_max > 1e9) throw CapacityError("lemma1_check: series side needs n up to " + std::to_string(n_max));
  for (std::uint64_t n = 2; static_cast<double>(n) <= n_max; ++n) {
    const double vm = arith::von_mangoldt(n);
    if (vm == 0.0) continue;
    const double logn = std::log(static_cast<double>(n));
    res.series += vm / logn * kernel_hat(k, logn) * std::exp(-cplx(sigma, t) * logn);
  }

  // The pole at s = 1 acts as a zero of multiplicity -1 at beta = 1, gamma = 0.
  {
    quad::Options opt;
    opt.abs_tol = 1e-3 * tol;
    auto f = [&](double alpha) { return kernel(k, cplx(-t, -alpha)); };
    res.pole_term = -2.0 * kPi * quad::integrate(f, 0.0, 1.0 - sigma, opt).value;
  }

  // Integral side. log zeta is mean-zero along the line, so the truncated
  // part behaves like a random-walk tail of size ~ (a lambda)^{-1} U^{-3/2}.
  const double U = std::clamp(std::pow(1.0 / (w * tol), 2.0 / 3.0), 40.0 / w, 2.0e4);
  res.truncation = U;
  std::vector<double> points{-U, U};
  if (-t > -U && -t < U) points.push_back(-t);
  std::sort(points.begin(), points.end());
  quad::Options opt;
  opt.abs_tol = 0.1 * tol;
  opt.max_width = kPi / (2.0 * (beta + w + 3.0));
  opt.max_panels = 4'000'000;
  auto f = [&](double u) {
    const double tau = t + u;
    if (tau == 0.0) return cplx(0.0, 0.0);
    return log_zeta(cplx(sigma, tau), prec) * kernel(k, u);
  };
  const auto r = quad::integrate_breakpoints(f, points, opt);
  res.integral = r.value;
  res.evaluations = r.evaluations;
  res.residual = std::abs(res.integral - res.series - res.pole_term);
  return res;
}

}  // namespace szeta
