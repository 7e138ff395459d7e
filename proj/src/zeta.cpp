#include "szeta/zeta.hpp"

#include <algorithm>
#include <array>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <cmath>
#include <numbers>

#include "szeta/errors.hpp"

namespace szeta {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxBernoulli = 60;

// B_{2k} / (2k)! for k = 1..kMaxBernoulli.
const std::array<double, kMaxBernoulli + 1>& bernoulli_over_factorial() {
  static const auto table = [] {
    std::array<double, kMaxBernoulli + 1> t{};
    for (int k = 1; k <= kMaxBernoulli; ++k)
      t[k] = boost::math::bernoulli_b2n<double>(k) / boost::math::factorial<double>(2 * k);
    return t;
  }();
  return table;
}

std::size_t em_cutoff(double abs_s, double abs_tol) {
  // Correction terms shrink roughly like (|s + 2k| / (2 pi N))^2; aim for a
  // ratio r with r^(2 * kMaxBernoulli) below the tolerance.
  const double r = std::clamp(std::pow(abs_tol, 1.0 / (2.0 * kMaxBernoulli)), 0.3, 0.9);
  const double n = (abs_s + 2.0 * kMaxBernoulli) / (2.0 * kPi * r);
  return std::max<std::size_t>(10, static_cast<std::size_t>(std::ceil(n)));
}

// Tail of Euler-Maclaurin beyond the partial sum over n < N.
cplx em_tail(cplx s, double N, double abs_tol) {
  const auto& c = bernoulli_over_factorial();
  const double logN = std::log(N);
  const cplx n_pow = std::exp(-s * logN);  // N^{-s}
  cplx res = n_pow * N / (s - 1.0) + 0.5 * n_pow;
  // Rising factorial (s)_{2k-1} times N^{-s-2k+1}, advanced together so
  // neither factor overflows at large |s|.
  cplx factor = s * n_pow / N;
  const double inv_n2 = 1.0 / (N * N);
  for (int k = 1; k <= kMaxBernoulli; ++k) {
    const cplx term = c[k] * factor;
    res += term;
    if (std::abs(term) < 0.1 * abs_tol) return res;
    factor *= (s + double(2 * k - 1)) * inv_n2 * (s + double(2 * k));
  }
  throw CertificationError("zeta: Euler-Maclaurin correction series did not converge");
}

bool is_uniform(std::span<const double> xs, double& step) {
  if (xs.size() < 3) {
    step = xs.size() == 2 ? xs[1] - xs[0] : 0.0;
    return true;
  }
  step = xs[1] - xs[0];
  for (std::size_t j = 2; j < xs.size(); ++j)
    if (std::abs((xs[j] - xs[j - 1]) - step) > 1e-12) return false;
  return true;
}

}  // namespace

std::vector<cplx> zeta_em_batch(double t, std::span<const double> sigmas, const EvalPrecision& prec) {
  std::vector<cplx> out(sigmas.size());
  if (sigmas.empty()) return out;
  if (t < 0.0) {
    auto r = zeta_em_batch(-t, sigmas, prec);
    for (auto& z : r) z = std::conj(z);
    return r;
  }
  double max_abs = 0.0;
  for (double s : sigmas) {
    if (s == 1.0 && t == 0.0) throw PreconditionError("zeta: pole at s = 1");
    max_abs = std::max(max_abs, std::abs(cplx(s, t)));
  }
  const std::size_t N = em_cutoff(max_abs, prec.abs_tol);
  if (N - 1 > prec.max_terms)
    throw CertificationError("zeta: precision unreachable, needs " + std::to_string(N - 1) +
                             " terms but max_terms = " + std::to_string(prec.max_terms));

  const std::size_t J = sigmas.size();
  std::vector<double> re(J, 0.0), im(J, 0.0);
  double step = 0.0;
  if (is_uniform(sigmas, step)) {
    const double s0 = sigmas[0];
    for (std::size_t n = 1; n < N; ++n) {
      const double x = std::log(static_cast<double>(n));
      const double phase = t * x;
      const double c = std::cos(phase), s = -std::sin(phase);
      double mag = std::exp(-s0 * x);
      const double ratio = std::exp(-step * x);
      for (std::size_t j = 0; j < J; ++j) {
        re[j] += mag * c;
        im[j] += mag * s;
        mag *= ratio;
      }
    }
  } else {
    for (std::size_t n = 1; n < N; ++n) {
      const double x = std::log(static_cast<double>(n));
      const double phase = t * x;
      const double c = std::cos(phase), s = -std::sin(phase);
      for (std::size_t j = 0; j < J; ++j) {
        const double mag = std::exp(-sigmas[j] * x);
        re[j] += mag * c;
        im[j] += mag * s;
      }
    }
  }
  for (std::size_t j = 0; j < J; ++j)
    out[j] = cplx(re[j], im[j]) + em_tail(cplx(sigmas[j], t), static_cast<double>(N), prec.abs_tol);
  return out;
}

cplx zeta_em(cplx s, const EvalPrecision& prec) {
  const double sigma = s.real();
  return zeta_em_batch(s.imag(), std::span<const double>(&sigma, 1), prec)[0];
}

cplx zeta(cplx s, const EvalPrecision& prec) {
  if (s == cplx(1.0, 0.0)) throw PreconditionError("zeta: pole at s = 1");
  if (s.real() == 0.5 && std::abs(s.imag()) >= prec.rs_crossover) {
    const double t = std::abs(s.imag());
    const double z = riemann_siegel_z(t, prec.rs_correction_terms);
    const double th = rs_theta(t);
    const cplx v = z * cplx(std::cos(th), -std::sin(th));
    return s.imag() < 0 ? std::conj(v) : v;
  }
  return zeta_em(s, prec);
}

cplx log_gamma(cplx z) {
  if (!(z.real() > 0.0)) throw PreconditionError("log_gamma: requires Re z > 0");
  cplx shift_sum = 0.0;
  while (std::abs(z) < 20.0 || z.real() < 10.0) {
    shift_sum += std::log(z);
    z += 1.0;
  }
  // Stirling series: sum B_{2k} / (2k (2k-1) z^{2k-1}).
  cplx res = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi);
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx pw = inv;
  for (int k = 1; k <= 12; ++k) {
    const double b = boost::math::bernoulli_b2n<double>(k);
    res += b / (2.0 * k * (2.0 * k - 1.0)) * pw;
    pw *= inv2;
  }
  return res - shift_sum;
}

cplx zeta_chi(cplx s) {
  // chi(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s)
  return std::exp(s * std::log(2.0) + (s - 1.0) * std::log(kPi) + log_gamma(1.0 - s)) * std::sin(kPi * s / 2.0);
}

long double rs_theta_l(long double t) {
  if (t < 0) return -rs_theta_l(-t);
  if (t < 10.0L) {
    const cplx lg = log_gamma(cplx(0.25, static_cast<double>(t) / 2.0));
    return static_cast<long double>(lg.imag()) - t / 2.0L * std::log(std::numbers::pi_v<long double>);
  }
  constexpr long double pi = std::numbers::pi_v<long double>;
  long double th = t / 2.0L * std::log(t / (2.0L * pi)) - t / 2.0L - pi / 8.0L;
  // Asymptotic tail: sum (1 - 2^{1-2k}) |B_{2k}| / (4k (2k-1) t^{2k-1}).
  const long double inv2 = 1.0L / (t * t);
  long double pw = 1.0L / t;
  for (int k = 1; k <= 20; ++k) {
    const long double b = std::abs(boost::math::bernoulli_b2n<long double>(k));
    const long double term = (1.0L - std::pow(2.0L, 1 - 2 * k)) * b / (4.0L * k * (2.0L * k - 1.0L)) * pw;
    th += term;
    if (term < 1e-21L * std::max(1.0L, std::abs(th))) break;
    pw *= inv2;
  }
  return th;
}

double rs_theta(double t) { return static_cast<double>(rs_theta_l(t)); }

double hardy_z(double t, const EvalPrecision& prec) {
  if (std::abs(t) >= prec.rs_crossover) return riemann_siegel_z(std::abs(t), prec.rs_correction_terms);
  const cplx z = zeta_em(cplx(0.5, t), prec);
  const double th = rs_theta(t);
  return (cplx(std::cos(th), std::sin(th)) * z).real();
}

}  // namespace szeta
