#include "szeta/kernels.hpp"

#include <gsl/gsl_sf_expint.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "szeta/errors.hpp"
#include "szeta/quadrature.hpp"

namespace szeta {

namespace {

constexpr double kPi = std::numbers::pi;

// Truncation points, in units of 1 / (a lambda). The transforms add their
// tails exactly, so only the |K| and K^2 integrals see a truncation error.
constexpr double kTransformCut = 50.0;
constexpr double kAbsCut = 2000.0;
constexpr double kSquareCut = 2000.0;

double oscillation_width(double frequency) { return kPi / (2.0 * std::max(frequency, 1.0)); }

// int_U^inf (1 - cos(w u)) cos(c u) / u^2 du
double fejer_tail(double c, double w, double U) {
  return cos_over_u2_tail(c, U) - 0.5 * cos_over_u2_tail(c + w, U) - 0.5 * cos_over_u2_tail(c - w, U);
}

std::string grid_text(int points, double lo, double hi) {
  std::ostringstream os;
  os << points << " points on [" << lo << ", " << hi << "]";
  return os.str();
}

}  // namespace

void KernelParams::validate() const {
  if (!(a > 0.0 && a < 1.0 / 3.0)) throw PreconditionError("kernel: need 0 < a < 1/3");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw PreconditionError("kernel: need lambda > 0");
}

double omega(double u) {
  if (std::abs(u) < 1e-4) return (1.0 - u * u / 12.0) / (2.0 * kPi);
  const double h = std::sin(0.5 * u) / (0.5 * u);
  return h * h / (2.0 * kPi);
}

cplx omega(cplx z) {
  if (std::abs(z) < 1e-4) return (1.0 - z * z / 12.0) / (2.0 * kPi);
  const cplx h = std::sin(0.5 * z) / (0.5 * z);
  return h * h / (2.0 * kPi);
}

double omega_hat(double v) { return std::max(0.0, 1.0 - std::abs(v)); }

double kernel(const KernelParams& k, double x) {
  const double w = k.width();
  return w * omega(w * x) * (k.s() - std::sin(k.center() * x));
}

cplx kernel(const KernelParams& k, cplx z) {
  const double w = k.width();
  return w * omega(w * z) * (k.s() - std::sin(k.center() * z));
}

cplx kernel_hat(const KernelParams& k, double v) {
  const double w = k.width();
  const double c = k.center();
  return k.s() * omega_hat(v / w) + cplx(0.0, 0.5) * omega_hat((v - c) / w) - cplx(0.0, 0.5) * omega_hat((v + c) / w);
}

double cos_over_u2_tail(double c, double U) {
  if (!(U > 0.0)) throw PreconditionError("cos_over_u2_tail: need U > 0");
  c = std::abs(c);
  if (c == 0.0) return 1.0 / U;
  return std::cos(c * U) / U - c * (0.5 * kPi - gsl_sf_Si(c * U));
}

double omega_hat_numeric(double v, double abs_tol) {
  const double U = kTransformCut;
  quad::Options opt;
  opt.abs_tol = abs_tol;
  opt.max_width = oscillation_width(std::abs(v) + 1.0);
  auto f = [v](double u) { return omega(u) * std::cos(v * u); };
  const double body = 2.0 * quad::integrate(f, 0.0, U, opt).value;
  return body + 2.0 / kPi * fejer_tail(v, 1.0, U);
}

cplx kernel_hat_numeric(const KernelParams& k, double v, double abs_tol) {
  k.validate();
  const double w = k.width();
  const double beta = k.center();
  const double U = kTransformCut / w;
  quad::Options opt;
  opt.abs_tol = abs_tol;
  opt.max_width = oscillation_width(std::abs(v) + beta + w);
  auto f = [&](double u) { return kernel(k, u) * std::exp(cplx(0.0, -v * u)); };
  const cplx body = quad::integrate(f, -U, U, opt).value;
  const cplx tail = (2.0 * k.s() * fejer_tail(v, w, U) + cplx(0.0, 1.0) * (fejer_tail(beta - v, w, U) - fejer_tail(beta + v, w, U))) /
                    (kPi * w);
  return body + tail;
}

double kernel_abs_integral(const KernelParams& k, double abs_tol, double* tail_bound) {
  k.validate();
  const double w = k.width();
  const double U = kAbsCut / w;
  quad::Options opt;
  opt.abs_tol = abs_tol;
  opt.max_width = oscillation_width(k.center() + w);
  auto f = [&](double u) { return std::abs(kernel(k, u)); };
  const double body = quad::integrate(f, -U, U, opt).value;
  // |K(u)| <= 2 a lambda omega(a lambda u) <= 4 / (pi a lambda u^2).
  const double bound = 8.0 / (kPi * w * U);
  if (tail_bound != nullptr) *tail_bound = bound;
  return body + bound;
}

double kernel_l2_norm(const KernelParams& k, double abs_tol) {
  k.validate();
  KernelParams plus = k;
  plus.sign = KernelSign::plus;
  const double w = plus.width();
  const double U = kSquareCut / w;
  quad::Options opt;
  opt.abs_tol = abs_tol;
  opt.max_width = oscillation_width(2.0 * (plus.center() + w));
  auto f = [&](double u) {
    const double v = kernel(plus, u);
    return v * v;
  };
  // K^2 <= 16 / (pi a lambda u^2)^2 beyond U.
  const double tail = 2.0 * 16.0 / (kPi * kPi * w * w * 3.0 * U * U * U);
  return std::sqrt(quad::integrate(f, -U, U, opt).value + tail);
}

bool KernelReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.pass; });
}

KernelReport verify_kernel_properties(const KernelParams& k, double tol, const KernelCheckGrid& grid) {
  k.validate();
  if (!(tol > 0.0)) throw PreconditionError("verify_kernel_properties: need tol > 0");
  KernelReport rep;
  rep.params = k;
  rep.tol = tol;

  {
    PropertyCheck c{"i", true, 0.0, grid_text(grid.sign_points, -grid.sign_x_max, grid.sign_x_max)};
    double worst = 0.0;
    for (int j = 0; j < grid.sign_points; ++j) {
      const double x = -grid.sign_x_max + 2.0 * grid.sign_x_max * j / (grid.sign_points - 1);
      worst = std::max(worst, -k.s() * kernel(k, x));
    }
    c.residual = worst;
    c.pass = worst <= 0.0;
    rep.checks.push_back(c);
  }
  {
    double tail = 0.0;
    const double v = kernel_abs_integral(k, 0.1 * tol, &tail);
    std::ostringstream os;
    os << "adaptive quadrature on |u| <= " << kAbsCut / k.width() << ", tail bound " << tail;
    rep.checks.push_back({"ii", v <= 2.0 + tol, v, os.str()});
  }
  {
    const double w = k.width();
    double fitted = 0.0;
    for (int ix = 0; ix < grid.strip_x_points; ++ix) {
      const double x = -grid.strip_x_max + 2.0 * grid.strip_x_max * ix / (grid.strip_x_points - 1);
      for (int iy = 1; iy <= grid.strip_y_points; ++iy) {
        const double y = -grid.strip_y_max * iy / grid.strip_y_points;
        const double im = std::abs(kernel(k, cplx(x, y)).imag());
        const double envelope = k.lambda * k.lambda * std::abs(y) * std::exp(k.lambda * std::abs(y)) /
                                (1.0 + (w * x) * (w * x) + (w * y) * (w * y));
        fitted = std::max(fitted, im / envelope);
      }
    }
    rep.fitted_constant = fitted;
    std::ostringstream os;
    os << grid.strip_x_points << " x " << grid.strip_y_points << " points on [" << -grid.strip_x_max << ", "
       << grid.strip_x_max << "] x [" << -grid.strip_y_max << ", 0)";
    rep.checks.push_back({"iii", std::isfinite(fitted) && fitted <= grid.strip_constant_limit, fitted, os.str()});
  }
  {
    const double vmax = grid.v_max_factor * k.lambda;
    double worst = 0.0;
    for (int j = 0; j < grid.transform_points; ++j) {
      const double v = -vmax + 2.0 * vmax * j / (grid.transform_points - 1);
      worst = std::max(worst, std::abs(kernel_hat_numeric(k, v, 0.01 * tol) - kernel_hat(k, v)));
    }
    rep.checks.push_back({"iv", worst <= tol, worst, grid_text(grid.transform_points, -vmax, vmax)});
  }
  return rep;
}

}  // namespace szeta
