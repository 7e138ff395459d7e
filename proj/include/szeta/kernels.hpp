#pragma once

// The Fejer pair omega / omega-hat and the two kernels
//   K(z) = a lambda omega(a lambda z) (s - sin(2 lambda z / 3)),  s = +1 or -1,
// together with a numerical check of their basic properties.

#include <string>
#include <vector>

#include "szeta/zeta.hpp"

namespace szeta {

enum class KernelSign { plus = 1, minus = -1 };

struct KernelParams {
  double a = 0.3;
  double lambda = 3.0;
  KernelSign sign = KernelSign::plus;

  // Throws PreconditionError unless 0 < a < 1/3 and lambda > 0.
  void validate() const;
  double s() const noexcept { return sign == KernelSign::plus ? 1.0 : -1.0; }
  // Frequency 2 lambda / 3 of the sine factor.
  double center() const noexcept { return 2.0 * lambda / 3.0; }
  // Scale a lambda of the Fejer factor.
  double width() const noexcept { return a * lambda; }
};

double omega(double u);
cplx omega(cplx z);
double omega_hat(double v);

double kernel(const KernelParams& k, double x);
// Analytic continuation; intended for |Im z| <= 2.
cplx kernel(const KernelParams& k, cplx z);
// Closed-form Fourier transform, hat K(v) = int K(u) exp(-i v u) du.
cplx kernel_hat(const KernelParams& k, double v);

// int_U^inf cos(c u) / u^2 du, U > 0.
double cos_over_u2_tail(double c, double U);

// Numerical Fourier transforms: quadrature over [-U, U] plus the exact
// contribution of |u| > U, which reduces to cos_over_u2_tail terms.
double omega_hat_numeric(double v, double abs_tol = 1e-10);
cplx kernel_hat_numeric(const KernelParams& k, double v, double abs_tol = 1e-10);

// int |K(u)| du by quadrature over [-U, U]; `tail_bound` receives an upper
// bound for the part beyond U, which is already added to the result.
double kernel_abs_integral(const KernelParams& k, double abs_tol, double* tail_bound = nullptr);

// (int |K_+(u)|^2 du)^{1/2}.
double kernel_l2_norm(const KernelParams& k, double abs_tol = 1e-10);

struct PropertyCheck {
  std::string id;
  bool pass = false;
  // Worst residual (for (ii) the integral itself, for (iii) the fitted constant).
  double residual = 0.0;
  std::string grid;
};

struct KernelReport {
  KernelParams params;
  double tol = 0.0;
  std::vector<PropertyCheck> checks;  // (i), (ii), (iii), (iv) in order
  double fitted_constant = 0.0;

  bool all_pass() const;
};

struct KernelCheckGrid {
  // Property (i): points on [-x_max, x_max].
  int sign_points = 10'000;
  double sign_x_max = 100.0;
  // Property (iii): x in [-strip_x_max, strip_x_max], y in [-strip_y_max, 0).
  int strip_x_points = 201;
  int strip_y_points = 20;
  double strip_x_max = 50.0;
  double strip_y_max = 1.5;
  // A fitted constant above this fails (iii).
  double strip_constant_limit = 100.0;
  // Property (iv): points on [-v_max_factor lambda, v_max_factor lambda].
  int transform_points = 81;
  double v_max_factor = 2.0;
};

KernelReport verify_kernel_properties(const KernelParams& k, double tol, const KernelCheckGrid& grid = {});

}  // namespace szeta
