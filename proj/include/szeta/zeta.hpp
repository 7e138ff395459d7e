#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace szeta {

using cplx = std::complex<double>;

struct EvalPrecision {
  double abs_tol = 1e-10;
  // Cap on the number of Dirichlet-sum terms one Euler-Maclaurin evaluation may use.
  std::size_t max_terms = 20'000'000;
  // Number of Riemann-Siegel correction terms C_1..C_k beyond C_0, in [0, 4].
  int rs_correction_terms = 4;
  // Heights |t| at or above this use Riemann-Siegel on the critical line.
  double rs_crossover = 1e3;
};

// Riemann zeta function. Euler-Maclaurin off the critical line and below the
// crossover; Riemann-Siegel on the line above it. Throws PreconditionError at
// s = 1 and CertificationError when max_terms cannot reach abs_tol.
cplx zeta(cplx s, const EvalPrecision& prec = {});

// Euler-Maclaurin evaluation of zeta(sigma_j + i t) for several abscissae at
// one height. The Dirichlet sum is shared across all sigma_j.
std::vector<cplx> zeta_em_batch(double t, std::span<const double> sigmas, const EvalPrecision& prec = {});

cplx zeta_em(cplx s, const EvalPrecision& prec = {});

// log Gamma(z) on the branch continuous in Re z > 0 and real on the real axis.
cplx log_gamma(cplx z);

// chi(s) with zeta(s) = chi(s) zeta(1 - s); requires Re(1 - s) > 0.
cplx zeta_chi(cplx s);

// Riemann-Siegel theta with theta(0) = 0, odd in t.
double rs_theta(double t);
long double rs_theta_l(long double t);

// Hardy's Z(t) = exp(i theta(t)) zeta(1/2 + i t).
double hardy_z(double t, const EvalPrecision& prec = {});

// Riemann-Siegel asymptotic formula for Z(t), t > 0, with `corrections`
// terms C_1.. beyond C_0 (0 to 4).
double riemann_siegel_z(double t, int corrections);

}  // namespace szeta
