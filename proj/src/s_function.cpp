#include "szeta/s_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "szeta/errors.hpp"

namespace szeta {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxHalvings = 48;

double segment_increment(double t, double sa, double sb, cplx za, cplx zb, const EvalPrecision& prec, int depth) {
  const double d = std::arg(zb / za);
  if (std::abs(d) < kPi / 2) return d;
  if (depth >= kMaxHalvings)
    throw CertificationError("S(t): argument tracking could not resolve the path at t=" + std::to_string(t));
  const double mid = 0.5 * (sa + sb);
  const cplx zm = zeta_em(cplx(mid, t), prec);
  return segment_increment(t, sa, mid, za, zm, prec, depth + 1) +
         segment_increment(t, mid, sb, zm, zb, prec, depth + 1);
}

// Continuous argument of zeta(sigma_end + it), t > 0, along
// 2 -> 2 + it -> sigma_end + it. zeta(2 + it) has positive real part, so the
// vertical leg needs no tracking.
double path_argument(double t, double sigma_end, const EvalPrecision& prec, cplx& endpoint) {
  const double h0 = std::min(0.125, 1.0 / std::log(t + 3.0));
  const double span = 2.0 - sigma_end;
  const int J = std::max(1, static_cast<int>(std::ceil(span / h0)));
  const double h = span / J;
  std::vector<double> grid(J + 1);
  for (int j = 0; j <= J; ++j) grid[j] = 2.0 - h * j;
  grid[J] = sigma_end;
  const auto vals = zeta_em_batch(t, grid, prec);
  endpoint = vals[J];
  double arg = std::arg(vals[0]);
  if (std::abs(vals[J]) == 0.0) return arg;
  for (int j = 0; j < J; ++j) arg += segment_increment(t, grid[j], grid[j + 1], vals[j], vals[j + 1], prec, 0);
  return arg;
}

double path_argument(double t, const EvalPrecision& prec, cplx& endpoint) {
  return path_argument(t, 0.5, prec, endpoint);
}

double raw_s(double t, const EvalPrecision& prec) {
  cplx end;
  return path_argument(t, prec, end) / kPi;
}

}  // namespace

double s_by_argument(double t, const EvalPrecision& prec, const SOptions& opt) {
  if (t == 0.0) return 0.0;
  if (t < 0.0) return -s_by_argument(-t, prec, opt);
  cplx end;
  const double arg = path_argument(t, prec, end);
  if (std::abs(end) >= opt.ordinate_detect) return arg / kPi;
  // Ordinate: symmetric average, Richardson-combined with the eps/2 average.
  const double eps = opt.ordinate_eps;
  const double avg1 = 0.5 * (raw_s(t + eps, prec) + raw_s(t - eps, prec));
  const double avg2 = 0.5 * (raw_s(t + eps / 2, prec) + raw_s(t - eps / 2, prec));
  if (std::abs(avg1 - avg2) > opt.cross_check_tol)
    throw CertificationError("S(t): two-sided average not converged at ordinate t=" + std::to_string(t));
  return (4.0 * avg2 - avg1) / 3.0;
}

cplx log_zeta(cplx s, const EvalPrecision& prec) {
  const double sigma = s.real();
  const double t = s.imag();
  if (sigma >= 2.0) return std::log(zeta_em(s, prec));
  if (!(sigma > 0.0)) throw PreconditionError("log_zeta: requires Re s > 0");
  if (t == 0.0) throw PreconditionError("log_zeta: the real segment left of 2 is not on the branch");
  cplx end;
  const double arg = path_argument(std::abs(t), sigma, prec, end);
  if (std::abs(end) == 0.0) throw PreconditionError("log_zeta: s is a zero of zeta");
  const cplx v(std::log(std::abs(end)), arg);
  return t < 0.0 ? std::conj(v) : v;
}

double s_by_counting(double t, const ZeroList& zeros) {
  if (!zeros.covers(t)) throw PreconditionError("s_by_counting: t outside the zero list's range");
  return zeros.count(t) - rs_theta(t) / kPi - 1.0;
}

long zero_count_by_argument(double t, const EvalPrecision& prec) {
  const double v = rs_theta(t) / kPi + 1.0 + s_by_argument(t, prec);
  const long n = std::lround(v);
  if (std::abs(v - static_cast<double>(n)) > 1e-3)
    throw CertificationError("zero count not integral at t=" + std::to_string(t) + " (value " + std::to_string(v) + ")");
  return n;
}

double s_by_local_count(double t, const EvalPrecision& prec) {
  if (t == 0.0) return 0.0;
  if (t < 0.0) return -s_by_local_count(-t, prec);
  const double w = 3.0 * mean_zero_spacing(t);
  const double lo = std::max(0.5, t - w);
  const double hi = t + w;
  const ZeroList list = build_zero_list(lo, hi, prec);
  return s_by_counting(t, list);
}

double S_of_t(double t, const EvalPrecision& prec, const SOptions& opt, const ZeroList* zeros) {
  const double a = s_by_argument(t, prec, opt);
  if (zeros != nullptr && zeros->covers(t)) {
    const double b = s_by_counting(t, *zeros);
    if (std::abs(a - b) > opt.cross_check_tol) throw InconsistencyError(t, a, b);
  }
  return a;
}

CriticalSample critical_sample(double t, const EvalPrecision& prec, const SOptions& opt, const ZeroList* zeros) {
  CriticalSample c;
  c.t = t;
  c.z = hardy_z(t, prec);
  c.theta = rs_theta(t);
  c.s_arg = s_by_argument(t, prec, opt);
  c.s_count = (zeros != nullptr && zeros->covers(t)) ? s_by_counting(t, *zeros) : s_by_local_count(t, prec);
  c.n_t = c.theta / kPi + 1.0 + c.s_count;
  if (std::abs(c.s_arg - c.s_count) > opt.cross_check_tol) throw InconsistencyError(t, c.s_arg, c.s_count);
  return c;
}

}  // namespace szeta
