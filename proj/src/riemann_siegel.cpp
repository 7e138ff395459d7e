#include <array>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <numbers>
#include <vector>

#include "szeta/errors.hpp"
#include "szeta/zeta.hpp"

namespace szeta {

namespace {

// Degree of the Taylor expansions of the correction functions C_k(p) around
// p = 1/2. The remainder is below 1e-17 on |p - 1/2| <= 1/2.
constexpr int kDegree = 72;
constexpr int kSeriesLength = kDegree + 13;

using Coeffs = std::array<double, kDegree + 1>;

// Coefficients of C_0..C_4 as polynomials in x = p - 1/2, built from the
// Taylor series of Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p).
// The series division is done in 100-digit arithmetic because 1/cos(2 pi x)
// has poles at |x| = 1/4 and its coefficients grow like 4^k.
const std::array<Coeffs, 5>& correction_series() {
  static const auto table = [] {
    using mp = boost::multiprecision::cpp_bin_float_100;
    const mp pi = boost::math::constants::pi<mp>();
    const mp two_pi = 2 * pi;
    const int L = kSeriesLength;
    std::vector<mp> num(L, mp(0)), den(L, mp(0)), psi(L, mp(0));
    // cos(2 pi x^2 - 5 pi / 8) = cos(5pi/8) cos(2 pi x^2) + sin(5pi/8) sin(2 pi x^2)
    const mp ca = cos(5 * pi / 8), sa = sin(5 * pi / 8);
    {
      mp pw = 1;    // (2 pi)^m
      mp fact = 1;  // m!
      for (int m = 0; 2 * m < L; ++m) {
        if (m > 0) {
          pw *= two_pi;
          fact *= m;
        }
        const mp term = pw / fact;
        const int sign_cos = (m / 2) % 2 == 0 ? 1 : -1;
        // den: cos(2 pi x) contributes at x^m for even m.
        if (m % 2 == 0 && m < L) den[m] = sign_cos * term;
        // num: x^{2m} coefficient from cos/sin(2 pi x^2).
        if (2 * m < L) num[2 * m] = (m % 2 == 0 ? ca * sign_cos : sa * sign_cos) * term;
      }
    }
    // Psi = -num / den since cos(2 pi (x + 1/2)) = -cos(2 pi x).
    for (int k = 0; k < L; ++k) {
      mp acc = -num[k];
      for (int i = 1; i <= k; ++i) acc -= den[i] * psi[k - i];
      psi[k] = acc / den[0];
    }
    auto derivative = [&](int order) {
      std::vector<mp> d(L, mp(0));
      for (int k = order; k < L; ++k) {
        mp f = 1;
        for (int j = 0; j < order; ++j) f *= (k - j);
        d[k - order] = psi[k] * f;
      }
      return d;
    };
    const mp pi2 = pi * pi, pi4 = pi2 * pi2, pi6 = pi4 * pi2, pi8 = pi4 * pi4;
    struct Part {
      int order;
      mp weight;
    };
    const std::array<std::vector<Part>, 5> parts = {{
        {{0, mp(1)}},
        {{3, mp(-1) / (96 * pi2)}},
        {{2, mp(1) / (64 * pi2)}, {6, mp(1) / (18432 * pi4)}},
        {{1, mp(-1) / (64 * pi2)}, {5, mp(-1) / (3840 * pi4)}, {9, mp(-1) / (5308416 * pi6)}},
        {{0, mp(1) / (128 * pi2)},
         {4, mp(19) / (24576 * pi4)},
         {8, mp(11) / (5898240 * pi6)},
         {12, mp(1) / (2038431744 * pi8)}},
    }};
    std::array<Coeffs, 5> out{};
    for (int c = 0; c < 5; ++c) {
      std::vector<mp> acc(L, mp(0));
      for (const auto& part : parts[c]) {
        const auto d = derivative(part.order);
        for (int k = 0; k < L; ++k) acc[k] += part.weight * d[k];
      }
      for (int k = 0; k <= kDegree; ++k) out[c][k] = static_cast<double>(acc[k]);
    }
    return out;
  }();
  return table;
}

double horner(const Coeffs& c, double x) {
  double r = 0.0;
  for (int k = kDegree; k >= 0; --k) r = r * x + c[k];
  return r;
}

}  // namespace

double riemann_siegel_z(double t, int corrections) {
  if (!(t > 0.0)) throw PreconditionError("riemann_siegel_z: requires t > 0");
  if (corrections < 0 || corrections > 4) throw PreconditionError("riemann_siegel_z: corrections must lie in [0, 4]");
  constexpr long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  const long double tl = t;
  const long double a = std::sqrt(tl / two_pi);
  const auto N = static_cast<long>(std::floor(a));
  const long double theta = rs_theta_l(tl);

  // Main sum with phases reduced in extended precision.
  long double sum = 0.0L;
  for (long n = 1; n <= N; ++n) {
    const long double phase = std::fmod(theta - tl * std::log(static_cast<long double>(n)), two_pi);
    sum += std::cos(phase) / std::sqrt(static_cast<long double>(n));
  }
  sum *= 2.0L;

  const auto& series = correction_series();
  const double p = static_cast<double>(a - N);
  const double x = p - 0.5;
  const double inv_a = static_cast<double>(1.0L / a);
  double corr = 0.0;
  double pw = 1.0;
  for (int k = 0; k <= corrections; ++k) {
    corr += horner(series[k], x) * pw;
    pw *= inv_a;
  }
  const double sign = (N - 1) % 2 == 0 ? 1.0 : -1.0;
  return static_cast<double>(sum) + sign * corr / std::sqrt(static_cast<double>(a));
}

}  // namespace szeta
