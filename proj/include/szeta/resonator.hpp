#pragma once

// The squarefree resonator R(t) = sum_{n <= N} f(n) n^{-it}, f multiplicative
// on squarefree n with f(p) = A / sqrt(p) for p in a prime window, and the
// moment and Rankin-type quantities built from it.
//
// Every f(n)^2 = (A^2)^k / n is rational when A^2 is, so the combinatorial
// quantities have exact rational versions. They run when the configuration
// carries an exact A^2 and the window has at most kExactPrimeLimit primes.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "szeta/arith.hpp"
#include "szeta/dirichlet.hpp"
#include "szeta/errors.hpp"
#include "szeta/kernels.hpp"

namespace szeta {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::size_t kExactPrimeLimit = 12;
inline constexpr std::size_t kProductGuard = 1'000'000;

// Existential constants of the argument, with heuristic defaults.
struct BoundConstants {
  double kappa = 0.05;           // V <= kappa (log T / log log T)^{1/3}
  double b_const = 1.0;          // A = b V
  double d_threshold = 10.0;     // finite stand-in for A^2 / log P -> infinity
  double c_exceptional = 1.0;    // prefactor of the exceptional-set bound
  double c2_exceptional = 1.0;   // exponent constant of the exceptional-set bound
  double C_z = 0.5;              // zeros-contribution constant
  double A_S = 1.0;              // S(t) <= A_S log t
};

struct ResonatorConfig {
  double P = 0.0;
  double Q = 0.0;
  double A = 0.0;
  std::uint64_t N = 1;
  double a = 0.3;
  double T = 0.0;
  arith::PrimeWindow window;
  // Exact A^2, when known; enables the rational code paths.
  std::optional<Rational> A2_exact;

  double A2() const noexcept { return A * A; }
  bool exact() const noexcept { return A2_exact.has_value() && window.size() <= kExactPrimeLimit; }
};

// Builds a configuration over all primes in [P, Q].
ResonatorConfig make_config(double P, double Q, double A, std::uint64_t N, double a = 0.3, double T = 0.0);
// Builds a configuration over an explicit prime list with exact A^2.
// P and Q default to the smallest and largest listed prime when left at 0.
ResonatorConfig make_toy_config(std::vector<std::uint64_t> primes, const Rational& A2, std::uint64_t N, double P = 0.0,
                                double Q = 0.0);

struct Restriction {
  std::string id;  // "a", "b", "c", "d'", "window", "f<=1"
  bool holds = false;
  std::string detail;
};

struct RestrictionReport {
  std::vector<Restriction> items;
  bool all_hold() const;
  // Ids of the failing restrictions, comma separated.
  std::string failing() const;
};

// (a) 10 A^2 log Q <= log N, (b) P >= A^2, (c) Q >= 2P, (d') A^2 / log P >=
// d_threshold, window (log T)^{2/3 - a/2} <= P <= Q <= (log T)^{2/3 + a/2}
// (skipped when T = 0), and f(p) <= 1 on the window.
RestrictionReport check_restrictions(const ResonatorConfig& c, const BoundConstants& k = {});
// Throws RangeError naming the first failing restriction.
void require_restrictions(const ResonatorConfig& c, const BoundConstants& k = {});

struct ParameterChoice {
  ResonatorConfig config;
  RestrictionReport report;
};

// P = (log T)^{2/3}, Q = (log T)^{2/3 + a/2}, A = b V, N = floor(T^{1/3}).
// Throws RangeError when V lies outside [(log T)^a, kappa (log T / log log T)^{1/3}].
ParameterChoice choose_parameters(double V, double T, double a, const BoundConstants& k = {});

// f(n); 0 off the squarefree support of the window.
double f_value(const ResonatorConfig& c, std::uint64_t n);
Rational f_squared_exact(const ResonatorConfig& c, std::uint64_t n);

DirichletPoly resonator_poly(const ResonatorConfig& c);

// Phi(x) = g(4(x - 1)) g(4(2 - x)), g(s) = h(s) / (h(s) + h(1 - s)), h(s) = exp(-1/s).
namespace bump {
double phi(double x);
// hat Phi(0) = int Phi, computed once by quadrature.
double mass();
}  // namespace bump

enum class MomentMode { exact, numeric };

// Main term T hat Phi(0) sum_{n <= N} f(n)^2, or in numeric mode
// int |R(t)|^2 Phi(t / T) dt by quadrature (requires T <= 1e7).
double m1(const ResonatorConfig& c, MomentMode mode = MomentMode::exact);
double f_square_sum(const ResonatorConfig& c);
Rational f_square_sum_exact(const ResonatorConfig& c);

// Per-prime weights omega-hat((log p - 2 lambda / 3) / (a lambda)).
std::vector<double> prime_weights(const ResonatorConfig& c, const KernelParams& k);

// sum over m, p with p in the window, p not dividing m, m p <= N, both in the
// support, of f(m)^2 w_p / p. The full m2 sum equals A times this.
double m2_core(const ResonatorConfig& c, const std::vector<double>& weights);
Rational m2_core_exact(const ResonatorConfig& c, const std::vector<Rational>& weights);

// T hat Phi(0) (1 / 2 pi) sum_{mk = n <= N} f(m) f(n) Lambda(k) / ((log k) sqrt k) w(k).
double m2_main(const ResonatorConfig& c, const KernelParams& k);

// sum_{ab = cd} f(a) f(b) f(c) f(d) over a, b, c, d <= N in the support.
double fourth_moment_diag(const ResonatorConfig& c);
Rational fourth_moment_diag_exact(const ResonatorConfig& c);
// prod_p (1 + 4 f(p)^2 + f(p)^4)
double fourth_moment_product(const ResonatorConfig& c);
Rational fourth_moment_product_exact(const ResonatorConfig& c);

struct RankinTail {
  double exact_ratio = 0.0;  // sum_{n > N} f^2 / sum f^2
  double bound = 0.0;        // N^{-alpha} prod (1 + p^alpha f(p)^2) / (1 + f(p)^2)
  double alpha = 0.0;
  std::optional<Rational> exact_rational;
};
RankinTail rankin_tail(const ResonatorConfig& c);
RankinTail rankin_tail(const ResonatorConfig& c, double alpha);

struct DivisorMass {
  double D = 0.0;            // (1/10) A^2 log(log Q / log P)
  double exact_ratio = 0.0;  // mass of n with fewer than D prime factors / total
  double bound = 0.0;        // b^{-D} prod (1 + b f(p)^2) / (1 + f(p)^2)
  double b = 0.5;
  std::optional<Rational> exact_rational;
};
DivisorMass divisor_mass(const ResonatorConfig& c, double b = 0.5);

struct MomentReport {
  double T = 0.0;
  double bump_mass = 0.0;  // hat Phi(0)
  double m1 = 0.0;
  double m2_main = 0.0;
  double fourth_diag = 0.0;
  double ratio = 0.0;        // m2_main / m1
  double ratio_bound = 0.0;  // (1 / (100 A)) log(log Q / log P)
  double min_weight = 0.0;
  bool window_flag = false;  // min weight >= 1/2
};
MomentReport ratio_report(const ResonatorConfig& c, const KernelParams& k);

class RatioTooSmallError : public PreconditionError {
 public:
  RatioTooSmallError(double ratio, double needed)
      : PreconditionError("ratio too small: m2/m1 = " + std::to_string(ratio) + " < 8V = " + std::to_string(needed)),
        ratio_(ratio),
        needed_(needed) {}
  double ratio() const noexcept { return ratio_; }
  double needed() const noexcept { return needed_; }

 private:
  double ratio_;
  double needed_;
};

// m2_main^2 / ((log T)^2 fourth_diag T hat Phi(0)). Throws RatioTooSmallError
// unless ratio >= 8 V.
double measure_lower_bound(const MomentReport& r, double V, double logT);

// C T exp(-c2 (V log T / lambda)^{1/2}).
double exceptional_measure_bound(double V, double T, double lambda, double c2, double C = 1.0);

}  // namespace szeta
