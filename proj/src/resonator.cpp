#include "szeta/resonator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "szeta/quadrature.hpp"

namespace szeta {

namespace {

constexpr double kPi = std::numbers::pi;

using u128 = unsigned __int128;

struct U128Hash {
  std::size_t operator()(u128 x) const noexcept {
    const auto lo = static_cast<std::uint64_t>(x);
    const auto hi = static_cast<std::uint64_t>(x >> 64);
    return std::hash<std::uint64_t>()(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
  }
};

Rational to_rational(u128 x) {
  boost::multiprecision::cpp_int v = static_cast<std::uint64_t>(x >> 64);
  v <<= 64;
  v += static_cast<std::uint64_t>(x);
  return Rational(v);
}

// Number-type policy for the shared combinatorial code.
template <class R>
struct Field;

template <>
struct Field<double> {
  static double a2(const ResonatorConfig& c) { return c.A2(); }
  static double from_int(u128 n) { return static_cast<double>(n); }
};

template <>
struct Field<Rational> {
  static Rational a2(const ResonatorConfig& c) {
    if (!c.A2_exact) throw PreconditionError("resonator: exact arithmetic needs an exact A^2");
    return *c.A2_exact;
  }
  static Rational from_int(u128 n) { return to_rational(n); }
};

template <class R>
R power(R base, std::size_t k) {
  R out(1);
  for (std::size_t i = 0; i < k; ++i) out *= base;
  return out;
}

template <class R>
R f_squared(const R& a2, const arith::SupportElement& e) {
  return power(a2, e.factors.size()) / Field<R>::from_int(e.n);
}

std::vector<arith::SupportElement> support_up_to_N(const ResonatorConfig& c) {
  return arith::squarefree_support(c.window, c.N);
}

template <class R>
R square_sum(const ResonatorConfig& c) {
  const R a2 = Field<R>::a2(c);
  R s(0);
  arith::SupportStream stream(c.window, c.N);
  while (auto e = stream.next()) s += f_squared(a2, *e);
  return s;
}

template <class R>
R total_mass(const ResonatorConfig& c) {
  const R a2 = Field<R>::a2(c);
  R s(1);
  for (auto p : c.window.primes) s *= R(1) + a2 / Field<R>::from_int(p);
  return s;
}

template <class R>
R m2_core_impl(const ResonatorConfig& c, const std::vector<R>& w) {
  if (w.size() != c.window.size()) throw PreconditionError("m2_core: one weight per prime expected");
  const R a2 = Field<R>::a2(c);
  const auto& primes = c.window.primes;
  R s(0);
  arith::SupportStream stream(c.window, c.N);
  while (auto m = stream.next()) {
    const R fm2 = f_squared(a2, *m);
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const u128 n = static_cast<u128>(m->n) * primes[i];
      if (n > c.N) break;
      if (std::find(m->factors.begin(), m->factors.end(), primes[i]) != m->factors.end()) continue;
      const R term = fm2 * w[i] / Field<R>::from_int(primes[i]);
      if (term < R(0)) throw CertificationError("m2_main: negative summand");
      s += term;
    }
  }
  return s;
}

template <class R>
R fourth_diag_impl(const ResonatorConfig& c) {
  const auto support = support_up_to_N(c);
  const std::size_t s = support.size();
  if (s > 0 && s > kProductGuard / s)
    throw CapacityError("fourth_moment_diag: " + std::to_string(s) + "^2 products exceed the guard of " +
                        std::to_string(kProductGuard));
  struct Cell {
    std::uint64_t count = 0;
    std::size_t omega = 0;
  };
  std::unordered_map<u128, Cell, U128Hash> cells;
  cells.reserve(s * s);
  for (const auto& x : support)
    for (const auto& y : support) {
      auto& cell = cells[static_cast<u128>(x.n) * y.n];
      ++cell.count;
      cell.omega = x.factors.size() + y.factors.size();
    }
  // All pairs with product n share f(a) f(b) = A^{Omega(n)} / sqrt(n).
  const R a2 = Field<R>::a2(c);
  R total(0);
  for (const auto& [n, cell] : cells) {
    const R cnt = Field<R>::from_int(cell.count);
    total += cnt * cnt * power(a2, cell.omega) / Field<R>::from_int(n);
  }
  return total;
}

template <class R>
R fourth_product_impl(const ResonatorConfig& c) {
  const R a2 = Field<R>::a2(c);
  R s(1);
  for (auto p : c.window.primes) {
    const R f2 = a2 / Field<R>::from_int(p);
    s *= R(1) + 4 * f2 + f2 * f2;
  }
  return s;
}

// Elementary symmetric sums e_0..e_k of f(p)^2: the mass of support elements
// with exactly k prime factors.
template <class R>
std::vector<R> mass_by_factor_count(const ResonatorConfig& c) {
  const R a2 = Field<R>::a2(c);
  std::vector<R> e(c.window.size() + 1, R(0));
  e[0] = R(1);
  std::size_t used = 0;
  for (auto p : c.window.primes) {
    const R f2 = a2 / Field<R>::from_int(p);
    ++used;
    for (std::size_t k = used; k >= 1; --k) e[k] += e[k - 1] * f2;
  }
  return e;
}

double to_double(const Rational& r) { return static_cast<double>(r); }

double log_log_ratio(const ResonatorConfig& c) { return std::log(std::log(c.Q) / std::log(c.P)); }

}  // namespace

ResonatorConfig make_config(double P, double Q, double A, std::uint64_t N, double a, double T) {
  if (!(A >= 0.0)) throw PreconditionError("resonator: need A >= 0");
  if (N < 1) throw PreconditionError("resonator: need N >= 1");
  ResonatorConfig c;
  c.P = P;
  c.Q = Q;
  c.A = A;
  c.N = N;
  c.a = a;
  c.T = T;
  c.window = arith::primes_in_range(P, Q);
  return c;
}

ResonatorConfig make_toy_config(std::vector<std::uint64_t> primes, const Rational& A2, std::uint64_t N, double P,
                                double Q) {
  if (A2 < 0) throw PreconditionError("resonator: need A^2 >= 0");
  if (N < 1) throw PreconditionError("resonator: need N >= 1");
  ResonatorConfig c;
  c.window = arith::window_from_primes(std::move(primes));
  c.P = P > 0.0 ? P : (c.window.empty() ? 2.0 : static_cast<double>(c.window.primes.front()));
  c.Q = Q > 0.0 ? Q : (c.window.empty() ? 2.0 : static_cast<double>(c.window.primes.back()));
  c.window.P = c.P;
  c.window.Q = c.Q;
  c.A = std::sqrt(to_double(A2));
  c.A2_exact = A2;
  c.N = N;
  return c;
}

bool RestrictionReport::all_hold() const {
  return std::all_of(items.begin(), items.end(), [](const Restriction& r) { return r.holds; });
}

std::string RestrictionReport::failing() const {
  std::string out;
  for (const auto& r : items)
    if (!r.holds) out += (out.empty() ? "" : ",") + r.id;
  return out;
}

RestrictionReport check_restrictions(const ResonatorConfig& c, const BoundConstants& k) {
  RestrictionReport rep;
  const double A2 = c.A2();
  auto add = [&](std::string id, bool holds, double lhs, const char* rel, double rhs) {
    std::ostringstream os;
    os << lhs << ' ' << rel << ' ' << rhs;
    rep.items.push_back({std::move(id), holds, os.str()});
  };
  const double logN = std::log(static_cast<double>(c.N));
  add("a", 10.0 * A2 * std::log(c.Q) <= logN, 10.0 * A2 * std::log(c.Q), "<=", logN);
  add("b", c.P >= A2, c.P, ">=", A2);
  add("c", c.Q >= 2.0 * c.P, c.Q, ">=", 2.0 * c.P);
  const double d = c.P > 1.0 ? A2 / std::log(c.P) : 0.0;
  add("d'", d >= k.d_threshold, d, ">=", k.d_threshold);
  if (c.T > 0.0) {
    const double logT = std::log(c.T);
    const double lo = std::pow(logT, 2.0 / 3.0 - c.a / 2.0);
    const double hi = std::pow(logT, 2.0 / 3.0 + c.a / 2.0);
    const bool ok = lo <= c.P * (1.0 + 1e-12) && c.P <= c.Q && c.Q <= hi * (1.0 + 1e-12);
    std::ostringstream os;
    os << lo << " <= " << c.P << " <= " << c.Q << " <= " << hi;
    rep.items.push_back({"window", ok, os.str()});
  }
  double fmax = 0.0;
  for (auto p : c.window.primes) fmax = std::max(fmax, c.A / std::sqrt(static_cast<double>(p)));
  add("f<=1", fmax <= 1.0, fmax, "<=", 1.0);
  return rep;
}

void require_restrictions(const ResonatorConfig& c, const BoundConstants& k) {
  const auto rep = check_restrictions(c, k);
  for (const auto& r : rep.items)
    if (!r.holds) throw RangeError(r.id, "resonator restriction (" + r.id + ") fails: " + r.detail);
}

ParameterChoice choose_parameters(double V, double T, double a, const BoundConstants& k) {
  if (!(T > std::exp(1.0))) throw PreconditionError("choose_parameters: need T > e");
  if (!(a > 0.0 && a < 1.0 / 3.0)) throw PreconditionError("choose_parameters: need 0 < a < 1/3");
  const double logT = std::log(T);
  const double lower = std::pow(logT, a);
  const double upper = k.kappa * std::cbrt(logT / std::log(logT));
  if (!(V >= lower))
    throw RangeError("V >= (log T)^a", "V = " + std::to_string(V) + " below (log T)^a = " + std::to_string(lower));
  if (!(V <= upper))
    throw RangeError("V <= kappa (log T / log log T)^(1/3)",
                     "V = " + std::to_string(V) + " above kappa (log T / log log T)^(1/3) = " + std::to_string(upper));
  const double P = std::pow(logT, 2.0 / 3.0);
  const double Q = std::pow(logT, 2.0 / 3.0 + a / 2.0);
  const double N = std::floor(std::cbrt(T));
  if (N >= 1.8e19) throw CapacityError("choose_parameters: N = T^(1/3) does not fit in 64 bits");
  ParameterChoice out;
  out.config = make_config(P, Q, k.b_const * V, static_cast<std::uint64_t>(N), a, T);
  out.report = check_restrictions(out.config, k);
  return out;
}

double f_value(const ResonatorConfig& c, std::uint64_t n) {
  if (n == 0) throw PreconditionError("f_value: need n >= 1");
  double f = 1.0;
  for (auto p : c.window.primes) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0.0;
    f *= c.A / std::sqrt(static_cast<double>(p));
  }
  return n == 1 ? f : 0.0;
}

Rational f_squared_exact(const ResonatorConfig& c, std::uint64_t n) {
  if (n == 0) throw PreconditionError("f_squared_exact: need n >= 1");
  const Rational a2 = Field<Rational>::a2(c);
  const std::uint64_t n0 = n;
  std::size_t k = 0;
  for (auto p : c.window.primes) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return Rational(0);
    ++k;
  }
  return n == 1 ? power(a2, k) / Rational(n0) : Rational(0);
}

DirichletPoly resonator_poly(const ResonatorConfig& c) {
  std::vector<DirichletTerm> terms;
  arith::SupportStream stream(c.window, c.N);
  while (auto e = stream.next()) {
    double f = 1.0;
    for (auto p : e->factors) f *= c.A / std::sqrt(static_cast<double>(p));
    terms.push_back({e->n, f});
  }
  return DirichletPoly(std::move(terms));
}

namespace bump {

namespace {
double h(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }
double g(double s) {
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return 1.0;
  return h(s) / (h(s) + h(1.0 - s));
}
}  // namespace

double phi(double x) { return g(4.0 * (x - 1.0)) * g(4.0 * (2.0 - x)); }

double mass() {
  static const double m = [] {
    quad::Options opt;
    opt.abs_tol = 1e-13;
    const double pts[] = {1.0, 1.25, 1.75, 2.0};
    return quad::integrate_breakpoints(phi, pts, opt).value;
  }();
  return m;
}

}  // namespace bump

double f_square_sum(const ResonatorConfig& c) { return square_sum<double>(c); }
Rational f_square_sum_exact(const ResonatorConfig& c) { return square_sum<Rational>(c); }

double m1(const ResonatorConfig& c, MomentMode mode) {
  if (!(c.T > 0.0)) throw PreconditionError("m1: need T > 0");
  if (mode == MomentMode::exact) return c.T * bump::mass() * f_square_sum(c);
  if (c.T > 1e7) throw PreconditionError("m1: numeric mode needs T <= 1e7");
  const DirichletPoly R = resonator_poly(c);
  const double scale = R.square_sum();
  quad::Options opt;
  opt.rel_tol = 1e-10;
  opt.max_width = kPi / std::max(1.0, R.max_log_n());
  auto f = [&](double t) { return std::norm(R.eval(t)) * bump::phi(t / c.T); };
  // Phi(t / T) vanishes outside [T, 2T]; integrate in chunks to bound memory.
  const double chunk = 2000.0 * opt.max_width;
  double total = 0.0;
  for (double lo = c.T; lo < 2.0 * c.T; lo += chunk) {
    const double hi = std::min(2.0 * c.T, lo + chunk);
    quad::Options sub = opt;
    sub.abs_tol = 1e-12 * scale * (hi - lo);
    total += quad::integrate(f, lo, hi, sub).value;
  }
  return total;
}

std::vector<double> prime_weights(const ResonatorConfig& c, const KernelParams& k) {
  std::vector<double> w;
  w.reserve(c.window.size());
  for (auto p : c.window.primes) w.push_back(omega_hat((std::log(static_cast<double>(p)) - k.center()) / k.width()));
  return w;
}

double m2_core(const ResonatorConfig& c, const std::vector<double>& weights) { return m2_core_impl<double>(c, weights); }

Rational m2_core_exact(const ResonatorConfig& c, const std::vector<Rational>& weights) {
  return m2_core_impl<Rational>(c, weights);
}

double m2_main(const ResonatorConfig& c, const KernelParams& k) {
  k.validate();
  if (!(c.T > 0.0)) throw PreconditionError("m2_main: need T > 0");
  // A prime-power k with m k = n squarefree in the support must be a prime of
  // the window not dividing m, and then Lambda(k) / log k = 1.
  return c.T * bump::mass() / (2.0 * kPi) * c.A * m2_core(c, prime_weights(c, k));
}

double fourth_moment_diag(const ResonatorConfig& c) { return fourth_diag_impl<double>(c); }
Rational fourth_moment_diag_exact(const ResonatorConfig& c) { return fourth_diag_impl<Rational>(c); }
double fourth_moment_product(const ResonatorConfig& c) { return fourth_product_impl<double>(c); }
Rational fourth_moment_product_exact(const ResonatorConfig& c) { return fourth_product_impl<Rational>(c); }

RankinTail rankin_tail(const ResonatorConfig& c) { return rankin_tail(c, 1.0 / (2.0 * std::log(c.Q))); }

RankinTail rankin_tail(const ResonatorConfig& c, double alpha) {
  if (!(alpha > 0.0)) throw PreconditionError("rankin_tail: need alpha > 0");
  RankinTail out;
  out.alpha = alpha;
  if (c.exact()) {
    const Rational total = total_mass<Rational>(c);
    const Rational r = (total - square_sum<Rational>(c)) / total;
    out.exact_rational = r;
    out.exact_ratio = to_double(r);
  } else {
    const double total = total_mass<double>(c);
    out.exact_ratio = std::max(0.0, (total - square_sum<double>(c)) / total);
  }
  double log_bound = -alpha * std::log(static_cast<double>(c.N));
  for (auto p : c.window.primes) {
    const double f2 = c.A2() / static_cast<double>(p);
    log_bound += std::log1p(std::pow(static_cast<double>(p), alpha) * f2) - std::log1p(f2);
  }
  out.bound = std::exp(log_bound);
  return out;
}

DivisorMass divisor_mass(const ResonatorConfig& c, double b) {
  if (!(b > 0.0 && b < 1.0)) throw PreconditionError("divisor_mass: need 0 < b < 1");
  DivisorMass out;
  out.b = b;
  out.D = 0.1 * c.A2() * log_log_ratio(c);
  auto below = [&](std::size_t k) { return static_cast<double>(k) < out.D; };
  if (c.exact()) {
    const auto e = mass_by_factor_count<Rational>(c);
    Rational head(0), total(0);
    for (std::size_t k = 0; k < e.size(); ++k) {
      total += e[k];
      if (below(k)) head += e[k];
    }
    out.exact_rational = head / total;
    out.exact_ratio = to_double(*out.exact_rational);
  } else {
    const auto e = mass_by_factor_count<double>(c);
    double head = 0.0, total = 0.0;
    for (std::size_t k = 0; k < e.size(); ++k) {
      total += e[k];
      if (below(k)) head += e[k];
    }
    out.exact_ratio = head / total;
  }
  double log_bound = -out.D * std::log(b);
  for (auto p : c.window.primes) {
    const double f2 = c.A2() / static_cast<double>(p);
    log_bound += std::log1p(b * f2) - std::log1p(f2);
  }
  out.bound = std::exp(log_bound);
  return out;
}

MomentReport ratio_report(const ResonatorConfig& c, const KernelParams& k) {
  k.validate();
  MomentReport r;
  r.T = c.T;
  r.bump_mass = bump::mass();
  r.m1 = m1(c, MomentMode::exact);
  r.m2_main = m2_main(c, k);
  r.fourth_diag = c.exact() ? to_double(fourth_moment_diag_exact(c)) : fourth_moment_diag(c);
  r.ratio = r.m2_main / r.m1;
  r.ratio_bound = log_log_ratio(c) / (100.0 * c.A);
  const auto w = prime_weights(c, k);
  r.min_weight = w.empty() ? 0.0 : *std::min_element(w.begin(), w.end());
  r.window_flag = !w.empty() && r.min_weight >= 0.5;
  return r;
}

double measure_lower_bound(const MomentReport& r, double V, double logT) {
  if (!(r.ratio >= 8.0 * V)) throw RatioTooSmallError(r.ratio, 8.0 * V);
  return r.m2_main * r.m2_main / (logT * logT * r.fourth_diag * r.T * r.bump_mass);
}

double exceptional_measure_bound(double V, double T, double lambda, double c2, double C) {
  if (!(V > 0.0 && T > 1.0 && lambda > 0.0)) throw PreconditionError("exceptional_measure_bound: need V, lambda > 0, T > 1");
  return C * T * std::exp(-c2 * std::sqrt(V * std::log(T) / lambda));
}

}  // namespace szeta
