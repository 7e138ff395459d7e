// Acceptance run: one pass/fail line per criterion. `--criterion N` runs a
// single one; no argument runs all eleven.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "szeta/convolution.hpp"
#include "szeta/experiments.hpp"
#include "szeta/resonator.hpp"
#include "szeta/s_function.hpp"
#include "szeta/zeros.hpp"

using namespace szeta;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... xs) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, xs...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Rational exact(double x) {
  // Every finite double is a dyadic rational.
  int e = 0;
  const double m = std::frexp(x, &e);
  const auto mant = static_cast<long long>(std::ldexp(m, 53));
  Rational r(mant);
  const int shift = e - 53;
  Rational two_pow = 1;
  for (int i = 0; i < std::abs(shift); ++i) two_pow *= 2;
  return shift >= 0 ? Rational(r * two_pow) : Rational(r / two_pow);
}

// Random toy configuration: 1..max_primes primes below 60, A^2 = j/10 with
// f(p) <= 1, N between the smallest prime and the full product.
ResonatorConfig random_toy(std::mt19937_64& rng, std::size_t max_primes) {
  static const std::vector<std::uint64_t> pool{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59};
  std::vector<std::uint64_t> pick(pool);
  std::shuffle(pick.begin(), pick.end(), rng);
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, max_primes)(rng);
  pick.resize(k);
  std::sort(pick.begin(), pick.end());
  const auto jmax = static_cast<int>(10 * pick.front());
  const int j = std::uniform_int_distribution<int>(1, std::min(jmax, 30))(rng);
  double full = 1.0;
  for (auto p : pick) full *= static_cast<double>(p);
  const double logN = std::uniform_real_distribution<double>(std::log(static_cast<double>(pick.front())),
                                                             std::log(full) + 0.5)(rng);
  const auto N = static_cast<std::uint64_t>(std::exp(logN));
  return make_toy_config(pick, Rational(j, 10), std::max<std::uint64_t>(N, 1));
}

// Growing ladder over the prime window [30, 64.5] at T = e^200.
std::vector<ResonatorConfig> ladder() {
  const double P = 30.0, Q = 64.5;
  std::vector<std::uint64_t> primes = arith::primes_in_range(P, Q).primes;
  std::vector<ResonatorConfig> out;
  for (int j = 3; j <= 7; ++j) {
    const double N = std::ceil(1.5 * std::pow(Q, j));
    auto c = make_toy_config(primes, Rational(j, 10), static_cast<std::uint64_t>(N), P, Q);
    c.T = std::exp(200.0);
    out.push_back(c);
  }
  return out;
}

BoundConstants ladder_constants() {
  BoundConstants k;
  k.d_threshold = 0.05;
  return k;
}

Outcome criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int i = 0; i <= 40; ++i) {
    const double v = -2.0 + 0.1 * i;
    worst = std::max(worst, std::abs(omega_hat_numeric(v) - std::max(0.0, 1.0 - std::abs(v))));
  }
  const double dt = seconds_since(t0);
  return {worst <= 1e-6 && dt < 1.0, fmt("Fejer transform at 41 points: max error %.3g (limit 1e-6), %.2f s (limit 1 s)", worst, dt)};
}

Outcome criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  double worst_iv = 0.0, worst_ii = 0.0;
  int sign_failures = 0;
  for (double a : {0.1, 0.3})
    for (double lambda : {3.0, 13.0})
      for (auto sign : {KernelSign::plus, KernelSign::minus}) {
        const auto rep = verify_kernel_properties({a, lambda, sign}, 1e-6);
        worst_ii = std::max(worst_ii, rep.checks[1].residual);
        worst_iv = std::max(worst_iv, rep.checks[3].residual);
        if (!rep.checks[0].pass) ++sign_failures;
        ok = ok && rep.checks[0].pass && rep.checks[1].residual <= 2.0 + 1e-6 && rep.checks[3].residual <= 1e-6;
      }
  const double dt = seconds_since(t0);
  return {ok && dt < 30.0,
          fmt("kernel properties over 8 kernels: transform error %.3g (limit 1e-6), max L1 %.6f (limit 2), "
              "sign failures %d, %.1f s (limit 30 s)",
              worst_iv, worst_ii, sign_failures, dt)};
}

Outcome criterion3() {
  const auto t0 = std::chrono::steady_clock::now();
  const KernelParams k{0.3, 3.0};
  double worst = 0.0;
  for (double t : {50.0, 500.0}) worst = std::max(worst, lemma1_check(0.6, t, k, {}, 1e-5).residual);
  const double dt = seconds_since(t0);
  return {worst <= 1e-4 && dt < 300.0,
          fmt("smoothed log zeta identity at sigma 0.6, t in {50, 500}: residual %.3g (limit 1e-4), %.1f s (limit 300 s)",
              worst, dt)};
}

Outcome criterion4() {
  const auto t0 = std::chrono::steady_clock::now();
  const double a = 0.3;
  double C_r = 0.0;
  std::string rows;
  for (double T : {1e4, 1e5, 1e6}) {
    const double logT = std::log(T);
    const double t = 1.5 * T + 0.37;
    for (auto sign : {KernelSign::plus, KernelSign::minus}) {
      const KernelParams k{a, std::log(logT), sign};
      const auto sm = smoothed_S(t, k, logT);
      const double D = k.s() * build_D_coefficients(k).eval_cos(t);
      const double c = std::abs(sm.value - D) / std::pow(logT, a / 2.0);
      C_r = std::max(C_r, c);
      rows += fmt(" T=%g%s:%.3f", T, sign == KernelSign::plus ? "+" : "-", c);
    }
  }
  const double dt = seconds_since(t0);
  return {C_r <= 10.0 && dt < 1800.0,
          fmt("smoothed S vs D ladder: fitted C_r %.4f (limit 10) [%s ], %.1f s", C_r, rows.c_str() + 1, dt)};
}

Outcome criterion5() {
  const auto t0 = std::chrono::steady_clock::now();
  const ZeroList list = build_zero_list(10.0, 1e4);
  std::mt19937_64 rng(20250501);
  std::uniform_real_distribution<double> u(10.0, 1e4);
  std::vector<double> ts(1000);
  for (auto& t : ts) t = u(rng);
  const auto s_arg = sample_S(ts);
  double agree = 0.0, integral = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    agree = std::max(agree, std::abs(s_arg[i] - s_by_counting(ts[i], list)));
    const double n = rs_theta(ts[i]) / std::numbers::pi + 1.0 + s_arg[i];
    integral = std::max(integral, std::abs(n - std::round(n)));
  }
  const auto table = load_zero_table(SZETA_TEST_DATA "/zeros_first100.txt");
  const auto first = build_zero_list(10.0, table.back().gamma + 1.0).ordinates();
  double table_err = table.size() == 100 && first.size() >= 100 ? 0.0 : 1.0;
  for (std::size_t i = 0; i < std::min<std::size_t>(100, first.size()); ++i)
    table_err = std::max(table_err, std::abs(first[i] - table[i].gamma));
  const double dt = seconds_since(t0);
  return {agree <= 1e-6 && integral <= 1e-6 && table_err <= 1e-6,
          fmt("dual S on 1000 heights: max disagreement %.3g, integrality residual %.3g, first-100 table error %.3g "
              "(limits 1e-6), %zu zeros listed, %.1f s",
              agree, integral, table_err, list.ordinates().size(), dt)};
}

Outcome criterion6() {
  const auto t0 = std::chrono::steady_clock::now();
  auto c = make_toy_config({3, 5, 7, 11}, Rational(9, 4), 1000);
  c.T = 1e6;
  const double ex = m1(c, MomentMode::exact);
  const double nu = m1(c, MomentMode::numeric);
  const double rel = std::abs(nu - ex) / ex;

  std::mt19937_64 rng(6);
  int mismatches = 0;
  for (int trial = 0; trial < 50; ++trial) {
    auto toy = random_toy(rng, 8);
    toy.T = 1e6;
    const KernelParams k{0.3, std::uniform_real_distribution<double>(2.0, 6.0)(rng)};
    const auto wd = prime_weights(toy, k);
    std::vector<Rational> w;
    for (double x : wd) w.push_back(exact(x));
    // Double enumeration: pairs (m, n) of support elements with n = m p.
    const auto& pr = toy.window.primes;
    const Rational A2 = *toy.A2_exact;
    std::vector<std::pair<std::uint64_t, Rational>> support;
    for (std::uint64_t mask = 0; mask < (1ULL << pr.size()); ++mask) {
      std::uint64_t n = 1;
      Rational f2 = 1;
      bool fits = true;
      for (std::size_t i = 0; i < pr.size() && fits; ++i)
        if (mask >> i & 1) {
          n *= pr[i];
          f2 *= A2 / Rational(pr[i]);
          fits = n <= toy.N;
        }
      if (fits) support.push_back({n, f2});
    }
    Rational oracle = 0;
    for (const auto& [n, fn2] : support)
      for (const auto& [m, fm2] : support) {
        if (n % m != 0 || n == m) continue;
        const auto q = n / m;
        const auto it = std::find(pr.begin(), pr.end(), q);
        if (it == pr.end()) continue;
        // f(m) f(n) / sqrt(p) = f(n)^2 / A, the full sum is A times the core.
        oracle += fn2 * w[it - pr.begin()];
      }
    if (m2_core_exact(toy, w) * A2 != oracle) ++mismatches;
  }
  const double dt = seconds_since(t0);
  return {rel <= 1e-2 && mismatches == 0,
          fmt("m1 numeric vs exact at T=1e6, N=1000: relative error %.3g (limit 1e-2); m2 rational vs double "
              "enumeration: %d of 50 mismatches, %.1f s",
              rel, mismatches, dt)};
}

Outcome criterion7() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto single = make_toy_config({3}, Rational(1), 3);
  const bool base = fourth_moment_diag_exact(single) == Rational(22, 9);
  std::mt19937_64 rng(7);
  int violations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto toy = random_toy(rng, 7);
    if (fourth_moment_diag_exact(toy) > fourth_moment_product_exact(toy)) ++violations;
  }
  const double dt = seconds_since(t0);
  return {base && violations == 0,
          fmt("fourth moment: single prime %s 22/9; diagonal above product bound on %d of 100 configs, %.1f s",
              base ? "equals" : "differs from", violations, dt)};
}

Outcome criterion8() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(8);
  int tail_bad = 0, mass_bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto toy = random_toy(rng, 10);
    const auto rt = rankin_tail(toy);
    const auto dm = divisor_mass(toy);
    if (!rt.exact_rational || !(rt.exact_ratio <= rt.bound)) ++tail_bad;
    if (!dm.exact_rational || !(dm.exact_ratio <= dm.bound)) ++mass_bad;
  }
  const auto consts = ladder_constants();
  bool restrictions = true, monotone = true;
  double prev_tail = 2.0, prev_mass = 2.0;
  std::string rows;
  for (const auto& c : ladder()) {
    const auto rep = check_restrictions(c, consts);
    restrictions = restrictions && rep.all_hold();
    const auto rt = rankin_tail(c);
    const auto dm = divisor_mass(c);
    monotone = monotone && rt.exact_ratio < prev_tail && dm.exact_ratio < prev_mass;
    monotone = monotone && rt.exact_ratio <= rt.bound && dm.exact_ratio <= dm.bound;
    prev_tail = rt.exact_ratio;
    prev_mass = dm.exact_ratio;
    rows += fmt(" A2=%.1f:%.3g/%.4f", c.A2(), rt.exact_ratio, dm.exact_ratio);
  }
  const double dt = seconds_since(t0);
  return {tail_bad == 0 && mass_bad == 0 && restrictions && monotone,
          fmt("Rankin bounds violated on %d (tail) and %d (divisor mass) of 100 configs; ladder restrictions %s, "
              "tail/mass ratios%s %s, %.1f s",
              tail_bad, mass_bad, restrictions ? "hold" : "FAIL", rows.c_str(),
              monotone ? "decreasing" : "NOT decreasing", dt)};
}

Outcome criterion9() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  int flagged = 0;
  double worst_rel = 0.0;
  std::string rows;
  for (const auto& c : ladder()) {
    const double logT = std::log(c.T);
    const KernelParams k{0.3, std::log(logT)};
    const auto r = ratio_report(c, k);
    if (r.window_flag) {
      ++flagged;
      ok = ok && r.ratio >= r.ratio_bound;
    }
    rows += fmt(" %.4f>=%.4f", r.ratio, r.ratio_bound);
    const double V = r.ratio / 8.0;
    const double got = measure_lower_bound(r, V, logT);
    const double mine = (r.m2_main / logT) * (r.m2_main / logT) / r.fourth_diag / r.T / r.bump_mass;
    worst_rel = std::max(worst_rel, std::abs(got - mine) / std::abs(mine));
  }
  ok = ok && flagged > 0 && worst_rel <= 1e-12;
  const double dt = seconds_since(t0);
  return {ok, fmt("resonance ratio on ladder (%d flagged):%s; measure bound recomputation relative error %.3g "
                  "(limit 1e-12), %.1f s",
                  flagged, rows.c_str(), worst_rel, dt)};
}

Outcome criterion10() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = clt_histogram(1e6, 10000, 40, 10);
  const double dt = seconds_since(t0);
  const bool ok = r.ks <= 0.15 && std::abs(r.mean) <= 3.0 * r.stderr_mean && dt < 3600.0;
  return {ok, fmt("normalized S at T=1e6, 10000 samples: KS %.4f (limit 0.15), mean %.4f (3 stderr %.4f), "
                  "variance %.4f, %.0f s",
                  r.ks, r.mean, 3.0 * r.stderr_mean, r.variance, dt)};
}

Outcome criterion11() {
  const auto t0 = std::chrono::steady_clock::now();
  const double T = 1e6;
  const auto c = make_toy_config({2, 3, 5, 7, 11, 13, 17, 19}, Rational(2), 9699690);
  const KernelParams k{0.3, std::log(std::log(T))};
  int wins = 0;
  HuntResult first;
  for (int trial = 0; trial < 25; ++trial) {
    auto r = resonance_hunt(T, c, k, 200, 1000 + trial);
    if (r.best_abs_S_weighted > r.best_abs_S_uniform) ++wins;
    if (trial == 0) first = std::move(r);
  }
  const double gap = std::abs(first.weighted_mean_D - first.m2_over_m1);
  const bool d_ok = gap <= 3.0 * first.weighted_mean_D_stderr;
  const double dt = seconds_since(t0);
  return {d_ok && wins >= 20,
          fmt("hunt at T=1e6: weighted mean D %.5f vs m2/m1 %.5f (gap %.2g, 3 stderr %.2g); weighted best |S| "
              "wins %d of 25 paired trials (need 20), %.0f s",
              first.weighted_mean_D, first.m2_over_m1, gap, 3.0 * first.weighted_mean_D_stderr, wins, dt)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::function<Outcome()> criteria[] = {criterion1, criterion2, criterion3, criterion4,
                                               criterion5, criterion6, criterion7, criterion8,
                                               criterion9, criterion10, criterion11};
  int only = 0;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  if (only < 0 || only > 11) {
    std::fprintf(stderr, "criterion must be 1..11\n");
    return 2;
  }
  int failures = 0;
  for (int n = 1; n <= 11; ++n) {
    if (only != 0 && n != only) continue;
    Outcome o;
    try {
      o = criteria[n - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    std::printf("criterion %d: %s - %s\n", n, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
