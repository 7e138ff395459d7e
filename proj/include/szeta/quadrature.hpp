#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature over panels. The integrand may be
// real or complex valued. Panels can be capped in width so that oscillatory
// integrands are resolved before the error estimate is trusted.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <type_traits>
#include <vector>

#include "szeta/errors.hpp"

namespace szeta::quad {

struct Options {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  double max_width = std::numeric_limits<double>::infinity();
  std::size_t max_panels = 400000;
};

template <class R>
struct Result {
  R value{};
  double error = 0.0;
  std::size_t evaluations = 0;
  std::size_t panels = 0;
};

namespace detail {

inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <class R>
struct Panel {
  double a, b;
  R value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class R, class F>
Panel<R> gk15(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const R fc = f(c);
  R kron = fc * kWgk[7];
  R gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const R sum = f(c - dx) + f(c + dx);
    kron += sum * kWgk[j];
    if (j % 2 == 1) gauss += sum * kWg[j / 2];
  }
  kron *= h;
  gauss *= h;
  return {a, b, kron, magnitude(kron - gauss)};
}

}  // namespace detail

// Integrates f over [a, b]. Throws CertificationError if the panel budget is
// exhausted before the requested tolerance is met.
template <class F>
auto integrate(const F& f, double a, double b, const Options& opt = {})
    -> Result<std::decay_t<decltype(f(0.0))>> {
  using R = std::decay_t<decltype(f(0.0))>;
  Result<R> out;
  if (a == b) return out;
  const double sign = b < a ? -1.0 : 1.0;
  if (b < a) std::swap(a, b);

  std::size_t initial = 1;
  if (std::isfinite(opt.max_width) && opt.max_width > 0.0)
    initial = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((b - a) / opt.max_width)));
  if (initial > opt.max_panels) throw CapacityError("quadrature: panel cap exceeds budget");

  std::priority_queue<detail::Panel<R>> heap;
  R total{};
  double err = 0.0;
  const double w = (b - a) / static_cast<double>(initial);
  for (std::size_t i = 0; i < initial; ++i) {
    const double lo = a + w * static_cast<double>(i);
    const double hi = i + 1 == initial ? b : lo + w;
    auto p = detail::gk15<R>(f, lo, hi);
    total += p.value;
    err += p.error;
    heap.push(p);
  }
  out.evaluations = 15 * initial;

  auto tolerance = [&] { return std::max(opt.abs_tol, opt.rel_tol * detail::magnitude(total)); };
  while (err > tolerance()) {
    if (heap.size() >= opt.max_panels)
      throw CertificationError("quadrature: tolerance not reached within panel budget (error " +
                               std::to_string(err) + ")");
    auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Panel cannot be split further in double precision; accept it.
      heap.push({worst.a, worst.b, worst.value, 0.0});
      err -= worst.error;
      continue;
    }
    auto left = detail::gk15<R>(f, worst.a, mid);
    auto right = detail::gk15<R>(f, mid, worst.b);
    out.evaluations += 30;
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed accumulated cancellation from the running updates.
  R resum{};
  double reerr = 0.0;
  out.panels = heap.size();
  while (!heap.empty()) {
    resum += heap.top().value;
    reerr += heap.top().error;
    heap.pop();
  }
  out.value = resum * sign;
  out.error = reerr;
  return out;
}

// Integrates over consecutive intervals [points[i], points[i+1]], each handled
// independently with a share of the tolerance proportional to its length.
template <class F>
auto integrate_breakpoints(const F& f, std::span<const double> points, const Options& opt = {})
    -> Result<std::decay_t<decltype(f(0.0))>> {
  using R = std::decay_t<decltype(f(0.0))>;
  Result<R> out;
  if (points.size() < 2) return out;
  const double length = points.back() - points.front();
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (points[i + 1] <= points[i]) continue;
    Options sub = opt;
    sub.abs_tol = opt.abs_tol * (points[i + 1] - points[i]) / length;
    auto r = integrate(f, points[i], points[i + 1], sub);
    out.value += r.value;
    out.error += r.error;
    out.evaluations += r.evaluations;
    out.panels += r.panels;
  }
  return out;
}

}  // namespace szeta::quad
