#include "szeta/zeros.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <string>
#include <string_view>

#include "szeta/errors.hpp"
#include "szeta/s_function.hpp"

namespace szeta {

ZeroList::ZeroList(double lo, double hi, long count_below_lo, std::vector<double> ordinates)
    : lo_(lo), hi_(hi), below_(count_below_lo), ordinates_(std::move(ordinates)) {
  if (!std::is_sorted(ordinates_.begin(), ordinates_.end())) throw PreconditionError("ZeroList: ordinates must be ascending");
}

double ZeroList::count(double t, double tie) const {
  const auto lo = std::lower_bound(ordinates_.begin(), ordinates_.end(), t - tie);
  const auto hi = std::upper_bound(ordinates_.begin(), ordinates_.end(), t + tie);
  return static_cast<double>(below_) + static_cast<double>(lo - ordinates_.begin()) + 0.5 * static_cast<double>(hi - lo);
}

double mean_zero_spacing(double t) {
  const double two_pi = 2.0 * std::numbers::pi;
  return two_pi / std::log(std::max(t, two_pi * std::numbers::e) / two_pi);
}

namespace {

// theta/pi + 1 + S at a point that is not an ordinate. Nudges the point by a
// tiny amount if it happens to sit on one.
long anchored_count(double& x, double direction, const EvalPrecision& prec) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    try {
      return zero_count_by_argument(x, prec);
    } catch (const CertificationError&) {
      x += direction * 1e-6 * mean_zero_spacing(x);
    }
  }
  throw CertificationError("find_zeros: cannot anchor the zero count near t=" + std::to_string(x));
}

double locate_root(double a, double b, double fa, double fb, const EvalPrecision& prec, double tol) {
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  auto f = [&](double t) { return hardy_z(t, prec); };
  auto stop = [tol](double lo, double hi) { return std::abs(hi - lo) <= tol; };
  std::uintmax_t iters = 200;
  const auto r = boost::math::tools::toms748_solve(f, a, b, fa, fb, stop, iters);
  return 0.5 * (r.first + r.second);
}

std::vector<double> scan_block(double a, double b, double step, const EvalPrecision& prec, double tol) {
  std::vector<double> roots;
  const auto n = static_cast<long>(std::ceil((b - a) / step));
  const double h = (b - a) / static_cast<double>(n);
  double x0 = a;
  double f0 = hardy_z(x0, prec);
  for (long i = 1; i <= n; ++i) {
    const double x1 = i == n ? b : a + h * static_cast<double>(i);
    const double f1 = hardy_z(x1, prec);
    if ((f0 < 0.0) != (f1 < 0.0)) roots.push_back(locate_root(x0, x1, f0, f1, prec, tol));
    x0 = x1;
    f0 = f1;
  }
  return roots;
}

struct BlockScan {
  double lo = 0.0;
  double hi = 0.0;
  long count_at_lo = 0;
  std::vector<double> zeros;
};

// Scans [lo, hi] (lo >= 0.5) block by block. The outer anchors are nudged
// outward if they sit on an ordinate, so the result covers [lo, hi].
BlockScan scan_certified(double lo, double hi, const EvalPrecision& prec, const ZeroSearchOptions& opt) {
  std::vector<double> bounds{lo};
  while (bounds.back() < hi) {
    const double len = std::clamp(8.0 * mean_zero_spacing(bounds.back()), 1.0, 20.0);
    bounds.push_back(std::min(hi, bounds.back() + len));
  }
  std::vector<long> counts(bounds.size());
  for (std::size_t i = 0; i < bounds.size(); ++i) counts[i] = anchored_count(bounds[i], i == 0 ? -1.0 : 1.0, prec);

  BlockScan out{bounds.front(), bounds.back(), counts.front(), {}};
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    const double a = bounds[i], b = bounds[i + 1];
    if (b <= a) continue;
    const long expected = counts[i + 1] - counts[i];
    double step = opt.step_fraction * mean_zero_spacing(b);
    std::vector<double> found;
    for (int level = 0;; ++level) {
      found = scan_block(a, b, step, prec, opt.root_tol);
      if (static_cast<long>(found.size()) == expected) break;
      if (level >= opt.max_refinements) throw MissedZerosError(a, b, expected, static_cast<long>(found.size()));
      step /= 4.0;
    }
    out.zeros.insert(out.zeros.end(), found.begin(), found.end());
  }
  return out;
}

void check_range(double t_lo, double t_hi, const ZeroSearchOptions& opt) {
  if (!(t_lo >= 0.0) || !(t_hi >= t_lo)) throw PreconditionError("find_zeros: need 0 <= t_lo <= t_hi");
  if (t_hi > opt.height_limit)
    throw PreconditionError("find_zeros: t_hi=" + std::to_string(t_hi) + " exceeds the height limit");
}

}  // namespace

std::vector<double> find_zeros(double t_lo, double t_hi, const EvalPrecision& prec, const ZeroSearchOptions& opt) {
  check_range(t_lo, t_hi, opt);
  // No zeros lie below height 0.5; the count there is certified to be zero.
  const double lo = std::max(t_lo, 0.5);
  if (t_hi <= lo) return {};
  auto scan = scan_certified(lo, t_hi, prec, opt);
  std::erase_if(scan.zeros, [&](double g) { return g < t_lo || g > t_hi; });
  return std::move(scan.zeros);
}

ZeroList build_zero_list(double lo, double hi, const EvalPrecision& prec, const ZeroSearchOptions& opt) {
  check_range(lo, hi, opt);
  const double start = std::max(lo, 0.5);
  if (hi <= start) return ZeroList(lo, hi, 0, {});
  auto scan = scan_certified(start, hi, prec, opt);
  return ZeroList(std::min(lo, scan.lo), std::max(hi, scan.hi), scan.count_at_lo, std::move(scan.zeros));
}

namespace {

std::string_view strip(std::string_view s) {
  const auto hash = s.find('#');
  if (hash != std::string_view::npos) s = s.substr(0, hash);
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

double parse_number(std::string_view tok, std::size_t line) {
  double v = 0.0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() || !std::isfinite(v))
    throw ParseError(line, "not a decimal number: '" + std::string(tok) + "'");
  return v;
}

template <class RowFn>
std::vector<ZeroRecord> parse_lines(std::istream& in, RowFn&& row) {
  std::vector<ZeroRecord> out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto s = strip(raw);
    if (s.empty()) continue;
    ZeroRecord r = row(s, line);
    if (!(r.gamma > 0.0)) throw ParseError(line, "ordinate must be positive");
    if (!out.empty() && r.gamma <= out.back().gamma)
      throw ParseError(line, "ordinates must be strictly increasing");
    out.push_back(r);
  }
  return out;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open " + path.string());
  return in;
}

}  // namespace

std::vector<ZeroRecord> parse_zero_table(std::istream& in) {
  return parse_lines(in, [](std::string_view s, std::size_t line) {
    if (s.find_first_of(" \t") != std::string_view::npos) throw ParseError(line, "expected a single ordinate");
    return ZeroRecord{0.5, parse_number(s, line)};
  });
}

std::vector<ZeroRecord> load_zero_table(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_zero_table(in);
}

std::vector<ZeroRecord> parse_synthetic_zeros(std::istream& in) {
  return parse_lines(in, [](std::string_view s, std::size_t line) {
    const auto sep = s.find_first_of(" \t,");
    if (sep == std::string_view::npos) throw ParseError(line, "expected 'gamma beta'");
    auto rest = s.substr(sep + 1);
    while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t' || rest.front() == ',')) rest.remove_prefix(1);
    const double gamma = parse_number(s.substr(0, sep), line);
    const double beta = parse_number(rest, line);
    if (!(beta > 0.0 && beta < 1.0)) throw ParseError(line, "beta must lie in (0, 1)");
    return ZeroRecord{beta, gamma};
  });
}

std::vector<ZeroRecord> load_synthetic_zeros(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_synthetic_zeros(in);
}

}  // namespace szeta
