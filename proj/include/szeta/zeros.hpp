#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <span>
#include <vector>

#include "szeta/zeta.hpp"

namespace szeta {

inline constexpr double kDeskHeightLimit = 1e7;

// A nontrivial zero rho = beta + i gamma.
struct ZeroRecord {
  double beta = 0.5;
  double gamma = 0.0;
};

// A complete list of zero ordinates in [lo, hi], together with the number of
// zeros strictly below lo. Supports N(t) for t in [lo, hi].
class ZeroList {
 public:
  ZeroList() = default;
  ZeroList(double lo, double hi, long count_below_lo, std::vector<double> ordinates);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  bool covers(double t) const noexcept { return t >= lo_ && t <= hi_; }
  const std::vector<double>& ordinates() const noexcept { return ordinates_; }

  // N(t): zeros with 0 < gamma < t, zeros within `tie` of t counted with weight 1/2.
  double count(double t, double tie = 1e-8) const;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
  long below_ = 0;
  std::vector<double> ordinates_;
};

struct ZeroSearchOptions {
  double height_limit = kDeskHeightLimit;
  // Scan step as a fraction of the mean zero spacing 2 pi / log(t / 2 pi).
  double step_fraction = 0.125;
  // Each refinement divides the step by 4.
  int max_refinements = 4;
  double root_tol = 1e-12;
};

// Ordinates of the sign changes of Z(t) in [t_lo, t_hi], located to root_tol.
// Completeness is certified block by block against the integer
// theta(t)/pi + 1 + S(t) at the block ends; a mismatch that survives
// refinement raises MissedZerosError.
std::vector<double> find_zeros(double t_lo, double t_hi, const EvalPrecision& prec = {},
                               const ZeroSearchOptions& opt = {});

// Complete ZeroList on [lo, hi] (find_zeros plus the certified count below lo).
ZeroList build_zero_list(double lo, double hi, const EvalPrecision& prec = {}, const ZeroSearchOptions& opt = {});

// Mean spacing of zeros near height t.
double mean_zero_spacing(double t);

// Critical-line ordinate tables: one decimal ordinate per line, '#' starts a
// comment, LF or CRLF line ends, '.' decimal point. Ordinates must be strictly
// increasing. Records carry beta = 1/2.
std::vector<ZeroRecord> parse_zero_table(std::istream& in);
std::vector<ZeroRecord> load_zero_table(const std::filesystem::path& path);

// Synthetic zero sets: "gamma beta" per line, same comment rules; gamma
// strictly increasing and 0 < beta < 1.
std::vector<ZeroRecord> parse_synthetic_zeros(std::istream& in);
std::vector<ZeroRecord> load_synthetic_zeros(const std::filesystem::path& path);

}  // namespace szeta
