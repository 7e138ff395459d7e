#pragma once

#include "szeta/zeros.hpp"
#include "szeta/zeta.hpp"

namespace szeta {

struct SOptions {
  double cross_check_tol = 1e-6;
  // Offset for the two-sided average at an ordinate; confirmed again at eps/2.
  double ordinate_eps = 1e-5;
  // |zeta(1/2 + i t)| below this marks t as an ordinate.
  double ordinate_detect = 1e-9;
};

// S(t) with both evaluation routes recorded.
struct CriticalSample {
  double t = 0.0;
  double z = 0.0;
  double theta = 0.0;
  double s_arg = 0.0;
  double s_count = 0.0;
  double n_t = 0.0;
};

// Method A: continuous argument of zeta along 2 -> 2 + it -> 1/2 + it. The
// horizontal leg is sampled on a uniform sigma grid and any step whose
// argument increment reaches pi/2 is halved. At an ordinate the two-sided
// average is returned. S(0) = 0 and S(-t) = -S(t).
double s_by_argument(double t, const EvalPrecision& prec = {}, const SOptions& opt = {});

// Method B: N(t) - theta(t)/pi - 1 with N(t) from a complete zero list.
double s_by_counting(double t, const ZeroList& zeros);

// Method B without a precomputed list: zeros on a short interval below t are
// found and certified, anchored by method A at the interval's left end.
double s_by_local_count(double t, const EvalPrecision& prec = {});

// S(t) from method A, cross-checked against method B when `zeros` covers t.
// Throws InconsistencyError beyond opt.cross_check_tol.
double S_of_t(double t, const EvalPrecision& prec = {}, const SOptions& opt = {}, const ZeroList* zeros = nullptr);

// Both methods at t. Uses `zeros` for method B when it covers t, otherwise a
// local count. Throws InconsistencyError beyond opt.cross_check_tol.
CriticalSample critical_sample(double t, const EvalPrecision& prec = {}, const SOptions& opt = {},
                               const ZeroList* zeros = nullptr);

// log zeta(s) for 0 < Re s, Im s != 0, continued from the right along
// horizontal lines: the branch fixed by arg zeta(2 + i t) in (-pi/2, pi/2).
cplx log_zeta(cplx s, const EvalPrecision& prec = {});

// theta(t)/pi + 1 + S(t) rounded; the zero count N(t) at a non-ordinate t.
long zero_count_by_argument(double t, const EvalPrecision& prec = {});

}  // namespace szeta
