#pragma once

#include <cstdint>
#include <vector>

#include "szeta/zeta.hpp"

namespace szeta {

struct DirichletTerm {
  std::uint64_t n = 1;
  double coeff = 0.0;
};

// Finite Dirichlet polynomial sum_n c_n n^{-it} with strictly increasing n.
class DirichletPoly {
 public:
  DirichletPoly() = default;
  explicit DirichletPoly(std::vector<DirichletTerm> terms);

  const std::vector<DirichletTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  // sum c_n n^{-it}
  cplx eval(double t) const;
  // sum c_n cos(t log n), the real part of eval(t)
  double eval_cos(double t) const;
  // sum c_n^2 (the mean of |eval|^2 over long t ranges)
  double square_sum() const;
  double max_log_n() const;

 private:
  std::vector<DirichletTerm> terms_;
  std::vector<double> logs_;
};

}  // namespace szeta
