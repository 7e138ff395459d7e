#include "szeta/dirichlet.hpp"

#include <cmath>

#include "szeta/errors.hpp"

namespace szeta {

DirichletPoly::DirichletPoly(std::vector<DirichletTerm> terms) : terms_(std::move(terms)) {
  logs_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].n == 0) throw PreconditionError("DirichletPoly: n must be positive");
    if (i > 0 && terms_[i].n <= terms_[i - 1].n) throw PreconditionError("DirichletPoly: n must be strictly increasing");
    if (!std::isfinite(terms_[i].coeff)) throw PreconditionError("DirichletPoly: coefficient is not finite");
    logs_.push_back(std::log(static_cast<double>(terms_[i].n)));
  }
}

cplx DirichletPoly::eval(double t) const {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const double ph = t * logs_[i];
    re += terms_[i].coeff * std::cos(ph);
    im -= terms_[i].coeff * std::sin(ph);
  }
  return {re, im};
}

double DirichletPoly::eval_cos(double t) const {
  double re = 0.0;
  for (std::size_t i = 0; i < terms_.size(); ++i) re += terms_[i].coeff * std::cos(t * logs_[i]);
  return re;
}

double DirichletPoly::square_sum() const {
  double s = 0.0;
  for (const auto& term : terms_) s += term.coeff * term.coeff;
  return s;
}

double DirichletPoly::max_log_n() const { return logs_.empty() ? 0.0 : logs_.back(); }

}  // namespace szeta
