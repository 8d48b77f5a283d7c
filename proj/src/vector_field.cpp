#include "jetlab/vector_field.hpp"

#include "jetlab/error.hpp"

namespace jetlab {

VectorFieldJet::VectorFieldJet(std::vector<Series> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty())
    fail(Err::DimMismatch, "a vector field needs at least one coefficient");
  vars_ = coeffs_[0].vars();
  cutoff_ = coeffs_[0].cutoff();
  if (static_cast<int>(coeffs_.size()) != vars_)
    fail(Err::DimMismatch, "coefficient count differs from variable count");
  for (const Series &c : coeffs_) {
    if (c.vars() != vars_ || c.cutoff() != cutoff_)
      fail(Err::DimMismatch,
           "vector field coefficients live in different jet spaces");
    if (c.constant_term() != 0)
      fail(Err::DimMismatch,
           "vector field coefficient has nonzero constant term");
  }
}

VectorFieldJet VectorFieldJet::zero(int vars, int cutoff) {
  std::vector<Series> coeffs(static_cast<size_t>(vars),
                             Series(vars, cutoff));
  return VectorFieldJet(std::move(coeffs));
}

bool VectorFieldJet::is_zero() const {
  for (const Series &c : coeffs_)
    if (!c.is_zero())
      return false;
  return true;
}

RatMat VectorFieldJet::linear_part() const {
  RatMat m(vars_, vars_);
  for (int i = 0; i < vars_; ++i)
    for (int j = 0; j < vars_; ++j)
      m.at(i, j) =
          coeffs_[static_cast<size_t>(i)].coeff(MultiIndex::unit(vars_, j));
  return m;
}

VectorFieldJet VectorFieldJet::project(int level) const {
  std::vector<Series> coeffs;
  coeffs.reserve(coeffs_.size());
  for (const Series &c : coeffs_)
    coeffs.push_back(c.project(level));
  return VectorFieldJet(std::move(coeffs));
}

bool operator==(const VectorFieldJet &a, const VectorFieldJet &b) {
  return a.vars_ == b.vars_ && a.cutoff_ == b.cutoff_ &&
         a.coeffs_ == b.coeffs_;
}

VectorFieldJet operator+(const VectorFieldJet &x, const VectorFieldJet &y) {
  if (x.vars() != y.vars() || x.cutoff() != y.cutoff())
    fail(Err::DimMismatch, "vector fields live in different jet spaces");
  std::vector<Series> coeffs;
  coeffs.reserve(static_cast<size_t>(x.vars()));
  for (int i = 0; i < x.vars(); ++i)
    coeffs.push_back(x.coefficient(i) + y.coefficient(i));
  return VectorFieldJet(std::move(coeffs));
}

VectorFieldJet operator-(const VectorFieldJet &x, const VectorFieldJet &y) {
  return x + (Rat(-1) * y);
}

VectorFieldJet operator*(const Rat &c, const VectorFieldJet &x) {
  std::vector<Series> coeffs;
  coeffs.reserve(static_cast<size_t>(x.vars()));
  for (int i = 0; i < x.vars(); ++i)
    coeffs.push_back(c * x.coefficient(i));
  return VectorFieldJet(std::move(coeffs));
}

Series apply(const VectorFieldJet &x, const Series &f) {
  if (x.vars() != f.vars() || x.cutoff() != f.cutoff())
    fail(Err::DimMismatch, "vector field and series live in different spaces");
  Series out(f.vars(), f.cutoff());
  for (int i = 0; i < x.vars(); ++i) {
    if (x.coefficient(i).is_zero())
      continue;
    out = out + x.coefficient(i) * f.derivative(i);
  }
  return out;
}

VectorFieldJet bracket(const VectorFieldJet &x, const VectorFieldJet &y) {
  if (x.vars() != y.vars() || x.cutoff() != y.cutoff())
    fail(Err::DimMismatch, "vector fields live in different jet spaces");
  std::vector<Series> coeffs;
  coeffs.reserve(static_cast<size_t>(x.vars()));
  for (int i = 0; i < x.vars(); ++i)
    coeffs.push_back(apply(x, y.coefficient(i)) - apply(y, x.coefficient(i)));
  return VectorFieldJet(std::move(coeffs));
}

} // namespace jetlab
