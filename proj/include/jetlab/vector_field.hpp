#pragma once

#include <vector>

#include "jetlab/rat_matrix.hpp"
#include "jetlab/series.hpp"

namespace jetlab {

/// Jet of a formal vector field X = a_1 d/dz1 + ... + a_n d/dzn with all
/// coefficients in the maximal ideal, acting as a derivation of the jet
/// algebra.
class VectorFieldJet {
public:
  explicit VectorFieldJet(std::vector<Series> coefficients);
  static VectorFieldJet zero(int vars, int cutoff);

  int vars() const { return vars_; }
  int cutoff() const { return cutoff_; }
  const Series &coefficient(int i) const {
    return coeffs_[static_cast<size_t>(i)];
  }
  const std::vector<Series> &coefficients() const { return coeffs_; }

  bool is_zero() const;
  /// Matrix of degree-1 coefficients (the linear part D_0 X).
  RatMat linear_part() const;

  VectorFieldJet project(int level) const;

  friend bool operator==(const VectorFieldJet &a, const VectorFieldJet &b);
  friend bool operator!=(const VectorFieldJet &a, const VectorFieldJet &b) {
    return !(a == b);
  }

private:
  int vars_;
  int cutoff_;
  std::vector<Series> coeffs_;
};

VectorFieldJet operator+(const VectorFieldJet &x, const VectorFieldJet &y);
VectorFieldJet operator-(const VectorFieldJet &x, const VectorFieldJet &y);
VectorFieldJet operator*(const Rat &c, const VectorFieldJet &x);

/// X(f) = sum_i a_i df/dz_i, truncated.
Series apply(const VectorFieldJet &x, const Series &f);

/// [X, Y], with component i equal to X(Y_i) - Y(X_i).
VectorFieldJet bracket(const VectorFieldJet &x, const VectorFieldJet &y);

} // namespace jetlab
