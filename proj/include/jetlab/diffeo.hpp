#pragma once

#include <vector>

#include "jetlab/rat_matrix.hpp"
#include "jetlab/series.hpp"

namespace jetlab {

/// Jet of a formal diffeomorphism: an n-tuple of truncated series with zero
/// constant terms and invertible linear part, i.e. an element of the jet
/// group D_k. Composition convention: (compose(f, g))(z) = f(g(z)).
class DiffeoJet {
public:
  explicit DiffeoJet(std::vector<Series> components);
  static DiffeoJet identity(int vars, int cutoff);

  int vars() const { return vars_; }
  int cutoff() const { return cutoff_; }
  const Series &component(int i) const {
    return components_[static_cast<size_t>(i)];
  }
  const std::vector<Series> &components() const { return components_; }

  /// Matrix of degree-1 coefficients: entry (i, j) is the z_j coefficient of
  /// component i.
  RatMat linear_part() const;
  bool is_identity() const;

  DiffeoJet project(int level) const;

  friend bool operator==(const DiffeoJet &a, const DiffeoJet &b);
  friend bool operator!=(const DiffeoJet &a, const DiffeoJet &b) {
    return !(a == b);
  }

private:
  int vars_;
  int cutoff_;
  std::vector<Series> components_;
};

Series substitute(const Series &f, const DiffeoJet &phi);
DiffeoJet compose(const DiffeoJet &f, const DiffeoJet &g);
DiffeoJet inverse(const DiffeoJet &f);
/// f g f^-1 g^-1.
DiffeoJet commutator(const DiffeoJet &f, const DiffeoJet &g);
/// Iterated composition; negative exponents go through the inverse.
DiffeoJet power(const DiffeoJet &f, long e);

} // namespace jetlab
