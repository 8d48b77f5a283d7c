#pragma once

#include <climits>
#include <map>
#include <vector>

#include "jetlab/multi_index.hpp"
#include "jetlab/rational.hpp"

namespace jetlab {

/// Element of Q[[z1..zn]] modulo terms of degree > cutoff. Sparse storage:
/// only nonzero coefficients are kept, keyed by multi-index in graded-lex
/// order. Immutable in spirit: all arithmetic returns new values.
class Series {
public:
  using TermMap = std::map<MultiIndex, Rat, GrlexLess>;

  static constexpr int kOrderInfinity = INT_MAX;

  Series(int vars, int cutoff);
  static Series constant(int vars, int cutoff, const Rat &c);
  static Series variable(int vars, int cutoff, int i);
  static Series monomial(int vars, int cutoff, const MultiIndex &m,
                         const Rat &c);

  int vars() const { return vars_; }
  int cutoff() const { return cutoff_; }
  const TermMap &terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Minimal degree of a stored term; kOrderInfinity for the zero series.
  int order() const;
  int max_degree() const; // -1 for zero
  Rat coeff(const MultiIndex &m) const;
  Rat constant_term() const;

  /// Inserts/overwrites one coefficient (drops it when zero or past cutoff).
  void set_coeff(const MultiIndex &m, const Rat &c);
  void add_coeff(const MultiIndex &m, const Rat &c);

  /// Same terms reinterpreted at a lower truncation level.
  Series project(int level) const;
  /// Declares a higher cutoff without adding terms. Only meaningful for
  /// exactly-known polynomials; the caller asserts no information was lost.
  Series extended(int new_cutoff) const;
  /// Terms of total degree exactly d, kept at the same cutoff.
  Series homogeneous_part(int d) const;

  Series derivative(int i) const;

  Series operator-() const;

  friend bool operator==(const Series &a, const Series &b);
  friend bool operator!=(const Series &a, const Series &b) {
    return !(a == b);
  }

private:
  int vars_;
  int cutoff_;
  TermMap terms_;
};

Series operator+(const Series &a, const Series &b);
Series operator-(const Series &a, const Series &b);
Series operator*(const Series &a, const Series &b);
Series operator*(const Rat &c, const Series &a);

Series pow(const Series &a, long e);

/// Multiplicative inverse of a unit (nonzero constant term), expanded to the
/// cutoff.
Series unit_inverse(const Series &f);

/// f(images[0], ..., images[n-1]) truncated at the shared cutoff. Every image
/// must have zero constant term so that truncation commutes with substitution.
Series substitute(const Series &f, const std::vector<Series> &images);

} // namespace jetlab
