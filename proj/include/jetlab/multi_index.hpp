#pragma once

#include <vector>

#include "jetlab/error.hpp"

namespace jetlab {

/// Exponent vector of a monomial z1^e1 ... zn^en with cached total degree.
struct MultiIndex {
  std::vector<int> exp;
  int deg = 0;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents);

  static MultiIndex zero(int vars);
  static MultiIndex unit(int vars, int i);

  int vars() const { return static_cast<int>(exp.size()); }
  int degree() const { return deg; }
  bool is_zero() const { return deg == 0; }

  MultiIndex plus(const MultiIndex &other) const;
  // Componentwise a >= b (divisibility of monomials).
  bool dominates(const MultiIndex &other) const;
};

bool operator==(const MultiIndex &a, const MultiIndex &b);
inline bool operator!=(const MultiIndex &a, const MultiIndex &b) {
  return !(a == b);
}

// Graded lexicographic: lower degree first; within a degree the
// lexicographically larger exponent vector comes first, so for two
// variables the order is x^2, x*y, y^2.
bool grlex_less(const MultiIndex &a, const MultiIndex &b);

struct GrlexLess {
  bool operator()(const MultiIndex &a, const MultiIndex &b) const {
    return grlex_less(a, b);
  }
};

// All monomials of total degree min_deg..max_deg in grlex order.
std::vector<MultiIndex> monomials_up_to(int vars, int max_deg,
                                        int min_deg = 0);

// Number of monomials of degree 0..max_deg, i.e. C(vars+max_deg, vars).
long monomial_count(int vars, int max_deg);

} // namespace jetlab
