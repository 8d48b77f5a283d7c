#pragma once

#include <tuple>
#include <vector>

#include "jetlab/rat_matrix.hpp"
#include "jetlab/rational.hpp"

namespace jetlab {

/// Univariate polynomial over Q, dense coefficients, no trailing zeros.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  static Poly constant(const Rat &c);
  static Poly x();

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rat coeff(int i) const;
  Rat leading() const;
  const std::vector<Rat> &coeffs() const { return c_; }

  Poly derivative() const;
  Poly monic() const;

  friend bool operator==(const Poly &a, const Poly &b) {
    return a.c_ == b.c_;
  }

private:
  std::vector<Rat> c_;
};

Poly operator+(const Poly &a, const Poly &b);
Poly operator-(const Poly &a, const Poly &b);
Poly operator*(const Poly &a, const Poly &b);
Poly operator*(const Rat &c, const Poly &a);

std::pair<Poly, Poly> poly_divmod(const Poly &a, const Poly &b);
Poly poly_gcd(Poly a, Poly b); // monic
/// (g, u, v) with u a + v b = g = monic gcd.
std::tuple<Poly, Poly, Poly> poly_ext_gcd(const Poly &a, const Poly &b);
/// p / gcd(p, p'): the radical over Q.
Poly squarefree_part(const Poly &p);

Rat eval(const Poly &p, const Rat &x);
RatMat eval(const Poly &p, const RatMat &m); // Horner

/// Characteristic polynomial by the trace recursion (exact over Q,
/// deterministic, no factorization).
Poly charpoly(const RatMat &m);

} // namespace jetlab
