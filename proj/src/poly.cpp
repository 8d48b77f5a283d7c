#include "jetlab/poly.hpp"

#include "jetlab/error.hpp"

namespace jetlab {

static void strip(std::vector<Rat> &c) {
  while (!c.empty() && c.back() == 0)
    c.pop_back();
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { strip(c_); }

Poly Poly::constant(const Rat &c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::x() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

Rat Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size()))
    return Rat(0);
  return c_[static_cast<size_t>(i)];
}

Rat Poly::leading() const {
  if (c_.empty())
    return Rat(0);
  return c_.back();
}

Poly Poly::derivative() const {
  if (c_.size() <= 1)
    return Poly();
  std::vector<Rat> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i)
    d[i - 1] = Rat(static_cast<long>(i)) * c_[i];
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero())
    return *this;
  return (Rat(1) / leading()) * *this;
}

Poly operator+(const Poly &a, const Poly &b) {
  std::vector<Rat> c(std::max(a.coeffs().size(), b.coeffs().size()), Rat(0));
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return Poly(std::move(c));
}

Poly operator-(const Poly &a, const Poly &b) {
  std::vector<Rat> c(std::max(a.coeffs().size(), b.coeffs().size()), Rat(0));
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return Poly(std::move(c));
}

Poly operator*(const Poly &a, const Poly &b) {
  if (a.is_zero() || b.is_zero())
    return Poly();
  std::vector<Rat> c(a.coeffs().size() + b.coeffs().size() - 1, Rat(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0)
      continue;
    for (size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return Poly(std::move(c));
}

Poly operator*(const Rat &c, const Poly &a) {
  std::vector<Rat> r(a.coeffs().size());
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = c * a.coeffs()[i];
  return Poly(std::move(r));
}

std::pair<Poly, Poly> poly_divmod(const Poly &a, const Poly &b) {
  if (b.is_zero())
    fail(Err::Internal, "polynomial division by zero");
  std::vector<Rat> rem(a.coeffs());
  int db = b.degree();
  Rat lead_inv = Rat(1) / b.leading();
  std::vector<Rat> quo;
  if (static_cast<int>(rem.size()) - 1 >= db)
    quo.assign(rem.size() - static_cast<size_t>(db), Rat(0));
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    Rat f = rem[static_cast<size_t>(i)] * lead_inv;
    if (f == 0)
      continue;
    quo[static_cast<size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<size_t>(i - db + j)] -= f * b.coeff(j);
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::tuple<Poly, Poly, Poly> poly_ext_gcd(const Poly &a, const Poly &b) {
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(Rat(1)), s1;
  Poly t0, t1 = Poly::constant(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s = s0 - q * s1;
    Poly t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.is_zero())
    return {r0, s0, t0};
  Rat f = Rat(1) / r0.leading();
  return {f * r0, f * s0, f * t0};
}

Poly squarefree_part(const Poly &p) {
  if (p.is_zero() || p.degree() == 0)
    return p.monic();
  Poly g = poly_gcd(p, p.derivative());
  return poly_divmod(p, g).first.monic();
}

Rat eval(const Poly &p, const Rat &x) {
  Rat acc(0);
  for (int i = p.degree(); i >= 0; --i)
    acc = acc * x + p.coeff(i);
  return acc;
}

RatMat eval(const Poly &p, const RatMat &m) {
  int n = m.rows();
  RatMat acc(n, n);
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * m;
    if (p.coeff(i) != 0)
      acc = acc + p.coeff(i) * RatMat::identity(n);
  }
  return acc;
}

Poly charpoly(const RatMat &m) {
  if (m.rows() != m.cols())
    fail(Err::DimMismatch, "characteristic polynomial of non-square matrix");
  int n = m.rows();
  // Faddeev-LeVerrier: c_n x^n + ... with c_n = 1, divisions only by
  // integers, so everything stays exact over Q.
  std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
  c[static_cast<size_t>(n)] = 1;
  RatMat aux = RatMat::identity(n);
  for (int k = 1; k <= n; ++k) {
    if (k > 1)
      aux = m * aux + c[static_cast<size_t>(n - k + 1)] * RatMat::identity(n);
    RatMat prod = m * aux;
    c[static_cast<size_t>(n - k)] = -prod.trace() / Rat(k);
  }
  return Poly(std::move(c));
}

} // namespace jetlab
