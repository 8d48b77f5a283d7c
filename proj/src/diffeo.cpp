#include "jetlab/diffeo.hpp"

#include "jetlab/error.hpp"

namespace jetlab {

DiffeoJet::DiffeoJet(std::vector<Series> components)
    : components_(std::move(components)) {
  if (components_.empty())
    fail(Err::DimMismatch, "a map needs at least one component");
  vars_ = components_[0].vars();
  cutoff_ = components_[0].cutoff();
  if (static_cast<int>(components_.size()) != vars_)
    fail(Err::DimMismatch, "component count differs from variable count");
  for (const Series &c : components_) {
    if (c.vars() != vars_ || c.cutoff() != cutoff_)
      fail(Err::DimMismatch, "map components live in different jet spaces");
    if (c.constant_term() != 0)
      fail(Err::NotDiffeo, "map component has nonzero constant term");
  }
  if (cutoff_ < 1)
    fail(Err::Level, "map jets need truncation level >= 1");
  if (determinant(linear_part()) == 0)
    fail(Err::NotDiffeo, "map has singular linear part");
}

DiffeoJet DiffeoJet::identity(int vars, int cutoff) {
  std::vector<Series> comps;
  comps.reserve(static_cast<size_t>(vars));
  for (int i = 0; i < vars; ++i)
    comps.push_back(Series::variable(vars, cutoff, i));
  return DiffeoJet(std::move(comps));
}

RatMat DiffeoJet::linear_part() const {
  RatMat m(vars_, vars_);
  for (int i = 0; i < vars_; ++i)
    for (int j = 0; j < vars_; ++j)
      m.at(i, j) = components_[static_cast<size_t>(i)].coeff(
          MultiIndex::unit(vars_, j));
  return m;
}

bool DiffeoJet::is_identity() const {
  return *this == identity(vars_, cutoff_);
}

DiffeoJet DiffeoJet::project(int level) const {
  std::vector<Series> comps;
  comps.reserve(components_.size());
  for (const Series &c : components_)
    comps.push_back(c.project(level));
  return DiffeoJet(std::move(comps));
}

bool operator==(const DiffeoJet &a, const DiffeoJet &b) {
  return a.vars_ == b.vars_ && a.cutoff_ == b.cutoff_ &&
         a.components_ == b.components_;
}

Series substitute(const Series &f, const DiffeoJet &phi) {
  if (f.vars() != phi.vars() || f.cutoff() != phi.cutoff())
    fail(Err::DimMismatch, "series and map live in different jet spaces");
  return substitute(f, phi.components());
}

DiffeoJet compose(const DiffeoJet &f, const DiffeoJet &g) {
  if (f.vars() != g.vars() || f.cutoff() != g.cutoff())
    fail(Err::DimMismatch, "composed maps live in different jet spaces");
  std::vector<Series> comps;
  comps.reserve(static_cast<size_t>(f.vars()));
  for (int i = 0; i < f.vars(); ++i)
    comps.push_back(substitute(f.component(i), g));
  return DiffeoJet(std::move(comps));
}

DiffeoJet inverse(const DiffeoJet &f) {
  auto lin_inv = try_inverse(f.linear_part());
  if (!lin_inv)
    fail(Err::NotDiffeo, "map has singular linear part");
  int n = f.vars();
  int k = f.cutoff();
  // Start from the inverse linear part and correct one degree at a time:
  // if compose(f, g) = id + e with e homogeneous of degree d, replacing g by
  // g - A^-1 e cancels the degree-d error without touching lower degrees.
  std::vector<Series> comps;
  for (int i = 0; i < n; ++i) {
    Series c(n, k);
    for (int j = 0; j < n; ++j)
      c.add_coeff(MultiIndex::unit(n, j), lin_inv->at(i, j));
    comps.push_back(std::move(c));
  }
  DiffeoJet g(comps);
  DiffeoJet id = DiffeoJet::identity(n, k);
  for (int d = 2; d <= k; ++d) {
    DiffeoJet fg = compose(f, g);
    std::vector<Series> err;
    err.reserve(static_cast<size_t>(n));
    bool any = false;
    for (int i = 0; i < n; ++i) {
      Series e =
          (fg.component(i) - id.component(i)).homogeneous_part(d);
      any = any || !e.is_zero();
      err.push_back(std::move(e));
    }
    if (!any)
      continue;
    std::vector<Series> next;
    next.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      Series c = g.component(i);
      for (int j = 0; j < n; ++j)
        if (lin_inv->at(i, j) != 0)
          c = c - lin_inv->at(i, j) * err[static_cast<size_t>(j)];
      next.push_back(std::move(c));
    }
    g = DiffeoJet(std::move(next));
  }
  return g;
}

DiffeoJet commutator(const DiffeoJet &f, const DiffeoJet &g) {
  return compose(compose(f, g), compose(inverse(f), inverse(g)));
}

DiffeoJet power(const DiffeoJet &f, long e) {
  DiffeoJet base = e < 0 ? inverse(f) : f;
  unsigned long n =
      e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  DiffeoJet acc = DiffeoJet::identity(f.vars(), f.cutoff());
  while (n > 0) {
    if (n & 1)
      acc = compose(acc, base);
    base = compose(base, base);
    n >>= 1;
  }
  return acc;
}

} // namespace jetlab
