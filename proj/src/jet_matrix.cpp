#include "jetlab/jet_matrix.hpp"

#include "jetlab/error.hpp"

namespace jetlab {

MonomialBasis MonomialBasis::make(int vars, int cutoff) {
  MonomialBasis b;
  b.vars = vars;
  b.cutoff = cutoff;
  b.monomials = monomials_up_to(vars, cutoff, 1);
  for (int i = 0; i < static_cast<int>(b.monomials.size()); ++i)
    b.index.emplace(b.monomials[static_cast<size_t>(i)], i);
  return b;
}

int MonomialBasis::index_of(const MultiIndex &m) const {
  auto it = index.find(m);
  if (it == index.end())
    fail(Err::Internal, "monomial outside basis");
  return it->second;
}

long jet_space_dim(int vars, int cutoff) {
  return monomial_count(vars, cutoff) - 1;
}

std::vector<Rat> series_to_vector(const MonomialBasis &basis,
                                  const Series &f) {
  if (f.constant_term() != 0)
    fail(Err::Internal, "series with constant term has no basis vector");
  std::vector<Rat> v(static_cast<size_t>(basis.dim()), Rat(0));
  for (const auto &[m, c] : f.terms())
    v[static_cast<size_t>(basis.index_of(m))] = c;
  return v;
}

Series vector_to_series(const MonomialBasis &basis,
                        const std::vector<Rat> &v) {
  Series f(basis.vars, basis.cutoff);
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0)
      f.set_coeff(basis.monomials[i], v[i]);
  return f;
}

JetMatrix matrix_of(const DiffeoJet &phi) {
  MonomialBasis basis = MonomialBasis::make(phi.vars(), phi.cutoff());
  int d = basis.dim();
  RatMat m(d, d);
  // Images of basis monomials built multiplicatively: the image of z^a is
  // image(z^(a - e_i)) * image(z_i) for any i with a_i > 0. Grlex order
  // guarantees the smaller factor was already computed.
  std::vector<Series> images(static_cast<size_t>(d),
                             Series(phi.vars(), phi.cutoff()));
  for (int j = 0; j < d; ++j) {
    const MultiIndex &mon = basis.monomials[static_cast<size_t>(j)];
    if (mon.degree() == 1) {
      int var = 0;
      for (int i = 0; i < phi.vars(); ++i)
        if (mon.exp[static_cast<size_t>(i)] == 1)
          var = i;
      images[static_cast<size_t>(j)] = phi.component(var);
    } else {
      int var = 0;
      for (int i = 0; i < phi.vars(); ++i)
        if (mon.exp[static_cast<size_t>(i)] > 0) {
          var = i;
          break;
        }
      MultiIndex rest = mon;
      rest.exp[static_cast<size_t>(var)] -= 1;
      rest.deg -= 1;
      images[static_cast<size_t>(j)] =
          images[static_cast<size_t>(basis.index_of(rest))] *
          phi.component(var);
    }
    for (const auto &[mon_i, c] : images[static_cast<size_t>(j)].terms())
      m.at(basis.index_of(mon_i), j) = c;
  }
  return JetMatrix{std::move(basis), std::move(m)};
}

DiffeoJet matrix_to_map(const JetMatrix &jm) {
  const MonomialBasis &basis = jm.basis;
  if (jm.mat.rows() != basis.dim() || jm.mat.cols() != basis.dim())
    fail(Err::NotJet, "matrix does not match the monomial basis");
  std::vector<Series> comps;
  comps.reserve(static_cast<size_t>(basis.vars));
  for (int i = 0; i < basis.vars; ++i) {
    int col = basis.index_of(MultiIndex::unit(basis.vars, i));
    Series c(basis.vars, basis.cutoff);
    for (int r = 0; r < basis.dim(); ++r)
      if (jm.mat.at(r, col) != 0)
        c.set_coeff(basis.monomials[static_cast<size_t>(r)],
                    jm.mat.at(r, col));
    comps.push_back(std::move(c));
  }
  try {
    DiffeoJet candidate(std::move(comps));
    if (matrix_of(candidate).mat != jm.mat)
      fail(Err::NotJet,
           "matrix is not multiplicative on products of coordinates");
    return candidate;
  } catch (const JetError &e) {
    if (e.code() == Err::NotDiffeo)
      fail(Err::NotJet, "matrix columns do not define a diffeomorphism jet");
    throw;
  }
}

RatMat derivation_matrix(const MonomialBasis &basis, const VectorFieldJet &x) {
  if (x.vars() != basis.vars || x.cutoff() != basis.cutoff)
    fail(Err::DimMismatch, "vector field does not match the basis");
  int d = basis.dim();
  RatMat m(d, d);
  for (int j = 0; j < d; ++j) {
    Series image = apply(
        x, Series::monomial(basis.vars, basis.cutoff,
                            basis.monomials[static_cast<size_t>(j)], Rat(1)));
    for (const auto &[mon, c] : image.terms())
      m.at(basis.index_of(mon), j) = c;
  }
  return m;
}

} // namespace jetlab
