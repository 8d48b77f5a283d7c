#pragma once

#include <map>
#include <vector>

#include "jetlab/diffeo.hpp"
#include "jetlab/rat_matrix.hpp"
#include "jetlab/vector_field.hpp"

namespace jetlab {

/// Graded-lex ordered basis of the monomials of degree 1..cutoff, i.e. of
/// m/m^{k+1}.
struct MonomialBasis {
  int vars = 0;
  int cutoff = 0;
  std::vector<MultiIndex> monomials;
  std::map<MultiIndex, int, GrlexLess> index;

  static MonomialBasis make(int vars, int cutoff);
  int dim() const { return static_cast<int>(monomials.size()); }
  int index_of(const MultiIndex &m) const;
};

long jet_space_dim(int vars, int cutoff); // C(vars+cutoff, cutoff) - 1

std::vector<Rat> series_to_vector(const MonomialBasis &basis, const Series &f);
Series vector_to_series(const MonomialBasis &basis, const std::vector<Rat> &v);

/// Matrix of the pullback f -> f o phi on the monomial basis; column j holds
/// the image of basis monomial j. Composition reverses order:
/// matrix_of(compose(f, g)) = matrix_of(g) * matrix_of(f).
struct JetMatrix {
  MonomialBasis basis;
  RatMat mat;
};

JetMatrix matrix_of(const DiffeoJet &phi);

/// Reads coordinate images off the matrix and validates multiplicativity by
/// rebuilding the pullback matrix of the candidate map.
DiffeoJet matrix_to_map(const JetMatrix &m);

/// Matrix of the derivation f -> X(f) on the same basis.
RatMat derivation_matrix(const MonomialBasis &basis, const VectorFieldJet &x);

} // namespace jetlab
