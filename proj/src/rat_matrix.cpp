#include "jetlab/rat_matrix.hpp"

#include "jetlab/error.hpp"

namespace jetlab {

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i)
    m.at(i, i) = 1;
  return m;
}

bool RatMat::is_zero() const {
  for (const Rat &x : a_)
    if (x != 0)
      return false;
  return true;
}

bool RatMat::is_identity() const {
  if (rows_ != cols_)
    return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0))
        return false;
  return true;
}

RatMat RatMat::transpose() const {
  RatMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      t.at(j, i) = at(i, j);
  return t;
}

Rat RatMat::trace() const {
  Rat t(0);
  for (int i = 0; i < rows_ && i < cols_; ++i)
    t += at(i, i);
  return t;
}

static void require_same_shape(const RatMat &x, const RatMat &y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    fail(Err::DimMismatch, "matrix shapes differ");
}

RatMat operator+(const RatMat &x, const RatMat &y) {
  require_same_shape(x, y);
  RatMat r(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      r.at(i, j) = x.at(i, j) + y.at(i, j);
  return r;
}

RatMat operator-(const RatMat &x, const RatMat &y) {
  require_same_shape(x, y);
  RatMat r(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      r.at(i, j) = x.at(i, j) - y.at(i, j);
  return r;
}

RatMat operator*(const RatMat &x, const RatMat &y) {
  if (x.cols() != y.rows())
    fail(Err::DimMismatch, "matrix product shapes differ");
  RatMat r(x.rows(), y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < x.cols(); ++k) {
      const Rat &xik = x.at(i, k);
      if (xik == 0)
        continue;
      for (int j = 0; j < y.cols(); ++j) {
        const Rat &ykj = y.at(k, j);
        if (ykj == 0)
          continue;
        r.at(i, j) += xik * ykj;
      }
    }
  return r;
}

RatMat operator*(const Rat &c, const RatMat &x) {
  RatMat r(x.rows(), x.cols());
  if (c == 0)
    return r;
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      r.at(i, j) = c * x.at(i, j);
  return r;
}

std::vector<Rat> operator*(const RatMat &x, const std::vector<Rat> &v) {
  if (x.cols() != static_cast<int>(v.size()))
    fail(Err::DimMismatch, "matrix-vector shapes differ");
  std::vector<Rat> r(static_cast<size_t>(x.rows()), Rat(0));
  for (int j = 0; j < x.cols(); ++j) {
    const Rat &vj = v[static_cast<size_t>(j)];
    if (vj == 0)
      continue;
    for (int i = 0; i < x.rows(); ++i) {
      const Rat &xij = x.at(i, j);
      if (xij == 0)
        continue;
      r[static_cast<size_t>(i)] += xij * vj;
    }
  }
  return r;
}

Rat determinant(RatMat m) {
  if (m.rows() != m.cols())
    fail(Err::DimMismatch, "determinant of a non-square matrix");
  int n = m.rows();
  Rat det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0)
      return Rat(0);
    if (pivot != col) {
      for (int j = col; j < n; ++j)
        std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    Rat inv = Rat(1) / m.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (m.at(i, col) == 0)
        continue;
      Rat f = m.at(i, col) * inv;
      for (int j = col; j < n; ++j)
        m.at(i, j) -= f * m.at(col, j);
    }
  }
  return det;
}

std::optional<RatMat> try_inverse(RatMat m) {
  if (m.rows() != m.cols())
    fail(Err::DimMismatch, "inverse of a non-square matrix");
  int n = m.rows();
  RatMat inv = RatMat::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0)
      return std::nullopt;
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(pivot, j), m.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    Rat f = Rat(1) / m.at(col, col);
    for (int j = 0; j < n; ++j) {
      m.at(col, j) *= f;
      inv.at(col, j) *= f;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || m.at(i, col) == 0)
        continue;
      Rat g = m.at(i, col);
      for (int j = 0; j < n; ++j) {
        m.at(i, j) -= g * m.at(col, j);
        inv.at(i, j) -= g * inv.at(col, j);
      }
    }
  }
  return inv;
}

int rank(RatMat m) {
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0)
      continue;
    if (pivot != r)
      for (int j = col; j < m.cols(); ++j)
        std::swap(m.at(pivot, j), m.at(r, j));
    Rat inv = Rat(1) / m.at(r, col);
    for (int i = r + 1; i < m.rows(); ++i) {
      if (m.at(i, col) == 0)
        continue;
      Rat f = m.at(i, col) * inv;
      for (int j = col; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

RatMat mat_pow(const RatMat &m, long e) {
  if (m.rows() != m.cols())
    fail(Err::DimMismatch, "power of a non-square matrix");
  if (e < 0)
    fail(Err::Internal, "negative matrix power");
  RatMat acc = RatMat::identity(m.rows());
  RatMat base = m;
  while (e > 0) {
    if (e & 1)
      acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::optional<int> nilpotency_index(const RatMat &m) {
  if (m.rows() != m.cols())
    fail(Err::DimMismatch, "nilpotency of a non-square matrix");
  if (m.is_zero())
    return 1;
  RatMat p = m;
  for (int k = 2; k <= m.rows(); ++k) {
    p = p * m;
    if (p.is_zero())
      return k;
  }
  return std::nullopt;
}

} // namespace jetlab
