#pragma once

#include <optional>
#include <vector>

#include "jetlab/rational.hpp"

namespace jetlab {

/// Dense matrix over exact rationals.
class RatMat {
public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(int rows, int cols)
      : rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Rat(0)) {}

  static RatMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat &at(int i, int j) {
    return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) +
              static_cast<size_t>(j)];
  }
  const Rat &at(int i, int j) const {
    return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) +
              static_cast<size_t>(j)];
  }

  bool is_zero() const;
  bool is_identity() const;
  RatMat transpose() const;
  Rat trace() const;

  friend bool operator==(const RatMat &x, const RatMat &y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const RatMat &x, const RatMat &y) {
    return !(x == y);
  }

private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

RatMat operator+(const RatMat &x, const RatMat &y);
RatMat operator-(const RatMat &x, const RatMat &y);
RatMat operator*(const RatMat &x, const RatMat &y);
RatMat operator*(const Rat &c, const RatMat &x);
std::vector<Rat> operator*(const RatMat &x, const std::vector<Rat> &v);

Rat determinant(RatMat m);
std::optional<RatMat> try_inverse(RatMat m);
int rank(RatMat m);
RatMat mat_pow(const RatMat &m, long e);

/// Least p with m^p = 0, when m is nilpotent. Powers are checked up to the
/// dimension (Cayley-Hamilton bound).
std::optional<int> nilpotency_index(const RatMat &m);

} // namespace jetlab
