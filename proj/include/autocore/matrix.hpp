#pragma once

#include <vector>

#include "autocore/base.hpp"

namespace autocore {

// Dense exact-rational matrix. Small sizes only; no attempt at sparsity.
class RatMatrix {
public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rat& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  // Submatrix given row/column index lists (kept in the given order).
  RatMatrix select(const std::vector<int>& rows, const std::vector<int>& cols) const;
  RatMatrix without_col(int col) const;

  std::vector<Rat> mul(const std::vector<Rat>& v) const;   // M v
  std::vector<Rat> tmul(const std::vector<Rat>& y) const;  // y^T M

  bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  Rat determinant() const;  // exact; 0x0 -> 1
  int rank() const;

  // Coefficients of det(lambda I - M), leading first (monic, size n+1).
  std::vector<Rat> char_poly() const;

  std::string str() const;  // debug formatting

private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

}  // namespace autocore
