#ifndef STABKIT_FP_HPP
#define STABKIT_FP_HPP

#include <cstdint>
#include <vector>

#include "stabkit/rational.hpp"

namespace stabkit::fp {

// Dense matrix over the prime field F_p, p small.
class Mat {
 public:
  Mat() = default;
  Mat(int p, int rows, int cols);
  static Mat identity(int p, int n);

  int p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  uint8_t at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, int v);

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(int v) const;
  bool operator==(const Mat& o) const;
  bool is_zero() const;

  std::vector<uint8_t> row(int r) const;
  void set_row(int r, const std::vector<uint8_t>& v);

  // In-place reduced row echelon form; returns the pivot columns.
  std::vector<int> rref();
  int rank() const;

 private:
  int p_ = 2;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<uint8_t> e_;
};

int inverse_mod(int a, int p);

// Reduce v against an RREF basis (rows of `basis`); returns the residual.
std::vector<uint8_t> reduce_against(const Mat& basis, std::vector<uint8_t> v);

bool in_span(const Mat& basis, const std::vector<uint8_t>& v);

// Coordinates of v in the RREF basis; throws if v is not in the span.
std::vector<uint8_t> coords_in_span(const Mat& basis, const std::vector<uint8_t>& v);

// True if every row of `a` lies in the span of `b` (same column count).
bool subspace_leq(const Mat& a, const Mat& b);

// All subspaces of F_p^d as RREF basis matrices, ordered by dimension, then
// pivot columns, then free entries. Deterministic.
std::vector<Mat> all_subspaces(int p, int d);

// Nullspace basis (as rows, RREF-like) of the matrix.
Mat kernel(const Mat& m);

}  // namespace stabkit::fp

#endif  // STABKIT_FP_HPP
