#ifndef ANGLERIG_MATRIX_HPP
#define ANGLERIG_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "anglerig/rational.hpp"

namespace anglerig {

// Dense row-major matrix. Values are immutable by convention once a matrix
// has been handed to one of the rank/kernel routines (they copy internally).
template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Mat operator*(const Mat& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mat out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int l = 0; l < cols_; ++l) {
        const T& x = at(i, l);
        if (x == T(0)) continue;
        for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += x * rhs.at(l, j);
      }
    return out;
  }

  bool operator==(const Mat& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
  }

 private:
  int rows_, cols_;
  std::vector<T> a_;
};

using RatMat = Mat<Rat>;
using FloatMat = Mat<double>;

// Exact rank over the rationals, fraction-free (Bareiss) elimination.
int exact_rank(const RatMat& m);

// Exact determinant; throws on non-square input.
Rat exact_determinant(const RatMat& m);

// Basis of {v : m v = 0}; vectors are primitive integer vectors.
std::vector<std::vector<Rat>> kernel_basis(const RatMat& m);

// Basis of the left kernel {w : w^T m = 0}.
std::vector<std::vector<Rat>> cokernel_basis(const RatMat& m);

// Floating-point rank: partial-pivoting elimination, pivots counted when
// their magnitude exceeds tol relative to the largest pivot.
int float_rank(const FloatMat& m, double tol);

std::vector<Rat> mat_vec(const RatMat& m, const std::vector<Rat>& v);
std::vector<Rat> vec_mat(const std::vector<Rat>& w, const RatMat& m);

// plain-text dump, one space-separated row per line (debugging aid)
std::string matrix_to_text(const RatMat& m);

} // namespace anglerig

#endif
