#include "anglerig/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace anglerig {

Rat rat_from_string(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    Rat q;
    if (text.empty() || mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
      throw std::invalid_argument("bad rational literal: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
  }
  // finite decimal: sign? digits . digits
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const std::size_t frac_len = text.size() - dot - 1;
  Int num;
  if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
    throw std::invalid_argument("bad decimal literal: " + text);
  Int den = 1;
  for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

namespace {

// Clears denominators row by row; row scaling leaves rank and kernel intact.
Mat<Int> integer_rows(const RatMat& m, std::vector<Int>* row_scale = nullptr) {
  Mat<Int> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (int j = 0; j < m.cols(); ++j) l = lcm(l, m.at(i, j).get_den());
    if (row_scale) row_scale->push_back(l);
    for (int j = 0; j < m.cols(); ++j) {
      const Rat& q = m.at(i, j);
      out.at(i, j) = q.get_num() * (l / q.get_den());
    }
  }
  return out;
}

// Fraction-free elimination with row swaps and column skipping. Returns the
// rank; when det_out is non-null the matrix must be square and the signed
// final pivot (the determinant) is written there.
int bareiss(Mat<Int> m, Int* det_out = nullptr) {
  const int rows = m.rows(), cols = m.cols();
  Int prev = 1;
  int sign = 1;
  int r = 0;
  Int t1, t2;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot_row = -1;
    for (int i = r; i < rows; ++i)
      if (m.at(i, c) != 0) { pivot_row = i; break; }
    if (pivot_row < 0) continue;
    if (pivot_row != r) {
      for (int j = c; j < cols; ++j) swap(m.at(pivot_row, j), m.at(r, j));
      sign = -sign;
    }
    const Int& pivot = m.at(r, c);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        // Sylvester's identity guarantees the division is exact.
        t1 = pivot * m.at(i, j);
        t2 = m.at(i, c) * m.at(r, j);
        t1 -= t2;
        mpz_divexact(m.at(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, c) = 0;
    }
    prev = pivot;
    ++r;
  }
  if (det_out) {
    if (rows != cols) throw std::invalid_argument("determinant of non-square matrix");
    *det_out = (r == rows) ? Int(sign * prev) : Int(0);
  }
  return r;
}

// Reduced row echelon form over Q; returns pivot column per pivot row.
std::vector<int> rref(RatMat& m) {
  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < m.cols(); ++j) swap(m.at(pr, j), m.at(r, j));
    const Rat inv = Rat(1) / m.at(r, c);
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Rat f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

void make_primitive(std::vector<Rat>& v) {
  Int l = 1;
  for (const Rat& q : v) l = lcm(l, q.get_den());
  Int g = 0;
  for (Rat& q : v) {
    q *= Rat(l);
    q.canonicalize();
    g = gcd(g, q.get_num());
  }
  if (g == 0) return;
  int sign = 0;
  for (const Rat& q : v)
    if (q != 0) { sign = sgn(q) > 0 ? 1 : -1; break; }
  if (sign < 0) g = -g;
  for (Rat& q : v) {
    q /= Rat(g);
    q.canonicalize();
  }
}

} // namespace

int exact_rank(const RatMat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss(integer_rows(m));
}

Rat exact_determinant(const RatMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() == 0) return Rat(1);
  std::vector<Int> scale;
  Mat<Int> im = integer_rows(m, &scale);
  Int det;
  bareiss(std::move(im), &det);
  Rat out(det);
  for (const Int& s : scale) out /= Rat(s);
  out.canonicalize();
  return out;
}

std::vector<std::vector<Rat>> kernel_basis(const RatMat& m) {
  RatMat work = m;
  const std::vector<int> pivots = rref(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(m.cols(), Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work.at(static_cast<int>(r), free);
    make_primitive(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Rat>> cokernel_basis(const RatMat& m) { return kernel_basis(m.transposed()); }

int float_rank(const FloatMat& m, double tol) {
  FloatMat work = m;
  const int rows = work.rows(), cols = work.cols();
  // Full pivoting with early termination: pivots come out in decreasing
  // magnitude, so the relative cutoff never divides by numerical noise.
  double max_pivot = 0.0;
  int r = 0;
  while (r < rows && r < cols) {
    int bi = -1, bj = -1;
    double best_abs = 0.0;
    for (int i = r; i < rows; ++i)
      for (int j = r; j < cols; ++j) {
        const double a = std::abs(work.at(i, j));
        if (a > best_abs) { best_abs = a; bi = i; bj = j; }
      }
    if (bi < 0 || best_abs <= tol * max_pivot) break;
    max_pivot = std::max(max_pivot, best_abs);
    if (bi != r)
      for (int j = 0; j < cols; ++j) std::swap(work.at(bi, j), work.at(r, j));
    if (bj != r)
      for (int i = 0; i < rows; ++i) std::swap(work.at(i, bj), work.at(i, r));
    for (int i = r + 1; i < rows; ++i) {
      const double f = work.at(i, r) / work.at(r, r);
      work.at(i, r) = 0.0;
      for (int j = r + 1; j < cols; ++j) work.at(i, j) -= f * work.at(r, j);
    }
    ++r;
  }
  return r;
}

std::string matrix_to_text(const RatMat& m) {
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += m.at(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

std::vector<Rat> mat_vec(const RatMat& m, const std::vector<Rat>& v) {
  if (static_cast<int>(v.size()) != m.cols()) throw std::invalid_argument("mat_vec shape mismatch");
  std::vector<Rat> out(m.rows(), Rat(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0 && v[j] != 0) out[i] += m.at(i, j) * v[j];
  return out;
}

std::vector<Rat> vec_mat(const std::vector<Rat>& w, const RatMat& m) {
  if (static_cast<int>(w.size()) != m.rows()) throw std::invalid_argument("vec_mat shape mismatch");
  std::vector<Rat> out(m.cols(), Rat(0));
  for (int i = 0; i < m.rows(); ++i) {
    if (w[i] == 0) continue;
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) out[j] += w[i] * m.at(i, j);
  }
  return out;
}

} // namespace anglerig
