#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "svq/matrix.hpp"

namespace svq {

struct Rref {
  Mat r;
  std::vector<int> pivots;  // pivot column indices, ascending
};

// Unique reduced row echelon form.
inline Rref rref(Mat m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m.at(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    Rat inv = Rat(1) / m.at(row, col);
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline int rank(const Mat& m) { return int(rref(m).pivots.size()); }

// A subspace of Q^ambient in canonical form: basis columns are the reduced
// column echelon form (unique), so subspace equality is matrix equality.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(int ambient) : ambient_(ambient), basis_(ambient, 0) {}

  // Canonicalize the span of the given columns.
  static Subspace from_columns(const Mat& cols) {
    Subspace s(cols.rows());
    Rref rr = rref(cols.transpose());
    int r = int(rr.pivots.size());
    Mat basis(cols.rows(), r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < cols.rows(); ++j) basis.at(j, i) = rr.r.at(i, j);
    s.basis_ = std::move(basis);
    s.pivots_ = rr.pivots;  // pivot coordinate (row) index of each basis column
    return s;
  }
  static Subspace full(int ambient) { return from_columns(Mat::identity(ambient)); }

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.cols(); }
  const Mat& basis() const { return basis_; }
  const std::vector<int>& pivot_rows() const { return pivots_; }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  // Exact coordinates of the columns of m in this basis; nullopt if some
  // column is outside the subspace.
  std::optional<Mat> try_coords(const Mat& m) const {
    if (m.rows() != ambient_) throw std::invalid_argument("coords: ambient mismatch");
    Mat x(dim(), m.cols());
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < m.cols(); ++j) x.at(i, j) = m.at(pivots_[i], j);
    if (basis_ * x != m) return std::nullopt;
    return x;
  }
  Mat coords(const Mat& m) const {
    auto x = try_coords(m);
    if (!x) throw std::logic_error("vector outside subspace");
    return *x;
  }
  bool contains(const Mat& m) const { return try_coords(m).has_value(); }
  bool contains_subspace(const Subspace& o) const { return contains(o.basis()); }

 private:
  int ambient_;
  Mat basis_;
  std::vector<int> pivots_;
};

// Canonical basis of {x : Mx = 0}.
inline Subspace kernel_basis(const Mat& m) {
  Rref rr = rref(m);
  int n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int p : rr.pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Mat basis(n, int(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int f = free_cols[k];
    basis.at(f, int(k)) = 1;
    for (size_t r = 0; r < rr.pivots.size(); ++r) basis.at(rr.pivots[r], int(k)) = -rr.r.at(int(r), f);
  }
  return Subspace::from_columns(basis);
}

inline Subspace image_basis(const Mat& m) { return Subspace::from_columns(m); }

// One solution of Mx = b plus the full solution direction space.
struct SolveResult {
  Mat particular;  // cols(M) x 1
  Subspace kernel;
};

inline std::optional<Mat> solve_matrix(const Mat& m, const Mat& b) {
  if (b.rows() != m.rows()) throw std::invalid_argument("solve: rhs dimension mismatch");
  Rref rr = rref(hstack({m, b}));
  Mat x(m.cols(), b.cols());
  for (size_t r = 0; r < rr.pivots.size(); ++r) {
    int p = rr.pivots[r];
    if (p >= m.cols()) return std::nullopt;  // pivot in rhs: inconsistent
    for (int j = 0; j < b.cols(); ++j) x.at(p, j) = rr.r.at(int(r), m.cols() + j);
  }
  return x;
}

inline std::optional<SolveResult> solve(const Mat& m, const Mat& b) {
  if (b.cols() != 1) throw std::invalid_argument("solve: b must be a column vector");
  auto x = solve_matrix(m, b);
  if (!x) return std::nullopt;
  return SolveResult{*x, kernel_basis(m)};
}

// {phi : phi(v) = 0 for all v in S}, in dual coordinates.
inline Subspace annihilator(const Subspace& s) {
  return kernel_basis(s.basis().transpose());
}

// Canonical basis of a complement of im inside ker. Requires im to be
// contained in ker.
inline Subspace quotient_reps(const Subspace& ker, const Subspace& im) {
  if (ker.ambient_dim() != im.ambient_dim())
    throw std::invalid_argument("quotient_reps: ambient mismatch");
  if (!ker.contains_subspace(im)) throw std::invalid_argument("quotient_reps: im not inside ker");
  Mat combined = hstack({im.basis(), ker.basis()});
  // Pivot columns scanning left to right: im columns first, then the ker
  // columns that extend them to a basis of ker.
  Rref sel = rref(combined);
  std::vector<Mat> reps;
  for (int p : sel.pivots)
    if (p >= im.dim()) reps.push_back(ker.basis().col(p - im.dim()));
  if (reps.empty()) return Subspace(ker.ambient_dim());
  return Subspace::from_columns(hstack(reps));
}

// {(a,b) : f a = g b} inside A + B, as ker(f | -g).
inline Subspace fiber_product(const Mat& f, const Mat& g) {
  if (f.rows() != g.rows()) throw std::invalid_argument("fiber_product: codomain mismatch");
  return kernel_basis(hstack({f, -g}));
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersect: ambient mismatch");
  Subspace pairs = fiber_product(a.basis(), b.basis());
  Mat cols(a.ambient_dim(), pairs.dim());
  if (pairs.dim() > 0) {
    Mat top = pairs.basis().block(0, 0, a.dim(), pairs.dim());
    cols = a.basis() * top;
  }
  return Subspace::from_columns(cols);
}

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
  return Subspace::from_columns(hstack({a.basis(), b.basis()}));
}

// vec(M) in row-major order, and the matrices realizing left/right
// composition on vectorized maps: vec(P*G*Q) = kron(P, Q^T) vec(G).
inline Mat vec_rowmajor(const Mat& m) {
  Mat v(m.rows() * m.cols(), 1);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.at(i * m.cols() + j, 0) = m.at(i, j);
  return v;
}

inline Mat unvec_rowmajor(const Mat& v, int rows, int cols) {
  if (v.rows() != rows * cols || v.cols() != 1) throw std::invalid_argument("unvec shape");
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = v.at(i * cols + j, 0);
  return m;
}

}  // namespace svq
