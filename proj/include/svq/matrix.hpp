#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "svq/rational.hpp"

namespace svq {

// Dense matrix over Q with explicit shape. Zero-row and zero-column matrices
// are first-class: empty levels of simplicial objects occur everywhere.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  }
  Mat(std::initializer_list<std::initializer_list<Rat>> init) {
    rows_ = int(init.size());
    cols_ = rows_ ? int(init.begin()->size()) : 0;
    e_.reserve(size_t(rows_) * cols_);
    for (const auto& row : init) {
      if (int(row.size()) != cols_) throw std::invalid_argument("ragged initializer");
      for (const auto& x : row) e_.push_back(x);
    }
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  static Mat zero(int r, int c) { return Mat(r, c); }
  static Mat col_vec(const std::vector<Rat>& v) {
    Mat m(int(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) m.at(int(i), 0) = v[i];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& x : e_)
      if (x != 0) return false;
    return true;
  }

  Mat operator+(const Mat& o) const {
    check_same_shape(o, "+");
    Mat r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }
  Mat operator-(const Mat& o) const {
    check_same_shape(o, "-");
    Mat r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
  }
  Mat operator-() const {
    Mat r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
  }
  friend Mat operator*(const Rat& c, const Mat& m) {
    Mat r = m;
    for (auto& x : r.e_) x *= c;
    return r;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_)
      throw std::invalid_argument("matrix product shape mismatch: (" + shape_str() + ")*(" +
                                  o.shape_str() + ")");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Rat& a = at(i, k);
        if (a == 0) continue;
        for (int j = 0; j < o.cols_; ++j) {
          const Rat& b = o.at(k, j);
          if (b != 0) r.at(i, j) += a * b;
        }
      }
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Mat block(int r0, int c0, int r, int c) const {
    if (r0 < 0 || c0 < 0 || r0 + r > rows_ || c0 + c > cols_)
      throw std::invalid_argument("block out of range");
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = at(r0 + i, c0 + j);
    return m;
  }
  void set_block(int r0, int c0, const Mat& m) {
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_)
      throw std::invalid_argument("set_block out of range");
    for (int i = 0; i < m.rows_; ++i)
      for (int j = 0; j < m.cols_; ++j) at(r0 + i, c0 + j) = m.at(i, j);
  }
  Mat col(int j) const { return block(0, j, rows_, 1); }
  Mat row(int i) const { return block(i, 0, 1, cols_); }

  std::string shape_str() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  void check_same_shape(const Mat& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument(std::string("shape mismatch for ") + op + ": " + shape_str() +
                                  " vs " + o.shape_str());
  }

  int rows_, cols_;
  std::vector<Rat> e_;
};

inline Mat hstack(const std::vector<Mat>& ms) {
  if (ms.empty()) return Mat();
  int r = ms[0].rows(), c = 0;
  for (const auto& m : ms) {
    if (m.rows() != r) throw std::invalid_argument("hstack row mismatch");
    c += m.cols();
  }
  Mat out(r, c);
  int off = 0;
  for (const auto& m : ms) {
    out.set_block(0, off, m);
    off += m.cols();
  }
  return out;
}

inline Mat vstack(const std::vector<Mat>& ms) {
  if (ms.empty()) return Mat();
  int c = ms[0].cols(), r = 0;
  for (const auto& m : ms) {
    if (m.cols() != c) throw std::invalid_argument("vstack col mismatch");
    r += m.rows();
  }
  Mat out(r, c);
  int off = 0;
  for (const auto& m : ms) {
    out.set_block(off, 0, m);
    off += m.rows();
  }
  return out;
}

// Kronecker product matching the row-major pairing (i,j) -> i*cols(B)+j.
inline Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rat& x = a.at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.rows(); ++j)
        for (int l = 0; l < b.cols(); ++l) {
          const Rat& y = b.at(j, l);
          if (y != 0) r.at(i * b.rows() + j, k * b.cols() + l) = x * y;
        }
    }
  return r;
}

// Direct sum of square-ish blocks along the diagonal.
inline Mat block_diag(const std::vector<Mat>& ms) {
  int r = 0, c = 0;
  for (const auto& m : ms) r += m.rows(), c += m.cols();
  Mat out(r, c);
  int ro = 0, co = 0;
  for (const auto& m : ms) {
    out.set_block(ro, co, m);
    ro += m.rows();
    co += m.cols();
  }
  return out;
}

}  // namespace svq
