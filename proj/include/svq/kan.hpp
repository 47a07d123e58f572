#pragma once

#include <vector>

#include "svq/eval_svs.hpp"

namespace svq {

// The space of (m,k)-horns in V: tuples (x_0,..,x^_k,..,x_m) of
// (m-1)-simplices with d_i x_j = d_{j-1} x_i for i < j, i,j != k. Horn
// coordinates are ordered by increasing face index.
struct HornSpace {
  int m = 0, k = 0;
  Subspace subspace;  // inside the m-fold sum of level m-1
  Mat projection;     // p^m_k: level m -> stacked horn coordinates
};

namespace detail {
inline int horn_slot(int m, int k, int i) {
  // position of face i among {0..m} \ {k}
  return i < k ? i : i - 1;
}
}  // namespace detail

inline HornSpace horn_space(const SVS& v, int m, int k) {
  if (m < 1 || k < 0 || k > m) throw std::invalid_argument("horn_space: bad (m,k)");
  int dp = v.dim(m - 1);
  std::vector<Mat> rows;
  if (m >= 2) {
    for (int j = 1; j <= m; ++j) {
      if (j == k) continue;
      for (int i = 0; i < j; ++i) {
        if (i == k) continue;
        Mat row(v.dim(m - 2), m * dp);
        row.set_block(0, detail::horn_slot(m, k, j) * dp, v.face(m - 1, i));
        row.set_block(0, detail::horn_slot(m, k, i) * dp, -v.face(m - 1, j - 1));
        rows.push_back(std::move(row));
      }
    }
  }
  HornSpace h;
  h.m = m;
  h.k = k;
  h.subspace = rows.empty() ? Subspace::full(m * dp) : kernel_basis(vstack(rows));
  std::vector<Mat> proj;
  for (int i = 0; i <= m; ++i)
    if (i != k) proj.push_back(v.face(m, i));
  h.projection = vstack(proj);
  return h;
}

inline Subspace boundary_space(const SVS& v, int m) {
  if (m < 1) throw std::invalid_argument("boundary_space: m must be >= 1");
  int dp = v.dim(m - 1);
  std::vector<Mat> rows;
  if (m >= 2) {
    for (int j = 1; j <= m; ++j)
      for (int i = 0; i < j; ++i) {
        Mat row(v.dim(m - 2), (m + 1) * dp);
        row.set_block(0, j * dp, v.face(m - 1, i));
        row.set_block(0, i * dp, -v.face(m - 1, j - 1));
        rows.push_back(std::move(row));
      }
  }
  return rows.empty() ? Subspace::full((m + 1) * dp) : kernel_basis(vstack(rows));
}

// The Moore filler mu^m_k as a matrix on the full stacked space of horn
// coordinates; restricted to the horn subspace it is the canonical filler
// (d_i o mu = x_i for i != k). Built by the constructive three-case
// recursion: w ranges over level m, x_i over level m-1.
inline Mat moore_filler(const SVS& v, int m, int k) {
  if (m < 1 || k < 0 || k > m) throw std::invalid_argument("moore_filler: bad (m,k)");
  int dp = v.dim(m - 1);
  auto X = [&](int i) {  // selection of face slot i
    Mat s(dp, m * dp);
    s.set_block(0, detail::horn_slot(m, k, i) * dp, Mat::identity(dp));
    return s;
  };
  auto S = [&](int j) { return v.degen(m - 1, j); };
  auto D = [&](int i) { return v.face(m, i); };
  Mat w;
  if (k > 0) {
    w = S(0) * X(0);
    for (int i = 1; i <= k - 1; ++i) w = w - S(i) * (D(i) * w) + S(i) * X(i);
    if (k < m) {
      w = w - S(m - 1) * (D(m) * w) + S(m - 1) * X(m);
      for (int i = m - 1; i >= k + 1; --i) w = w - S(i - 1) * (D(i) * w) + S(i - 1) * X(i);
    }
  } else {
    w = S(m - 1) * X(m);
    for (int i = m - 1; i >= 1; --i) w = w - S(i - 1) * (D(i) * w) + S(i - 1) * X(i);
  }
  return w;
}

// m_k = d_k o mu^{n+1}_k on (n+1,k)-horn coordinates (Moore-filler
// multiplication of the n-truncation).
inline Mat multiplication(const SVS& v, int n, int k) {
  if (k < 0 || k > n + 1) throw std::invalid_argument("multiplication: bad k");
  return v.face(n + 1, k) * moore_filler(v, n + 1, k);
}

// gamma^n_k = id - mu^n_k p^n_k, the k-th degree-n core projection.
inline Mat core_projection(const SVS& v, int n, int k) {
  if (n == 0) return Mat::identity(v.dim(0));
  HornSpace h = horn_space(v, n, k);
  return Mat::identity(v.dim(n)) - moore_filler(v, n, k) * h.projection;
}

}  // namespace svq
