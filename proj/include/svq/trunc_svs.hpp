#pragma once

#include <string>
#include <vector>

#include "svq/linalg.hpp"

namespace svq {

// An L-truncated simplicial vector space: level dimensions plus face and
// degeneracy matrices. faces[l][i]: level l -> l-1 (1 <= l <= L);
// degens[l][j]: level l -> l+1 (0 <= l <= L-1).
struct TruncSVS {
  int L = 0;
  std::vector<int> dims;
  std::vector<std::vector<Mat>> faces;   // faces[l] valid for l >= 1
  std::vector<std::vector<Mat>> degens;  // degens[l] valid for l < L

  int dim(int l) const { return dims[l]; }
  const Mat& face(int l, int i) const { return faces[l][i]; }
  const Mat& degen(int l, int j) const { return degens[l][j]; }
};

struct IdentityViolation {
  std::string identity;  // e.g. "d_i d_j = d_{j-1} d_i"
  int level;             // level of the domain of the composite
  int i, j;
  std::string message() const {
    return identity + " fails at level " + std::to_string(level) + " (i=" + std::to_string(i) +
           ", j=" + std::to_string(j) + ")";
  }
};

// Check every simplicial identity expressible inside the truncation; an empty
// report means the data is consistent.
inline std::vector<IdentityViolation> validate_identities(const TruncSVS& t) {
  std::vector<IdentityViolation> out;
  auto shape_ok = [&](const Mat& m, int r, int c) { return m.rows() == r && m.cols() == c; };
  for (int l = 1; l <= t.L; ++l)
    for (int i = 0; i <= l; ++i)
      if (!shape_ok(t.faces[l][i], t.dims[l - 1], t.dims[l]))
        out.push_back({"face matrix shape", l, i, -1});
  for (int l = 0; l < t.L; ++l)
    for (int j = 0; j <= l; ++j)
      if (!shape_ok(t.degens[l][j], t.dims[l + 1], t.dims[l]))
        out.push_back({"degeneracy matrix shape", l, j, -1});
  if (!out.empty()) return out;

  for (int l = 2; l <= t.L; ++l)
    for (int j = 1; j <= l; ++j)
      for (int i = 0; i < j; ++i)
        if (t.face(l - 1, i) * t.face(l, j) != t.face(l - 1, j - 1) * t.face(l, i))
          out.push_back({"d_i d_j = d_{j-1} d_i", l, i, j});
  for (int l = 0; l + 2 <= t.L; ++l)
    for (int j = 0; j <= l; ++j)
      for (int i = 0; i <= j; ++i)
        if (t.degen(l + 1, i) * t.degen(l, j) != t.degen(l + 1, j + 1) * t.degen(l, i))
          out.push_back({"s_i s_j = s_{j+1} s_i", l, i, j});
  for (int l = 0; l + 1 <= t.L; ++l)
    for (int j = 0; j <= l; ++j)
      for (int i = 0; i <= l + 1; ++i) {
        Mat lhs = t.face(l + 1, i) * t.degen(l, j);
        Mat rhs;
        if (i == j || i == j + 1)
          rhs = Mat::identity(t.dims[l]);
        else if (i < j)
          rhs = t.degen(l - 1, j - 1) * t.face(l, i);
        else
          rhs = t.degen(l - 1, j) * t.face(l, i - 1);
        if (lhs != rhs) out.push_back({"d_i s_j relation", l, i, j});
      }
  return out;
}

// ---- built-in truncations ----

inline TruncSVS trunc_zero() {
  TruncSVS t;
  t.L = 0;
  t.dims = {0};
  t.faces.resize(1);
  t.degens.resize(1);
  return t;
}

// Identity 0-groupoid of Q^d, truncated at level 1.
inline TruncSVS trunc_id(int d, int up_to = 1) {
  TruncSVS t;
  t.L = up_to;
  t.dims.assign(up_to + 1, d);
  t.faces.resize(up_to + 1);
  t.degens.resize(up_to + 1);
  for (int l = 1; l <= up_to; ++l) t.faces[l].assign(l + 1, Mat::identity(d));
  for (int l = 0; l < up_to; ++l) t.degens[l].assign(l + 1, Mat::identity(d));
  return t;
}

// Nerve of the pair groupoid of Q^d: level m is Q^{d(m+1)} (one block per
// vertex); d_i deletes the i-th vertex block, s_j repeats the j-th.
inline TruncSVS trunc_pair(int d, int up_to = 2) {
  TruncSVS t;
  t.L = up_to;
  t.faces.resize(up_to + 1);
  t.degens.resize(up_to + 1);
  for (int m = 0; m <= up_to; ++m) t.dims.push_back(d * (m + 1));
  for (int m = 1; m <= up_to; ++m)
    for (int i = 0; i <= m; ++i) {
      Mat f(d * m, d * (m + 1));
      int r = 0;
      for (int v = 0; v <= m; ++v) {
        if (v == i) continue;
        f.set_block(r * d, v * d, Mat::identity(d));
        ++r;
      }
      t.faces[m].push_back(std::move(f));
    }
  for (int m = 0; m < up_to; ++m)
    for (int j = 0; j <= m; ++j) {
      Mat s(d * (m + 2), d * (m + 1));
      int r = 0;
      for (int v = 0; v <= m; ++v) {
        s.set_block(r * d, v * d, Mat::identity(d));
        ++r;
        if (v == j) {
          s.set_block(r * d, v * d, Mat::identity(d));
          ++r;
        }
      }
      t.degens[m].push_back(std::move(s));
    }
  return t;
}

}  // namespace svq
