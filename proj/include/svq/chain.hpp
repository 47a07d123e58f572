#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "svq/linalg.hpp"

namespace svq {

// Finitely supported chain complex over Q; degrees may be negative.
class ChainCx {
 public:
  ChainCx() : lo_(0) {}
  // dims[i] is the dimension in degree lo+i; diffs[i]: degree lo+i -> lo+i-1
  // for i >= 1 (diffs.size() == dims.size()-1 when nonempty).
  ChainCx(int lo, std::vector<int> dims, std::vector<Mat> diffs)
      : lo_(lo), dims_(std::move(dims)), diffs_(std::move(diffs)) {
    if (!dims_.empty() && diffs_.size() + 1 != dims_.size())
      throw std::invalid_argument("chain complex: need one differential per adjacent pair");
    for (size_t i = 0; i + 1 < dims_.size(); ++i) {
      if (diffs_[i].rows() != dims_[i] || diffs_[i].cols() != dims_[i + 1])
        throw std::invalid_argument("chain complex: differential shape mismatch");
    }
    for (size_t i = 0; i + 2 < dims_.size(); ++i)
      if (!(diffs_[i] * diffs_[i + 1]).is_zero())
        throw std::invalid_argument("chain complex: d o d != 0");
  }

  static ChainCx point(int degree, int dim = 1) {
    return ChainCx(degree, {dim}, {});
  }
  static ChainCx zero() { return ChainCx(); }

  int lo() const { return lo_; }
  int hi() const { return dims_.empty() ? lo_ - 1 : lo_ + int(dims_.size()) - 1; }
  bool in_support(int i) const { return i >= lo_ && i <= hi(); }
  int dim(int i) const { return in_support(i) ? dims_[i - lo_] : 0; }
  // d_i: degree i -> i-1 (zero-shaped outside the stored range).
  Mat diff(int i) const {
    if (i > lo_ && i <= hi()) return diffs_[i - lo_ - 1];
    return Mat::zero(dim(i - 1), dim(i));
  }
  bool is_zero_complex() const {
    for (int d : dims_)
      if (d) return false;
    return true;
  }
  bool operator==(const ChainCx& o) const {
    int a = std::min(lo_, o.lo_), b = std::max(hi(), o.hi());
    for (int i = a; i <= b; ++i)
      if (dim(i) != o.dim(i) || diff(i) != o.diff(i)) return false;
    return true;
  }

 private:
  int lo_;
  std::vector<int> dims_;
  std::vector<Mat> diffs_;
};

// Degreewise map of complexes; `shift` s means components f_i: A_i -> B_{i+s}.
// A genuine chain map (a degree-s cycle of the mapping complex) satisfies
// d o f = (-1)^s f o d.
struct ChainMap {
  ChainCx src, dst;
  int shift = 0;
  std::map<int, Mat> comps;

  Mat comp(int i) const {
    auto it = comps.find(i);
    if (it != comps.end()) return it->second;
    return Mat::zero(dst.dim(i + shift), src.dim(i));
  }
  void set(int i, Mat m) {
    if (m.rows() != dst.dim(i + shift) || m.cols() != src.dim(i))
      throw std::invalid_argument("chain map component shape mismatch");
    comps[i] = std::move(m);
  }
  bool is_cycle() const {
    int sgn = (shift % 2 == 0) ? 1 : -1;
    for (int i = src.lo(); i <= src.hi(); ++i)
      if (dst.diff(i + shift) * comp(i) != Rat(sgn) * (comp(i - 1) * src.diff(i))) return false;
    return true;
  }
  bool is_zero() const {
    for (int i = src.lo(); i <= src.hi(); ++i)
      if (!comp(i).is_zero()) return false;
    return true;
  }
};

inline ChainMap chain_identity(const ChainCx& c) {
  ChainMap f{c, c, 0, {}};
  for (int i = c.lo(); i <= c.hi(); ++i) f.set(i, Mat::identity(c.dim(i)));
  return f;
}

inline ChainMap chain_compose(const ChainMap& g, const ChainMap& f) {
  ChainMap h{f.src, g.dst, f.shift + g.shift, {}};
  for (int i = f.src.lo(); i <= f.src.hi(); ++i) h.set(i, g.comp(i + f.shift) * f.comp(i));
  return h;
}

// A[m]_i = A_{i+m} with differential (-1)^m d.
inline ChainCx shift(const ChainCx& c, int m) {
  std::vector<int> dims;
  std::vector<Mat> diffs;
  for (int i = c.lo(); i <= c.hi(); ++i) dims.push_back(c.dim(i));
  int sgn = (m % 2 == 0) ? 1 : -1;
  for (int i = c.lo() + 1; i <= c.hi(); ++i) diffs.push_back(Rat(sgn) * c.diff(i));
  return ChainCx(c.lo() - m, std::move(dims), std::move(diffs));
}

// A*[-n]_i = (A_{n-i})* with d*_i = (-1)^{i+1} (d_{n-i+1})^t.
inline ChainCx dual_shifted(const ChainCx& c, int n) {
  int lo = n - c.hi(), hi = n - c.lo();
  std::vector<int> dims;
  std::vector<Mat> diffs;
  for (int i = lo; i <= hi; ++i) dims.push_back(c.dim(n - i));
  for (int i = lo + 1; i <= hi; ++i) {
    int sgn = ((i + 1) % 2 == 0) ? 1 : -1;
    diffs.push_back(Rat(sgn) * c.diff(n - i + 1).transpose());
  }
  return ChainCx(lo, std::move(dims), std::move(diffs));
}

// Degree 0 replaced by its 0-cycles (with inclusion retained), negative
// degrees dropped.
struct TruncatedCx {
  ChainCx cx;
  Mat incl0;  // cycles -> original degree-0 space
};

inline TruncatedCx truncate_nonneg(const ChainCx& c) {
  Subspace z0 = kernel_basis(c.diff(0));
  int hi = std::max(c.hi(), 0);
  std::vector<int> dims;
  std::vector<Mat> diffs;
  dims.push_back(z0.dim());
  for (int i = 1; i <= hi; ++i) dims.push_back(c.dim(i));
  for (int i = 1; i <= hi; ++i) {
    if (i == 1) {
      // d_1 lands in the 0-cycles since d d = 0.
      diffs.push_back(z0.coords(c.diff(1)));
    } else {
      diffs.push_back(c.diff(i));
    }
  }
  return {ChainCx(0, std::move(dims), std::move(diffs)), z0.basis()};
}

struct HomologyDeg {
  int dim = 0;
  Mat reps;  // columns in the ambient degree space
};

inline HomologyDeg homology_at(const ChainCx& c, int i) {
  Subspace ker = kernel_basis(c.diff(i));
  Subspace im = image_basis(c.diff(i + 1));
  Subspace reps = quotient_reps(ker, im);
  return {reps.dim(), reps.basis()};
}

inline std::vector<HomologyDeg> homology(const ChainCx& c, int lo, int hi) {
  std::vector<HomologyDeg> out;
  for (int i = lo; i <= hi; ++i) out.push_back(homology_at(c, i));
  return out;
}

// Class of the columns of `cycles` (vectors of degree i) in H_i.
inline Mat homology_classes(const ChainCx& c, int i, const Mat& cycles) {
  HomologyDeg h = homology_at(c, i);
  Subspace im = image_basis(c.diff(i + 1));
  Mat combined = hstack({h.reps, im.basis()});
  auto sol = solve_matrix(combined, cycles);
  if (!sol) throw std::logic_error("homology_classes: input not a cycle");
  return sol->block(0, 0, h.dim, cycles.cols());
}

inline bool is_quasi_iso(const ChainMap& f, int lo, int hi) {
  if (f.shift != 0) throw std::invalid_argument("is_quasi_iso: shift must be 0");
  for (int i = lo; i <= hi; ++i) {
    HomologyDeg ha = homology_at(f.src, i), hb = homology_at(f.dst, i);
    if (ha.dim != hb.dim) return false;
    if (ha.dim == 0) continue;
    Mat induced = homology_classes(f.dst, i, f.comp(i) * ha.reps);
    if (rank(induced) != ha.dim) return false;
  }
  return true;
}

// Chain homotopy f - g = d h + h d, decided by one exact linear solve over
// all degree-(+1) maps h.
inline bool homotopic(const ChainMap& f, const ChainMap& g) {
  if (f.shift != 0 || g.shift != 0) throw std::invalid_argument("homotopic: shift must be 0");
  const ChainCx& a = f.src;
  const ChainCx& b = f.dst;
  int lo = std::min(a.lo(), b.lo() - 1), hi = std::max(a.hi(), b.hi());
  // unknowns: h_i: A_i -> B_{i+1}, vectorized row-major, for i in [lo..hi]
  std::vector<int> off;
  int total = 0;
  for (int i = lo; i <= hi; ++i) {
    off.push_back(total);
    total += a.dim(i) * b.dim(i + 1);
  }
  std::vector<Mat> rows_lhs, rows_rhs;
  for (int i = lo; i <= hi; ++i) {
    int r = b.dim(i), cdim = a.dim(i);
    if (r == 0 || cdim == 0) continue;
    Mat row(r * cdim, total);
    // d_{i+1}^B h_i contribution
    if (a.dim(i) * b.dim(i + 1) > 0)
      row.set_block(0, off[i - lo], kron(b.diff(i + 1), Mat::identity(a.dim(i))));
    // h_{i-1} d_i^A contribution
    if (a.dim(i - 1) * b.dim(i) > 0)
      row.set_block(0, off[i - 1 - lo], kron(Mat::identity(b.dim(i)), a.diff(i).transpose()));
    rows_lhs.push_back(row);
    rows_rhs.push_back(vec_rowmajor(f.comp(i) - g.comp(i)));
  }
  if (rows_lhs.empty()) return true;
  return solve_matrix(vstack(rows_lhs), vstack(rows_rhs)).has_value();
}

// ---- tensor and mapping complexes ----

struct TensorBlock {
  int p, q, offset, size;
};

inline std::vector<TensorBlock> tensor_layout(const ChainCx& a, const ChainCx& b, int m) {
  std::vector<TensorBlock> out;
  int off = 0;
  for (int p = a.lo(); p <= a.hi(); ++p) {
    int q = m - p;
    int sz = a.dim(p) * b.dim(q);
    if (sz > 0) out.push_back({p, q, off, sz});
    off += sz;
  }
  return out;
}

inline ChainCx tensor_complex(const ChainCx& a, const ChainCx& b) {
  int lo = a.lo() + b.lo(), hi = a.hi() + b.hi();
  if (a.is_zero_complex() || b.is_zero_complex()) return ChainCx::zero();
  std::vector<int> dims;
  for (int m = lo; m <= hi; ++m) {
    int d = 0;
    for (const auto& blk : tensor_layout(a, b, m)) d += blk.size;
    dims.push_back(d);
  }
  std::vector<Mat> diffs;
  for (int m = lo + 1; m <= hi; ++m) {
    auto src = tensor_layout(a, b, m), dst = tensor_layout(a, b, m - 1);
    Mat d(dims[m - 1 - lo], dims[m - lo]);
    auto dst_off = [&](int p) -> int {
      for (const auto& blk : dst)
        if (blk.p == p) return blk.offset;
      return -1;
    };
    for (const auto& blk : src) {
      // da (x) b
      int o1 = dst_off(blk.p - 1);
      if (o1 >= 0 && a.dim(blk.p - 1) > 0)
        d.set_block(o1, blk.offset, kron(a.diff(blk.p), Mat::identity(b.dim(blk.q))));
      // (-1)^p a (x) db
      int o2 = dst_off(blk.p);
      if (o2 >= 0 && b.dim(blk.q - 1) > 0) {
        int sgn = (blk.p % 2 == 0) ? 1 : -1;
        d.set_block(o2, blk.offset, Rat(sgn) * kron(Mat::identity(a.dim(blk.p)), b.diff(blk.q)));
      }
    }
    diffs.push_back(std::move(d));
  }
  return ChainCx(lo, std::move(dims), std::move(diffs));
}

// The Koszul symmetry A (x) B -> B (x) A, a (x) b -> (-1)^{|a||b|} b (x) a.
inline ChainMap tensor_symmetry(const ChainCx& a, const ChainCx& b) {
  ChainMap s{tensor_complex(a, b), tensor_complex(b, a), 0, {}};
  for (int m = s.src.lo(); m <= s.src.hi(); ++m) {
    auto la = tensor_layout(a, b, m), lb = tensor_layout(b, a, m);
    Mat mat(s.dst.dim(m), s.src.dim(m));
    for (const auto& blk : la) {
      int o2 = -1;
      for (const auto& c : lb)
        if (c.p == blk.q) o2 = c.offset;
      if (o2 < 0) continue;
      int da = a.dim(blk.p), db = b.dim(blk.q);
      int sgn = (blk.p % 2 && blk.q % 2) ? -1 : 1;
      for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) mat.at(o2 + j * da + i, blk.offset + i * db + j) = sgn;
    }
    s.set(m, std::move(mat));
  }
  return s;
}

struct HomBlock {
  int i, offset, size;  // Hom(A_i, B_{i+m}), vectorized row-major
};

inline std::vector<HomBlock> hom_layout(const ChainCx& a, const ChainCx& b, int m) {
  std::vector<HomBlock> out;
  int off = 0;
  for (int i = a.lo(); i <= a.hi(); ++i) {
    int sz = a.dim(i) * b.dim(i + m);
    if (sz > 0) out.push_back({i, off, sz});
    off += sz;
  }
  return out;
}

// IHom(A,B)_m = (+)_i Hom(A_i, B_{i+m}) with df = d o f - (-1)^m f o d.
inline ChainCx mapping_complex(const ChainCx& a, const ChainCx& b) {
  if (a.is_zero_complex() || b.is_zero_complex()) return ChainCx::zero();
  int lo = b.lo() - a.hi(), hi = b.hi() - a.lo();
  std::vector<int> dims;
  for (int m = lo; m <= hi; ++m) {
    int d = 0;
    for (const auto& blk : hom_layout(a, b, m)) d += blk.size;
    dims.push_back(d);
  }
  std::vector<Mat> diffs;
  for (int m = lo + 1; m <= hi; ++m) {
    auto src = hom_layout(a, b, m), dst = hom_layout(a, b, m - 1);
    Mat d(dims[m - 1 - lo], dims[m - lo]);
    auto dst_off = [&](int i) -> int {
      for (const auto& blk : dst)
        if (blk.i == i) return blk.offset;
      return -1;
    };
    int sgn = (m % 2 == 0) ? 1 : -1;
    for (const auto& blk : src) {
      // d^B o f_i : block i of degree m-1
      int o1 = dst_off(blk.i);
      if (o1 >= 0 && b.dim(blk.i + m - 1) > 0)
        d.set_block(o1, blk.offset, kron(b.diff(blk.i + m), Mat::identity(a.dim(blk.i))));
      // -(-1)^m f_i o d^A_{i+1} : block i+1 of degree m-1
      int o2 = dst_off(blk.i + 1);
      if (o2 >= 0 && a.dim(blk.i + 1) > 0)
        d.set_block(o2, blk.offset,
                    Rat(-sgn) * kron(Mat::identity(b.dim(blk.i + m)), a.diff(blk.i + 1).transpose()));
    }
    diffs.push_back(std::move(d));
  }
  return ChainCx(lo, std::move(dims), std::move(diffs));
}

inline TruncatedCx mapping_complex_nonneg(const ChainCx& a, const ChainCx& b) {
  return truncate_nonneg(mapping_complex(a, b));
}

// Element of IHom(A,B)_m <-> degree-shift-m ChainMap data; pack and unpack.
inline Mat pack_hom_element(const ChainCx& a, const ChainCx& b, const ChainMap& f) {
  auto layout = hom_layout(a, b, f.shift);
  int total = 0;
  for (const auto& blk : layout) total = std::max(total, blk.offset + blk.size);
  Mat v(total, 1);
  for (const auto& blk : layout) v.set_block(blk.offset, 0, vec_rowmajor(f.comp(blk.i)));
  return v;
}

inline ChainMap unpack_hom_element(const ChainCx& a, const ChainCx& b, int m, const Mat& v) {
  ChainMap f{a, b, m, {}};
  for (const auto& blk : hom_layout(a, b, m))
    f.set(blk.i, unvec_rowmajor(v.block(blk.offset, 0, blk.size, 1), b.dim(blk.i + m), a.dim(blk.i)));
  return f;
}

// ---- enriched adjunction: rho, tau, rho^L (exact index shuffles) ----

// rho(f)(a)(b) = f(a (x) b): IHom(A(x)B, C)_d -> IHom(A, IHom(B,C))_d.
inline ChainMap chain_adjunction_rho(const ChainMap& f, const ChainCx& a, const ChainCx& b,
                                     const ChainCx& c) {
  ChainCx hbc = mapping_complex(b, c);
  ChainMap g{a, hbc, f.shift, {}};
  for (int i = a.lo(); i <= a.hi(); ++i) {
    Mat gi(hbc.dim(i + f.shift), a.dim(i));
    auto hl = hom_layout(b, c, i + f.shift);
    for (const auto& hb : hl) {
      int j = hb.i;  // Hom(B_j, C_{i+j+d})
      int m = i + j;
      const Mat fm = f.comp(m);  // C_{m+d} x (A(x)B)_m
      // locate the (i,j) tensor block inside (A(x)B)_m
      for (const auto& tb : tensor_layout(a, b, m)) {
        if (tb.p != i) continue;
        int db = b.dim(j), dc = c.dim(m + f.shift), da = a.dim(i);
        for (int rc = 0; rc < dc; ++rc)
          for (int cb = 0; cb < db; ++cb)
            for (int ra = 0; ra < da; ++ra)
              gi.at(hb.offset + rc * db + cb, ra) = fm.at(rc, tb.offset + ra * db + cb);
      }
    }
    g.set(i, std::move(gi));
  }
  return g;
}

// tau(g)(a (x) b) = g(a)(b): inverse of rho.
inline ChainMap chain_adjunction_tau(const ChainMap& g, const ChainCx& a, const ChainCx& b,
                                     const ChainCx& c) {
  ChainCx ab = tensor_complex(a, b);
  ChainMap f{ab, c, g.shift, {}};
  for (int m = ab.lo(); m <= ab.hi(); ++m) {
    Mat fm(c.dim(m + g.shift), ab.dim(m));
    for (const auto& tb : tensor_layout(a, b, m)) {
      int i = tb.p, j = tb.q;
      const Mat gi = g.comp(i);  // IHom(B,C)_{i+d} x A_i
      auto hl = hom_layout(b, c, i + g.shift);
      for (const auto& hb : hl) {
        if (hb.i != j) continue;
        int db = b.dim(j), dc = c.dim(m + g.shift), da = a.dim(i);
        for (int rc = 0; rc < dc; ++rc)
          for (int ra = 0; ra < da; ++ra)
            for (int cb = 0; cb < db; ++cb)
              fm.at(rc, tb.offset + ra * db + cb) = gi.at(hb.offset + rc * db + cb, ra);
      }
    }
    f.set(m, std::move(fm));
  }
  return f;
}

// rho^L(f)(b)(a) = (-1)^{|a||b|} f(a (x) b): IHom(A(x)B, C)_d -> IHom(B, IHom(A,C))_d.
inline ChainMap chain_adjunction_rho_left(const ChainMap& f, const ChainCx& a, const ChainCx& b,
                                          const ChainCx& c) {
  ChainCx hac = mapping_complex(a, c);
  ChainMap g{b, hac, f.shift, {}};
  for (int j = b.lo(); j <= b.hi(); ++j) {
    Mat gj(hac.dim(j + f.shift), b.dim(j));
    auto hl = hom_layout(a, c, j + f.shift);
    for (const auto& hb : hl) {
      int i = hb.i;  // Hom(A_i, C_{i+j+d})
      int m = i + j;
      const Mat fm = f.comp(m);
      int sgn = (i % 2 && j % 2) ? -1 : 1;
      for (const auto& tb : tensor_layout(a, b, m)) {
        if (tb.p != i) continue;
        int db = b.dim(j), dc = c.dim(m + f.shift), da = a.dim(i);
        for (int rc = 0; rc < dc; ++rc)
          for (int ca = 0; ca < da; ++ca)
            for (int rb = 0; rb < db; ++rb)
              gj.at(hb.offset + rc * da + ca, rb) = Rat(sgn) * fm.at(rc, tb.offset + ca * db + rb);
      }
    }
    g.set(j, std::move(gj));
  }
  return g;
}

}  // namespace svq
