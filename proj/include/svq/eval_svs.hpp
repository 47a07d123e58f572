#pragma once

#include <deque>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "svq/chain.hpp"
#include "svq/simplex.hpp"
#include "svq/trunc_svs.hpp"

namespace svq {

// A lazily evaluable simplicial vector space. Levels are materialized on
// demand and memoized; memoization is synchronized so concurrent level
// requests are safe. All returned data is immutable.
class SVS {
  enum class Kind { Cosk, FromComplex, Tensor, Copower, Opposite };

  struct LevelData {
    int dim = 0;
    std::vector<Mat> faces;   // level m -> m-1
    std::vector<Mat> degens;  // level m -> m+1, filled with level m+1
    bool degens_ready = false;
    std::shared_ptr<Subspace> cosk_basis;  // tuple basis for extended levels
  };

  struct Node {
    Kind kind;
    TruncSVS trunc;
    ChainCx cx;
    std::shared_ptr<Node> a, b;
    int copw = 0;
    mutable std::mutex mu;
    mutable std::deque<LevelData> levels;
  };

 public:
  SVS() = default;

  static SVS coskeletal(TruncSVS t) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Cosk;
    n->trunc = std::move(t);
    return SVS(std::move(n));
  }
  static SVS from_complex(ChainCx a) {
    for (int i = a.lo(); i < 0; ++i)
      if (a.dim(i) > 0) throw std::invalid_argument("dk: complex has negative support");
    auto n = std::make_shared<Node>();
    n->kind = Kind::FromComplex;
    n->cx = std::move(a);
    return SVS(std::move(n));
  }
  static SVS tensor(const SVS& a, const SVS& b) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Tensor;
    n->a = a.node_;
    n->b = b.node_;
    return SVS(std::move(n));
  }
  static SVS copower(const SVS& a, int m) {
    if (m < 0) throw std::invalid_argument("copower: negative simplex");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Copower;
    n->a = a.node_;
    n->copw = m;
    return SVS(std::move(n));
  }
  static SVS opposite(const SVS& a) {
    if (a.node_->kind == Kind::Opposite) return SVS(a.node_->a);  // involutive
    auto n = std::make_shared<Node>();
    n->kind = Kind::Opposite;
    n->a = a.node_;
    return SVS(std::move(n));
  }

  bool valid() const { return node_ != nullptr; }
  bool same_node(const SVS& o) const { return node_ == o.node_; }

  int dim(int m) const { return level(m).dim; }

  // d_i: level m -> m-1, 0 <= i <= m, m >= 1.
  const Mat& face(int m, int i) const {
    if (m < 1 || i < 0 || i > m) throw std::invalid_argument("face index out of range");
    if (node_->kind == Kind::Opposite) return SVS(node_->a).face(m, m - i);
    level(m);
    std::scoped_lock lk(node_->mu);
    return node_->levels[m].faces[i];
  }

  // s_j: level m -> m+1, 0 <= j <= m.
  const Mat& degen(int m, int j) const {
    if (m < 0 || j < 0 || j > m) throw std::invalid_argument("degeneracy index out of range");
    if (node_->kind == Kind::Opposite) return SVS(node_->a).degen(m, m - j);
    level(m + 1);  // degeneracies of level m are produced with level m+1
    std::scoped_lock lk(node_->mu);
    return node_->levels[m].degens[j];
  }

  // Alternating-sum boundary at level m.
  Mat boundary(int m) const {
    Mat b = Mat::zero(dim(m - 1), dim(m));
    for (int i = 0; i <= m; ++i) b = (i % 2 == 0) ? b + face(m, i) : b - face(m, i);
    return b;
  }

  // V(t): level t.dst -> level t.src via the unique epi-mono factorization.
  Mat arrow_action(const Arrow& t) const {
    EpiMono em = factor_arrow(t);
    Mat m = Mat::identity(dim(t.dst));
    int cur = t.dst;
    for (auto it = em.J.rbegin(); it != em.J.rend(); ++it) {
      m = face(cur, *it) * m;
      --cur;
    }
    for (int b : em.I) {
      m = degen(cur, b) * m;
      ++cur;
    }
    return m;
  }

  // Tuple basis of a coskeletally extended level (columns live in the
  // (m+1)-fold sum of level m-1); null for stored/non-cosk levels.
  std::shared_ptr<const Subspace> cosk_level_basis(int m) const { return level(m).cosk_basis; }

  // DK summand labels (surjections), for DK presentations.
  bool is_dk() const { return node_->kind == Kind::FromComplex; }
  std::vector<Arrow> dk_level_labels(int m) const {
    if (!is_dk()) return {};
    return dk_summands(m);
  }
  const ChainCx& dk_complex() const {
    if (!is_dk()) throw std::logic_error("not a DK presentation");
    return node_->cx;
  }

 private:
  explicit SVS(std::shared_ptr<Node> n) : node_(std::move(n)) {}

  const LevelData& level(int m) const {
    if (!node_) throw std::logic_error("empty SVS");
    if (m < 0) throw std::invalid_argument("negative level");
    if (node_->kind == Kind::Opposite) return SVS(node_->a).level(m);
    std::scoped_lock lk(node_->mu);
    while (int(node_->levels.size()) <= m) build_next_level();
    return node_->levels[m];
  }

  // Extends node_->levels by one; called with the lock held.
  void build_next_level() const {
    int m = int(node_->levels.size());
    LevelData ld;
    switch (node_->kind) {
      case Kind::Cosk:
        build_cosk(m, ld);
        break;
      case Kind::FromComplex:
        build_dk(m, ld);
        break;
      case Kind::Tensor:
        build_tensor(m, ld);
        break;
      case Kind::Copower:
        build_copower(m, ld);
        break;
      case Kind::Opposite:
        throw std::logic_error("unreachable");
    }
    node_->levels.push_back(std::move(ld));
    fill_degens(m);
  }

  void build_cosk(int m, LevelData& ld) const {
    const TruncSVS& t = node_->trunc;
    if (m <= t.L) {
      ld.dim = t.dims[m];
      if (m >= 1) ld.faces = t.faces[m];
      return;
    }
    // Boundary space of the previous level: tuples (x_0..x_m) of
    // (m-1)-simplices with d_i x_j = d_{j-1} x_i for i < j.
    const LevelData& prev = node_->levels[m - 1];
    int dp = prev.dim;
    std::vector<Mat> rows;
    if (m >= 2) {
      for (int j = 1; j <= m; ++j)
        for (int i = 0; i < j; ++i) {
          Mat row(node_->levels[m - 2].dim, (m + 1) * dp);
          row.set_block(0, j * dp, prev.faces[i]);
          row.set_block(0, i * dp, -prev.faces[j - 1]);
          rows.push_back(std::move(row));
        }
    }
    Subspace sub = rows.empty() ? Subspace::full((m + 1) * dp) : kernel_basis(vstack(rows));
    ld.dim = sub.dim();
    for (int i = 0; i <= m; ++i) ld.faces.push_back(sub.basis().block(i * dp, 0, dp, ld.dim));
    ld.cosk_basis = std::make_shared<Subspace>(std::move(sub));
  }

  void build_dk(int m, LevelData& ld) const {
    const ChainCx& a = node_->cx;
    auto summands = dk_summands(m);
    std::vector<int> offs;
    int total = 0;
    for (const auto& s : summands) {
      offs.push_back(total);
      total += a.dim(s.dst);
    }
    ld.dim = total;
    if (m >= 1) {
      auto tsum = dk_summands(m - 1);
      std::vector<int> toffs;
      int ttotal = 0;
      for (const auto& s : tsum) {
        toffs.push_back(ttotal);
        ttotal += a.dim(s.dst);
      }
      for (int i = 0; i <= m; ++i) {
        Mat f(ttotal, total);
        Arrow th = coface(m, i);
        for (size_t s = 0; s < summands.size(); ++s) {
          int k = summands[s].dst;
          if (a.dim(k) == 0) continue;
          Arrow comp = compose(summands[s], th);
          EpiMono em = factor_arrow(comp);
          if (em.J.empty()) {
            f.set_block(toffs[dk_index(tsum, comp)], offs[s], Mat::identity(a.dim(k)));
          } else if (em.J.size() == 1 && em.J[0] == k && a.dim(k - 1) > 0) {
            Arrow epi{m - 1, k - 1, comp.v};
            int sgn = (k % 2 == 0) ? 1 : -1;
            f.set_block(toffs[dk_index(tsum, epi)], offs[s], Rat(sgn) * a.diff(k));
          }
        }
        ld.faces.push_back(std::move(f));
      }
    }
  }

  void build_tensor(int m, LevelData& ld) const {
    SVS x(node_->a), y(node_->b);
    ld.dim = x.dim(m) * y.dim(m);
    if (m >= 1)
      for (int i = 0; i <= m; ++i) ld.faces.push_back(kron(x.face(m, i), y.face(m, i)));
  }

  void build_copower(int m, LevelData& ld) const {
    SVS x(node_->a);
    int dm = x.dim(m);
    auto simps = all_simplices(node_->copw, m);
    ld.dim = dm * int(simps.size());
    if (m >= 1) {
      auto tsimps = all_simplices(node_->copw, m - 1);
      int dt = x.dim(m - 1);
      for (int i = 0; i <= m; ++i) {
        Mat f(dt * int(tsimps.size()), ld.dim);
        const Mat fx = x.face(m, i);
        for (size_t u = 0; u < simps.size(); ++u) {
          int tu = simplex_index(tsimps, face_of(simps[u], i));
          f.set_block(tu * dt, int(u) * dm, fx);
        }
        ld.faces.push_back(std::move(f));
      }
    }
  }

  // Degeneracies s_j: level m-1 -> m, computable once level m exists.
  void fill_degens(int m) const {
    if (m < 1) return;
    LevelData& prev = node_->levels[m - 1];
    if (prev.degens_ready) return;
    switch (node_->kind) {
      case Kind::Cosk: {
        const TruncSVS& t = node_->trunc;
        if (m - 1 < t.L) {
          prev.degens = t.degens[m - 1];
        } else {
          // Component formula (s_j x)_i = d_i s_j x, resolved by the
          // simplicial identities, then expressed in the boundary basis.
          int dp = prev.dim;
          const LevelData& cur = node_->levels[m];
          if (!cur.cosk_basis) throw std::logic_error("coskeletal basis missing");
          for (int j = 0; j <= m - 1; ++j) {
            std::vector<Mat> comps;
            for (int i = 0; i <= m; ++i) {
              if (i == j || i == j + 1)
                comps.push_back(Mat::identity(dp));
              else if (i < j)
                comps.push_back(node_->levels[m - 2].degens[j - 1] * prev.faces[i]);
              else
                comps.push_back(node_->levels[m - 2].degens[j] * prev.faces[i - 1]);
            }
            prev.degens.push_back(cur.cosk_basis->coords(vstack(comps)));
          }
        }
        break;
      }
      case Kind::FromComplex: {
        const ChainCx& a = node_->cx;
        auto ssum = dk_summands(m - 1);
        auto tsum = dk_summands(m);
        std::vector<int> soffs, toffs;
        int st = 0, tt = 0;
        for (const auto& s : ssum) soffs.push_back(st), st += a.dim(s.dst);
        for (const auto& s : tsum) toffs.push_back(tt), tt += a.dim(s.dst);
        for (int j = 0; j <= m - 1; ++j) {
          Mat sm(tt, st);
          Arrow th = codegen(m - 1, j);
          for (size_t s = 0; s < ssum.size(); ++s) {
            int k = ssum[s].dst;
            if (a.dim(k) == 0) continue;
            Arrow comp = compose(ssum[s], th);  // epi o epi is epi
            sm.set_block(toffs[dk_index(tsum, comp)], soffs[s], Mat::identity(a.dim(k)));
          }
          prev.degens.push_back(std::move(sm));
        }
        break;
      }
      case Kind::Tensor: {
        SVS x(node_->a), y(node_->b);
        for (int j = 0; j <= m - 1; ++j)
          prev.degens.push_back(kron(x.degen(m - 1, j), y.degen(m - 1, j)));
        break;
      }
      case Kind::Copower: {
        SVS x(node_->a);
        auto ssimps = all_simplices(node_->copw, m - 1);
        auto tsimps = all_simplices(node_->copw, m);
        int ds = x.dim(m - 1), dt = x.dim(m);
        for (int j = 0; j <= m - 1; ++j) {
          Mat sm(dt * int(tsimps.size()), ds * int(ssimps.size()));
          const Mat sx = x.degen(m - 1, j);
          for (size_t u = 0; u < ssimps.size(); ++u) {
            int tu = simplex_index(tsimps, degen_of(ssimps[u], j));
            sm.set_block(tu * dt, int(u) * ds, sx);
          }
          prev.degens.push_back(std::move(sm));
        }
        break;
      }
      case Kind::Opposite:
        throw std::logic_error("unreachable");
    }
    prev.degens_ready = true;
  }

  std::vector<Arrow> dk_summands(int m) const {
    std::vector<Arrow> out;
    for (int k = m; k >= 0; --k)
      for (auto& s : surjections(m, k)) out.push_back(s);
    return out;
  }
  static int dk_index(const std::vector<Arrow>& summands, const Arrow& a) {
    for (size_t i = 0; i < summands.size(); ++i)
      if (summands[i] == a) return int(i);
    throw std::logic_error("dk summand not found");
  }

  std::shared_ptr<Node> node_;
};

}  // namespace svq
