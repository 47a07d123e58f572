#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "svq/matrix.hpp"

namespace svq {

// A morphism [src] -> [dst] in the simplex category: a weakly increasing
// sequence of src+1 values in [0..dst].
struct Arrow {
  int src = 0, dst = 0;
  std::vector<int> v;  // size src+1

  bool operator==(const Arrow& o) const { return src == o.src && dst == o.dst && v == o.v; }
  bool operator<(const Arrow& o) const { return v < o.v; }  // within fixed (src,dst)
};

inline Arrow arrow_identity(int m) {
  Arrow a{m, m, {}};
  a.v.resize(m + 1);
  for (int i = 0; i <= m; ++i) a.v[i] = i;
  return a;
}

inline void arrow_check(const Arrow& a) {
  if (int(a.v.size()) != a.src + 1) throw std::invalid_argument("arrow arity mismatch");
  for (size_t i = 0; i < a.v.size(); ++i) {
    if (a.v[i] < 0 || a.v[i] > a.dst) throw std::invalid_argument("arrow value out of range");
    if (i > 0 && a.v[i] < a.v[i - 1]) throw std::invalid_argument("arrow not monotone");
  }
}

// f after g: [k] -> [m] -> [l].
inline Arrow compose(const Arrow& f, const Arrow& g) {
  if (g.dst != f.src) throw std::invalid_argument("arrow composition mismatch");
  Arrow r{g.src, f.dst, {}};
  r.v.reserve(g.v.size());
  for (int x : g.v) r.v.push_back(f.v[x]);
  return r;
}

// delta_i: [m-1] -> [m], the injection skipping i.
inline Arrow coface(int m, int i) {
  Arrow a{m - 1, m, {}};
  for (int x = 0; x <= m; ++x)
    if (x != i) a.v.push_back(x);
  return a;
}

// sigma_j: [m+1] -> [m], the surjection repeating j.
inline Arrow codegen(int m, int j) {
  Arrow a{m + 1, m, {}};
  for (int x = 0; x <= m; ++x) {
    a.v.push_back(x);
    if (x == j) a.v.push_back(x);
  }
  return a;
}

// Simplicial operators on simplices of Delta[dst]: d_i u = u o delta_i,
// s_j u = u o sigma_j.
inline Arrow face_of(const Arrow& u, int i) { return compose(u, coface(u.src, i)); }
inline Arrow degen_of(const Arrow& u, int j) { return compose(u, codegen(u.src, j)); }

// Postcomposition with delta^i / sigma^i (the maps delta^i(u), sigma^i(u)
// used for reindexing mapping-space levels).
inline Arrow coface_post(int i, const Arrow& u) { return compose(coface(u.dst + 1, i), u); }
inline Arrow codegen_post(int i, const Arrow& u) { return compose(codegen(u.dst - 1, i), u); }

// All of Delta[l]_m in lexicographic order.
inline std::vector<Arrow> all_simplices(int l, int m) {
  std::vector<Arrow> out;
  if (l < 0 || m < 0) return out;
  std::vector<int> cur(m + 1, 0);
  while (true) {
    out.push_back(Arrow{m, l, cur});
    int i = m;
    while (i >= 0 && cur[i] == l) --i;
    if (i < 0) break;
    int nv = cur[i] + 1;
    for (int j = i; j <= m; ++j) cur[j] = nv;
  }
  return out;
}

inline int simplex_index(const std::vector<Arrow>& list, const Arrow& a) {
  auto it = std::lower_bound(list.begin(), list.end(), a);
  if (it == list.end() || !(*it == a)) throw std::logic_error("simplex not found");
  return int(it - list.begin());
}

inline bool is_surjective_arrow(const Arrow& a) {
  std::vector<bool> hit(a.dst + 1, false);
  for (int x : a.v) hit[x] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

// Epi-mono factorization t = s_I d_J: I lists the repeat positions of the epi
// part (ascending), J the values missing from the image (ascending).
struct EpiMono {
  std::vector<int> I, J;
};

inline EpiMono factor_arrow(const Arrow& t) {
  EpiMono em;
  std::vector<bool> hit(t.dst + 1, false);
  for (int x : t.v) hit[x] = true;
  for (int x = 0; x <= t.dst; ++x)
    if (!hit[x]) em.J.push_back(x);
  for (int p = 0; p + 1 <= t.src; ++p)
    if (t.v[p] == t.v[p + 1]) em.I.push_back(p);
  return em;
}

// (p,q)-shuffles: mu = sigma(0..p-1), nu = sigma(p..p+q-1), both ascending.
struct Shuffle {
  std::vector<int> mu, nu;
  int sign;  // signature of the underlying permutation
};

inline std::vector<Shuffle> shuffles(int p, int q) {
  std::vector<Shuffle> out;
  std::vector<int> idx(p);
  for (int i = 0; i < p; ++i) idx[i] = i;
  auto emit = [&](const std::vector<int>& mu) {
    Shuffle s;
    s.mu = mu;
    std::vector<bool> in_mu(p + q, false);
    for (int x : mu) in_mu[x] = true;
    for (int x = 0; x < p + q; ++x)
      if (!in_mu[x]) s.nu.push_back(x);
    long inv = 0;
    for (int a : s.mu)
      for (int b : s.nu)
        if (a > b) ++inv;
    s.sign = (inv % 2 == 0) ? 1 : -1;
    out.push_back(std::move(s));
  };
  if (p == 0 || q == 0) {
    emit(idx);
    return out;
  }
  // enumerate p-subsets of {0..p+q-1}
  while (true) {
    emit(idx);
    int i = p - 1;
    while (i >= 0 && idx[i] == q + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// Monotone surjections [m] ->> [k], ordered lexicographically on values.
inline std::vector<Arrow> surjections(int m, int k) {
  std::vector<Arrow> out;
  if (k > m || k < 0) return out;
  // Choose the m-k repeat positions among {0..m-1}; lex order of value
  // sequences corresponds to ascending positions processed as below.
  std::vector<Arrow> all = all_simplices(k, m);
  for (const auto& a : all)
    if (is_surjective_arrow(a)) out.push_back(a);
  return out;
}

}  // namespace svq
