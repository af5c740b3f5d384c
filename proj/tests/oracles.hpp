#pragma once

// Independent reference implementations used only by the tests. Nothing here
// calls into the library except for label/permutation conversion at the
// boundary.

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "ifodd/moment_graph.hpp"
#include "ifodd/weyl.hpp"

namespace oracle {

// Signed one-line notation: w[i] in {±1..±m}, m = n+1.
using Perm = std::vector<int>;

inline int alphabet_rank(int v, int m) { return v > 0 ? v : 2 * m + 1 + v; }

// Right action of the reflections of C_m on positions (0-based).
inline Perm swap_pos(Perm w, int i, int j) {
  std::swap(w[i], w[j]);
  return w;
}
inline Perm swap_bar(Perm w, int i, int j) {
  const int x = w[i], y = w[j];
  w[i] = -y;
  w[j] = -x;
  return w;
}
inline Perm negate(Perm w, int i) {
  w[i] = -w[i];
  return w;
}

inline std::vector<Perm> reflections_of(const Perm& w) {
  const int m = static_cast<int>(w.size());
  std::vector<Perm> out;
  for (int i = 0; i < m; ++i) {
    out.push_back(negate(w, i));
    for (int j = i + 1; j < m; ++j) {
      out.push_back(swap_pos(w, i, j));
      out.push_back(swap_bar(w, i, j));
    }
  }
  return out;
}

// The whole group with lengths from breadth-first search over simple
// generators s_1..s_{m-1} (adjacent swaps) and s_m (negate the last entry).
struct Group {
  int m = 0;
  std::vector<Perm> elements;
  std::map<Perm, int> length;
  std::map<Perm, std::size_t> position;
};

inline Group build_group(int n) {
  Group G;
  G.m = n + 1;
  Perm id(G.m);
  for (int i = 0; i < G.m; ++i) id[i] = i + 1;
  std::deque<Perm> queue{id};
  G.length[id] = 0;
  while (!queue.empty()) {
    Perm w = queue.front();
    queue.pop_front();
    G.elements.push_back(w);
    std::vector<Perm> next;
    for (int i = 0; i + 1 < G.m; ++i) next.push_back(swap_pos(w, i, i + 1));
    next.push_back(negate(w, G.m - 1));
    for (auto& v : next)
      if (!G.length.contains(v)) {
        G.length[v] = G.length[w] + 1;
        queue.push_back(v);
      }
  }
  for (std::size_t k = 0; k < G.elements.size(); ++k) G.position[G.elements[k]] = k;
  return G;
}

// Bruhat order as the transitive closure of u < u t with l(u t) > l(u).
inline std::vector<std::vector<bool>> bruhat_closure(const Group& G) {
  const std::size_t size = G.elements.size();
  std::vector<std::size_t> by_length(size);
  for (std::size_t k = 0; k < size; ++k) by_length[k] = k;
  std::sort(by_length.begin(), by_length.end(), [&](std::size_t x, std::size_t y) {
    return G.length.at(G.elements[x]) > G.length.at(G.elements[y]);
  });
  std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
  for (std::size_t k : by_length) {
    leq[k][k] = true;
    const Perm& u = G.elements[k];
    for (const Perm& v : reflections_of(u))
      if (G.length.at(v) > G.length.at(u)) {
        const std::size_t j = G.position.at(v);
        for (std::size_t t = 0; t < size; ++t)
          if (leq[j][t]) leq[k][t] = true;
      }
  }
  return leq;
}

inline std::pair<int, int> coset_key(const Perm& w) { return {w[0], w[1]}; }

// Minimal-length element of each coset w W_P.
inline std::map<std::pair<int, int>, Perm> minimal_reps(const Group& G) {
  std::map<std::pair<int, int>, Perm> reps;
  for (const auto& w : G.elements) {
    auto [it, fresh] = reps.try_emplace(coset_key(w), w);
    if (!fresh && G.length.at(w) < G.length.at(it->second)) it->second = w;
  }
  return reps;
}

inline int to_signed(ifodd::BarValue v) { return v.signed_value(); }
inline ifodd::BarValue from_signed(int v) { return v > 0 ? ifodd::plain(v) : ifodd::barred(-v); }

inline Perm to_perm(const ifodd::SignedPermutation& w) {
  Perm p;
  for (auto v : w.values) p.push_back(to_signed(v));
  return p;
}

inline ifodd::SignedPermutation from_perm(const Perm& p) {
  ifodd::SignedPermutation w;
  for (int v : p) w.values.push_back(from_signed(v));
  return w;
}

inline ifodd::FlagLabel label_of(const Perm& w, int n) { return {from_signed(w[0]), from_signed(w[1]), n}; }

inline bool is_odd(const Perm& w) {
  return std::none_of(w.begin(), w.begin() + 2, [](int v) { return v == -1; });
}

// Everything about one rank that the other oracles need.
struct Quotient {
  int n = 2;
  Group G;
  std::vector<std::vector<bool>> leq;
  std::map<std::pair<int, int>, Perm> reps;
  std::vector<ifodd::FlagLabel> odd_labels;

  bool less_equal(const ifodd::FlagLabel& u, const ifodd::FlagLabel& v) const {
    const Perm& pu = reps.at({to_signed(u.a), to_signed(u.b)});
    const Perm& pv = reps.at({to_signed(v.a), to_signed(v.b)});
    return leq[G.position.at(pu)][G.position.at(pv)];
  }
  int length(const ifodd::FlagLabel& u) const { return G.length.at(reps.at({to_signed(u.a), to_signed(u.b)})); }
  const Perm& rep(const ifodd::FlagLabel& u) const { return reps.at({to_signed(u.a), to_signed(u.b)}); }
};

inline Quotient build_quotient(int n) {
  Quotient Q;
  Q.n = n;
  Q.G = build_group(n);
  Q.leq = bruhat_closure(Q.G);
  Q.reps = minimal_reps(Q.G);
  for (const auto& [key, w] : Q.reps)
    if (is_odd(w)) Q.odd_labels.push_back(label_of(w, n));
  return Q;
}

struct OracleEdge {
  ifodd::FlagLabel u, v;
  ifodd::Degree d;
};

// Degree class of the reflection moving positions (i, j), i in {0,1}.
inline ifodd::Degree reflection_degree(char kind, int i, int j) {
  if (kind == '-' && i == 0 && j == 1) return {1, 0};
  if (kind == '+' && i == 0 && j == 1) return {1, 2};
  return i == 0 ? ifodd::Degree{1, 1} : ifodd::Degree{0, 1};
}

inline std::vector<OracleEdge> moment_edges(const Quotient& Q) {
  const int m = Q.n + 1;
  std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, ifodd::Degree> seen;
  for (const auto& u : Q.odd_labels) {
    const Perm& w = Q.rep(u);
    auto visit = [&](const Perm& image, ifodd::Degree d) {
      if (!is_odd(image) || coset_key(image) == coset_key(w)) return;
      auto a = coset_key(w), b = coset_key(image);
      if (b < a) std::swap(a, b);
      seen.emplace(std::pair{a, b}, d);
    };
    for (int i = 0; i < 2; ++i) {
      visit(negate(w, i), reflection_degree('2', i, i));
      for (int j = i + 1; j < m; ++j) {
        visit(swap_pos(w, i, j), reflection_degree('-', i, j));
        visit(swap_bar(w, i, j), reflection_degree('+', i, j));
      }
    }
  }
  std::vector<OracleEdge> out;
  for (const auto& [pair, d] : seen) {
    auto lab = [&](std::pair<int, int> k) { return ifodd::FlagLabel{from_signed(k.first), from_signed(k.second), Q.n}; };
    out.push_back({lab(pair.first), lab(pair.second), d});
  }
  return out;
}

// Curve neighborhood by exhaustive relaxation over every spent degree <= d.
inline std::vector<ifodd::FlagLabel> neighborhood(const Quotient& Q, const std::vector<OracleEdge>& edges,
                                                  const ifodd::FlagLabel& w, ifodd::Degree d) {
  std::set<std::tuple<std::size_t, int, int>> reached;
  auto idx = [&](const ifodd::FlagLabel& x) {
    return static_cast<std::size_t>(std::find(Q.odd_labels.begin(), Q.odd_labels.end(), x) - Q.odd_labels.begin());
  };
  std::deque<std::tuple<std::size_t, int, int>> work;
  for (const auto& u : Q.odd_labels)
    if (Q.less_equal(u, w)) {
      reached.insert({idx(u), 0, 0});
      work.push_back({idx(u), 0, 0});
    }
  while (!work.empty()) {
    const auto [v, s1, s2] = work.front();
    work.pop_front();
    for (const auto& e : edges) {
      std::size_t other;
      if (idx(e.u) == v) other = idx(e.v);
      else if (idx(e.v) == v) other = idx(e.u);
      else continue;
      const int t1 = s1 + e.d.d1, t2 = s2 + e.d.d2;
      if (t1 > d.d1 || t2 > d.d2) continue;
      if (reached.insert({other, t1, t2}).second) work.push_back({other, t1, t2});
    }
  }
  std::set<std::size_t> hit;
  for (const auto& [v, s1, s2] : reached) hit.insert(v);
  std::vector<ifodd::FlagLabel> maximal;
  for (std::size_t v : hit) {
    bool dominated = false;
    for (std::size_t u : hit)
      if (u != v && Q.less_equal(Q.odd_labels[v], Q.odd_labels[u])) dominated = true;
    if (!dominated) maximal.push_back(Q.odd_labels[v]);
  }
  return maximal;
}

// gcd of the lengths of all simple cycles of length <= max_len.
inline int simple_cycle_gcd(const std::vector<std::vector<std::size_t>>& succ, std::size_t max_len) {
  int g = 0;
  std::vector<std::size_t> path;
  std::vector<bool> on(succ.size(), false);
  auto gcd = [](int a, int b) {
    while (b) {
      a %= b;
      std::swap(a, b);
    }
    return a;
  };
  // Cycles are rooted at their smallest vertex.
  auto dfs = [&](auto&& self, std::size_t root, std::size_t v) -> void {
    for (std::size_t w : succ[v]) {
      if (w == root) g = gcd(g, static_cast<int>(path.size()));
      else if (w > root && !on[w] && path.size() < max_len) {
        on[w] = true;
        path.push_back(w);
        self(self, root, w);
        path.pop_back();
        on[w] = false;
      }
    }
  };
  for (std::size_t r = 0; r < succ.size(); ++r) {
    path = {r};
    on[r] = true;
    dfs(dfs, r, r);
    on[r] = false;
  }
  return g;
}

}  // namespace oracle
