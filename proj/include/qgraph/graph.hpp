#pragma once

// Simple undirected graphs on vertices 1..ell: clique enumeration, chordality
// via lexicographic BFS, chromatic polynomials (deletion-contraction with
// memoization, plus a stable-partition oracle), and the edge surgery used by
// the recursion formulas (deletion, contraction, join with a complete graph).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qgraph/core.hpp"
#include "qgraph/int_poly.hpp"

namespace qgraph {

using Edge = std::pair<int, int>;  // 1-based endpoints, stored first < second

class Graph {
 public:
  Graph() : ell_(0) {}
  Graph(int ell, const std::vector<Edge>& edges) : ell_(ell) {
    if (ell < 1) throw input_error("graph needs at least one vertex");
    if (ell > guards::max_graph_vertices)
      throw guard_error("graph exceeds the vertex guard");
    std::set<Edge> dedup;
    for (auto [a, b] : edges) {
      if (a == b) throw input_error("loop edge " + std::to_string(a));
      if (a < 1 || a > ell || b < 1 || b > ell)
        throw input_error("edge endpoint out of range: " + std::to_string(a) + " " +
                          std::to_string(b));
      dedup.insert({std::min(a, b), std::max(a, b)});
    }
    edges_.assign(dedup.begin(), dedup.end());
    adj_.assign(static_cast<std::size_t>(ell), 0);
    for (auto [a, b] : edges_) {
      adj_[a - 1] |= 1ull << (b - 1);
      adj_[b - 1] |= 1ull << (a - 1);
    }
  }

  int ell() const { return ell_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool adjacent(int a, int b) const { return a != b && (adj_[a - 1] >> (b - 1)) & 1ull; }
  std::uint64_t neighbor_mask(int v) const { return adj_[v - 1]; }
  int degree(int v) const { return __builtin_popcountll(adj_[v - 1]); }

  bool has_edge(const Edge& e) const {
    return adjacent(e.first, e.second);
  }

  bool is_clique(const std::vector<int>& vs) const {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!adjacent(vs[i], vs[j])) return false;
    return true;
  }

  bool operator==(const Graph& o) const { return ell_ == o.ell_ && edges_ == o.edges_; }

 private:
  int ell_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
};

/// Perfect elimination ordering: at each position, the earlier neighbors of
/// the vertex form a clique.
struct Peo {
  std::vector<int> order;  // order[i-1] = vertex at position i
};

inline bool peo_valid(const Graph& g, const Peo& peo) {
  if (static_cast<int>(peo.order.size()) != g.ell()) return false;
  std::vector<bool> seen(static_cast<std::size_t>(g.ell()) + 1, false);
  for (int v : peo.order)
    if (v < 1 || v > g.ell() || seen[v]) return false; else seen[v] = true;
  for (std::size_t i = 0; i < peo.order.size(); ++i) {
    std::vector<int> earlier;
    for (std::size_t j = 0; j < i; ++j)
      if (g.adjacent(peo.order[i], peo.order[j])) earlier.push_back(peo.order[j]);
    if (!g.is_clique(earlier)) return false;
  }
  return true;
}

// ---- clique enumeration -------------------------------------------------

namespace detail {

inline void bron_kerbosch(const Graph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                          std::vector<std::vector<int>>& out) {
  if (p == 0 && x == 0) {
    std::vector<int> clique;
    for (int v = 0; v < g.ell(); ++v)
      if ((r >> v) & 1ull) clique.push_back(v + 1);
    out.push_back(std::move(clique));
    return;
  }
  // pivot: vertex of p|x with most neighbors in p
  std::uint64_t px = p | x;
  int pivot = -1, best = -1;
  for (int v = 0; v < g.ell(); ++v)
    if ((px >> v) & 1ull) {
      int cnt = __builtin_popcountll(p & g.neighbor_mask(v + 1));
      if (cnt > best) { best = cnt; pivot = v; }
    }
  std::uint64_t cand = p & ~g.neighbor_mask(pivot + 1);
  for (int v = 0; v < g.ell(); ++v) {
    if (!((cand >> v) & 1ull)) continue;
    std::uint64_t nv = g.neighbor_mask(v + 1);
    bron_kerbosch(g, r | (1ull << v), p & nv, x & nv, out);
    p &= ~(1ull << v);
    x |= 1ull << v;
  }
}

}  // namespace detail

/// All maximal cliques, each a sorted vertex list; output sorted
/// lexicographically for determinism. Isolated vertices appear as singletons.
inline std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::uint64_t all = g.ell() == 64 ? ~0ull : ((1ull << g.ell()) - 1);
  detail::bron_kerbosch(g, 0, all, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---- chordality ----------------------------------------------------------

/// Lexicographic BFS; ties broken toward the smallest vertex label so that a
/// complete graph is visited in identity order.
inline std::vector<int> lex_bfs(const Graph& g) {
  int n = g.ell();
  std::vector<std::vector<int>> label(static_cast<std::size_t>(n) + 1);
  std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 1; v <= n; ++v) {
      if (visited[v]) continue;
      if (pick == -1 || label[v] > label[pick]) pick = v;
    }
    visited[pick] = true;
    order.push_back(pick);
    for (int u = 1; u <= n; ++u)
      if (!visited[u] && g.adjacent(pick, u)) label[u].push_back(n - step);
  }
  return order;
}

struct ChordalityResult {
  bool is_chordal = false;
  std::optional<Peo> peo;
};

/// Chordality test. In the "earlier neighbors form a clique" convention the
/// Lex-BFS visit order itself is a PEO exactly when the graph is chordal
/// (its reverse is the classical elimination order); the candidate is then
/// verified directly, so the verification, not the construction, is the
/// oracle.
inline ChordalityResult chordality(const Graph& g) {
  Peo candidate;
  candidate.order = lex_bfs(g);
  if (peo_valid(g, candidate)) return {true, candidate};
  return {false, std::nullopt};
}

/// Brute-force search for an induced cycle of length >= 4 (vertices in cycle
/// order), used as a witness for non-chordal inputs and as a test oracle.
inline std::optional<std::vector<int>> find_induced_long_cycle(const Graph& g) {
  int n = g.ell();
  if (n > 20) throw guard_error("induced-cycle search guard exceeded");
  for (std::uint64_t s = 0; s < (1ull << n); ++s) {
    int k = __builtin_popcountll(s);
    if (k < 4) continue;
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if ((s >> v) & 1ull) vs.push_back(v + 1);
    bool cyclic = true;
    for (int v : vs)
      if (__builtin_popcountll(g.neighbor_mask(v) & s) != 2) { cyclic = false; break; }
    if (!cyclic) continue;
    // walk the cycle, check it is connected (one cycle, not several)
    std::vector<int> walk{vs[0]};
    int prev = 0, cur = vs[0];
    while (static_cast<int>(walk.size()) < k) {
      std::uint64_t nb = g.neighbor_mask(cur) & s;
      int next = -1;
      for (int v = 0; v < n; ++v)
        if (((nb >> v) & 1ull) && v + 1 != prev) { next = v + 1; break; }
      if (next == -1 || next == vs[0]) break;
      walk.push_back(next);
      prev = cur;
      cur = next;
    }
    if (static_cast<int>(walk.size()) == k) return walk;
  }
  return std::nullopt;
}

// ---- surgery --------------------------------------------------------------

inline Graph delete_edge(const Graph& g, const Edge& e) {
  Edge key{std::min(e.first, e.second), std::max(e.first, e.second)};
  if (!g.has_edge(key)) throw input_error("delete_edge: not an edge");
  std::vector<Edge> edges;
  for (const Edge& f : g.edges())
    if (f != key) edges.push_back(f);
  return Graph(g.ell(), edges);
}

/// Contract e = {i, j}: the merged vertex keeps the smaller label, labels
/// above the larger one shift down by one.
inline Graph contract_edge(const Graph& g, const Edge& e) {
  int i = std::min(e.first, e.second), j = std::max(e.first, e.second);
  if (!g.has_edge({i, j})) throw input_error("contract_edge: not an edge");
  auto phi = [&](int v) { return v == j ? i : (v > j ? v - 1 : v); };
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    int a = phi(f.first), b = phi(f.second);
    if (a != b) edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return Graph(g.ell() - 1, edges);
}

/// Join with K_m: m new vertices ell+1..ell+m adjacent to every other vertex.
inline Graph join_complete(const Graph& g, int m) {
  if (m < 0) throw input_error("join_complete: m must be >= 0");
  std::vector<Edge> edges = g.edges();
  int n = g.ell() + m;
  for (int v = g.ell() + 1; v <= n; ++v)
    for (int u = 1; u < v; ++u) edges.push_back({u, v});
  return Graph(n, edges);
}

inline Graph relabel(const Graph& g, const std::vector<int>& new_label_of) {
  // new_label_of[v-1] = new label of vertex v; must be a permutation of 1..ell
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    int a = new_label_of[e.first - 1], b = new_label_of[e.second - 1];
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return Graph(g.ell(), edges);
}

inline bool is_triangle_free(const Graph& g) {
  for (const Edge& e : g.edges())
    if (g.neighbor_mask(e.first) & g.neighbor_mask(e.second)) return false;
  return true;
}

/// Hypotheses of the q-deletion-contraction formula for edge e:
/// (1) e is itself a maximal clique, and (2) every clique of G/e is the image
/// of a clique of G (checked on maximal cliques; subcliques inherit).
inline bool dc_hypotheses(const Graph& g, const Edge& e) {
  int i = std::min(e.first, e.second), j = std::max(e.first, e.second);
  if (!g.has_edge({i, j})) throw input_error("dc_hypotheses: not an edge");
  if (g.neighbor_mask(i) & g.neighbor_mask(j)) return false;  // e not maximal
  Graph h = contract_edge(g, {i, j});
  auto unshift = [&](int v) { return v >= j ? v + 1 : v; };  // labels of G/e -> G
  for (const auto& clique : maximal_cliques(h)) {
    bool has_merged = false;
    std::vector<int> rest;
    for (int v : clique) {
      if (v == i) has_merged = true;
      else rest.push_back(unshift(v));
    }
    if (!has_merged) {
      if (!g.is_clique(rest)) return false;
      continue;
    }
    std::vector<int> with_i = rest, with_j = rest;
    with_i.push_back(i);
    with_j.push_back(j);
    if (!g.is_clique(with_i) && !g.is_clique(with_j)) return false;
  }
  return true;
}

// ---- chromatic polynomial ---------------------------------------------------

namespace detail {

inline std::string graph_key(int n, const std::vector<Edge>& edges) {
  std::string key;
  key.push_back(static_cast<char>(n));
  for (const Edge& e : edges) {
    key.push_back(static_cast<char>(e.first));
    key.push_back(static_cast<char>(e.second));
  }
  return key;
}

inline IntPoly chromatic_polynomial_impl(const Graph& g,
                                         std::unordered_map<std::string, IntPoly>& memo);

// chromatic polynomial of a connected graph given as a relabeled edge list
inline IntPoly chromatic_connected(int n, std::vector<Edge> edges,
                                   std::unordered_map<std::string, IntPoly>& memo) {
  std::size_t e = edges.size();
  if (e == 0) return IntPoly::t();
  if (e == static_cast<std::size_t>(n) - 1)  // connected, so a tree
    return IntPoly::t() * IntPoly({Int(-1), Int(1)}).pow(static_cast<unsigned>(e));
  if (e == static_cast<std::size_t>(n) * (n - 1) / 2)
    return IntPoly::falling_factorial(n);
  std::sort(edges.begin(), edges.end());
  std::string key = graph_key(n, edges);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Graph g(n, edges);
  // prefer an edge on a cycle so that the deletion branch stays connected
  Edge pick = edges.front();
  for (const Edge& cand : edges) {
    Graph d = delete_edge(g, cand);
    // connectivity check of d
    std::uint64_t seen = 1ull;
    std::vector<int> stack{1};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      std::uint64_t nb = d.neighbor_mask(v) & ~seen;
      while (nb) {
        int u = __builtin_ctzll(nb);
        nb &= nb - 1;
        seen |= 1ull << u;
        stack.push_back(u + 1);
      }
    }
    if (__builtin_popcountll(seen) == n) { pick = cand; break; }
  }
  Graph del = delete_edge(g, pick);
  Graph con = contract_edge(g, pick);
  IntPoly result = chromatic_polynomial_impl(del, memo) - chromatic_polynomial_impl(con, memo);
  memo.emplace(std::move(key), result);
  return result;
}

inline IntPoly chromatic_polynomial_impl(const Graph& g,
                                         std::unordered_map<std::string, IntPoly>& memo) {
  // split into connected components; relabel each ascending
  int n = g.ell();
  std::vector<int> comp(static_cast<std::size_t>(n) + 1, -1);
  int ncomp = 0;
  for (int s = 1; s <= n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 1; u <= n; ++u)
        if (g.adjacent(v, u) && comp[u] == -1) { comp[u] = ncomp; stack.push_back(u); }
    }
    ++ncomp;
  }
  IntPoly result = IntPoly::constant(1);
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> verts;
    for (int v = 1; v <= n; ++v)
      if (comp[v] == c) verts.push_back(v);
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i) + 1;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
      if (comp[e.first] == c)
        edges.push_back({std::min(pos[e.first], pos[e.second]),
                         std::max(pos[e.first], pos[e.second])});
    result = result * chromatic_connected(static_cast<int>(verts.size()), std::move(edges), memo);
  }
  return result;
}

}  // namespace detail

/// Chromatic polynomial by deletion-contraction with memoization on canonical
/// component edge lists. Monic of degree ell.
inline IntPoly chromatic_polynomial(const Graph& g) {
  if (g.ell() > guards::max_chromatic_vertices)
    throw guard_error("chromatic polynomial vertex guard exceeded");
  std::unordered_map<std::string, IntPoly> memo;
  return detail::chromatic_polynomial_impl(g, memo);
}

/// Number of proper colorings with k colors by direct enumeration (test oracle).
inline Int count_proper_colorings(const Graph& g, int k) {
  if (g.ell() > 8) throw guard_error("coloring enumeration guard exceeded");
  if (k <= 0) return 0;
  Int count = 0;
  std::vector<int> color(static_cast<std::size_t>(g.ell()), 0);
  while (true) {
    bool proper = true;
    for (const Edge& e : g.edges())
      if (color[e.first - 1] == color[e.second - 1]) { proper = false; break; }
    if (proper) ++count;
    int i = 0;
    while (i < g.ell() && ++color[i] == k) color[i++] = 0;
    if (i == g.ell()) break;
  }
  return count;
}

// ---- stable partitions ------------------------------------------------------

/// counts[i] = number of partitions of the vertex set into exactly i stable
/// blocks (no edge inside a block), i = 0..ell.
inline std::vector<Int> stable_partition_counts(const Graph& g) {
  int n = g.ell();
  if (n > guards::max_stable_partition_vertices)
    throw guard_error("stable partition vertex guard exceeded");
  std::vector<Int> counts(static_cast<std::size_t>(n) + 1, Int(0));
  std::vector<std::uint64_t> blocks;  // vertex masks
  auto rec = [&](auto&& self, int v) -> void {
    if (v > n) {
      ++counts[blocks.size()];
      return;
    }
    std::uint64_t nb = g.neighbor_mask(v);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b] & nb) continue;  // neighbor in block
      blocks[b] |= 1ull << (v - 1);
      self(self, v + 1);
      blocks[b] &= ~(1ull << (v - 1));
    }
    blocks.push_back(1ull << (v - 1));
    self(self, v + 1);
    blocks.pop_back();
  };
  rec(rec, 1);
  return counts;
}

/// Independent oracle: chromatic polynomial as the stable-partition sum
/// over classical falling factorials.
inline IntPoly chromatic_via_stable_partitions(const Graph& g) {
  auto counts = stable_partition_counts(g);
  IntPoly p;
  for (std::size_t i = 0; i < counts.size(); ++i)
    p = p + IntPoly::falling_factorial(static_cast<int>(i)).scaled(counts[i]);
  return p;
}

}  // namespace qgraph
