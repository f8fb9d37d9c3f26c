#pragma once

// Clique-supported hyperplane arrangements over a finite field, their
// intersection lattices / posets, Mobius values and exact characteristic
// polynomials, plus the brute-force point-counting oracle over extension
// fields.
//
// Central lattices are built by closure BFS with flats deduplicated on the
// canonical reduced row echelon form of their normal span. Mobius values use
// Weisner's theorem: mu(X) = -sum of mu(Y) over lower covers Y of X that miss
// the minimal atom of X; those covers fall out of the same BFS. Affine
// arrangements use the poset of nonempty intersections with the plain
// top-down recursion.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qgraph/core.hpp"
#include "qgraph/finite_field.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/int_poly.hpp"

namespace qgraph {

/// A hyperplane sum a_i x_i = b, normal normalized so that its first nonzero
/// coordinate is 1; b = 0 for central arrangements.
struct Hyperplane {
  std::vector<std::uint32_t> normal;
  std::uint32_t constant = 0;

  bool operator==(const Hyperplane& o) const {
    return normal == o.normal && constant == o.constant;
  }
  bool operator<(const Hyperplane& o) const {
    return std::tie(normal, constant) < std::tie(o.normal, o.constant);
  }
};

enum class ArrKind { central, affine };

class Arrangement {
 public:
  Arrangement(const Field& f, int ell, ArrKind kind, std::vector<Hyperplane> hs)
      : field_(&f), ell_(ell), kind_(kind), hyperplanes_(std::move(hs)) {
    std::sort(hyperplanes_.begin(), hyperplanes_.end());
    hyperplanes_.erase(std::unique(hyperplanes_.begin(), hyperplanes_.end()),
                       hyperplanes_.end());
  }

  const Field& field() const { return *field_; }
  int ell() const { return ell_; }
  ArrKind kind() const { return kind_; }
  std::size_t size() const { return hyperplanes_.size(); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }

  Arrangement subarrangement(const std::vector<std::size_t>& indices) const {
    std::vector<Hyperplane> hs;
    for (std::size_t i : indices) hs.push_back(hyperplanes_.at(i));
    return Arrangement(*field_, ell_, kind_, std::move(hs));
  }

 private:
  const Field* field_;
  int ell_;
  ArrKind kind_;
  std::vector<Hyperplane> hyperplanes_;
};

namespace detail {

inline Hyperplane normalize_normal(const Field& f, std::vector<std::uint32_t> v,
                                   std::uint32_t b) {
  std::size_t lead = v.size();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) { lead = i; break; }
  if (lead == v.size()) throw input_error("zero normal vector");
  std::uint32_t s = f.inv(v[lead]);
  for (auto& c : v) c = f.mul(c, s);
  return Hyperplane{std::move(v), f.mul(b, s)};
}

}  // namespace detail

/// All hyperplanes sum a_i x_i = 0 with support inside a clique of G, one
/// projective representative each. Iterating maximal cliques suffices: a
/// form supported on a sub-clique also arises from the enclosing maximal
/// clique; duplicates across cliques are removed.
inline Arrangement build_central(const Graph& g, const Field& f) {
  std::set<Hyperplane> hs;
  const std::uint32_t q = f.q();
  for (const auto& clique : maximal_cliques(g)) {
    const std::size_t r = clique.size();
    // enumerate directly in normalized form: leading coordinate 1
    for (std::size_t lead = 0; lead < r; ++lead) {
      std::size_t tail = r - lead - 1;
      std::vector<std::uint32_t> codes(tail, 0);
      while (true) {
        std::vector<std::uint32_t> normal(static_cast<std::size_t>(g.ell()), 0);
        normal[clique[lead] - 1] = 1;
        for (std::size_t i = 0; i < tail; ++i)
          normal[clique[lead + 1 + i] - 1] = codes[i];
        hs.insert(Hyperplane{std::move(normal), 0});
        std::size_t i = 0;
        while (i < tail && ++codes[i] == q) codes[i++] = 0;
        if (i == tail) break;
      }
    }
  }
  return Arrangement(f, g.ell(), ArrKind::central,
                     std::vector<Hyperplane>(hs.begin(), hs.end()));
}

/// q translates of every central hyperplane: sum a_i x_i = b for all b.
inline Arrangement build_affine(const Graph& g, const Field& f) {
  Arrangement central = build_central(g, f);
  std::vector<Hyperplane> hs;
  for (const Hyperplane& h : central.hyperplanes())
    for (std::uint32_t b = 0; b < f.q(); ++b)
      hs.push_back(Hyperplane{h.normal, b});
  return Arrangement(f, g.ell(), ArrKind::affine, std::move(hs));
}

/// Arrangement from explicit forms (tests and restrictions); normals are
/// normalized and deduplicated.
inline Arrangement arrangement_from_forms(
    const Field& f, int ell, ArrKind kind,
    const std::vector<std::pair<std::vector<std::uint32_t>, std::uint32_t>>& forms) {
  std::vector<Hyperplane> hs;
  hs.reserve(forms.size());
  for (const auto& [v, b] : forms) hs.push_back(detail::normalize_normal(f, v, b));
  return Arrangement(f, ell, kind, std::move(hs));
}

/// Restriction of a central arrangement to hyperplane `index`: every other
/// form with the pivot variable substituted out, in coordinates that drop the
/// pivot column. Always computable for central arrangements.
inline Arrangement restriction(const Arrangement& a, std::size_t index) {
  if (a.kind() != ArrKind::central) throw input_error("restriction: central only");
  const Field& f = a.field();
  const Hyperplane& h = a.hyperplanes().at(index);
  std::size_t pivot = 0;
  while (h.normal[pivot] == 0) ++pivot;
  std::vector<std::pair<std::vector<std::uint32_t>, std::uint32_t>> forms;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (j == index) continue;
    const Hyperplane& gpl = a.hyperplanes()[j];
    std::uint32_t c = gpl.normal[pivot];
    std::vector<std::uint32_t> v;
    v.reserve(gpl.normal.size() - 1);
    for (std::size_t i = 0; i < gpl.normal.size(); ++i) {
      if (i == pivot) continue;
      v.push_back(f.sub(gpl.normal[i], f.mul(c, h.normal[i])));
    }
    bool zero = std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
    if (!zero) forms.push_back({std::move(v), 0});
  }
  return arrangement_from_forms(f, a.ell() - 1, ArrKind::central, forms);
}

// ---- flat lattice -----------------------------------------------------------

struct Flat {
  std::vector<std::uint64_t> bits;  // hyperplanes containing the flat
  int rank = 0;                     // codimension
  Int mobius = 0;

  bool contains_hyperplane(std::size_t h) const { return (bits[h >> 6] >> (h & 63u)) & 1ull; }
};

namespace detail {

// Rows of a reduced row echelon form over the field, fixed max width.
struct Rref {
  int rank = 0;
  int width = 0;
  std::array<std::array<std::uint32_t, 9>, 9> rows{};
  std::array<int, 9> pivots{};

  // Reduce v in place against the rows; returns the pivot of the residue or
  // -1 if it reduced to zero.
  int reduce(const Field& f, std::uint32_t* v) const {
    for (int r = 0; r < rank; ++r) {
      std::uint32_t c = v[pivots[r]];
      if (c == 0) continue;
      for (int i = pivots[r]; i < width; ++i)
        v[i] = f.sub(v[i], f.mul(c, rows[r][i]));
    }
    for (int i = 0; i < width; ++i)
      if (v[i] != 0) return i;
    return -1;
  }

  // Insert a reduced nonzero row with the given pivot, keeping canonical form.
  Rref extended(const Field& f, const std::uint32_t* v, int pivot) const {
    Rref out = *this;
    std::array<std::uint32_t, 9> row{};
    std::uint32_t s = f.inv(v[pivot]);
    for (int i = 0; i < width; ++i) row[i] = f.mul(v[i], s);
    int pos = 0;
    while (pos < out.rank && out.pivots[pos] < pivot) ++pos;
    for (int r = out.rank; r > pos; --r) {
      out.rows[r] = out.rows[r - 1];
      out.pivots[r] = out.pivots[r - 1];
    }
    out.rows[pos] = row;
    out.pivots[pos] = pivot;
    ++out.rank;
    for (int r = 0; r < out.rank; ++r) {
      if (r == pos) continue;
      std::uint32_t c = out.rows[r][pivot];
      if (c == 0) continue;
      for (int i = 0; i < width; ++i)
        out.rows[r][i] = f.sub(out.rows[r][i], f.mul(c, row[i]));
    }
    return out;
  }

  std::string key() const {
    std::string k;
    k.reserve(2 + static_cast<std::size_t>(rank) * width * 2);
    k.push_back(static_cast<char>(rank));
    for (int r = 0; r < rank; ++r)
      for (int i = 0; i < width; ++i) {
        k.push_back(static_cast<char>(rows[r][i] & 0xff));
        k.push_back(static_cast<char>(rows[r][i] >> 8));
      }
    return k;
  }
};

inline std::vector<std::uint64_t> closure_bits(const Field& f, const Rref& span,
                                               const std::vector<Hyperplane>& hs,
                                               bool affine) {
  std::vector<std::uint64_t> bits((hs.size() + 63) / 64, 0);
  std::uint32_t v[9];
  for (std::size_t j = 0; j < hs.size(); ++j) {
    const Hyperplane& h = hs[j];
    for (std::size_t i = 0; i < h.normal.size(); ++i) v[i] = h.normal[i];
    if (affine) v[h.normal.size()] = h.constant;
    if (span.reduce(f, v) == -1) bits[j >> 6] |= 1ull << (j & 63u);
  }
  return bits;
}

inline bool bits_subset(const std::vector<std::uint64_t>& a,
                        const std::vector<std::uint64_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

}  // namespace detail

/// Intersection lattice (central) or poset of nonempty intersections
/// (affine), with Mobius values. Flats are output sorted by (rank, bitset).
class FlatLattice {
 public:
  static FlatLattice build(const Arrangement& a) {
    if (a.ell() > guards::max_lattice_dim)
      throw guard_error("flat lattice dimension guard exceeded");
    if (a.size() > guards::max_lattice_hyperplanes)
      throw guard_error("flat lattice hyperplane guard exceeded");
    return a.kind() == ArrKind::central ? build_central_lattice(a) : build_affine_poset(a);
  }

  std::size_t size() const { return flats_.size(); }
  const std::vector<Flat>& flats() const { return flats_; }
  int ell() const { return ell_; }

  /// Characteristic polynomial: sum of mu(X) t^(dim X) over all flats.
  IntPoly characteristic_polynomial() const {
    std::vector<Int> c(static_cast<std::size_t>(ell_) + 1);
    for (const Flat& fl : flats_) c[static_cast<std::size_t>(ell_ - fl.rank)] += fl.mobius;
    return IntPoly(std::move(c));
  }

 private:
  static FlatLattice build_central_lattice(const Arrangement& a) {
    const Field& f = a.field();
    const auto& hs = a.hyperplanes();
    const std::size_t n = hs.size();
    const int width = a.ell();

    struct Node {
      detail::Rref span;
      std::vector<std::uint64_t> bits;
      std::size_t min_atom;  // n when empty bitset
      std::vector<std::uint32_t> weisner_sources;
      bool contains(std::size_t h) const { return (bits[h >> 6] >> (h & 63u)) & 1ull; }
    };
    std::vector<Node> nodes;
    std::unordered_map<std::string, std::uint32_t> index;

    Node bottom;
    bottom.span.width = width;
    bottom.bits.assign((n + 63) / 64, 0);
    bottom.min_atom = n;
    nodes.push_back(std::move(bottom));
    index.emplace(nodes[0].span.key(), 0);

    std::uint32_t v[9];
    for (std::uint32_t cur = 0; cur < nodes.size(); ++cur) {
      for (std::size_t h = 0; h < n; ++h) {
        if (nodes[cur].contains(h)) continue;
        for (int i = 0; i < width; ++i) v[i] = hs[h].normal[i];
        int pivot = nodes[cur].span.reduce(f, v);
        // h is outside the closure, so the residue is nonzero
        detail::Rref ext = nodes[cur].span.extended(f, v, pivot);
        std::string key = ext.key();
        auto it = index.find(key);
        std::uint32_t id;
        if (it == index.end()) {
          Node node;
          node.span = ext;
          node.bits = detail::closure_bits(f, ext, hs, false);
          node.min_atom = n;
          for (std::size_t w = 0; w < node.bits.size(); ++w)
            if (node.bits[w]) { node.min_atom = (w << 6) + __builtin_ctzll(node.bits[w]); break; }
          id = static_cast<std::uint32_t>(nodes.size());
          nodes.push_back(std::move(node));
          index.emplace(std::move(key), id);
        } else {
          id = it->second;
        }
        if (h == nodes[id].min_atom)
          nodes[id].weisner_sources.push_back(cur);
      }
    }

    // Weisner: mu(X) = -sum of mu(Y) over recorded sources; BFS order is
    // rank order, so sources are already resolved.
    std::vector<Int> mobius(nodes.size());
    mobius[0] = 1;
    for (std::size_t i = 1; i < nodes.size(); ++i) {
      Int s = 0;
      for (std::uint32_t y : nodes[i].weisner_sources) s += mobius[y];
      mobius[i] = -s;
    }

    FlatLattice lat;
    lat.ell_ = a.ell();
    lat.flats_.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
      lat.flats_.push_back(Flat{std::move(nodes[i].bits), nodes[i].span.rank, mobius[i]});
    lat.sort_flats();
    return lat;
  }

  static FlatLattice build_affine_poset(const Arrangement& a) {
    const Field& f = a.field();
    const auto& hs = a.hyperplanes();
    const std::size_t n = hs.size();
    const int width = a.ell() + 1;  // augmented column holds the constant

    struct Node {
      detail::Rref span;
      std::vector<std::uint64_t> bits;
      bool contains(std::size_t h) const { return (bits[h >> 6] >> (h & 63u)) & 1ull; }
    };
    std::vector<Node> nodes;
    std::unordered_map<std::string, std::uint32_t> index;

    Node bottom;
    bottom.span.width = width;
    bottom.bits.assign((n + 63) / 64, 0);
    nodes.push_back(std::move(bottom));
    index.emplace(nodes[0].span.key(), 0);

    std::uint32_t v[9];
    for (std::uint32_t cur = 0; cur < nodes.size(); ++cur) {
      for (std::size_t h = 0; h < n; ++h) {
        if (nodes[cur].contains(h)) continue;
        for (int i = 0; i < width - 1; ++i) v[i] = hs[h].normal[i];
        v[width - 1] = hs[h].constant;
        int pivot = nodes[cur].span.reduce(f, v);
        if (pivot == width - 1) continue;  // inconsistent: empty intersection
        detail::Rref ext = nodes[cur].span.extended(f, v, pivot);
        std::string key = ext.key();
        if (index.find(key) == index.end()) {
          Node node;
          node.span = ext;
          node.bits = detail::closure_bits(f, ext, hs, true);
          index.emplace(std::move(key), static_cast<std::uint32_t>(nodes.size()));
          nodes.push_back(std::move(node));
        }
      }
    }

    // order by rank, then the defining recursion over closed-set containment
    std::vector<std::uint32_t> order(nodes.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
      return nodes[x].span.rank < nodes[y].span.rank;
    });
    std::vector<Int> mobius(nodes.size());
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
      std::uint32_t x = order[oi];
      if (nodes[x].span.rank == 0) { mobius[x] = 1; continue; }
      Int s = 0;
      for (std::size_t oj = 0; oj < oi; ++oj) {
        std::uint32_t y = order[oj];
        if (nodes[y].span.rank < nodes[x].span.rank &&
            detail::bits_subset(nodes[y].bits, nodes[x].bits))
          s += mobius[y];
      }
      mobius[x] = -s;
    }

    FlatLattice lat;
    lat.ell_ = a.ell();
    lat.flats_.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
      lat.flats_.push_back(Flat{std::move(nodes[i].bits), nodes[i].span.rank, mobius[i]});
    lat.sort_flats();
    return lat;
  }

  void sort_flats() {
    std::sort(flats_.begin(), flats_.end(), [](const Flat& a, const Flat& b) {
      return std::tie(a.rank, a.bits) < std::tie(b.rank, b.bits);
    });
  }

  std::vector<Flat> flats_;
  int ell_ = 0;
};

/// Characteristic polynomial of the arrangement via its flat lattice.
inline IntPoly characteristic_polynomial(const Arrangement& a) {
  return FlatLattice::build(a).characteristic_polynomial();
}

/// Number of points of (F_{q^k})^ell on no hyperplane of A, with the forms
/// read in the degree-k extension of the prime base field. Equals the
/// characteristic polynomial evaluated at q^k.
inline Int point_count(const Arrangement& a, int k) {
  const Field& base = a.field();
  if (base.m() != 1) throw input_error("point_count: prime base field only");
  if (k < 1) throw input_error("point_count: k must be >= 1");
  double logsz = static_cast<double>(k) * a.ell() * std::log2(static_cast<double>(base.q()));
  if (logsz > 26.0) throw guard_error("point_count space guard exceeded");
  const Field& ext = Field::get(base.p(), static_cast<std::uint32_t>(k));
  const std::uint32_t Q = ext.q();
  const std::size_t ell = static_cast<std::size_t>(a.ell());

  // nonzero entries per hyperplane; prime-subfield constants embed as their
  // own codes
  struct Form {
    std::vector<std::pair<std::size_t, std::uint32_t>> terms;
    std::uint32_t b;
  };
  std::vector<Form> forms;
  for (const Hyperplane& h : a.hyperplanes()) {
    Form fm;
    fm.b = h.constant;
    for (std::size_t i = 0; i < ell; ++i)
      if (h.normal[i] != 0) fm.terms.push_back({i, h.normal[i]});
    forms.push_back(std::move(fm));
  }

  Int count = 0;
  std::vector<std::uint32_t> point(ell, 0);
  while (true) {
    bool off_all = true;
    for (const Form& fm : forms) {
      std::uint32_t acc = 0;
      for (auto [i, c] : fm.terms) acc = ext.add(acc, ext.mul(c, point[i]));
      if (acc == fm.b) { off_all = false; break; }
    }
    if (off_all) ++count;
    std::size_t i = 0;
    while (i < ell && ++point[i] == Q) point[i++] = 0;
    if (i == ell) break;
  }
  return count;
}

/// chi of the coned arrangement equals (t-1) times chi of the affine one.
inline bool cone_decone_check(const Graph& g, const Field& f) {
  IntPoly coned = characteristic_polynomial(build_central(join_complete(g, 1), f));
  IntPoly affine = characteristic_polynomial(build_affine(g, f));
  return coned == IntPoly({Int(-1), Int(1)}) * affine;
}

}  // namespace qgraph
