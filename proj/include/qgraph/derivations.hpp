#pragma once

// Moore determinants, the PEO index sets C_{>=k} and E_{<k}, the derivation
// basis theta_k for chordal graphs, logarithmic-membership tests and the
// Saito-criterion freeness certificate.
//
// Everything here works in PEO-position coordinates: vertex at position k of
// the perfect elimination ordering owns variable x_k. basis_theta returns the
// relabeled graph so callers can build the matching arrangement.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "qgraph/arrangement.hpp"
#include "qgraph/core.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/mpoly.hpp"

namespace qgraph {

/// Determinant of the Moore matrix on the given variables (1-based indices,
/// strictly increasing) inside an nvars-variable ring: entry (i, j) is
/// vars[i]^(q^j). Recomputed independently through the product of all monic
/// linear forms and cross-checked; the empty matrix gives 1.
inline MPoly moore_det(const Field& f, int nvars, const std::vector<int>& vars) {
  const std::size_t k = vars.size();
  if (k == 0) return MPoly::constant(f, nvars, 1);
  for (std::size_t i = 0; i + 1 < k; ++i)
    if (vars[i] >= vars[i + 1]) throw input_error("moore_det: variables must increase");
  double weight = std::pow(static_cast<double>(f.q()), static_cast<double>(k - 1));
  if (weight > static_cast<double>(guards::max_moore_weight))
    throw guard_error("moore_det size guard exceeded");

  // determinant: sum over permutations of signed monomials x_{vars[i]}^{q^{s(i)}}
  MPoly det(f, nvars);
  std::vector<std::uint32_t> qpow(k);
  qpow[0] = 1;
  for (std::size_t j = 1; j < k; ++j) qpow[j] = qpow[j - 1] * f.q();
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t minus_one = f.neg(1);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    MPoly::Exponents e(static_cast<std::size_t>(nvars), 0);
    for (std::size_t i = 0; i < k; ++i)
      e[static_cast<std::size_t>(vars[i] - 1)] = qpow[static_cast<std::size_t>(perm[i])];
    det.add_term(e, inversions % 2 == 0 ? 1u : minus_one);
  } while (std::next_permutation(perm.begin(), perm.end()));

  // product form: prod over i of prod over c in F_q^{i-1} of (c.x + x_{vars[i]})
  MPoly prod = MPoly::constant(f, nvars, 1);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::uint32_t> codes(i, 0);
    while (true) {
      MPoly form = MPoly::variable(f, nvars, vars[i]);
      for (std::size_t j = 0; j < i; ++j)
        if (codes[j] != 0)
          form = form + MPoly::variable(f, nvars, vars[j]).scaled(codes[j]);
      prod = prod * form;
      std::size_t t = 0;
      while (t < i && ++codes[t] == f.q()) codes[t++] = 0;
      if (t == i) break;
    }
  }
  if (det != prod) throw input_error("moore_det: determinant/product mismatch");
  return det;
}

/// A polynomial vector field sum coeffs[i] d/dx_{i+1}.
struct Derivation {
  std::vector<MPoly> coeffs;

  std::uint64_t pdeg() const {
    std::uint64_t d = 0;
    for (const MPoly& c : coeffs) d = std::max(d, c.total_degree());
    return d;
  }
};

/// C_{>=k}: k plus every i reachable from k along a path with strictly
/// increasing intermediate positions (a bare edge k-i counts). E_{<k}: the
/// earlier neighbors of k. All indices are PEO positions.
struct PeoSets {
  std::vector<std::vector<int>> c_geq;  // [k-1] -> positions in C_{>=k}
  std::vector<std::vector<int>> e_lt;   // [k-1] -> positions in E_{<k}
};

inline PeoSets peo_sets(const Graph& g, const Peo& peo) {
  if (!peo_valid(g, peo)) throw input_error("peo_sets: invalid PEO");
  int n = g.ell();
  Graph pos = [&] {
    std::vector<int> new_label(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) new_label[peo.order[k - 1] - 1] = k;
    return relabel(g, new_label);
  }();
  PeoSets out;
  out.c_geq.resize(static_cast<std::size_t>(n));
  out.e_lt.resize(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    std::vector<bool> reach(static_cast<std::size_t>(n) + 1, false);
    reach[k] = true;
    for (int i = k + 1; i <= n; ++i)
      for (int j = k; j < i; ++j)
        if (reach[j] && pos.adjacent(j, i)) { reach[i] = true; break; }
    for (int i = k; i <= n; ++i)
      if (reach[i]) out.c_geq[k - 1].push_back(i);
    for (int j = 1; j < k; ++j)
      if (pos.adjacent(j, k)) out.e_lt[k - 1].push_back(j);
    // PEO property: the earlier neighbors together with k form a clique
    std::vector<int> cl = out.e_lt[k - 1];
    cl.push_back(k);
    if (!pos.is_clique(cl)) throw input_error("peo_sets: PEO clique property violated");
  }
  return out;
}

struct ThetaBasis {
  Peo peo;              // positions -> original vertex labels
  Graph position_graph; // G relabeled so that position k is vertex k
  PeoSets sets;
  std::vector<Derivation> thetas;  // thetas[k-1], coefficients per position
};

/// theta_k = sum over i in C_{>=k} of (Delta_q(E_{<k}, x_i)/Delta_q(E_{<k})) d_i
/// for a chordal graph; every quotient is checked exact and the polynomial
/// degree of theta_k must come out as q^{|E_{<k}|}.
inline ThetaBasis basis_theta(const Graph& g, const Field& f) {
  auto ch = chordality(g);
  if (!ch.is_chordal) throw input_error("basis_theta: graph is not chordal");
  ThetaBasis out;
  out.peo = *ch.peo;
  std::vector<int> new_label(static_cast<std::size_t>(g.ell()));
  for (int k = 1; k <= g.ell(); ++k) new_label[out.peo.order[k - 1] - 1] = k;
  out.position_graph = relabel(g, new_label);
  out.sets = peo_sets(g, out.peo);
  int n = g.ell();
  for (int k = 1; k <= n; ++k) {
    const auto& elt = out.sets.e_lt[k - 1];
    MPoly denom = moore_det(f, n, elt);
    Derivation theta;
    theta.coeffs.assign(static_cast<std::size_t>(n), MPoly(f, n));
    for (int i : out.sets.c_geq[k - 1]) {
      std::vector<int> vars = elt;
      vars.push_back(i);
      MPoly num = moore_det(f, n, vars);
      theta.coeffs[static_cast<std::size_t>(i - 1)] = num.exact_divide(denom);
    }
    Int expected = int_pow(Int(f.q()), static_cast<unsigned>(elt.size()));
    if (Int(theta.pdeg()) != expected)
      throw input_error("basis_theta: unexpected polynomial degree");
    out.thetas.push_back(std::move(theta));
  }
  return out;
}

/// theta applied to the defining form of h: sum coeffs[i] * (d alpha/d x_i).
inline MPoly theta_apply(const Derivation& theta, const Field& f, const Hyperplane& h) {
  MPoly r(f, static_cast<int>(theta.coeffs.size()));
  for (std::size_t i = 0; i < theta.coeffs.size(); ++i)
    if (h.normal[i] != 0) r = r + theta.coeffs[i].scaled(h.normal[i]);
  return r;
}

namespace detail {

// theta(alpha) lies in (alpha) iff it vanishes after solving alpha = 0 for
// the pivot variable (alpha is normalized: pivot coefficient 1).
inline bool in_ideal_of(const MPoly& p, const Field& f, const Hyperplane& h) {
  std::size_t pivot = 0;
  while (h.normal[pivot] == 0) ++pivot;
  std::vector<std::uint32_t> lin(h.normal.size(), 0);
  for (std::size_t j = pivot + 1; j < h.normal.size(); ++j) lin[j] = f.neg(h.normal[j]);
  return p.substitute_linear(static_cast<int>(pivot) + 1, lin).is_zero();
}

}  // namespace detail

/// theta(alpha_H) in (alpha_H) for every hyperplane H of the central A.
inline bool is_logarithmic(const Derivation& theta, const Arrangement& a) {
  if (a.kind() != ArrKind::central) throw input_error("is_logarithmic: central only");
  if (static_cast<int>(theta.coeffs.size()) != a.ell())
    throw input_error("is_logarithmic: dimension mismatch");
  for (const Hyperplane& h : a.hyperplanes()) {
    MPoly img = theta_apply(theta, a.field(), h);
    if (!detail::in_ideal_of(img, a.field(), h)) return false;
  }
  return true;
}

struct SaitoCertificate {
  std::vector<Int> theta_pdegs;       // polynomial degree per basis member
  std::size_t arrangement_size = 0;
  bool pdeg_sum_matches = false;      // sum pdeg = |A|
  Int det_degree;                     // total degree of the coefficient det
  bool det_degree_matches = false;    // = |A|
  bool det_nonzero = false;
  std::vector<bool> vanishing;        // det vanishes identically on each H
  bool verdict = false;
  MPoly det;

  SaitoCertificate(const Field& f, int nvars) : det(f, nvars) {}
};

namespace detail {

inline MPoly mpoly_matrix_det(const Field& f, const std::vector<std::vector<MPoly>>& m) {
  const std::size_t n = m.size();
  // cofactor expansion over columns; memoized on the active row mask
  std::vector<MPoly> memo(std::size_t{1} << n, MPoly(f, m.empty() ? 0 : m[0][0].nvars()));
  std::vector<bool> computed(std::size_t{1} << n, false);
  auto rec = [&](auto&& self, std::uint32_t rows) -> MPoly {
    std::size_t col = n - static_cast<std::size_t>(__builtin_popcount(rows));
    if (rows == 0) return MPoly::constant(f, m[0][0].nvars(), 1);
    if (computed[rows]) return memo[rows];
    MPoly acc(f, m[0][0].nvars());
    int sign = 0;
    for (std::size_t r = 0; r < n; ++r) {
      if (!((rows >> r) & 1u)) continue;
      MPoly minor = self(self, rows & ~(1u << r));
      MPoly term = m[r][col] * minor;
      acc = (sign % 2 == 0) ? acc + term : acc - term;
      ++sign;
    }
    memo[rows] = acc;
    computed[rows] = true;
    return acc;
  };
  return rec(rec, (n >= 32 ? ~0u : (1u << n) - 1u));
}

}  // namespace detail

/// Saito's criterion without expanding the defining product: the coefficient
/// determinant must be nonzero, have total degree |A|, and vanish identically
/// on every hyperplane. With |A| distinct linear forms these three facts pin
/// D = c * prod alpha_H with c != 0.
inline SaitoCertificate saito_check(const std::vector<Derivation>& basis,
                                    const Arrangement& a) {
  if (a.kind() != ArrKind::central) throw input_error("saito_check: central only");
  if (static_cast<int>(basis.size()) != a.ell())
    throw input_error("saito_check: need ell derivations");
  if (a.ell() > guards::max_saito_dim) throw guard_error("saito_check dimension guard");
  const Field& f = a.field();
  for (const Derivation& th : basis)
    if (!is_logarithmic(th, a)) throw input_error("saito_check: non-logarithmic member");

  SaitoCertificate cert(f, a.ell());
  cert.arrangement_size = a.size();
  Int pdeg_sum = 0;
  for (const Derivation& th : basis) {
    cert.theta_pdegs.push_back(Int(th.pdeg()));
    pdeg_sum += Int(th.pdeg());
  }
  cert.pdeg_sum_matches = (pdeg_sum == Int(a.size()));

  std::vector<std::vector<MPoly>> m(static_cast<std::size_t>(a.ell()),
                                    std::vector<MPoly>(static_cast<std::size_t>(a.ell()),
                                                       MPoly(f, a.ell())));
  for (int i = 0; i < a.ell(); ++i)
    for (int k = 0; k < a.ell(); ++k) m[i][k] = basis[k].coeffs[i];
  cert.det = detail::mpoly_matrix_det(f, m);
  cert.det_nonzero = !cert.det.is_zero();
  cert.det_degree = Int(cert.det.total_degree());
  cert.det_degree_matches = cert.det_nonzero && cert.det_degree == Int(a.size());
  for (const Hyperplane& h : a.hyperplanes())
    cert.vanishing.push_back(detail::in_ideal_of(cert.det, f, h));
  bool all_vanish = std::all_of(cert.vanishing.begin(), cert.vanishing.end(),
                                [](bool b) { return b; });
  cert.verdict = cert.pdeg_sum_matches && cert.det_nonzero && cert.det_degree_matches &&
                 all_vanish;
  return cert;
}

}  // namespace qgraph
