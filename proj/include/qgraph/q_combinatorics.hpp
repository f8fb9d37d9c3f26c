#pragma once

// q-integers, Gaussian binomials, q-Stirling numbers, expansion of integer
// polynomials in the classical and q-falling-factorial bases, the subspace
// counting oracle, closed-form characteristic polynomials, the congruence and
// stable-partition theorem verifiers, and the polynomiality probe.
//
// The q-falling factorial t_q^(i) is (t-1)(t-q)...(t-q^(i-1)), with the empty
// product 1 for i = 0. These are monic of distinct degrees, hence a basis of
// the integer polynomial ring; expansions are computed by peeling leading
// coefficients and are verified by exact reconstruction.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qgraph/arrangement.hpp"
#include "qgraph/core.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/int_poly.hpp"

namespace qgraph {

/// [k]_q = (q^k - 1)/(q - 1).
inline Int q_int(unsigned k, std::uint64_t q) {
  if (q < 2) throw input_error("q_int: q must be >= 2");
  return div_exact(int_pow(Int(q), k) - 1, Int(q) - 1, "q_int");
}

/// Gaussian binomial by the product formula with exact division.
inline Int q_binomial(unsigned n, unsigned i, std::uint64_t q) {
  if (q < 2) throw input_error("q_binomial: q must be >= 2");
  if (i > n) throw input_error("q_binomial: need 0 <= i <= n");
  Int num = 1, den = 1;
  for (unsigned j = 0; j < i; ++j) {
    num *= q_int(n - j, q);
    den *= q_int(j + 1, q);
  }
  return div_exact(num, den, "q_binomial");
}

/// t_q^(i) = (t-1)(t-q)...(t-q^(i-1)); 1 for i = 0.
inline IntPoly q_falling(unsigned i, std::uint64_t q) {
  if (q < 2) throw input_error("q_falling: q must be >= 2");
  IntPoly r = IntPoly::constant(1);
  Int pw = 1;
  for (unsigned j = 0; j < i; ++j) {
    r = r * IntPoly({Int(-pw), Int(1)});
    pw *= q;
  }
  return r;
}

/// S_q(n, i) from the recurrence S_q(n,i) = S_q(n-1,i-1) + [i]_q S_q(n-1,i).
inline Int q_stirling(unsigned n, unsigned i, std::uint64_t q) {
  if (i > n) throw input_error("q_stirling: need 0 <= i <= n");
  std::vector<Int> row{Int(1)};  // S_q(0, *)
  for (unsigned r = 1; r <= n; ++r) {
    std::vector<Int> next(r + 1);
    for (unsigned j = 1; j <= r; ++j) {
      Int v = row[j - 1];
      if (j < row.size()) v += q_int(j, q) * row[j];
      next[j] = v;
    }
    row = std::move(next);
  }
  return row[i];
}

struct QFallingExpansion {
  std::uint64_t q = 0;
  std::vector<Int> coeffs;  // c_0 .. c_deg
};

/// Unique expansion P = sum of c_i t_q^(i), verified by reconstruction.
inline QFallingExpansion expand_q_falling(const IntPoly& p, std::uint64_t q) {
  if (q < 2) throw input_error("expand_q_falling: q must be >= 2");
  QFallingExpansion out;
  out.q = q;
  int n = std::max(p.degree(), 0);
  out.coeffs.assign(static_cast<std::size_t>(n) + 1, Int(0));
  IntPoly rem = p;
  for (int i = n; i >= 0; --i) {
    Int c = rem.coeff(i);
    out.coeffs[static_cast<std::size_t>(i)] = c;
    if (c != 0) rem = rem - q_falling(static_cast<unsigned>(i), q).scaled(c);
  }
  if (!rem.is_zero()) throw input_error("expand_q_falling: nonzero remainder");
  IntPoly back;
  for (int i = 0; i <= n; ++i)
    back = back + q_falling(static_cast<unsigned>(i), q).scaled(out.coeffs[i]);
  if (back != p) throw input_error("expand_q_falling: reconstruction mismatch");
  return out;
}

/// Expansion in the classical falling factorials t(t-1)...(t-i+1).
inline std::vector<Int> expand_falling(const IntPoly& p) {
  int n = std::max(p.degree(), 0);
  std::vector<Int> coeffs(static_cast<std::size_t>(n) + 1, Int(0));
  IntPoly rem = p;
  for (int i = n; i >= 0; --i) {
    Int c = rem.coeff(i);
    coeffs[static_cast<std::size_t>(i)] = c;
    if (c != 0) rem = rem - IntPoly::falling_factorial(i).scaled(c);
  }
  if (!rem.is_zero()) throw input_error("expand_falling: nonzero remainder");
  return coeffs;
}

/// Number of i-dimensional subspaces of F_q^ell contained in no hyperplane of
/// the central arrangement, by enumeration of reduced-row-echelon bases.
inline Int subspace_count_oracle(const Arrangement& a, int i) {
  if (a.kind() != ArrKind::central) throw input_error("subspace oracle: central only");
  const Field& f = a.field();
  const int ell = a.ell();
  if (i < 0 || i > ell) throw input_error("subspace oracle: bad dimension");
  double logsz = ell * std::log2(static_cast<double>(f.q()));
  if (logsz > 20.0) throw guard_error("subspace oracle space guard exceeded");

  Int count = 0;
  std::vector<int> pivots(static_cast<std::size_t>(i));
  for (int j = 0; j < i; ++j) pivots[j] = j;
  auto contained_in_some_hyperplane = [&](const std::vector<std::vector<std::uint32_t>>& rows) {
    for (const Hyperplane& h : a.hyperplanes()) {
      bool inside = true;
      for (const auto& row : rows) {
        std::uint32_t acc = 0;
        for (int c = 0; c < ell; ++c) acc = f.add(acc, f.mul(h.normal[c], row[c]));
        if (acc != 0) { inside = false; break; }
      }
      if (inside) return true;
    }
    return false;
  };

  while (true) {
    // free coordinates: (row r, col c) with c > pivots[r], c not a pivot
    std::vector<std::pair<int, int>> free_pos;
    for (int r = 0; r < i; ++r)
      for (int c = pivots[r] + 1; c < ell; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
          free_pos.push_back({r, c});
    std::vector<std::uint32_t> vals(free_pos.size(), 0);
    while (true) {
      std::vector<std::vector<std::uint32_t>> rows(
          static_cast<std::size_t>(i), std::vector<std::uint32_t>(static_cast<std::size_t>(ell), 0));
      for (int r = 0; r < i; ++r) rows[r][pivots[r]] = 1;
      for (std::size_t t = 0; t < free_pos.size(); ++t)
        rows[free_pos[t].first][free_pos[t].second] = vals[t];
      if (!contained_in_some_hyperplane(rows)) ++count;
      std::size_t t = 0;
      while (t < vals.size() && ++vals[t] == f.q()) vals[t++] = 0;
      if (t == vals.size()) break;
      if (vals.empty()) break;
    }
    // next pivot combination
    int j = i - 1;
    while (j >= 0 && pivots[j] == ell - i + j) --j;
    if (j < 0) break;
    ++pivots[j];
    for (int r = j + 1; r < i; ++r) pivots[r] = pivots[r - 1] + 1;
    if (i == 0) break;
  }
  return count;
}

// ---- closed forms -------------------------------------------------------

inline IntPoly closed_form_path(int ell, std::uint64_t q) {
  if (ell < 1) throw input_error("path: ell >= 1");
  return IntPoly({Int(-1), Int(1)}) * IntPoly({Int(-Int(q)), Int(1)}).pow(ell - 1);
}

inline IntPoly closed_form_cycle(int ell, std::uint64_t q) {
  if (ell < 4) throw input_error("cycle closed form needs ell >= 4");
  IntPoly tq({Int(-Int(q)), Int(1)});
  Int sign = (ell % 2 == 0) ? 1 : -1;
  return tq.pow(ell) + tq.scaled(sign * int_pow(Int(q) - 1, ell - 1));
}

inline IntPoly closed_form_complete(int ell, std::uint64_t q) {
  IntPoly r = IntPoly::constant(1);
  Int pw = 1;
  for (int i = 0; i < ell; ++i) {
    r = r * IntPoly({Int(-pw), Int(1)});
    pw *= q;
  }
  return r;
}

/// (q-1)^ell chi(G, (t-1)/(q-1)), expanded without leaving the integers.
inline IntPoly closed_form_triangle_free(const Graph& g, std::uint64_t q) {
  if (!is_triangle_free(g)) throw input_error("graph is not triangle-free");
  IntPoly chi = chromatic_polynomial(g);
  int ell = g.ell();
  IntPoly out;
  IntPoly tm1({Int(-1), Int(1)});
  for (int i = 0; i <= chi.degree(); ++i)
    out = out + tm1.pow(i).scaled(chi.coeff(i) * int_pow(Int(q) - 1, ell - i));
  return out;
}

/// (t-1)(t-q)...(t-q^(m-1)) q^(m ell) chi(q^(-m) t); coefficient-wise rescale.
inline IntPoly closed_form_join(const IntPoly& chi_g_q, int ell, int m, std::uint64_t q) {
  if (m < 1) throw input_error("join: m >= 1");
  std::vector<Int> scaled(static_cast<std::size_t>(chi_g_q.degree()) + 1);
  for (int d = 0; d <= chi_g_q.degree(); ++d)
    scaled[d] = chi_g_q.coeff(d) * int_pow(int_pow(Int(q), m), ell - d);
  IntPoly prefix = IntPoly::constant(1);
  Int pw = 1;
  for (int j = 0; j < m; ++j) {
    prefix = prefix * IntPoly({Int(-pw), Int(1)});
    pw *= q;
  }
  return prefix * IntPoly(std::move(scaled));
}

/// Product over a PEO: (t - q^{|N_{G_i}(v_i)|}).
inline IntPoly closed_form_supersolvable(const Graph& g, std::uint64_t q) {
  auto ch = chordality(g);
  if (!ch.is_chordal) throw input_error("supersolvable closed form needs a chordal graph");
  const auto& order = ch.peo->order;
  IntPoly r = IntPoly::constant(1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int deg_earlier = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (g.adjacent(order[i], order[j])) ++deg_earlier;
    r = r * IntPoly({Int(-int_pow(Int(q), deg_earlier)), Int(1)});
  }
  return r;
}

/// Exponents q^{|N_{G_i}(v_i)|} along a PEO, ascending.
inline std::vector<Int> supersolvable_exponents(const Graph& g, const Peo& peo, std::uint64_t q) {
  std::vector<Int> exps;
  for (std::size_t i = 0; i < peo.order.size(); ++i) {
    int deg_earlier = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (g.adjacent(peo.order[i], peo.order[j])) ++deg_earlier;
    exps.push_back(int_pow(Int(q), deg_earlier));
  }
  std::sort(exps.begin(), exps.end());
  return exps;
}

// ---- theorem verifiers ------------------------------------------------------

struct CongruenceResult {
  std::uint64_t q = 0;
  int k = 0;
  Int value;        // chi(A_G^q, q^k)
  Int quotient;     // value / (q-1)^ell
  Int lhs_residue;  // quotient mod (q-1)
  Int rhs_residue;  // chi(G, k) mod (q-1)
  bool ok = false;
  bool degenerate = false;  // q = 2: everything is congruent mod 1
};

/// chi(A_G^q, q^k)/(q-1)^ell is congruent to chi(G, k) mod q-1. Divisibility
/// failure throws: the theorem guarantees it, so it can only mean a bug.
inline CongruenceResult verify_congruence(const IntPoly& chi_arrangement, const Graph& g,
                                          std::uint64_t q, int k) {
  CongruenceResult r;
  r.q = q;
  r.k = k;
  Int qm1 = Int(q) - 1;
  r.value = chi_arrangement.eval(int_pow(Int(q), static_cast<unsigned>(k)));
  Int denom = int_pow(qm1, static_cast<unsigned>(g.ell()));
  if (!divides(denom, r.value))
    throw input_error("congruence: (q-1)^ell does not divide chi(A, q^k)");
  r.quotient = r.value / denom;
  r.degenerate = (qm1 == 1);
  Int chromatic_at_k = chromatic_polynomial(g).eval(Int(k));
  if (r.degenerate) {
    r.lhs_residue = 0;
    r.rhs_residue = 0;
    r.ok = true;
    return r;
  }
  r.lhs_residue = pos_mod(r.quotient, qm1);
  r.rhs_residue = pos_mod(chromatic_at_k, qm1);
  r.ok = (r.lhs_residue == r.rhs_residue);
  return r;
}

inline CongruenceResult verify_congruence(const Graph& g, std::uint64_t q, int k) {
  IntPoly chi = characteristic_polynomial(build_central(g, Field::from_order(q)));
  return verify_congruence(chi, g, q, k);
}

struct StablePartitionCheck {
  struct Entry {
    int i = 0;
    Int c;          // coefficient of t_q^(i)
    Int quotient;   // c / (q-1)^(ell-i)
    Int stable;     // number of stable partitions into i blocks
    bool divisible = false;
    bool nonnegative = false;
    bool congruent = false;
  };
  std::uint64_t q = 0;
  std::vector<Entry> entries;
  bool ok = false;
  bool degenerate = false;
};

/// Every c_i/(q-1)^(ell-i) is a non-negative integer congruent to the number
/// of stable partitions into i blocks mod q-1.
inline StablePartitionCheck verify_stable_partition_theorem(const IntPoly& chi_arrangement,
                                                            const Graph& g, std::uint64_t q) {
  StablePartitionCheck out;
  out.q = q;
  Int qm1 = Int(q) - 1;
  out.degenerate = (qm1 == 1);
  auto expansion = expand_q_falling(chi_arrangement, q);
  auto stable = stable_partition_counts(g);
  int ell = g.ell();
  out.ok = true;
  for (int i = 0; i <= ell; ++i) {
    StablePartitionCheck::Entry e;
    e.i = i;
    e.c = i < static_cast<int>(expansion.coeffs.size()) ? expansion.coeffs[i] : Int(0);
    e.stable = i < static_cast<int>(stable.size()) ? stable[i] : Int(0);
    Int denom = int_pow(qm1, static_cast<unsigned>(ell - i));
    e.divisible = divides(denom, e.c);
    if (e.divisible) {
      e.quotient = e.c / denom;
      e.nonnegative = e.quotient >= 0;
      e.congruent = out.degenerate || pos_mod(e.quotient, qm1) == pos_mod(e.stable, qm1);
    }
    out.ok = out.ok && e.divisible && e.nonnegative && e.congruent;
    out.entries.push_back(std::move(e));
  }
  return out;
}

inline StablePartitionCheck verify_stable_partition_theorem(const Graph& g, std::uint64_t q) {
  IntPoly chi = characteristic_polynomial(build_central(g, Field::from_order(q)));
  return verify_stable_partition_theorem(chi, g, q);
}

// ---- polynomiality probe ----------------------------------------------------

struct ProbeFit {
  int t_degree = 0;
  std::vector<Int> poly_in_q;  // valid when integral
  bool integral = false;
  bool holdout_ok = false;
};

struct ProbeLimit {
  int k = 0;
  bool defined = false;  // (q-1)^ell divides the interpolated value polynomial
  Int value;
  Int chromatic;
  bool matches = false;
};

struct ProbeReport {
  std::vector<std::uint64_t> qs;
  int bound = 0;
  std::vector<ProbeFit> fits;
  bool fits_ok = false;
  std::vector<ProbeLimit> limits;
  bool limits_ok = false;
};

/// Default degree bound in q: sum over maximal cliques of (size - 1).
inline int default_probe_degree_bound(const Graph& g) {
  int b = 0;
  for (const auto& c : maximal_cliques(g)) b += static_cast<int>(c.size()) - 1;
  return b;
}

namespace detail {

// Exact Newton interpolation through (x_j, y_j); returns monomial-basis
// coefficients as rationals.
inline std::vector<Rat> newton_interpolate(const std::vector<Int>& xs,
                                           const std::vector<Int>& ys) {
  std::size_t n = xs.size();
  std::vector<Rat> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = Rat(ys[i]);
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n; i-- > level;)
      dd[i] = (dd[i] - dd[i - 1]) / Rat(xs[i] - xs[i - level]);
  // expand sum of dd[i] * prod_{j<i} (x - x_j)
  std::vector<Rat> poly{dd[0]};
  std::vector<Rat> basis{Rat(1)};
  for (std::size_t i = 1; i < n; ++i) {
    // basis *= (x - x_{i-1})
    std::vector<Rat> nb(basis.size() + 1, Rat(0));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      nb[j + 1] += basis[j];
      nb[j] -= basis[j] * Rat(xs[i - 1]);
    }
    basis = std::move(nb);
    if (poly.size() < basis.size()) poly.resize(basis.size(), Rat(0));
    for (std::size_t j = 0; j < basis.size(); ++j) poly[j] += dd[i] * basis[j];
  }
  return poly;
}

}  // namespace detail

/// Pointwise-sampled polynomiality probe: fit each coefficient of
/// chi(A_G^q, t) as an integer polynomial in q from the first bound+1 sample
/// orders, check the fit on the held-out samples, and compare the q -> 1
/// limit of chi(A_G^q, q^k)/(q-1)^ell with chi(G, k). Reports only; proves
/// nothing.
inline ProbeReport probe_polynomiality(const Graph& g, const std::vector<std::uint64_t>& qs,
                                       int bound) {
  if (static_cast<int>(qs.size()) < bound + 2)
    throw input_error("probe needs at least bound + 2 sample orders");
  ProbeReport rep;
  rep.qs = qs;
  rep.bound = bound;
  int ell = g.ell();

  std::vector<std::vector<Int>> coeff_at_q;  // per sample: ell+1 coefficients
  for (std::uint64_t q : qs) {
    IntPoly chi = characteristic_polynomial(build_central(g, Field::from_order(q)));
    std::vector<Int> c(static_cast<std::size_t>(ell) + 1);
    for (int d = 0; d <= ell; ++d) c[d] = chi.coeff(d);
    coeff_at_q.push_back(std::move(c));
  }

  std::vector<Int> nodes;
  for (std::size_t j = 0; j <= static_cast<std::size_t>(bound); ++j) nodes.push_back(Int(qs[j]));

  rep.fits_ok = true;
  std::vector<IntPoly> fitted(static_cast<std::size_t>(ell) + 1);
  for (int d = 0; d <= ell; ++d) {
    ProbeFit fit;
    fit.t_degree = d;
    std::vector<Int> ys;
    for (std::size_t j = 0; j < nodes.size(); ++j) ys.push_back(coeff_at_q[j][d]);
    auto rat = detail::newton_interpolate(nodes, ys);
    fit.integral = true;
    std::vector<Int> ipoly;
    for (const Rat& r : rat) {
      if (denominator(r) != 1) { fit.integral = false; break; }
      ipoly.push_back(numerator(r));
    }
    if (fit.integral) {
      IntPoly fp(ipoly);
      fit.poly_in_q = fp.coeffs();  // trimmed of trailing zeros
      fit.holdout_ok = true;
      for (std::size_t j = nodes.size(); j < qs.size(); ++j)
        if (fp.eval(Int(qs[j])) != coeff_at_q[j][d]) { fit.holdout_ok = false; break; }
      fitted[d] = fp;
    }
    rep.fits_ok = rep.fits_ok && fit.integral && fit.holdout_ok;
    rep.fits.push_back(std::move(fit));
  }

  rep.limits_ok = rep.fits_ok;
  if (rep.fits_ok) {
    IntPoly chi_g = chromatic_polynomial(g);
    IntPoly qm1_pow = IntPoly({Int(-1), Int(1)}).pow(static_cast<unsigned>(ell));
    for (int k = 1; k <= ell; ++k) {
      ProbeLimit lim;
      lim.k = k;
      // N_k(q) = sum_d f_d(q) q^{k d}
      IntPoly nk;
      for (int d = 0; d <= ell; ++d)
        nk = nk + fitted[d] * IntPoly::monomial(k * d, Int(1));
      auto [quot, rem] = nk.divmod_monic(qm1_pow);
      lim.defined = rem.is_zero();
      if (lim.defined) lim.value = quot.eval(Int(1));
      lim.chromatic = chi_g.eval(Int(k));
      lim.matches = lim.defined && lim.value == lim.chromatic;
      rep.limits_ok = rep.limits_ok && lim.matches;
      rep.limits.push_back(std::move(lim));
    }
  }
  return rep;
}

}  // namespace qgraph
