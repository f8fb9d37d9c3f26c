// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code 0 iff every blocking
// criterion passes (the probe criterion is exploratory and never blocks).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "qgraph/arrangement.hpp"
#include "qgraph/derivations.hpp"
#include "qgraph/graph_io.hpp"
#include "qgraph/q_combinatorics.hpp"
#include "test_util.hpp"

using namespace qgraph;
using namespace qgraph::testutil;

namespace {

int failures = 0;

struct Criterion {
  int number;
  std::string description;
  double limit_seconds;  // 0 = no stated bound
  bool blocking = true;
};

void report(const Criterion& c, bool ok, double seconds, const std::string& note = "") {
  bool in_time = c.limit_seconds == 0 || seconds < c.limit_seconds;
  bool pass = ok && in_time;
  std::printf("criterion %02d [%s] %s (%.2f s%s)%s%s\n", c.number,
              pass ? "PASS" : (c.blocking ? "FAIL" : "INFO-FAIL"), c.description.c_str(),
              seconds, c.limit_seconds > 0 && !in_time ? ", OVER TIME LIMIT" : "",
              note.empty() ? "" : " — ", note.c_str());
  if (!pass && c.blocking) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// t-polynomials whose coefficients are integer polynomials in q
using TPolyQ = std::vector<IntPoly>;

TPolyQ tq_mul(const TPolyQ& a, const TPolyQ& b) {
  TPolyQ r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return r;
}

TPolyQ tq_add(TPolyQ a, const TPolyQ& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] + b[i];
  return a;
}

void criterion_1() {
  Criterion c{1, "complete graphs: lattice chi equals (t-1)(t-q)...(t-q^(ell-1))", 10.0};
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (std::uint64_t q : {2ull, 3ull, 4ull}) {
    const Field& f = Field::from_order(q);
    for (int ell = 1; ell <= 4; ++ell)
      ok = ok && characteristic_polynomial(build_central(complete(ell), f)) ==
                     closed_form_complete(ell, q);
  }
  report(c, ok, seconds_since(t0));
}

void criterion_2() {
  Criterion c{2, "paths and cycles match the displayed closed forms (Lemma form for cycles)",
              30.0};
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (std::uint64_t q : {2ull, 3ull}) {
    const Field& f = Field::from_order(q);
    for (int ell = 1; ell <= 6; ++ell)
      ok = ok && characteristic_polynomial(build_central(path(ell), f)) ==
                     closed_form_path(ell, q);
    for (int ell = 4; ell <= 6; ++ell)
      ok = ok && characteristic_polynomial(build_central(cycle(ell), f)) ==
                     closed_form_cycle(ell, q);
  }
  report(c, ok, seconds_since(t0));
}

void criterion_3() {
  Criterion c{3, "remark pair reproduction at q = 2", 300.0};
  auto t0 = std::chrono::steady_clock::now();
  std::string dir = std::string(QGRAPH_SOURCE_DIR) + "/data/graphs/";
  Graph g = load_graph(dir + "remark_g.txt");
  Graph h = load_graph(dir + "remark_h.txt");
  const Field& f2 = Field::get(2, 1);
  IntPoly expected({Int(-10240), Int(24384), Int(-21880), Int(9934), Int(-2545), Int(376),
                    Int(-30), Int(1)});
  IntPoly chi_g_expect({Int(0), Int(162), Int(-441), Int(474), Int(-265), Int(83), Int(-14),
                        Int(1)});
  IntPoly chi_h_expect({Int(0), Int(156), Int(-430), Int(468), Int(-264), Int(83), Int(-14),
                        Int(1)});
  bool ok = characteristic_polynomial(build_central(g, f2)) == expected &&
            characteristic_polynomial(build_central(h, f2)) == expected &&
            chromatic_polynomial(g) == chi_g_expect &&
            chromatic_polynomial(h) == chi_h_expect && chi_g_expect != chi_h_expect;
  report(c, ok, seconds_since(t0));
}

std::vector<Graph> random_sample_200() {
  std::mt19937_64 rng(20250808ull);
  std::vector<Graph> sample;
  while (sample.size() < 200) {
    int ell = 1 + static_cast<int>(rng() % 5);
    sample.push_back(random_graph(rng, ell));
  }
  return sample;
}

void criteria_4_and_5() {
  Criterion c4{4, "congruence theorem on 200 random graphs, q in {3,4,5}, k <= ell", 0};
  Criterion c5{5, "stable-partition theorem on the same sample, q in {3,4}", 0};
  auto t0 = std::chrono::steady_clock::now();
  auto sample = random_sample_200();
  int cong_fail = 0, stable_fail = 0;
  for (const Graph& g : sample) {
    for (std::uint64_t q : {3ull, 4ull, 5ull}) {
      IntPoly chi;
      try {
        chi = characteristic_polynomial(build_central(g, Field::from_order(q)));
      } catch (const std::exception&) {
        ++cong_fail;
        continue;
      }
      for (int k = 1; k <= g.ell(); ++k) {
        try {
          if (!verify_congruence(chi, g, q, k).ok) ++cong_fail;
        } catch (const std::exception&) {
          ++cong_fail;
        }
      }
      if (q != 5) {
        try {
          if (!verify_stable_partition_theorem(chi, g, q).ok) ++stable_fail;
        } catch (const std::exception&) {
          ++stable_fail;
        }
      }
    }
  }
  double dt = seconds_since(t0);
  report(c4, cong_fail == 0, dt, std::to_string(cong_fail) + " failures");
  report(c5, stable_fail == 0, 0.0, std::to_string(stable_fail) + " failures");
}

void criterion_6() {
  Criterion c{6, "q-falling coefficients equal RREF subspace counts, all graphs ell <= 4", 0};
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (int ell = 1; ell <= 4 && ok; ++ell) {
    for (const Graph& g : all_labeled_graphs(ell)) {
      for (std::uint64_t q : {2ull, 3ull}) {
        Arrangement a = build_central(g, Field::from_order(q));
        auto ex = expand_q_falling(characteristic_polynomial(a), q);
        for (int i = 0; i <= ell; ++i) {
          Int coeff = i < static_cast<int>(ex.coeffs.size()) ? ex.coeffs[i] : Int(0);
          if (coeff != subspace_count_oracle(a, i)) ok = false;
        }
      }
      if (!ok) break;
    }
  }
  report(c, ok, seconds_since(t0));
}

void criterion_7() {
  Criterion c{7, "point-count oracle equals chi(q^k), prime q, ell <= 3, k <= 3", 0};
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (int ell = 1; ell <= 3; ++ell) {
    for (const Graph& g : all_labeled_graphs(ell)) {
      for (std::uint64_t q : {2ull, 3ull}) {
        Arrangement a = build_central(g, Field::from_order(q));
        IntPoly chi = characteristic_polynomial(a);
        for (int k = 1; k <= 3; ++k)
          if (chi.eval(int_pow(Int(q), static_cast<unsigned>(k))) != point_count(a, k))
            ok = false;
      }
    }
  }
  report(c, ok, seconds_since(t0));
}

void criterion_8() {
  Criterion c{8, "t^ell and (t-1)^ell expansion identities, ell <= 8, q in {2,3,4,5}", 0};
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull}) {
    for (unsigned ell = 1; ell <= 8; ++ell) {
      IntPoly lhs1 = IntPoly::t().pow(ell);
      IntPoly rhs1;
      for (unsigned i = 0; i <= ell; ++i)
        rhs1 = rhs1 + q_falling(i, q).scaled(q_binomial(ell, i, q));
      ok = ok && lhs1 == rhs1;
      IntPoly lhs2 = IntPoly({Int(-1), Int(1)}).pow(ell);
      IntPoly rhs2;
      for (unsigned i = 0; i <= ell; ++i)
        rhs2 = rhs2 +
               q_falling(i, q).scaled(int_pow(Int(q) - 1, ell - i) * q_stirling(ell, i, q));
      ok = ok && lhs2 == rhs2;
    }
  }
  report(c, ok, seconds_since(t0));
}

void criterion_9() {
  Criterion c{9, "affine lemma and cone/decone on 20 small graphs, q in {2,3}", 0};
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Graph> graphs;
  for (int ell = 1; ell <= 3; ++ell)
    for (const Graph& g : all_labeled_graphs(ell)) graphs.push_back(g);  // 11 graphs
  graphs.push_back(path(4));
  graphs.push_back(path(5));
  graphs.push_back(cycle(4));
  graphs.push_back(cycle(5));
  graphs.push_back(complete(4));
  graphs.push_back(Graph(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}}));          // paw
  graphs.push_back(Graph(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}));  // diamond
  graphs.push_back(Graph(4, {{1, 2}, {1, 3}, {1, 4}}));                  // claw
  graphs.push_back(Graph(4, {{1, 2}, {3, 4}}));                          // two edges
  bool ok = graphs.size() == 20;
  for (const Graph& g : graphs) {
    for (std::uint64_t q : {2ull, 3ull}) {
      const Field& f = Field::from_order(q);
      IntPoly central = characteristic_polynomial(build_central(g, f));
      IntPoly affine = characteristic_polynomial(build_affine(g, f));
      for (int d = 0; d <= g.ell(); ++d)
        ok = ok && affine.coeff(d) ==
                       central.coeff(d) * int_pow(Int(q), static_cast<unsigned>(g.ell() - d));
      ok = ok && cone_decone_check(g, f);
    }
  }
  report(c, ok, seconds_since(t0));
}

void criterion_10() {
  Criterion c{10, "triangle-free theorem on all triangle-free graphs, ell <= 5, q in {2,3}", 0};
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  long checked = 0;
  for (int ell = 1; ell <= 5; ++ell) {
    for (const Graph& g : all_labeled_graphs(ell)) {
      if (!is_triangle_free(g)) continue;
      ++checked;
      for (std::uint64_t q : {2ull, 3ull}) {
        IntPoly lhs = characteristic_polynomial(build_central(g, Field::from_order(q)));
        if (lhs != closed_form_triangle_free(g, q)) ok = false;
      }
    }
  }
  report(c, ok, seconds_since(t0), std::to_string(checked) + " graphs");
}

void criterion_11() {
  Criterion c{11, "theta bases certify freeness for small chordal graphs; cycles do not factor",
              300.0};
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  long certified = 0;
  for (int ell = 1; ell <= 4; ++ell) {
    for (const Graph& g : all_labeled_graphs(ell)) {
      auto ch = chordality(g);
      if (!ch.is_chordal) continue;
      bool clique_small = true;
      for (const auto& cl : maximal_cliques(g))
        if (cl.size() > 3) clique_small = false;
      if (!clique_small) continue;
      for (std::uint64_t q : {2ull, 3ull}) {
        const Field& f = Field::from_order(q);
        ThetaBasis tb = basis_theta(g, f);
        Arrangement a = build_central(tb.position_graph, f);
        for (const Derivation& th : tb.thetas)
          if (!is_logarithmic(th, a)) ok = false;
        SaitoCertificate cert = saito_check(tb.thetas, a);
        if (!cert.verdict) ok = false;
        IntPoly product = IntPoly::constant(1);
        for (const Derivation& th : tb.thetas)
          product = product * IntPoly({Int(-Int(th.pdeg())), Int(1)});
        if (product != characteristic_polynomial(a)) ok = false;
        ++certified;
      }
    }
  }
  // non-freeness direction: cycle chi has no integer-rooted linear split
  for (int ell : {4, 5})
    for (std::uint64_t q : {2ull, 3ull}) {
      IntPoly chi =
          characteristic_polynomial(build_central(cycle(ell), Field::from_order(q)));
      if (chi.factors_into_integer_linear()) ok = false;
    }
  report(c, ok, seconds_since(t0), std::to_string(certified) + " certificates");
}

void criterion_12() {
  Criterion c{12, "polynomiality probe reproduces the closed forms (exploratory)", 0, false};
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;

  IntPoly one = IntPoly::constant(1);
  IntPoly qv = IntPoly::t();  // the variable q
  TPolyQ t_minus_1{IntPoly::constant(-1), one};
  TPolyQ t_minus_q{-qv, one};

  auto check_probe = [&](const Graph& g, std::vector<std::uint64_t> qs, int bound,
                         const TPolyQ& expect) {
    ProbeReport rep = probe_polynomiality(g, qs, bound);
    if (!rep.fits_ok || !rep.limits_ok) { ok = false; return; }
    for (std::size_t d = 0; d < expect.size(); ++d) {
      if (IntPoly(rep.fits[d].poly_in_q) != expect[d]) ok = false;
    }
  };

  // P4: (t-1)(t-q)^3
  check_probe(path(4), {2, 3, 4, 5, 7}, 3,
              tq_mul(t_minus_1, tq_mul(t_minus_q, tq_mul(t_minus_q, t_minus_q))));
  // C4: (t-q)^4 + (q-1)^3 (t-q)
  IntPoly qm1_3 = IntPoly({Int(-1), Int(1)}).pow(3);
  TPolyQ c4form = tq_add(tq_mul(tq_mul(t_minus_q, t_minus_q), tq_mul(t_minus_q, t_minus_q)),
                         TPolyQ{-(qv * qm1_3), qm1_3});
  check_probe(cycle(4), {2, 3, 4, 5, 7}, 3, c4form);
  // C5: (t-q)^5 - (q-1)^4 (t-q)
  IntPoly qm1_4 = IntPoly({Int(-1), Int(1)}).pow(4);
  TPolyQ pow5 = tq_mul(tq_mul(t_minus_q, t_minus_q), tq_mul(t_minus_q, tq_mul(t_minus_q, t_minus_q)));
  TPolyQ c5form = tq_add(pow5, TPolyQ{qv * qm1_4, -qm1_4});
  check_probe(cycle(5), {2, 3, 4, 5, 7, 8}, 4, c5form);
  // K3: (t-1)(t-q)(t-q^2)
  TPolyQ t_minus_q2{-IntPoly::monomial(2, Int(1)), one};
  check_probe(complete(3), {2, 3, 4, 5, 7}, 3,
              tq_mul(t_minus_1, tq_mul(t_minus_q, t_minus_q2)));

  report(c, ok, seconds_since(t0));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criteria_4_and_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  if (failures == 0) {
    std::printf("acceptance: all blocking criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return 1;
}
