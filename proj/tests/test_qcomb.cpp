#include <doctest.h>

#include <random>

#include "qgraph/q_combinatorics.hpp"
#include "test_util.hpp"

using namespace qgraph;
using namespace qgraph::testutil;

TEST_CASE("q-integers and Gaussian binomials") {
  CHECK(q_int(3, 2) == 7);
  CHECK(q_int(0, 5) == 0);
  CHECK(q_int(1, 5) == 1);
  CHECK(q_binomial(2, 1, 2) == 3);
  CHECK(q_binomial(4, 2, 3) == 130);
  CHECK(q_binomial(5, 0, 7) == 1);
  CHECK(q_binomial(5, 5, 7) == 1);
  // symmetry
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned i = 0; i <= n; ++i)
      CHECK(q_binomial(n, i, 3) == q_binomial(n, n - i, 3));
  CHECK_THROWS_AS(q_binomial(2, 3, 2), input_error);
  CHECK_THROWS_AS(q_int(2, 1), input_error);
}

TEST_CASE("q-falling polynomials") {
  CHECK(q_falling(0, 2) == IntPoly::constant(1));
  CHECK(q_falling(2, 2) == IntPoly({Int(2), Int(-3), Int(1)}));  // t^2 - 3t + 2
  CHECK(q_falling(3, 3).leading() == 1);
  CHECK(q_falling(3, 3).eval(Int(9)) == 0);  // root at q^2
}

TEST_CASE("q-Stirling numbers") {
  for (std::uint64_t q : {2ull, 3ull, 5ull}) {
    CHECK(q_stirling(2, 1, q) == 1);
    for (unsigned n = 0; n <= 6; ++n) CHECK(q_stirling(n, n, q) == 1);
    CHECK(q_stirling(3, 0, q) == 0);
  }
  // classical Stirling triangle is not recovered (q-weights differ), but the
  // defining identity holds exactly:
  for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull}) {
    for (unsigned ell = 1; ell <= 8; ++ell) {
      IntPoly lhs = IntPoly({Int(-1), Int(1)}).pow(ell);
      IntPoly rhs;
      for (unsigned i = 0; i <= ell; ++i)
        rhs = rhs +
              q_falling(i, q).scaled(int_pow(Int(q) - 1, ell - i) * q_stirling(ell, i, q));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("t^ell expands with Gaussian binomial coefficients") {
  for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull})
    for (unsigned ell = 1; ell <= 8; ++ell) {
      auto ex = expand_q_falling(IntPoly::t().pow(ell), q);
      for (unsigned i = 0; i <= ell; ++i) CHECK(ex.coeffs[i] == q_binomial(ell, i, q));
    }
}

TEST_CASE("expansion round trip on random polynomials") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> coeff(-50, 50);
  for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull}) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Int> c;
      int deg = 1 + static_cast<int>(rng() % 8);
      for (int i = 0; i <= deg; ++i) c.push_back(Int(coeff(rng)));
      IntPoly p(std::move(c));
      auto ex = expand_q_falling(p, q);
      IntPoly back;
      for (std::size_t i = 0; i < ex.coeffs.size(); ++i)
        back = back + q_falling(static_cast<unsigned>(i), q).scaled(ex.coeffs[i]);
      CHECK(back == p);
    }
  }
}

TEST_CASE("classical falling expansion equals stable partition counts") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 5));
    auto coeffs = expand_falling(chromatic_polynomial(g));
    auto counts = stable_partition_counts(g);
    for (std::size_t i = 0; i < coeffs.size(); ++i) CHECK(coeffs[i] == counts[i]);
  }
}

TEST_CASE("subspace count oracle") {
  const Field& f2 = Field::get(2, 1);
  Arrangement all2 = build_central(complete(2), f2);
  CHECK(subspace_count_oracle(all2, 1) == 0);  // every line is a hyperplane here
  Arrangement empty2 = arrangement_from_forms(f2, 2, ArrKind::central, {});
  CHECK(subspace_count_oracle(empty2, 1) == 3);
  CHECK(subspace_count_oracle(empty2, 0) == 1);
  CHECK(subspace_count_oracle(empty2, 2) == 1);
  // oracle counts all subspaces when nothing excludes them
  for (std::uint64_t q : {2ull, 3ull}) {
    const Field& f = Field::from_order(q);
    Arrangement none = arrangement_from_forms(f, 4, ArrKind::central, {});
    for (int i = 0; i <= 4; ++i)
      CHECK(subspace_count_oracle(none, i) ==
            q_binomial(4, static_cast<unsigned>(i), q));
  }
}

TEST_CASE("q-coefficients equal subspace counts (executable theorem)") {
  for (std::uint64_t q : {2ull, 3ull}) {
    const Field& f = Field::from_order(q);
    for (const Graph& g : {path(3), path(4), cycle(4), complete(3), empty_graph(3)}) {
      Arrangement a = build_central(g, f);
      auto ex = expand_q_falling(characteristic_polynomial(a), q);
      for (int i = 0; i <= g.ell(); ++i) {
        Int c = i < static_cast<int>(ex.coeffs.size()) ? ex.coeffs[i] : Int(0);
        CHECK(c == subspace_count_oracle(a, i));
      }
    }
  }
}

TEST_CASE("closed forms") {
  CHECK(closed_form_path(3, 2) == IntPoly({Int(-4), Int(8), Int(-5), Int(1)}));
  CHECK(closed_form_cycle(4, 2) ==
        IntPoly({Int(-2), Int(1)}).pow(4) + IntPoly({Int(-2), Int(1)}));
  CHECK(closed_form_supersolvable(complete(3), 3) ==
        IntPoly({Int(-1), Int(1)}) * IntPoly({Int(-3), Int(1)}) * IntPoly({Int(-9), Int(1)}));
  CHECK(closed_form_supersolvable(complete(3), 3) == closed_form_complete(3, 3));
  CHECK_THROWS_AS(closed_form_cycle(3, 2), input_error);
  CHECK_THROWS_AS(closed_form_supersolvable(cycle(4), 2), input_error);
  CHECK_THROWS_AS(closed_form_triangle_free(complete(3), 2), input_error);
}

TEST_CASE("triangle-free theorem") {
  for (std::uint64_t q : {2ull, 3ull}) {
    const Field& f = Field::from_order(q);
    for (const Graph& g : {cycle(4), cycle(5), path(4), empty_graph(3),
                           Graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}})}) {
      CHECK(characteristic_polynomial(build_central(g, f)) ==
            closed_form_triangle_free(g, q));
    }
  }
}

TEST_CASE("join formula") {
  for (std::uint64_t q : {2ull, 3ull}) {
    const Field& f = Field::from_order(q);
    for (int m : {1, 2}) {
      for (const Graph& g : {empty_graph(1), complete(2), path(3)}) {
        IntPoly base = characteristic_polynomial(build_central(g, f));
        IntPoly lhs = characteristic_polynomial(build_central(join_complete(g, m), f));
        CHECK(lhs == closed_form_join(base, g.ell(), m, q));
      }
    }
  }
}

TEST_CASE("q-deletion-contraction under its hypotheses") {
  for (std::uint64_t q : {2ull, 3ull}) {
    const Field& f = Field::from_order(q);
    for (const Graph& g : {cycle(5), cycle(6), path(4)}) {
      for (const Edge& e : g.edges()) {
        if (!dc_hypotheses(g, e)) continue;
        IntPoly whole = characteristic_polynomial(build_central(g, f));
        IntPoly del = characteristic_polynomial(build_central(delete_edge(g, e), f));
        IntPoly con = characteristic_polynomial(build_central(contract_edge(g, e), f));
        CHECK(whole == del - con.scaled(Int(q) - 1));
      }
    }
  }
}

TEST_CASE("congruence theorem verifier") {
  // K2, q=3, k=1: chi(A,3) = (3-1)(3-3) = 0; chi(K2,1) = 0
  auto r1 = verify_congruence(complete(2), 3, 1);
  CHECK(r1.ok);
  CHECK(r1.lhs_residue == 0);
  CHECK(r1.rhs_residue == 0);
  // K2, q=3, k=2: quotient (9-1)(9-3)/4 = 12 = 0 mod 2; chi(K2,2) = 2 = 0 mod 2
  auto r2 = verify_congruence(complete(2), 3, 2);
  CHECK(r2.ok);
  CHECK(r2.quotient == 12);
  CHECK(r2.lhs_residue == 0);
  CHECK(r2.rhs_residue == 0);
  // q = 2 is degenerate (mod 1)
  auto r3 = verify_congruence(path(3), 2, 1);
  CHECK(r3.degenerate);
  CHECK(r3.ok);
  // k = 0 is allowed
  auto r4 = verify_congruence(complete(3), 3, 0);
  CHECK(r4.ok);
  // systematic small sweep including a non-prime order
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 3));
    for (std::uint64_t q : {3ull, 4ull, 5ull}) {
      IntPoly chi = characteristic_polynomial(build_central(g, Field::from_order(q)));
      for (int k = 1; k <= g.ell(); ++k) CHECK(verify_congruence(chi, g, q, k).ok);
    }
  }
}

TEST_CASE("stable partition theorem verifier") {
  CHECK(verify_stable_partition_theorem(path(3), 3).ok);
  CHECK(verify_stable_partition_theorem(cycle(4), 3).ok);
  auto deg = verify_stable_partition_theorem(complete(3), 2);
  CHECK(deg.ok);
  CHECK(deg.degenerate);
  // entries carry the normalized values
  auto r = verify_stable_partition_theorem(path(3), 3);
  CHECK(r.entries[3].quotient == 1);   // c_3 = 1, the monic top
  CHECK(r.entries[3].stable == 1);
}

TEST_CASE("polynomiality probe") {
  // P3: chi = (t-1)(t-q)^2, visibly polynomial in q
  auto rep = probe_polynomiality(path(3), {2, 3, 4, 5}, 2);
  CHECK(rep.fits_ok);
  CHECK(rep.limits_ok);
  // fitted coefficient polynomials: t^3 coeff is 1; t^2 coeff is -(1 + 2q)
  CHECK(rep.fits[3].poly_in_q == std::vector<Int>{Int(1)});
  CHECK(rep.fits[2].poly_in_q == std::vector<Int>{Int(-1), Int(-2)});
  // K1: chi = t - 1 constant in q; the limit needs the q-integer route
  auto rep1 = probe_polynomiality(empty_graph(1), {2, 3, 4}, 0);
  CHECK(rep1.fits_ok);
  CHECK(rep1.limits_ok);
  // C4 matches the cycle formula's q-coefficients
  auto rep4 = probe_polynomiality(cycle(4), {2, 3, 4, 5, 7}, 3);
  CHECK(rep4.fits_ok);
  CHECK(rep4.limits_ok);
  // t^0 coefficient of (t-q)^4 + (q-1)^3(t-q): q^4 - q(q-1)^3
  IntPoly expect_c0 = IntPoly::monomial(4, Int(1)) -
                      IntPoly({Int(0), Int(1)}) * IntPoly({Int(-1), Int(1)}).pow(3);
  CHECK(rep4.fits[0].poly_in_q == expect_c0.coeffs());
  CHECK_THROWS_AS(probe_polynomiality(path(3), {2, 3}, 2), input_error);
}
