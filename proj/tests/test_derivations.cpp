#include <doctest.h>

#include <algorithm>

#include "qgraph/derivations.hpp"
#include "qgraph/q_combinatorics.hpp"
#include "test_util.hpp"

using namespace qgraph;
using namespace qgraph::testutil;

namespace {
MPoly x(const Field& f, int n, int i) { return MPoly::variable(f, n, i); }

// the classical basis of the full arrangement: theta_k = sum_i x_i^(q^k) d_i
std::vector<Derivation> moore_basis(const Field& f, int ell) {
  std::vector<Derivation> basis;
  std::uint64_t pw = 1;
  for (int k = 0; k < ell; ++k) {
    Derivation th;
    for (int i = 1; i <= ell; ++i)
      th.coeffs.push_back(x(f, ell, i).pow(static_cast<unsigned>(pw)));
    basis.push_back(std::move(th));
    pw *= f.q();
  }
  return basis;
}
}  // namespace

TEST_CASE("peo index sets") {
  // P3 with PEO (1,2,3)
  Graph p3 = path(3);
  Peo peo{{1, 2, 3}};
  auto sets = peo_sets(p3, peo);
  CHECK(sets.c_geq[0] == std::vector<int>{1, 2, 3});
  CHECK(sets.c_geq[1] == std::vector<int>{2, 3});
  CHECK(sets.c_geq[2] == std::vector<int>{3});
  CHECK(sets.e_lt[0].empty());
  CHECK(sets.e_lt[1] == std::vector<int>{1});
  CHECK(sets.e_lt[2] == std::vector<int>{2});
  // complete graph, identity PEO
  Graph k4 = complete(4);
  auto k4sets = peo_sets(k4, Peo{{1, 2, 3, 4}});
  for (int k = 1; k <= 4; ++k) {
    std::vector<int> expect_c, expect_e;
    for (int i = k; i <= 4; ++i) expect_c.push_back(i);
    for (int j = 1; j < k; ++j) expect_e.push_back(j);
    CHECK(k4sets.c_geq[k - 1] == expect_c);
    CHECK(k4sets.e_lt[k - 1] == expect_e);
  }
  // single vertex
  auto s1 = peo_sets(empty_graph(1), Peo{{1}});
  CHECK(s1.c_geq[0] == std::vector<int>{1});
  CHECK(s1.e_lt[0].empty());
  // an invalid PEO is rejected
  CHECK_THROWS_AS(peo_sets(p3, Peo{{1, 3, 2}}), input_error);
}

TEST_CASE("increasing-path reachability includes indirect members") {
  // paw: triangle {1,2,3} plus pendant 4 on vertex 3, identity PEO
  Graph paw(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});
  auto sets = peo_sets(paw, Peo{{1, 2, 3, 4}});
  // position 4 is reached from 1 through the increasing path 1-2-3-4
  CHECK(sets.c_geq[0] == std::vector<int>{1, 2, 3, 4});
  CHECK(sets.c_geq[1] == std::vector<int>{2, 3, 4});
  CHECK(sets.c_geq[2] == std::vector<int>{3, 4});
  CHECK(sets.e_lt[2] == std::vector<int>{1, 2});
  CHECK(sets.e_lt[3] == std::vector<int>{3});
  // star with the center first: leaves reach nothing (their only neighbor
  // is below them), so C_{>=k} stays a singleton for every leaf
  Graph star(4, {{1, 2}, {1, 3}, {1, 4}});
  auto ssets = peo_sets(star, Peo{{1, 2, 3, 4}});
  CHECK(ssets.c_geq[0] == std::vector<int>{1, 2, 3, 4});
  CHECK(ssets.c_geq[1] == std::vector<int>{2});
  CHECK(ssets.c_geq[2] == std::vector<int>{3});
}

TEST_CASE("theta basis for K2 over GF(2)") {
  const Field& f2 = Field::get(2, 1);
  auto tb = basis_theta(complete(2), f2);
  REQUIRE(tb.thetas.size() == 2);
  CHECK(tb.thetas[0].coeffs[0] == x(f2, 2, 1));
  CHECK(tb.thetas[0].coeffs[1] == x(f2, 2, 2));
  CHECK(tb.thetas[1].coeffs[0].is_zero());
  CHECK(tb.thetas[1].coeffs[1] ==
        x(f2, 2, 2).pow(2) + x(f2, 2, 1) * x(f2, 2, 2));
  CHECK(tb.thetas[0].pdeg() == 1);
  CHECK(tb.thetas[1].pdeg() == 2);
}

TEST_CASE("theta basis for K1") {
  for (std::uint64_t q : {2ull, 3ull}) {
    auto tb = basis_theta(empty_graph(1), Field::from_order(q));
    REQUIRE(tb.thetas.size() == 1);
    CHECK(tb.thetas[0].coeffs[0] == x(Field::from_order(q), 1, 1));
  }
}

TEST_CASE("non-chordal input is rejected") {
  CHECK_THROWS_AS(basis_theta(cycle(4), Field::get(2, 1)), input_error);
}

TEST_CASE("is_logarithmic") {
  const Field& f2 = Field::get(2, 1);
  Graph k2 = complete(2);
  Arrangement a = build_central(k2, f2);
  auto tb = basis_theta(k2, f2);
  for (const Derivation& th : tb.thetas) CHECK(is_logarithmic(th, a));
  // the zero derivation is logarithmic
  Derivation zero{{MPoly(f2, 2), MPoly(f2, 2)}};
  CHECK(is_logarithmic(zero, a));
  // d_1 alone fails against {x1 = 0}
  Derivation d1{{MPoly::constant(f2, 2, 1), MPoly(f2, 2)}};
  CHECK_FALSE(is_logarithmic(d1, a));
}

TEST_CASE("saito certificate for K2 over GF(2)") {
  const Field& f2 = Field::get(2, 1);
  Graph k2 = complete(2);
  Arrangement a = build_central(k2, f2);
  auto tb = basis_theta(k2, f2);
  SaitoCertificate cert = saito_check(tb.thetas, a);
  CHECK(cert.verdict);
  CHECK(cert.det_degree == 3);
  CHECK(cert.pdeg_sum_matches);
  // D = x1 x2 (x1 + x2)
  MPoly expect = x(f2, 2, 1) * x(f2, 2, 2) * (x(f2, 2, 1) + x(f2, 2, 2));
  CHECK(cert.det == expect);
}

TEST_CASE("the classical Moore basis certifies the full arrangement") {
  for (auto [q, ell] :
       std::vector<std::pair<std::uint64_t, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const Field& f = Field::from_order(q);
    Arrangement a = build_central(complete(ell), f);
    auto basis = moore_basis(f, ell);
    for (const Derivation& th : basis) CHECK(is_logarithmic(th, a));
    SaitoCertificate cert = saito_check(basis, a);
    CHECK(cert.verdict);
    CHECK(cert.det_degree == Int(a.size()));
  }
}

TEST_CASE("a repeated derivation fails the criterion") {
  const Field& f2 = Field::get(2, 1);
  Graph k2 = complete(2);
  Arrangement a = build_central(k2, f2);
  auto tb = basis_theta(k2, f2);
  std::vector<Derivation> bad{tb.thetas[0], tb.thetas[0]};
  SaitoCertificate cert = saito_check(bad, a);
  CHECK_FALSE(cert.verdict);
  CHECK_FALSE(cert.det_nonzero);
}

TEST_CASE("dimension mismatch and non-logarithmic members are errors") {
  const Field& f2 = Field::get(2, 1);
  Arrangement a = build_central(complete(2), f2);
  auto tb = basis_theta(complete(2), f2);
  std::vector<Derivation> short_basis{tb.thetas[0]};
  CHECK_THROWS_AS(saito_check(short_basis, a), input_error);
  Derivation d1{{MPoly::constant(f2, 2, 1), MPoly(f2, 2)}};
  std::vector<Derivation> bad{tb.thetas[0], d1};
  CHECK_THROWS_AS(saito_check(bad, a), input_error);
}

TEST_CASE("chordal graphs: theta basis passes and exponents factor chi") {
  for (std::uint64_t q : {2ull, 3ull}) {
    const Field& f = Field::from_order(q);
    for (const Graph& g :
         {complete(2), complete(3), path(3), path(4),
          Graph(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}}),                   // paw
          Graph(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}),           // diamond
          Graph(4, {{1, 2}, {1, 3}, {1, 4}})}) {                        // star
      auto tb = basis_theta(g, f);
      Arrangement a = build_central(tb.position_graph, f);
      for (const Derivation& th : tb.thetas) CHECK(is_logarithmic(th, a));
      SaitoCertificate cert = saito_check(tb.thetas, a);
      CHECK(cert.verdict);
      // pdeg multiset matches the supersolvable exponents q^{|N_{G_i}(v_i)|}
      std::vector<Int> pdegs;
      for (const Derivation& th : tb.thetas) pdegs.push_back(Int(th.pdeg()));
      std::sort(pdegs.begin(), pdegs.end());
      CHECK(pdegs == supersolvable_exponents(g, tb.peo, q));
      // product of (t - pdeg) equals the lattice characteristic polynomial
      IntPoly product = IntPoly::constant(1);
      for (const Int& d : pdegs) product = product * IntPoly({Int(-d), Int(1)});
      CHECK(product == characteristic_polynomial(a));
    }
  }
}
