#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "matroidal/corpus.hpp"
#include "matroidal/invariants.hpp"
#include "matroidal/tutte.hpp"
#include "oracles.hpp"

using namespace matroidal;

namespace {

UnivarPoly upoly(std::vector<long> coeffs) {
  std::vector<Int> c;
  for (long v : coeffs) c.emplace_back(v);
  return UnivarPoly(std::move(c));
}

MultiGraph k3() { return MultiGraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST_CASE("characteristic polynomial") {
  // (-1)^3 chi_{U_{3,7}}(-q) = q^3 + 7q^2 + 21q + 15
  const UnivarPoly chi37 = characteristic(uniform_matroid(3, 7));
  CHECK(chi37 == upoly({-15, 21, -7, 1}));
  const UnivarPoly minus_q({Int(0), Int(-1)});
  CHECK(chi37.composed(minus_q) * Int(-1) == upoly({15, 21, 7, 1}));

  // chi of U_{2,3} and its reduction.
  const UnivarPoly chi23 = characteristic(uniform_matroid(2, 3));
  CHECK(chi23 == upoly({2, -3, 1}));
  CHECK(chi23.composed(minus_q) == upoly({2, 3, 1}));
  CHECK(reduced_characteristic(uniform_matroid(2, 3)) == upoly({-2, 1}));
  CHECK(reduced_characteristic(uniform_matroid(1, 1)) == upoly({1}));

  // Loops kill the characteristic polynomial.
  CHECK(characteristic(uniform_matroid(0, 2)).is_zero());
  CHECK(characteristic(graphic_matroid(MultiGraph(2, {{0, 0}, {0, 1}}))).is_zero());
  CHECK_THROWS_AS(reduced_characteristic(uniform_matroid(0, 2)), std::invalid_argument);
}

TEST_CASE("characteristic matches the signed subset sum") {
  for (const Matroid& m : {uniform_matroid(2, 6), uniform_matroid(3, 5),
                           graphic_matroid(k3()),
                           graphic_matroid(MultiGraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}})),
                           vector_matroid(oracles::vandermonde_config(3, 7)),
                           dual(uniform_matroid(2, 5))})
    CHECK(characteristic(m) == oracles::characteristic_subset_sum(m));
}

TEST_CASE("f-polynomial and f-vector") {
  CHECK(f_polynomial(uniform_matroid(2, 6)) == upoly({15, 6, 1}));
  CHECK(f_polynomial(uniform_matroid(2, 3)) == upoly({3, 3, 1}));
  for (const Matroid& m : {uniform_matroid(2, 6), graphic_matroid(k3()),
                           vector_matroid(oracles::vandermonde_config(3, 6)),
                           graphic_matroid(MultiGraph(2, {{0, 0}, {0, 1}}))}) {
    CHECK(f_vector(m) == oracles::f_vector_bruteforce(m));
    const auto f = f_vector(m);
    CHECK(f[0] == 1);
    int non_loops = 0;
    for (int e = 0; e < m.size(); ++e)
      if (!m.is_loop(e)) ++non_loops;
    CHECK(f[1] == non_loops);
  }
}

TEST_CASE("h-polynomial via two routes") {
  CHECK(h_polynomial(uniform_matroid(2, 3)) == upoly({1, 1, 1}));
  CHECK(h_polynomial(uniform_matroid(3, 3)) == upoly({0, 0, 0, 1}));
  CHECK(h_polynomial(graphic_matroid(k3())) == upoly({1, 1, 1}));
  // h_1 = f_1 - r
  for (const Matroid& m : {uniform_matroid(2, 6), uniform_matroid(3, 7),
                           vector_matroid(oracles::vandermonde_config(2, 5))}) {
    const auto h = h_vector(m);
    const auto f = f_vector(m);
    CHECK(h[0] == 1);
    CHECK(h[1] == f[1] - m.rank());
  }
}

TEST_CASE("chromatic polynomial") {
  CHECK(chromatic(k3()) == upoly({0, 2, -3, 1}));
  CHECK(chromatic(MultiGraph(2, {{0, 0}, {0, 1}})).is_zero());
  CHECK(chromatic(MultiGraph(3, {})) == upoly({0, 0, 0, 1}));
  for (const MultiGraph& g : small_graphs_up_to_iso(5)) {
    const UnivarPoly p = chromatic(g);
    for (int q = 1; q <= 3; ++q)
      CHECK(p.eval(Int(q)) == oracles::chromatic_count(g, q));
  }
}

TEST_CASE("flow polynomial") {
  CHECK(flow(k3()) == upoly({-1, 1}));
  CHECK(flow(MultiGraph(1, {{0, 0}})) == upoly({-1, 1}));
  CHECK(flow(MultiGraph(3, {{0, 1}, {1, 2}})).is_zero());  // bridges: no flow
  std::mt19937 rng(47);
  int done = 0;
  while (done < 12) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % 6);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
      edges.emplace_back(static_cast<int>(rng() % n), static_cast<int>(rng() % n));
    const MultiGraph g(n, edges);
    ++done;
    const UnivarPoly p = flow(g);
    for (int q = 2; q <= 5; ++q)
      CHECK(p.eval(Int(q)) == oracles::flow_count(g, q));
  }
}

TEST_CASE("critical configuration polynomial") {
  CHECK(critical_config(k3()) == upoly({2, 1}));
  CHECK(critical_config(MultiGraph(3, {{0, 1}, {1, 2}})) ==
        UnivarPoly::constant(Int(1)));  // a tree
  const MultiGraph square_diag(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  Int coeff_sum(0);
  for (const auto& c : critical_config(square_diag).coeffs()) coeff_sum += c;
  CHECK(coeff_sum == oracles::spanning_tree_count(square_diag));
  CHECK_THROWS_AS(critical_config(MultiGraph(4, {{0, 1}, {2, 3}})),
                  std::invalid_argument);
}

TEST_CASE("reliability polynomial") {
  const ReliabilityReport k3_rel = reliability(k3());
  CHECK(k3_rel.expanded == upoly({1, 0, -3, 2}));  // (1-p)^2 (1+2p)
  CHECK(k3_rel.h_part == upoly({1, 2}));
  CHECK(k3_rel.expanded.eval(Rat(0)) == Rat(1));

  CHECK(reliability(MultiGraph(2, {{0, 1}})).expanded == upoly({1, -1}));
  CHECK_THROWS_AS(reliability(MultiGraph(3, {{0, 1}})), std::invalid_argument);

  std::mt19937 rng(53);
  int done = 0;
  while (done < 10) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % 6);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
      edges.emplace_back(static_cast<int>(rng() % n), static_cast<int>(rng() % n));
    const MultiGraph g(n, edges);
    if (g.components() != 1) continue;
    ++done;
    CHECK(reliability(g).expanded == oracles::reliability_bruteforce(g));
  }
}

TEST_CASE("coextension identity") {
  // U_{2,6}: both sides equal (q+1)(q^2+6q+15) = q^3+7q^2+21q+15.
  const auto rep = verify_coextension_identity(uniform_matroid(2, 6));
  CHECK(rep.holds);
  CHECK(rep.lhs == upoly({15, 21, 7, 1}));

  // Single loop: both sides are 1 + q.
  const auto loop_rep = verify_coextension_identity(uniform_matroid(0, 1));
  CHECK(loop_rep.holds);
  CHECK(loop_rep.lhs == upoly({1, 1}));

  std::mt19937 rng(59);
  int done = 0;
  while (done < 10) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % 7);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
      edges.emplace_back(static_cast<int>(rng() % n), static_cast<int>(rng() % n));
    ++done;
    CHECK(verify_coextension_identity(graphic_matroid(MultiGraph(n, edges))).holds);
  }
}

TEST_CASE("zonotopal identities on small configurations") {
  const VectorConfig x({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}});
  CHECK(verify_zonotopal_identities(x).all());
  for (const VectorConfig& c : random_vector_configs(8, 6, 3, 61u))
    CHECK(verify_zonotopal_identities(c).all());
}

TEST_CASE("invariant reports carry the source polynomial") {
  const auto rep = matroid_invariant_report("fvec", uniform_matroid(2, 6));
  CHECK(rep.poly == upoly({15, 6, 1}));
  CHECK(rep.ground_size == 6);
  CHECK(rep.rank == 2);
  CHECK(rep.source_tutte.eval(Int(1), Int(1)) == Int(15));

  const auto grep = graph_invariant_report("reliability", k3());
  CHECK(grep.h_part.has_value());
  CHECK(grep.components == 1);
  CHECK_THROWS_AS(matroid_invariant_report("nope", uniform_matroid(1, 2)),
                  std::invalid_argument);
}
