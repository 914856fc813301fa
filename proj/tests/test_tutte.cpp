#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "matroidal/corpus.hpp"
#include "matroidal/errors.hpp"
#include "matroidal/tutte.hpp"
#include "oracles.hpp"

using namespace matroidal;

namespace {

const BivarPoly kX2XY = BivarPoly::monomial(2, 0, Int(1)) + BivarPoly::x() + BivarPoly::y();

void check_three_way(const Matroid& m) {
  const BivarPoly a = tutte_subset_sum(m).polynomial;
  const BivarPoly b = tutte_del_con(m).polynomial;
  const BivarPoly c = tutte_activities(m).polynomial;
  CHECK(a == b);
  CHECK(a == c);
}

}  // namespace

TEST_CASE("pinned Tutte polynomials") {
  const VectorConfig x({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}});
  CHECK(tutte_subset_sum(vector_matroid(x)).polynomial == kX2XY);
  CHECK(tutte_del_con(graphic_matroid(MultiGraph(3, {{0, 1}, {1, 2}, {0, 2}}))).polynomial ==
        kX2XY);
  CHECK(tutte_activities(uniform_matroid(2, 3)).polynomial == kX2XY);

  CHECK(tutte_subset_sum(uniform_matroid(1, 1)).polynomial == BivarPoly::x());
  CHECK(tutte_subset_sum(uniform_matroid(0, 1)).polynomial == BivarPoly::y());
  CHECK(tutte_subset_sum(uniform_matroid(0, 0)).polynomial ==
        BivarPoly::constant(Int(1)));
  CHECK(tutte_activities(uniform_matroid(4, 4)).polynomial ==
        BivarPoly::monomial(4, 0, Int(1)));

  // U_{1,3} = y^2 + y + x (pinned from the subset-sum definition).
  const BivarPoly u13 = tutte_del_con(uniform_matroid(1, 3)).polynomial;
  CHECK(u13 == BivarPoly::monomial(0, 2, Int(1)) + BivarPoly::y() + BivarPoly::x());
  CHECK(u13 == tutte_subset_sum(uniform_matroid(1, 3)).polynomial);
}

TEST_CASE("evaluation sanity at the four corners") {
  for (const Matroid& m : {uniform_matroid(2, 5), uniform_matroid(3, 6),
                           graphic_matroid(MultiGraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}})),
                           vector_matroid(oracles::vandermonde_config(3, 6))}) {
    const BivarPoly t = tutte_subset_sum(m).polynomial;
    const int n = m.size();
    // T(1,1) = #bases
    Int bases(0), independent(0), spanning(0);
    for (Subset a = 0; a < (Subset(1) << n); ++a) {
      const int rk = m.rank_of(a);
      if (rk == m.rank()) {
        ++spanning;
        if (popcount64(a) == rk) ++bases;
      }
      if (rk == popcount64(a)) ++independent;
    }
    CHECK(t.eval(Int(1), Int(1)) == bases);
    CHECK(t.eval(Int(2), Int(1)) == independent);
    CHECK(t.eval(Int(1), Int(2)) == spanning);
    CHECK(t.eval(Int(2), Int(2)) == int_pow(Int(2), n));
  }
}

TEST_CASE("three-way agreement on an exhaustive small corpus") {
  for (int r = 0; r <= 4; ++r)
    for (int n = r; n <= 6; ++n) {
      if (n == 0) continue;
      check_three_way(uniform_matroid(r, n));
    }
  for (const MultiGraph& g : small_graphs_up_to_iso(4))
    if (g.edge_count() >= 1) check_three_way(graphic_matroid(g));
  for (const VectorConfig& c : random_vector_configs(15, 7, 3, 99u))
    check_three_way(vector_matroid(c));
  // Derived matroids exercise the abstract deletion-contraction path.
  check_three_way(dual(uniform_matroid(2, 6)));
  check_three_way(free_coextension(uniform_matroid(2, 4)));
  check_three_way(thicken(uniform_matroid(2, 3), 2));
}

TEST_CASE("duality swaps the variables") {
  for (const Matroid& m : {uniform_matroid(2, 6),
                           graphic_matroid(MultiGraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}})),
                           vector_matroid(oracles::vandermonde_config(2, 5))}) {
    CHECK(tutte_subset_sum(dual(m)).polynomial ==
          tutte_subset_sum(m).polynomial.swapped_xy());
  }
}

TEST_CASE("activities are order-independent in the aggregate") {
  std::mt19937 rng(41);
  const std::vector<Matroid> ms = {
      graphic_matroid(MultiGraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 1}})),
      vector_matroid(random_vector_configs(1, 7, 3, 7u)[0]),
      uniform_matroid(3, 6)};
  for (const Matroid& m : ms) {
    const BivarPoly reference = tutte_activities(m).polynomial;
    for (int iter = 0; iter < 6; ++iter) {
      std::vector<int> perm(m.size());
      for (int i = 0; i < m.size(); ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(tutte_activities(relabel(m, perm)).polynomial == reference);
    }
  }
}

TEST_CASE("disjoint union is multiplicative") {
  std::mt19937 rng(43);
  auto pick = [&rng]() {
    switch (rng() % 3) {
      case 0: return uniform_matroid(1 + rng() % 2, 2 + rng() % 3);
      case 1: return graphic_matroid(MultiGraph(3, {{0, 1}, {1, 2}, {0, 2}}));
      default: return uniform_matroid(0, 1 + rng() % 2);
    }
  };
  for (int iter = 0; iter < 10; ++iter) {
    const Matroid a = pick();
    const Matroid b = pick();
    CHECK(tutte_subset_sum(direct_sum(a, b)).polynomial ==
          tutte_subset_sum(a).polynomial * tutte_subset_sum(b).polynomial);
  }
}

TEST_CASE("graph engine handles multigraph reductions") {
  // Two parallel edges plus a loop and a bridge hanging off a triangle.
  const MultiGraph g(5, {{0, 1}, {1, 2}, {0, 2}, {0, 2}, {3, 3}, {2, 4}});
  const Matroid m = graphic_matroid(g);
  check_three_way(m);
  const TutteResult dc = tutte_del_con(m);
  CHECK(dc.algorithm == "del_con");
  CHECK(dc.stats.subproblems > 0);
}

TEST_CASE("memoization pays off on a moderately dense graph") {
  // 4x3 grid graph: enough shared minors for cache hits.
  std::vector<std::pair<int, int>> edges;
  auto id = [](int r, int c) { return r * 3 + c; };
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 3; ++c) {
      if (c + 1 < 3) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < 4) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  const MultiGraph grid(12, edges);
  const TutteResult res = tutte_del_con(graphic_matroid(grid));
  CHECK(res.stats.memo_hits > 0);
  CHECK(res.polynomial.eval(Int(1), Int(1)) > 0);
  // Spanning tree count of the 4x3 grid, cross-checked by direct enumeration.
  CHECK(res.polynomial.eval(Int(1), Int(1)) == oracles::spanning_tree_count(grid));
}

TEST_CASE("budget errors are hard errors, never wrong answers") {
  TutteOptions opts;
  opts.node_budget = 3;
  CHECK_THROWS_AS(tutte_del_con(uniform_matroid(3, 7), opts), BudgetError);
  const MultiGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(tutte_del_con(graphic_matroid(k4), opts), BudgetError);
  CHECK_THROWS_AS(tutte_subset_sum(uniform_matroid(2, 30)), std::invalid_argument);
}

TEST_CASE("dispatch is strategy-independent and caches") {
  const Matroid m = uniform_matroid(2, 6);
  const TutteResult first = tutte(m);
  CHECK(first.polynomial == tutte_subset_sum(m).polynomial);
  const TutteResult second = tutte(m);
  CHECK(second.algorithm == "cached");
  CHECK(second.polynomial == first.polynomial);
}

TEST_CASE("parallel subset sum matches single-threaded") {
  const Matroid m = vector_matroid(oracles::vandermonde_config(3, 8));
  TutteOptions par;
  par.threads = 4;
  CHECK(tutte_subset_sum(m, par).polynomial == tutte_subset_sum(m).polynomial);
}
