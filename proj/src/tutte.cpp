#include "matroidal/tutte.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>
#include <vector>

#include "matroidal/errors.hpp"

namespace matroidal {

namespace {

std::vector<std::vector<std::uint64_t>> count_corank_nullity(const Matroid& m,
                                                             Subset begin, Subset end) {
  const int r = m.rank();
  const int n = m.size();
  std::vector<std::vector<std::uint64_t>> counts(
      r + 1, std::vector<std::uint64_t>(n - r + 1, 0));
  for (Subset a = begin; a < end; ++a) {
    const int rk = m.rank_of_uncached(a);
    ++counts[r - rk][popcount64(a) - rk];
  }
  return counts;
}

}  // namespace

TutteResult tutte_subset_sum(const Matroid& m, const TutteOptions& opts) {
  const int n = m.size();
  if (n > opts.subset_sum_limit)
    throw std::invalid_argument(
        "ground set too large for the 2^N subset sum — use deletion-contraction");
  const int r = m.rank();
  const Subset total = (n == 64) ? 0 : (Subset(1) << n);  // n <= 22 here

  std::vector<std::vector<std::uint64_t>> counts;
  const int threads = std::max(1, std::min<int>(opts.threads, 64));
  if (threads == 1 || total < 1024) {
    counts = count_corank_nullity(m, 0, total);
  } else {
    std::vector<std::vector<std::vector<std::uint64_t>>> partial(threads);
    std::vector<std::thread> pool;
    const Subset chunk = total / threads + 1;
    for (int t = 0; t < threads; ++t) {
      const Subset begin = std::min<Subset>(total, chunk * t);
      const Subset end = std::min<Subset>(total, begin + chunk);
      pool.emplace_back([&partial, &m, t, begin, end] {
        partial[t] = count_corank_nullity(m, begin, end);
      });
    }
    for (auto& th : pool) th.join();
    counts.assign(r + 1, std::vector<std::uint64_t>(n - r + 1, 0));
    for (const auto& p : partial)
      for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < p[i].size(); ++j) counts[i][j] += p[i][j];
  }

  // T = sum counts[i][j] * (x-1)^i (y-1)^j
  std::vector<UnivarPoly> xpow(r + 1), ypow(n - r + 1);
  const UnivarPoly xm1({Int(-1), Int(1)});
  for (int i = 0; i <= r; ++i) xpow[i] = xm1.pow(i);
  for (int j = 0; j <= n - r; ++j) ypow[j] = xm1.pow(j);

  BivarPoly result;
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j <= n - r; ++j) {
      if (counts[i][j] == 0) continue;
      const Int c(static_cast<unsigned long>(counts[i][j]));
      // outer product of xpow[i] (in x) and ypow[j] (in y)
      std::vector<std::vector<Int>> rows(xpow[i].degree() + 1);
      for (int a = 0; a <= xpow[i].degree(); ++a) {
        rows[a].assign(ypow[j].degree() + 1, Int(0));
        for (int b = 0; b <= ypow[j].degree(); ++b)
          rows[a][b] = c * xpow[i].coeff(a) * ypow[j].coeff(b);
      }
      result = result + BivarPoly(std::move(rows));
    }

  TutteResult out;
  out.polynomial = std::move(result);
  out.algorithm = "subset_sum";
  out.stats.subproblems = total;
  return out;
}

namespace {

struct DelConContext {
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
  std::unordered_map<std::string, BivarPoly> memo;

  void charge() {
    if (++nodes > budget)
      throw BudgetError("deletion-contraction node budget exceeded (" +
                        std::to_string(budget) + " nodes)");
  }
};

BivarPoly tutte_graph_rec(MultiGraph g, DelConContext& ctx);

// Splits off one connected component's edges (the component of the first
// edge's endpoint); returns edge index lists.
std::pair<std::vector<int>, std::vector<int>> split_component_edges(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge idx)
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto [u, v] = g.edge(i);
    adj[u].emplace_back(v, i);
    adj[v].emplace_back(u, i);
  }
  const int root = g.edge(0).first;
  std::vector<int> stack{root};
  comp[root] = 0;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (const auto& [v, i] : adj[u])
      if (comp[v] < 0) {
        comp[v] = 0;
        stack.push_back(v);
      }
  }
  std::vector<int> inside, outside;
  for (int i = 0; i < g.edge_count(); ++i)
    (comp[g.edge(i).first] == 0 ? inside : outside).push_back(i);
  return {inside, outside};
}

MultiGraph induced_on_edges(const MultiGraph& g, const std::vector<int>& edge_idx) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(edge_idx.size());
  for (int i : edge_idx) edges.push_back(g.edge(i));
  return MultiGraph(g.vertex_count(), std::move(edges)).without_isolated_vertices();
}

BivarPoly tutte_graph_rec(MultiGraph g, DelConContext& ctx) {
  ctx.charge();
  g = g.without_isolated_vertices();
  if (g.edge_count() == 0) return BivarPoly::constant(Int(1));

  // Factor loops.
  int loops = 0;
  {
    std::vector<std::pair<int, int>> rest;
    for (int i = 0; i < g.edge_count(); ++i) {
      if (g.is_loop(i))
        ++loops;
      else
        rest.push_back(g.edge(i));
    }
    if (loops > 0) g = MultiGraph(g.vertex_count(), std::move(rest));
  }

  // Factor bridges (contract each; parallel classes make an edge non-bridge).
  int bridges = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < g.edge_count(); ++i)
      if (g.is_bridge(i)) {
        g = g.contracted_edge(i).without_isolated_vertices();
        ++bridges;
        changed = true;
        break;
      }
  }

  BivarPoly factor = BivarPoly::monomial(bridges, 0, Int(1)) *
                     BivarPoly::monomial(0, loops, Int(1));
  g = g.without_isolated_vertices();
  if (g.edge_count() == 0) return factor;

  // Multiply over connected components.
  if (g.components() > 1) {
    auto [inside, outside] = split_component_edges(g);
    if (!outside.empty())
      return factor * tutte_graph_rec(induced_on_edges(g, inside), ctx) *
             tutte_graph_rec(induced_on_edges(g, outside), ctx);
  }

  const auto key = canonical_key(g);
  if (key) {
    auto it = ctx.memo.find(*key);
    if (it != ctx.memo.end()) {
      ++ctx.memo_hits;
      return factor * it->second;
    }
  }

  // Highest-degree-incident edge first.
  std::vector<int> degree(g.vertex_count(), 0);
  for (const auto& [u, v] : g.edges()) {
    ++degree[u];
    ++degree[v];
  }
  int pick = 0, best = -1;
  for (int i = 0; i < g.edge_count(); ++i) {
    const int score = degree[g.edge(i).first] + degree[g.edge(i).second];
    if (score > best) {
      best = score;
      pick = i;
    }
  }

  BivarPoly core = tutte_graph_rec(g.without_edge(pick), ctx) +
                   tutte_graph_rec(g.contracted_edge(pick), ctx);
  if (key) ctx.memo.emplace(*key, core);
  return factor * core;
}

BivarPoly tutte_matroid_rec(const Matroid& m, DelConContext& ctx) {
  ctx.charge();
  const int n = m.size();
  if (n == 0) return BivarPoly::constant(Int(1));
  const int e = n - 1;  // last ground element first
  if (m.is_loop(e))
    return BivarPoly::y() * tutte_matroid_rec(deletion(m, e), ctx);
  if (m.is_coloop(e))
    return BivarPoly::x() * tutte_matroid_rec(contraction(m, e), ctx);
  return tutte_matroid_rec(deletion(m, e), ctx) +
         tutte_matroid_rec(contraction(m, e), ctx);
}

}  // namespace

TutteResult tutte_del_con(const Matroid& m, const TutteOptions& opts) {
  DelConContext ctx;
  ctx.budget = opts.node_budget;
  TutteResult out;
  if (m.provenance() == Provenance::graphic && m.graph())
    out.polynomial = tutte_graph_rec(*m.graph(), ctx);
  else
    out.polynomial = tutte_matroid_rec(m, ctx);
  out.algorithm = "del_con";
  out.stats.subproblems = ctx.nodes;
  out.stats.memo_hits = ctx.memo_hits;
  return out;
}

TutteResult tutte_activities(const Matroid& m, const TutteOptions& opts) {
  const auto bases = bases_with_activities(m, opts.enumeration_limit);
  BivarPoly result;
  for (const auto& b : bases)
    result = result +
             BivarPoly::monomial(b.internal_activity, b.external_activity, Int(1));
  TutteResult out;
  out.polynomial = std::move(result);
  out.algorithm = "activities";
  out.stats.subproblems = bases.size();
  return out;
}

TutteResult tutte(const Matroid& m, const TutteOptions& opts) {
  if (auto cached = m.cached_tutte()) {
    TutteResult out;
    out.polynomial = *cached;
    out.algorithm = "cached";
    out.stats.memo_hits = 1;
    return out;
  }
  TutteResult out;
  if (m.provenance() == Provenance::graphic && m.graph())
    out = tutte_del_con(m, opts);
  else if (m.size() <= 18 && m.size() <= opts.subset_sum_limit)
    out = tutte_subset_sum(m, opts);
  else
    out = tutte_del_con(m, opts);
  m.store_tutte(out.polynomial);
  return out;
}

BivarPoly cached_tutte(const Matroid& m) { return tutte(m).polynomial; }

}  // namespace matroidal
