#include "matroidal/corpus.hpp"

#include <deque>
#include <random>
#include <set>

namespace matroidal {

namespace {

// Implementation-independent int draw (std::uniform_int_distribution is not
// pinned across standard libraries; corpus content must be).
int draw(std::mt19937& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint32_t>(hi - lo + 1));
}

}  // namespace

std::vector<MultiGraph> small_graphs_up_to_iso(int max_vertices) {
  std::vector<MultiGraph> out;
  std::set<std::string> seen;
  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    const std::uint32_t total = 1u << slots.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (size_t i = 0; i < slots.size(); ++i)
        if (mask >> i & 1u) edges.push_back(slots[i]);
      MultiGraph g(n, std::move(edges));
      auto key = canonical_key(g);
      if (key && seen.insert(*key).second) out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<MultiGraph> multigraph_minor_closure(const std::vector<MultiGraph>& seeds,
                                                 size_t max_size) {
  std::vector<MultiGraph> out;
  std::set<std::string> seen;
  std::deque<MultiGraph> queue;
  for (const auto& g : seeds) {
    auto key = canonical_key(g);
    if (key && seen.insert(*key).second) {
      out.push_back(g);
      queue.push_back(g);
    }
  }
  while (!queue.empty()) {
    if (max_size > 0 && out.size() >= max_size) break;
    MultiGraph g = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < g.edge_count(); ++i) {
      for (MultiGraph minor : {g.without_edge(i), g.contracted_edge(i)}) {
        MultiGraph reduced = minor.without_isolated_vertices();
        auto key = canonical_key(reduced);
        if (key && seen.insert(*key).second) {
          out.push_back(reduced);
          queue.push_back(std::move(reduced));
        }
      }
    }
  }
  return out;
}

std::vector<VectorConfig> random_vector_configs(int count, int max_n, int max_r,
                                                std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<VectorConfig> out;
  while (static_cast<int>(out.size()) < count) {
    const int r = draw(rng, 1, max_r);
    const int n = draw(rng, r, max_n);
    std::vector<std::vector<Rat>> vectors;
    for (int i = 0; i < n; ++i) {
      std::vector<Rat> v(r);
      for (int j = 0; j < r; ++j) {
        const int num = draw(rng, -3, 3);
        const int den = (draw(rng, 0, 3) == 0) ? draw(rng, 2, 3) : 1;
        v[j] = Rat(num, den);
        v[j].canonicalize();
      }
      vectors.push_back(std::move(v));
    }
    VectorConfig config(std::move(vectors));
    if (config.spans()) out.push_back(std::move(config));
  }
  return out;
}

std::vector<CorpusEntry> uniform_corpus(int max_r, int max_n) {
  std::vector<CorpusEntry> out;
  for (int r = 0; r <= max_r; ++r)
    for (int n = r; n <= max_n; ++n) {
      if (n == 0) continue;
      CorpusEntry entry{"U_{" + std::to_string(r) + "," + std::to_string(n) + "}",
                        uniform_matroid(r, n), std::nullopt, std::nullopt, true};
      out.push_back(std::move(entry));
    }
  return out;
}

std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> out = uniform_corpus(4, 8);

  const auto graphs = small_graphs_up_to_iso(5);
  for (size_t i = 0; i < graphs.size(); ++i) {
    const auto& g = graphs[i];
    if (g.edge_count() == 0) continue;
    CorpusEntry entry{"graph_" + std::to_string(g.vertex_count()) + "v_" +
                          std::to_string(g.edge_count()) + "e_#" + std::to_string(i),
                      graphic_matroid(g), g, std::nullopt, true};
    out.push_back(std::move(entry));
  }

  const auto configs = random_vector_configs(50, 8, 4, 20120521u);
  for (size_t i = 0; i < configs.size(); ++i) {
    CorpusEntry entry{"config_#" + std::to_string(i), vector_matroid(configs[i]),
                      std::nullopt, configs[i], true};
    out.push_back(std::move(entry));
  }

  // Derived layer: duals, free extensions, coextensions and small
  // thickenings of every fourth base entry (duals of realizable matroids and
  // their extensions stay realizable).
  const size_t base_count = out.size();
  for (size_t i = 0; i < base_count; i += 4) {
    const Matroid& m = out[i].matroid;
    if (m.size() + 1 <= 12) {
      out.push_back({"dual(" + out[i].name + ")", dual(m), std::nullopt, std::nullopt,
                     out[i].realizable});
      out.push_back({out[i].name + "+e", free_extension(m), std::nullopt, std::nullopt,
                     out[i].realizable});
      out.push_back({out[i].name + "xe", free_coextension(m), std::nullopt,
                     std::nullopt, out[i].realizable});
    }
    if (m.size() * 2 <= 12)
      out.push_back({out[i].name + "^2", thicken(m, 2), std::nullopt, std::nullopt,
                     out[i].realizable});
  }
  return out;
}

}  // namespace matroidal
