#include "matroidal/multigraph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace matroidal {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Returns true when the union merged two distinct components.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

MultiGraph::MultiGraph(int num_vertices, std::vector<std::pair<int, int>> edges)
    : n_(num_vertices), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  for (const auto& [u, v] : edges_)
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("edge endpoint out of range");
  if (edges_.size() > 64)
    throw std::invalid_argument("edge count over the 64-element ground-set limit");
  UnionFind uf(n_);
  int comps = n_;
  for (const auto& [u, v] : edges_)
    if (uf.unite(u, v)) --comps;
  components_ = comps;
}

int MultiGraph::components_bfs() const {
  std::vector<std::vector<int>> adj(n_);
  for (const auto& [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(n_, false);
  int comps = 0;
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u])
        if (!seen[v]) {
          seen[v] = true;
          q.push(v);
        }
    }
  }
  return comps;
}

int MultiGraph::rank_of(Subset edge_subset) const {
  UnionFind uf(n_);
  int comps = n_;
  for (int i = 0; i < edge_count(); ++i)
    if (edge_subset >> i & 1u)
      if (uf.unite(edges_[i].first, edges_[i].second)) --comps;
  return n_ - comps;
}

bool MultiGraph::is_bridge(int i) const {
  if (is_loop(i)) return false;
  return without_edge(i).components() > components_;
}

MultiGraph MultiGraph::without_edge(int i) const {
  auto e = edges_;
  e.erase(e.begin() + i);
  return MultiGraph(n_, std::move(e));
}

MultiGraph MultiGraph::contracted_edge(int i) const {
  const auto [a, b] = edges_[i];
  const int keep = std::min(a, b);
  const int drop = std::max(a, b);
  std::vector<std::pair<int, int>> e;
  e.reserve(edges_.size() - 1);
  auto remap = [&](int v) {
    if (v == drop) return keep;
    return v > drop ? v - 1 : v;
  };
  for (int j = 0; j < edge_count(); ++j) {
    if (j == i) continue;
    e.emplace_back(remap(edges_[j].first), remap(edges_[j].second));
  }
  if (a == b) return MultiGraph(n_, std::move(e));  // contracting a loop = deleting it
  return MultiGraph(n_ - 1, std::move(e));
}

MultiGraph MultiGraph::without_isolated_vertices() const {
  std::vector<bool> used(n_, false);
  for (const auto& [u, v] : edges_) used[u] = used[v] = true;
  std::vector<int> remap(n_, -1);
  int next = 0;
  for (int v = 0; v < n_; ++v)
    if (used[v]) remap[v] = next++;
  std::vector<std::pair<int, int>> e;
  e.reserve(edges_.size());
  for (const auto& [u, v] : edges_) e.emplace_back(remap[u], remap[v]);
  return MultiGraph(next, std::move(e));
}

namespace {

// One refinement round: signature of a vertex is its color, loop count and the
// multiset of (neighbor color, multiplicity) pairs.
std::vector<int> refine_colors(int n, const std::vector<std::vector<int>>& mult,
                               std::vector<int> color) {
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<long long>> sig(n);
    for (int u = 0; u < n; ++u) {
      sig[u].push_back(color[u]);
      sig[u].push_back(mult[u][u]);
      std::vector<std::pair<int, int>> nb;
      for (int v = 0; v < n; ++v)
        if (v != u && mult[u][v] > 0) nb.emplace_back(color[v], mult[u][v]);
      std::sort(nb.begin(), nb.end());
      for (const auto& [c, m] : nb) {
        sig[u].push_back(c);
        sig[u].push_back(m);
      }
    }
    std::map<std::vector<long long>, int> dense;
    for (int u = 0; u < n; ++u) dense.emplace(sig[u], 0);
    int next = 0;
    for (auto& [k, v] : dense) v = next++;
    std::vector<int> fresh(n);
    for (int u = 0; u < n; ++u) fresh[u] = dense[sig[u]];
    if (fresh == color) break;
    color = std::move(fresh);
  }
  return color;
}

std::string encode_relabeled(const MultiGraph& g, const std::vector<int>& new_label) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) {
    int a = new_label[u], b = new_label[v];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  std::string out;
  out.reserve(edges.size() * 2 + 2);
  out.push_back(static_cast<char>(g.vertex_count()));
  out.push_back(static_cast<char>(edges.size()));
  for (const auto& [a, b] : edges) {
    out.push_back(static_cast<char>(a));
    out.push_back(static_cast<char>(b));
  }
  return out;
}

}  // namespace

std::optional<std::string> canonical_key(const MultiGraph& g, int max_vertices,
                                         std::uint64_t perm_budget) {
  const int n = g.vertex_count();
  if (n > max_vertices) return std::nullopt;
  if (n == 0) return std::string(2, '\0');

  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  for (const auto& [u, v] : g.edges()) {
    if (u == v) {
      ++mult[u][u];
    } else {
      ++mult[u][v];
      ++mult[v][u];
    }
  }
  std::vector<int> color = refine_colors(n, mult, std::vector<int>(n, 0));

  // Group vertices by color; colors are already ordered by signature.
  const int num_colors = *std::max_element(color.begin(), color.end()) + 1;
  std::vector<std::vector<int>> classes(num_colors);
  for (int v = 0; v < n; ++v) classes[color[v]].push_back(v);

  std::uint64_t perms = 1;
  for (const auto& cls : classes) {
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= cls.size(); ++i) {
      f *= i;
      if (f > perm_budget) return std::nullopt;
    }
    perms *= f;
    if (perms > perm_budget) return std::nullopt;
  }

  // Odometer over within-class permutations; new labels assigned class-major.
  std::vector<int> base_offset(num_colors, 0);
  for (int c = 1; c < num_colors; ++c)
    base_offset[c] = base_offset[c - 1] + static_cast<int>(classes[c - 1].size());

  std::vector<std::vector<int>> perm(classes);
  std::string best;
  bool have_best = false;
  while (true) {
    std::vector<int> new_label(n);
    for (int c = 0; c < num_colors; ++c)
      for (size_t i = 0; i < perm[c].size(); ++i)
        new_label[perm[c][i]] = base_offset[c] + static_cast<int>(i);
    std::string key = encode_relabeled(g, new_label);
    if (!have_best || key < best) {
      best = std::move(key);
      have_best = true;
    }
    int c = 0;
    while (c < num_colors && !std::next_permutation(perm[c].begin(), perm[c].end()))
      ++c;
    if (c == num_colors) break;
    for (int d = 0; d < c; ++d) std::sort(perm[d].begin(), perm[d].end());
  }
  return best;
}

MultiGraph parse_edge_list(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  int max_vertex = -1;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    long u, v;
    if (!(ls >> u)) {
      std::string junk;
      std::istringstream probe(line);
      if (probe >> junk)
        throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                    ": expected integer, got '" + junk + "'");
      continue;  // blank line
    }
    if (!(ls >> v))
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": missing second endpoint");
    std::string extra;
    if (ls >> extra)
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": trailing token '" + extra + "'");
    if (u < 0 || v < 0)
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": negative vertex label");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_vertex = std::max({max_vertex, static_cast<int>(u), static_cast<int>(v)});
  }
  return MultiGraph(max_vertex + 1, std::move(edges));
}

}  // namespace matroidal
