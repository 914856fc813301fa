#ifndef MATROIDAL_MULTIGRAPH_HPP
#define MATROIDAL_MULTIGRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matroidal/numbers.hpp"

namespace matroidal {

using Subset = std::uint64_t;

// Undirected multigraph: loops and parallel edges allowed. Edges keep their
// input order; the edge index is the ground-set label of the cycle matroid.
class MultiGraph {
 public:
  MultiGraph(int num_vertices, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::pair<int, int> edge(int i) const { return edges_[i]; }

  int components() const { return components_; }  // union-find, cached
  int components_bfs() const;                     // independent recount

  // Rank of an edge subset in the cycle matroid: |V| minus the number of
  // components of the spanning subgraph on those edges.
  int rank_of(Subset edge_subset) const;
  int matroid_rank() const { return n_ - components_; }

  bool is_loop(int i) const { return edges_[i].first == edges_[i].second; }
  bool is_bridge(int i) const;

  MultiGraph without_edge(int i) const;
  MultiGraph contracted_edge(int i) const;  // merges endpoints; parallels become loops
  MultiGraph without_isolated_vertices() const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  int components_;
};

// Exact canonical key for isomorphism of multigraphs: refine vertex classes by
// degree/neighborhood signatures, then minimize the relabeled edge list over
// all class-respecting permutations. Returns nullopt above max_vertices or
// when the permutation count exceeds perm_budget (callers then skip caching).
std::optional<std::string> canonical_key(const MultiGraph& g, int max_vertices = 10,
                                         std::uint64_t perm_budget = 362880);

// Lines "u v"; blank lines and '#' comments ignored; "u u" is a loop and
// duplicate lines are parallel edges. Vertex count is 1 + max label.
MultiGraph parse_edge_list(const std::string& text);

}  // namespace matroidal

#endif
