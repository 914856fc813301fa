#ifndef MATROIDAL_CORPUS_HPP
#define MATROIDAL_CORPUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matroidal/matroid.hpp"
#include "matroidal/multigraph.hpp"
#include "matroidal/vector_config.hpp"

namespace matroidal {

struct CorpusEntry {
  std::string name;
  Matroid matroid;
  std::optional<MultiGraph> graph;
  std::optional<VectorConfig> config;
  bool realizable = false;  // known realizable over the rationals
};

// Simple graphs on 1..max_vertices vertices, one per isomorphism class.
std::vector<MultiGraph> small_graphs_up_to_iso(int max_vertices);

// Closure of the inputs under single-edge deletion and contraction, one
// multigraph per isomorphism class (inputs included). Finite: minors lose
// edges. Truncates at max_size if positive.
std::vector<MultiGraph> multigraph_minor_closure(const std::vector<MultiGraph>& seeds,
                                                 size_t max_size = 0);

// Deterministic spanning rational configurations (fixed-seed generator).
std::vector<VectorConfig> random_vector_configs(int count, int max_n, int max_r,
                                                std::uint32_t seed);

// Uniform matroids U_{r,n} with r <= max_r, n <= max_n.
std::vector<CorpusEntry> uniform_corpus(int max_r, int max_n);

// The builtin corpus the verify command and the acceptance suite run on:
// uniforms to U_{4,8}, all simple graphs on <= 5 vertices, 50 seeded vector
// configurations with N <= 8, and duals/extensions/thickenings of a sample.
std::vector<CorpusEntry> builtin_corpus();

}  // namespace matroidal

#endif
