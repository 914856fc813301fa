#ifndef MATROIDAL_TUTTE_HPP
#define MATROIDAL_TUTTE_HPP

#include <cstdint>
#include <string>

#include "matroidal/matroid.hpp"
#include "matroidal/polynomial.hpp"

namespace matroidal {

struct TutteStats {
  std::uint64_t subproblems = 0;
  std::uint64_t memo_hits = 0;
};

struct TutteResult {
  BivarPoly polynomial;
  std::string algorithm;  // subset_sum | del_con | activities
  TutteStats stats;
};

struct TutteOptions {
  int threads = 1;
  std::uint64_t node_budget = 10'000'000;  // deletion-contraction recursion nodes
  int subset_sum_limit = 22;               // 2^N iteration cap
  int enumeration_limit = 24;              // basis enumeration cap
};

// Corank-nullity sum over all 2^N subsets.
TutteResult tutte_subset_sum(const Matroid& m, const TutteOptions& opts = {});

// Deletion-contraction. Graphic matroids run on the multigraph with loop,
// bridge and component reductions plus a canonical-form memo; other matroids
// recurse on rank-oracle minors without cross-branch memoization.
TutteResult tutte_del_con(const Matroid& m, const TutteOptions& opts = {});

// Sum of x^{internal activity} y^{external activity} over all bases.
TutteResult tutte_activities(const Matroid& m, const TutteOptions& opts = {});

// Strategy dispatch; the result is cached on the matroid value.
TutteResult tutte(const Matroid& m, const TutteOptions& opts = {});

// Cached auto-strategy polynomial (computes on first use).
BivarPoly cached_tutte(const Matroid& m);

}  // namespace matroidal

#endif
