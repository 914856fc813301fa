#ifndef MATROIDAL_MATROID_HPP
#define MATROIDAL_MATROID_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matroidal/multigraph.hpp"
#include "matroidal/polynomial.hpp"
#include "matroidal/vector_config.hpp"

namespace matroidal {

enum class Provenance { uniform, vectors, graphic, bases, derived };

// A matroid behind a uniform rank-oracle interface. Values are immutable and
// cheap to copy (shared state); rank queries are memoized per value and are
// safe to issue from concurrent threads. Ground elements are 0..size()-1 and
// their natural order is part of the value (basis activities depend on it).
class Matroid {
 public:
  static constexpr int kMaxGroundSize = 64;

  int size() const;              // N
  int rank() const;              // r, rank of the full ground set
  Subset full_set() const;
  Provenance provenance() const;

  int rank_of(Subset a) const;            // memoized
  int rank_of_uncached(Subset a) const;   // raw oracle, no memo traffic

  bool is_loop(int e) const;     // rk({e}) == 0
  bool is_coloop(int e) const;   // rk(E \ e) < r

  // Explicit-bases inputs above the validation size are accepted untested.
  bool bases_validated() const;

  // The source multigraph, present when provenance() == graphic.
  const std::optional<MultiGraph>& graph() const;

  // Per-value cache shared by the Tutte engine and invariant computations.
  std::optional<BivarPoly> cached_tutte() const;
  void store_tutte(const BivarPoly& t) const;

  struct Impl;
  explicit Matroid(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}

 private:
  std::shared_ptr<Impl> impl_;
};

Matroid uniform_matroid(int r, int n);
Matroid graphic_matroid(const MultiGraph& g);
Matroid vector_matroid(const VectorConfig& x);

// Bases given as element bitmasks, all of equal size r. The basis-exchange
// axiom is verified on construction for n <= 12; larger inputs are trusted
// and the value carries bases_validated() == false.
Matroid bases_matroid(int n, const std::vector<Subset>& bases);

Matroid dual(const Matroid& m);
Matroid deletion(const Matroid& m, int e);
Matroid contraction(const Matroid& m, int e);
Matroid free_extension(const Matroid& m);    // M + e, new element last
Matroid free_coextension(const Matroid& m);  // M x e = (M* + e)*
Matroid thicken(const Matroid& m, int k);    // copies of element i are i*k..i*k+k-1
Matroid direct_sum(const Matroid& a, const Matroid& b);
Matroid relabel(const Matroid& m, const std::vector<int>& perm);

struct BasisActivity {
  Subset basis;
  int internal_activity;
  int external_activity;
};

// Every basis exactly once, with activity counts taken in the ground order.
std::vector<BasisActivity> bases_with_activities(const Matroid& m,
                                                 int enumeration_limit = 24);

}  // namespace matroidal

#endif
