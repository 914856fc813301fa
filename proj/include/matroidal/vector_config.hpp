#ifndef MATROIDAL_VECTOR_CONFIG_HPP
#define MATROIDAL_VECTOR_CONFIG_HPP

#include <cstdint>
#include <vector>

#include "matroidal/linalg.hpp"
#include "matroidal/numbers.hpp"

namespace matroidal {

using Subset = std::uint64_t;

// A list of N exact-rational vectors in dimension r, required to span.
// Realizes a matroid via linear independence; rank queries run fraction-free
// on integer-rescaled columns (rescaling a column never changes the matroid).
class VectorConfig {
 public:
  explicit VectorConfig(std::vector<std::vector<Rat>> vectors);

  int dimension() const { return r_; }
  int size() const { return static_cast<int>(vectors_.size()); }
  const std::vector<Rat>& vec(int i) const { return vectors_[i]; }
  const std::vector<std::vector<Rat>>& vectors() const { return vectors_; }

  int rank_of(Subset a) const;
  bool spans() const { return spans_; }  // rank of the full list equals r

  VectorConfig with_appended(std::vector<Rat> v) const;

 private:
  int r_;
  std::vector<std::vector<Rat>> vectors_;
  std::vector<std::vector<Int>> scaled_;  // integer-rescaled columns for rank
  bool spans_;
};

// Appends a vector lying on no hyperplane spanned by vectors of X: tries
// x = (1, t, t^2, ..., t^{r-1}) for t = 1, 2, 3, ... and returns the first t
// clearing every rank-(r-1) subset. Always terminates over the rationals.
VectorConfig realize_free_extension(const VectorConfig& x);

// A configuration of N vectors in dimension N-r realizing the dual matroid:
// the columns of a kernel-basis matrix of the r x N matrix with the vectors
// of X as columns. Requires X to span.
VectorConfig dual_realization(const VectorConfig& x);

}  // namespace matroidal

#endif
