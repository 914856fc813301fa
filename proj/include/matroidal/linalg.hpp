#ifndef MATROIDAL_LINALG_HPP
#define MATROIDAL_LINALG_HPP

#include <vector>

#include "matroidal/numbers.hpp"

namespace matroidal {

// Row-major dense matrix of exact rationals.
struct RatMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}

  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  bool operator==(const RatMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

// Rank by fraction-free (Bareiss) elimination over the integers.
int rank_fraction_free(std::vector<std::vector<Int>> m);

// Rank of a rational matrix: denominators are cleared row-wise, then Bareiss.
int rank_of(const RatMatrix& m);

// Canonical reduced row echelon form with zero rows stripped. Two matrices
// have equal row spaces iff their stripped RREFs are identical.
RatMatrix rref(const RatMatrix& m);

// Basis of the right kernel {v : M v = 0}; each vector has length m.cols.
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m);

}  // namespace matroidal

#endif
