#ifndef MATROIDAL_ZONOTOPAL_HPP
#define MATROIDAL_ZONOTOPAL_HPP

#include <vector>

#include "matroidal/linalg.hpp"
#include "matroidal/polynomial.hpp"
#include "matroidal/vector_config.hpp"

namespace matroidal {

// Linear form p_x = sum_i x_i t_i attached to a vector x. Zero iff x is zero
// (a loop of the realized matroid).
struct LinForm {
  std::vector<Rat> coeff;
  bool is_zero() const {
    for (const auto& c : coeff)
      if (c != 0) return false;
    return true;
  }
};

// A graded polynomial subspace given by per-degree row-reduced coefficient
// matrices over the monomial basis (monomials of degree exactly d in r
// variables, exponent vectors in lexicographically decreasing order).
struct GradedSpace {
  std::vector<int> dims;                  // dims[d] = dimension in degree d
  std::vector<int> generators_per_degree; // qualifying products, pre-reduction
  std::vector<RatMatrix> basis;           // stripped RREF per degree
  int total = 0;
  int variables = 0;                      // r
  bool dropped_zero_forms = false;        // products with loop forms were skipped
};

struct ZonotopalOptions {
  int max_n = 12;
  int max_r = 5;
};

// Central space: span of products over Y whose complement still spans.
GradedSpace central_space(const VectorConfig& x, const ZonotopalOptions& opts = {});

// Internal space: span of products over Y whose complement keeps full rank
// after removing any one further element.
GradedSpace internal_space(const VectorConfig& x, const ZonotopalOptions& opts = {});

// Coefficient i is the dimension in degree i.
UnivarPoly hilbert_series(const GradedSpace& space);

struct GenericExtensionReport {
  bool dims_equal = false;
  bool spaces_equal = false;  // per-degree row-space equality, not just dims
  GradedSpace internal_of_extension;
  GradedSpace central_of_base;
  VectorConfig extended;
};

// Appends a generic vector to X and compares the internal space of the
// extension with the central space of X.
GenericExtensionReport internal_equals_central_after_generic(
    const VectorConfig& x, const ZonotopalOptions& opts = {});

}  // namespace matroidal

#endif
