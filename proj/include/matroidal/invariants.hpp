#ifndef MATROIDAL_INVARIANTS_HPP
#define MATROIDAL_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "matroidal/matroid.hpp"
#include "matroidal/polynomial.hpp"
#include "matroidal/vector_config.hpp"

namespace matroidal {

// chi_M(q) = (-1)^r T_M(1-q, 0). Identically zero when M has a loop.
UnivarPoly characteristic(const Matroid& m);

// chi_M(q) / (q - 1), exact quotient with zero remainder. Requires a loopless
// matroid; throws std::invalid_argument otherwise.
UnivarPoly reduced_characteristic(const Matroid& m);

// f_M(q) = T_M(1+q, 1) = sum_i f_i q^{r-i}.
UnivarPoly f_polynomial(const Matroid& m);

// f_i = number of independent sets of size i, read off f_polynomial.
std::vector<Int> f_vector(const Matroid& m);

// h_M(q) = f_M(q-1) = T_M(q, 1). Both routes are computed; disagreement is a
// fatal ConsistencyError.
UnivarPoly h_polynomial(const Matroid& m);
std::vector<Int> h_vector(const Matroid& m);

// chi_G(q) = (-1)^{rk} q^{kappa} T_{M(G)}(1-q, 0).
UnivarPoly chromatic(const MultiGraph& g);

// phi_G(q) = (-1)^{|E|-rk} T_{M(G)}(0, 1-q); counts nowhere-zero q-flows.
UnivarPoly flow(const MultiGraph& g);

// P_G(q) = T_{M(G)}(1, q); requires G connected.
UnivarPoly critical_config(const MultiGraph& g);

struct ReliabilityReport {
  UnivarPoly expanded;  // polynomial in p, monomial basis
  UnivarPoly h_part;    // the factor multiplying (1-p)^{n-1}
  int vertices = 0;
  int edges = 0;
};

// R_G(p) = (1-p)^{n-1} p^{|E|-n+1} T_G(1, 1/p); requires G connected. The 1/p
// substitution is realized by coefficient reversal, never symbolically.
ReliabilityReport reliability(const MultiGraph& g);

struct CoextensionIdentityReport {
  bool holds = false;
  UnivarPoly lhs;  // (-1)^{r+1} chi_{M x e}(-q)
  UnivarPoly rhs;  // (1+q) f_M(q)
};

// The coextension/characteristic identity, checked exactly.
CoextensionIdentityReport verify_coextension_identity(const Matroid& m);

struct ZonotopalIdentityReport {
  bool central_hilbert_matches_tutte = false;   // Hilb(P(X),q)  = q^{N-r} T_X(1,1/q)
  bool internal_hilbert_matches_tutte = false;  // Hilb(P-(X),q) = q^{N-r} T_X(0,1/q)
  bool central_dual_reversal = false;           // q^r Hilb(P(X*),1/q)  = T_X(q,1)
  bool internal_dual_reversal = false;          // q^r Hilb(P-(X*),1/q) = T_X(q,0)
  bool f_identity = false;                      // f_X(q) = (q+1)^r Hilb(P(X*),1/(q+1))
  bool chi_identity = false;  // (-1)^r chi_X(-q) = (q+1)^r Hilb(P-(X*),1/(q+1))
  bool all() const {
    return central_hilbert_matches_tutte && internal_hilbert_matches_tutte &&
           central_dual_reversal && internal_dual_reversal && f_identity &&
           chi_identity;
  }
};

// Compares Tutte-derived series against linear-algebra Hilbert series for X
// and a dual realization X*.
ZonotopalIdentityReport verify_zonotopal_identities(const VectorConfig& x);

struct InvariantReport {
  std::string name;
  UnivarPoly poly;
  BivarPoly source_tutte;
  int ground_size = 0;
  int rank = 0;
  int components = -1;  // graphs only
  std::optional<UnivarPoly> h_part;  // reliability only
};

InvariantReport matroid_invariant_report(const std::string& name, const Matroid& m);
InvariantReport graph_invariant_report(const std::string& name, const MultiGraph& g);

}  // namespace matroidal

#endif
