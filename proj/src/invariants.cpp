#include "matroidal/invariants.hpp"

#include <stdexcept>

#include "matroidal/errors.hpp"
#include "matroidal/tutte.hpp"
#include "matroidal/zonotopal.hpp"

namespace matroidal {

namespace {

const UnivarPoly kZero;
const UnivarPoly kOne = UnivarPoly::constant(Int(1));
const UnivarPoly kQ = UnivarPoly::variable();
const UnivarPoly kOneMinusQ({Int(1), Int(-1)});
const UnivarPoly kOnePlusQ({Int(1), Int(1)});
const UnivarPoly kMinusQ({Int(0), Int(-1)});

Int sign_pow(int e) { return (e % 2 == 0) ? Int(1) : Int(-1); }

bool has_loop(const Matroid& m) {
  for (int e = 0; e < m.size(); ++e)
    if (m.is_loop(e)) return true;
  return false;
}

UnivarPoly q_power(int e) {
  std::vector<Int> mono(e + 1, Int(0));
  mono[e] = 1;
  return UnivarPoly(std::move(mono));
}

UnivarPoly chromatic_from(const BivarPoly& t, int rank, int kappa) {
  return t.substituted(kOneMinusQ, kZero) * sign_pow(rank) * q_power(kappa);
}

UnivarPoly flow_from(const BivarPoly& t, int edges, int rank) {
  return t.substituted(kZero, kOneMinusQ) * sign_pow(edges - rank);
}

ReliabilityReport reliability_from(const BivarPoly& t, int n, int edges) {
  // p^{|E|-n+1} T(1, 1/p) realized as a coefficient reversal of T(1, y).
  ReliabilityReport out;
  out.vertices = n;
  out.edges = edges;
  out.h_part = t.substituted(kOne, kQ).reversed(edges - n + 1);
  out.expanded = kOneMinusQ.pow(static_cast<unsigned>(n - 1)) * out.h_part;
  return out;
}

}  // namespace

UnivarPoly characteristic(const Matroid& m) {
  return cached_tutte(m).substituted(kOneMinusQ, kZero) * sign_pow(m.rank());
}

UnivarPoly reduced_characteristic(const Matroid& m) {
  if (has_loop(m))
    throw std::invalid_argument(
        "reduced characteristic polynomial requires a loopless matroid");
  auto [quot, rem] = characteristic(m).divided_by_linear(Int(1));
  if (rem != 0)
    throw ConsistencyError("characteristic polynomial does not vanish at q = 1");
  return quot;
}

UnivarPoly f_polynomial(const Matroid& m) {
  return cached_tutte(m).substituted(kOnePlusQ, kOne);
}

std::vector<Int> f_vector(const Matroid& m) {
  const UnivarPoly f = f_polynomial(m);
  const int r = m.rank();
  std::vector<Int> out(r + 1);
  for (int i = 0; i <= r; ++i) out[i] = f.coeff(r - i);
  return out;
}

UnivarPoly h_polynomial(const Matroid& m) {
  const UnivarPoly via_shift = f_polynomial(m).shifted(Int(-1));
  const UnivarPoly via_tutte = cached_tutte(m).substituted(kQ, kOne);
  if (via_shift != via_tutte)
    throw ConsistencyError("h-polynomial routes disagree: f(q-1) vs T(q,1)");
  return via_tutte;
}

std::vector<Int> h_vector(const Matroid& m) {
  const UnivarPoly h = h_polynomial(m);
  const int r = m.rank();
  std::vector<Int> out(r + 1);
  for (int i = 0; i <= r; ++i) out[i] = h.coeff(r - i);
  return out;
}

UnivarPoly chromatic(const MultiGraph& g) {
  const Matroid m = graphic_matroid(g);
  return chromatic_from(cached_tutte(m), m.rank(), g.components());
}

UnivarPoly flow(const MultiGraph& g) {
  const Matroid m = graphic_matroid(g);
  return flow_from(cached_tutte(m), g.edge_count(), m.rank());
}

UnivarPoly critical_config(const MultiGraph& g) {
  if (g.components() != 1)
    throw std::invalid_argument(
        "critical configuration polynomial requires a connected graph");
  return cached_tutte(graphic_matroid(g)).substituted(kOne, kQ);
}

ReliabilityReport reliability(const MultiGraph& g) {
  if (g.components() != 1)
    throw std::invalid_argument("reliability polynomial requires a connected graph");
  const BivarPoly t = cached_tutte(graphic_matroid(g));
  return reliability_from(t, g.vertex_count(), g.edge_count());
}

CoextensionIdentityReport verify_coextension_identity(const Matroid& m) {
  const int r = m.rank();
  const Matroid coext = free_coextension(m);
  CoextensionIdentityReport out;
  out.lhs = characteristic(coext).composed(kMinusQ) * sign_pow(r + 1);
  out.rhs = kOnePlusQ * f_polynomial(m);
  out.holds = out.lhs == out.rhs;
  return out;
}

ZonotopalIdentityReport verify_zonotopal_identities(const VectorConfig& x) {
  ZonotopalIdentityReport out;
  const Matroid m = vector_matroid(x);
  const BivarPoly t = cached_tutte(m);
  const int n = x.size();
  const int r = m.rank();

  const UnivarPoly hilb_central = hilbert_series(central_space(x));
  const UnivarPoly hilb_internal = hilbert_series(internal_space(x));
  // T(1, y) and T(0, y) reversed at top degree N-r realize q^{N-r} T(., 1/q).
  out.central_hilbert_matches_tutte =
      hilb_central == t.substituted(kOne, kQ).reversed(n - r);
  out.internal_hilbert_matches_tutte =
      hilb_internal == t.substituted(kZero, kQ).reversed(n - r);

  const VectorConfig xd = dual_realization(x);
  const UnivarPoly hilb_central_dual = hilbert_series(central_space(xd));
  const UnivarPoly hilb_internal_dual = hilbert_series(internal_space(xd));
  // q^r Hilb(P(X*), 1/q) is the reversal of the dual Hilbert series at r.
  out.central_dual_reversal =
      hilb_central_dual.reversed(r) == t.substituted(kQ, kOne);
  out.internal_dual_reversal =
      hilb_internal_dual.reversed(r) == t.substituted(kQ, kZero);

  // Substituting q -> q+1 into the reversal gives (q+1)^r Hilb(., 1/(q+1)).
  out.f_identity =
      f_polynomial(m) == hilb_central_dual.reversed(r).shifted(Int(1));
  out.chi_identity = characteristic(m).composed(kMinusQ) * sign_pow(r) ==
                     hilb_internal_dual.reversed(r).shifted(Int(1));
  return out;
}

InvariantReport matroid_invariant_report(const std::string& name, const Matroid& m) {
  InvariantReport out;
  out.name = name;
  out.source_tutte = cached_tutte(m);
  out.ground_size = m.size();
  out.rank = m.rank();
  if (name == "charpoly")
    out.poly = characteristic(m);
  else if (name == "reduced_charpoly")
    out.poly = reduced_characteristic(m);
  else if (name == "fvec")
    out.poly = f_polynomial(m);
  else if (name == "hvec")
    out.poly = h_polynomial(m);
  else
    throw std::invalid_argument("unknown matroid invariant: " + name);
  return out;
}

InvariantReport graph_invariant_report(const std::string& name, const MultiGraph& g) {
  const Matroid m = graphic_matroid(g);
  InvariantReport out;
  out.name = name;
  out.source_tutte = cached_tutte(m);
  out.ground_size = g.edge_count();
  out.rank = m.rank();
  out.components = g.components();
  if (name == "chromatic")
    out.poly = chromatic_from(out.source_tutte, m.rank(), g.components());
  else if (name == "flow")
    out.poly = flow_from(out.source_tutte, g.edge_count(), m.rank());
  else if (name == "critical") {
    if (g.components() != 1)
      throw std::invalid_argument(
          "critical configuration polynomial requires a connected graph");
    out.poly = out.source_tutte.substituted(kOne, kQ);
  } else if (name == "reliability") {
    if (g.components() != 1)
      throw std::invalid_argument("reliability polynomial requires a connected graph");
    ReliabilityReport r = reliability_from(out.source_tutte, g.vertex_count(),
                                           g.edge_count());
    out.poly = r.expanded;
    out.h_part = r.h_part;
  } else {
    throw std::invalid_argument("unknown graph invariant: " + name);
  }
  return out;
}

}  // namespace matroidal
