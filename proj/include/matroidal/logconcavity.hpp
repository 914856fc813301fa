#ifndef MATROIDAL_LOGCONCAVITY_HPP
#define MATROIDAL_LOGCONCAVITY_HPP

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "matroidal/matroid.hpp"
#include "matroidal/numbers.hpp"

namespace matroidal {

// A finite coefficient sequence (f-vector, h-vector, |coefficients| of a
// characteristic polynomial, ...), index 0 first.
using IntSeq = std::vector<Int>;

struct ConcavityReport {
  bool unimodal = false;
  bool log_concave = false;
  bool strictly_log_concave = false;
  bool ultra_log_concave = false;
  int mode_lo = 0;  // smallest argmax index
  int mode_hi = 0;  // largest argmax index
  bool has_interior_zero = false;  // zero strictly between positive entries
  std::vector<std::tuple<int, Int, Int>> violations;  // (i, a_i^2, a_{i-1}a_{i+1})
  std::vector<int> ultra_skipped;  // indices where a binomial weight vanished
};

// All flags decided by exact integer comparisons; total on any sequence.
// Ultra-log-concavity uses n = s[1] and the cross-multiplied inequality
// a_i^2 C(n,i-1) C(n,i+1) >= a_{i-1} a_{i+1} C(n,i)^2.
ConcavityReport analyze(const IntSeq& s);

// Smallest and largest argmax indices; .second < 0 never happens, and the
// bool is false when the sequence is not unimodal (argmax positions may then
// be non-adjacent).
struct ModesResult {
  int lo = 0;
  int hi = 0;
  bool unimodal = false;
};
ModesResult modes(const IntSeq& s);

// f_0 < f_1 < ... < f_{floor(r/2)} with r = len - 1.
bool check_first_half_increasing(const IntSeq& f);

// f-vector of the k-fold thickening: f_i -> k^i f_i.
IntSeq thickened_f_vector(const IntSeq& f, long k);

// h-vector from an f-vector via h(q) = f(q-1) on sum f_i q^{r-i}.
IntSeq h_from_f(const IntSeq& f);

struct ThickenSearchResult {
  std::optional<long> k0;
  std::vector<std::pair<long, ConcavityReport>> trace;  // capped, see kTraceCap
  Int theorem_bound;  // (f_1 * r)^{3r}, at least 1
  IntSeq h_at_result; // h-vector at k0 (or at k_max when not found)
  static constexpr size_t kTraceCap = 256;
};

// Smallest k <= k_max whose thickened h-vector is log-concave. Works on the
// scaled f-vector only; the explicit thickened matroid is never materialized.
ThickenSearchResult thicken_h_search(const Matroid& m, long k_max);

struct SwartzReport {
  IntSeq bounds;            // per-index upper bounds with the h_r cap inserted
  Int h_r_cap;              // C(f_1 - 1, r - 1)
  bool within_bounds = false;
  bool within_coarse = false;  // f_i <= r^{2i} f_1^r
  std::vector<int> violated;
};

// Upper bounds on a matroid f-vector; a violation falsifies the input as a
// matroid f-vector. Requires r >= 1 and f_1 >= 1.
SwartzReport swartz_bound(const IntSeq& f, int r);

struct ShiftLemmaReport {
  IntSeq shifted;                 // b with b(q) = a(q+1)
  ConcavityReport input_report;
  ConcavityReport output_report;  // expected strictly log-concave
};

// Harness for the shift lemma: log-concave a (a_0 >= 1, contiguous support)
// must shift to a strictly log-concave b.
ShiftLemmaReport shift_preserves_strict_lc(const IntSeq& a);

}  // namespace matroidal

#endif
