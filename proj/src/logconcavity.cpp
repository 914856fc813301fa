#include "matroidal/logconcavity.hpp"

#include <algorithm>
#include <stdexcept>

#include "matroidal/invariants.hpp"
#include "matroidal/polynomial.hpp"

namespace matroidal {

ConcavityReport analyze(const IntSeq& s) {
  if (s.empty()) throw std::invalid_argument("empty sequence");
  const int len = static_cast<int>(s.size());
  ConcavityReport out;

  // Modes.
  const Int& max_val = *std::max_element(s.begin(), s.end());
  for (int i = 0; i < len; ++i)
    if (s[i] == max_val) {
      out.mode_hi = i;
    }
  for (int i = len - 1; i >= 0; --i)
    if (s[i] == max_val) out.mode_lo = i;

  // Unimodality: non-decreasing up to a peak, non-increasing after.
  out.unimodal = true;
  int i = 1;
  while (i < len && s[i] >= s[i - 1]) ++i;
  while (i < len && s[i] <= s[i - 1]) ++i;
  if (i < len) out.unimodal = false;

  // Interior zero: a zero entry with a positive entry on both sides of it.
  for (int j = 1; j + 1 < len; ++j)
    if (s[j] == 0) {
      const bool pos_left = std::any_of(s.begin(), s.begin() + j,
                                        [](const Int& v) { return v > 0; });
      const bool pos_right = std::any_of(s.begin() + j + 1, s.end(),
                                         [](const Int& v) { return v > 0; });
      if (pos_left && pos_right) out.has_interior_zero = true;
    }

  out.log_concave = true;
  out.strictly_log_concave = true;
  for (int j = 1; j + 1 < len; ++j) {
    const Int lhs = s[j] * s[j];
    const Int rhs = s[j - 1] * s[j + 1];
    if (lhs < rhs) {
      out.log_concave = false;
      out.violations.emplace_back(j, lhs, rhs);
    }
    if (lhs <= rhs) out.strictly_log_concave = false;
  }

  // Ultra: cross-multiplied binomial-normalized inequality with n = s[1].
  out.ultra_log_concave = out.log_concave;
  if (len >= 2 && s[1] >= 0) {
    const Int& n_big = s[1];
    for (int j = 1; j + 1 < len; ++j) {
      const Int bm = binomial(n_big, j - 1);
      const Int b0 = binomial(n_big, j);
      const Int bp = binomial(n_big, j + 1);
      if (bm == 0 || b0 == 0 || bp == 0) {
        out.ultra_skipped.push_back(j);
        continue;
      }
      if (s[j] * s[j] * bm * bp < s[j - 1] * s[j + 1] * b0 * b0)
        out.ultra_log_concave = false;
    }
  }
  return out;
}

ModesResult modes(const IntSeq& s) {
  const ConcavityReport rep = analyze(s);
  return {rep.mode_lo, rep.mode_hi, rep.unimodal};
}

bool check_first_half_increasing(const IntSeq& f) {
  if (f.empty()) throw std::invalid_argument("empty sequence");
  const int r = static_cast<int>(f.size()) - 1;
  for (int i = 1; i <= r / 2; ++i)
    if (!(f[i - 1] < f[i])) return false;
  return true;
}

IntSeq thickened_f_vector(const IntSeq& f, long k) {
  if (k < 1) throw std::invalid_argument("thickening requires k >= 1");
  IntSeq out(f.size());
  Int power(1);
  const Int kk(k);
  for (size_t i = 0; i < f.size(); ++i) {
    out[i] = f[i] * power;
    power *= kk;
  }
  return out;
}

IntSeq h_from_f(const IntSeq& f) {
  const int r = static_cast<int>(f.size()) - 1;
  // f(q) = sum f_i q^{r-i}; h = coefficients of f(q-1) read the same way.
  std::vector<Int> ascending(r + 1, Int(0));
  for (int i = 0; i <= r; ++i) ascending[r - i] = f[i];
  const UnivarPoly h = UnivarPoly(std::move(ascending)).shifted(Int(-1));
  IntSeq out(r + 1);
  for (int i = 0; i <= r; ++i) out[i] = h.coeff(r - i);
  return out;
}

ThickenSearchResult thicken_h_search(const Matroid& m, long k_max) {
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  const IntSeq f = f_vector(m);
  const int r = m.rank();

  ThickenSearchResult out;
  const Int base = f.size() > 1 ? f[1] * r : Int(0);
  out.theorem_bound = int_pow(base, static_cast<unsigned long>(3) * r);
  if (out.theorem_bound < 1) out.theorem_bound = 1;

  for (long k = 1; k <= k_max; ++k) {
    const IntSeq h = h_from_f(thickened_f_vector(f, k));
    ConcavityReport rep = analyze(h);
    const bool found = rep.log_concave;
    if (out.trace.size() < ThickenSearchResult::kTraceCap)
      out.trace.emplace_back(k, std::move(rep));
    if (found) {
      out.k0 = k;
      out.h_at_result = h;
      return out;
    }
    if (k == k_max) out.h_at_result = h;
  }
  return out;
}

SwartzReport swartz_bound(const IntSeq& f, int r) {
  if (static_cast<int>(f.size()) != r + 1)
    throw std::invalid_argument("f-vector length must be r + 1");
  if (r < 1 || f.size() < 2 || f[1] < 1)
    throw std::invalid_argument(
        "bounds require rank >= 1 and at least one non-loop element");
  SwartzReport out;
  const Int& f1 = f[1];
  out.h_r_cap = binomial(f1 - 1, r - 1);
  out.bounds.resize(r + 1);
  out.within_bounds = true;
  out.within_coarse = true;
  for (int i = 0; i <= r; ++i) {
    Int bound(0);
    for (int j = 0; j <= i; ++j)
      bound += binomial(r - j, r - i) *
               (binomial(r - 1, j) * out.h_r_cap + binomial(r - 1, j - 1));
    out.bounds[i] = bound;
    if (f[i] > bound) {
      out.within_bounds = false;
      out.violated.push_back(i);
    }
    // Coarse cap r^{2i} f_1^r.
    const Int coarse = int_pow(Int(r), 2ul * i) *
                       int_pow(f1, static_cast<unsigned long>(r));
    if (f[i] > coarse) {
      out.within_coarse = false;
      if (out.violated.empty() || out.violated.back() != i)
        out.violated.push_back(i);
    }
  }
  return out;
}

ShiftLemmaReport shift_preserves_strict_lc(const IntSeq& a) {
  if (a.empty() || a[0] < 1)
    throw std::invalid_argument("shift lemma requires a_0 >= 1");
  for (const Int& v : a)
    if (v < 0) throw std::invalid_argument("shift lemma requires non-negative entries");
  ShiftLemmaReport out;
  out.input_report = analyze(a);
  const int r = static_cast<int>(a.size()) - 1;
  std::vector<Int> ascending(r + 1, Int(0));
  for (int i = 0; i <= r; ++i) ascending[r - i] = a[i];
  const UnivarPoly b = UnivarPoly(std::move(ascending)).shifted(Int(1));
  out.shifted.resize(r + 1);
  for (int i = 0; i <= r; ++i) out.shifted[i] = b.coeff(r - i);
  out.output_report = analyze(out.shifted);
  return out;
}

}  // namespace matroidal
