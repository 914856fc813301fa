#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "matroidal/invariants.hpp"
#include "matroidal/logconcavity.hpp"
#include "oracles.hpp"

using namespace matroidal;

namespace {

IntSeq seq(std::vector<long> values) {
  IntSeq out;
  for (long v : values) out.emplace_back(v);
  return out;
}

// Random log-concave sequence with contiguous support starting at 0:
// 2^{concave exponent} times a binomial row, optional trailing zeros.
IntSeq random_log_concave(std::mt19937& rng, int max_len) {
  const int len = 1 + static_cast<int>(rng() % max_len);
  const int support = 1 + static_cast<int>(rng() % len);
  std::vector<int> deltas(support - 1);
  for (auto& d : deltas) d = static_cast<int>(rng() % 3) - 1;
  std::sort(deltas.begin(), deltas.end(), std::greater<int>());
  std::vector<int> expo(support, 0);
  for (int i = 1; i < support; ++i) expo[i] = expo[i - 1] + deltas[i - 1];
  const int min_expo = *std::min_element(expo.begin(), expo.end());
  IntSeq out(len, Int(0));
  const bool with_binomials = rng() % 2 == 0;
  for (int i = 0; i < support; ++i) {
    out[i] = int_pow(Int(2), static_cast<unsigned long>(expo[i] - min_expo));
    if (with_binomials) out[i] *= binomial(support - 1, i);
  }
  return out;
}

}  // namespace

TEST_CASE("analyze on pinned sequences") {
  const auto a = analyze(seq({1, 3, 3}));
  CHECK(a.log_concave);
  CHECK(a.strictly_log_concave);  // 9 > 3
  CHECK(a.unimodal);
  CHECK(a.mode_lo == 1);
  CHECK(a.mode_hi == 2);

  const auto b = analyze(seq({1, 6, 15}));
  CHECK(b.strictly_log_concave);  // 36 > 15
  CHECK(b.mode_lo == 2);
  CHECK(b.mode_hi == 2);

  const auto c = analyze(seq({1, 1, 2}));
  CHECK_FALSE(c.log_concave);  // 1 < 2
  REQUIRE(c.violations.size() == 1);
  CHECK(std::get<0>(c.violations[0]) == 1);
  CHECK(std::get<1>(c.violations[0]) == Int(1));
  CHECK(std::get<2>(c.violations[0]) == Int(2));

  const auto d = analyze(seq({1, 0, 0, 5}));
  CHECK(d.has_interior_zero);
  CHECK(d.log_concave);  // literal comparisons all hold
  CHECK_FALSE(d.unimodal);
}

TEST_CASE("flag consistency") {
  std::mt19937 rng(67);
  for (int iter = 0; iter < 500; ++iter) {
    IntSeq s(1 + rng() % 8);
    for (auto& v : s) v = Int(static_cast<long>(rng() % 12));
    if (s[0] == 0) s[0] = 1;
    const auto rep = analyze(s);
    if (rep.strictly_log_concave) CHECK(rep.log_concave);
    bool all_positive = true;
    for (const auto& v : s)
      if (v == 0) all_positive = false;
    if (all_positive && rep.log_concave) CHECK(rep.unimodal);
    // Reversal invariance of the concavity flags.
    IntSeq rev(s.rbegin(), s.rend());
    const auto rrep = analyze(rev);
    CHECK(rrep.log_concave == rep.log_concave);
    CHECK(rrep.strictly_log_concave == rep.strictly_log_concave);
  }
}

TEST_CASE("ultra log-concavity") {
  // Binomial rows are ultra log-concave: f_i = C(n, i) gives equality.
  const auto rows = analyze(seq({1, 4, 6, 4, 1}));
  CHECK(rows.ultra_log_concave);
  // f-vector of U_{2,6}: ultra since C(6,i) normalization still favors it.
  CHECK(analyze(seq({1, 6, 15})).ultra_log_concave);
  // Short f_1 truncates the binomials: indices get skipped and flagged.
  const auto skipped = analyze(seq({1, 2, 2, 1}));
  CHECK_FALSE(skipped.ultra_skipped.empty());
}

TEST_CASE("modes") {
  const auto m1 = modes(seq({1, 3, 3}));
  CHECK(m1.lo == 1);
  CHECK(m1.hi == 2);
  CHECK(m1.unimodal);
  const auto m2 = modes(seq({5, 5, 5}));
  CHECK(m2.lo == 0);
  CHECK(m2.hi == 2);
  const auto m3 = modes(seq({1, 6, 15}));
  CHECK(m3.lo == 2);

  // Smallest mode of the free matroid's f-vector sits at floor(r/2).
  for (int r = 1; r <= 8; ++r) {
    IntSeq f(r + 1);
    for (int i = 0; i <= r; ++i) f[i] = binomial(r, i);
    CHECK(modes(f).lo == r / 2);
  }
}

TEST_CASE("first half strictly increasing") {
  CHECK(check_first_half_increasing(seq({1, 3, 3})));
  CHECK(check_first_half_increasing(seq({1, 6, 15})));
  CHECK_FALSE(check_first_half_increasing(seq({1, 1, 2, 2, 1})));
  for (const Matroid& m :
       {uniform_matroid(3, 7), uniform_matroid(4, 4),
        graphic_matroid(MultiGraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}))})
    CHECK(check_first_half_increasing(f_vector(m)));
}

TEST_CASE("h-vector from f-vector") {
  CHECK(h_from_f(seq({1, 3, 3})) == seq({1, 1, 1}));
  CHECK(h_from_f(seq({1, 6, 15})) == seq({1, 4, 10}));
  CHECK(thickened_f_vector(seq({1, 6, 15}), 2) == seq({1, 12, 60}));
  // h of the k-thickened U_{2,6} is (1, 6k-2, 15k^2-6k+1).
  for (long k = 1; k <= 5; ++k) {
    const IntSeq h = h_from_f(thickened_f_vector(seq({1, 6, 15}), k));
    CHECK(h == IntSeq{Int(1), Int(6 * k - 2), Int(15 * k * k - 6 * k + 1)});
  }
}

TEST_CASE("thickening search") {
  // Already log-concave h-vector: k0 = 1.
  const auto u23 = thicken_h_search(uniform_matroid(2, 3), 100);
  REQUIRE(u23.k0.has_value());
  CHECK(*u23.k0 == 1);
  CHECK(u23.h_at_result == seq({1, 1, 1}));

  const auto u26 = thicken_h_search(uniform_matroid(2, 6), 100);
  REQUIRE(u26.k0.has_value());
  CHECK(*u26.k0 == 1);  // (6k-2)^2 >= 15k^2-6k+1 already at k = 1
  CHECK(u26.theorem_bound == int_pow(Int(12), 6));

  // The scaling path agrees with the explicit thickened-matroid oracle.
  for (const Matroid& m : {uniform_matroid(2, 4), uniform_matroid(1, 2),
                           graphic_matroid(MultiGraph(3, {{0, 1}, {1, 2}, {0, 2}}))})
    for (int k = 1; k * m.size() <= 16 && k <= 4; ++k) {
      const IntSeq scaled = thickened_f_vector(f_vector(m), k);
      const IntSeq explicit_f = oracles::f_vector_bruteforce(thicken(m, k));
      CHECK(scaled == explicit_f);
    }

  CHECK_THROWS_AS(thicken_h_search(uniform_matroid(1, 2), 0), std::invalid_argument);
}

TEST_CASE("upper bounds on matroid f-vectors") {
  // U_{2,3}: bounds (2, 7, 6) dominate f = (1, 3, 3); h_r cap = C(2,1) = 2.
  const auto rep = swartz_bound(seq({1, 3, 3}), 2);
  CHECK(rep.h_r_cap == Int(2));
  CHECK(rep.bounds == seq({2, 7, 6}));
  CHECK(rep.within_bounds);
  CHECK(rep.within_coarse);

  // Free matroids stay within bounds.
  for (int r = 1; r <= 6; ++r) {
    IntSeq f(r + 1);
    for (int i = 0; i <= r; ++i) f[i] = binomial(r, i);
    const auto free_rep = swartz_bound(f, r);
    CHECK(free_rep.within_bounds);
    CHECK(free_rep.within_coarse);
  }

  // A non-f-vector gets caught.
  const auto bogus = swartz_bound(seq({1, 1, 1000000}), 2);
  CHECK_FALSE(bogus.within_bounds);
  CHECK_THROWS_AS(swartz_bound(seq({1, 3, 3}), 3), std::invalid_argument);
}

TEST_CASE("shift lemma harness on pinned inputs") {
  const auto pure_power = shift_preserves_strict_lc(seq({1, 0, 0}));
  CHECK(pure_power.shifted == seq({1, 2, 1}));
  CHECK(pure_power.output_report.strictly_log_concave);

  const auto ones = shift_preserves_strict_lc(seq({1, 1, 1}));
  CHECK(ones.shifted == seq({1, 3, 3}));
  CHECK(ones.output_report.strictly_log_concave);

  CHECK_THROWS_AS(shift_preserves_strict_lc(seq({0, 1})), std::invalid_argument);
}

TEST_CASE("shift lemma random suite") {
  std::mt19937 rng(71);
  for (int iter = 0; iter < 2000; ++iter) {
    const IntSeq a = random_log_concave(rng, 12);
    const auto rep = shift_preserves_strict_lc(a);
    REQUIRE(rep.input_report.log_concave);
    REQUIRE_FALSE(rep.input_report.has_interior_zero);
    CHECK(rep.output_report.strictly_log_concave);
  }
}

TEST_CASE("interior zeros break the shift lemma hypothesis") {
  // Literally log-concave (all products vanish) yet the shift is not
  // strictly log-concave: the hypothesis needs contiguous support.
  const auto rep = shift_preserves_strict_lc(seq({1, 0, 0, 0, 100}));
  CHECK(rep.input_report.log_concave);
  CHECK(rep.input_report.has_interior_zero);
  CHECK_FALSE(rep.output_report.strictly_log_concave);
}
