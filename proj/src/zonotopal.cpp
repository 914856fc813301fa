#include "matroidal/zonotopal.hpp"

#include <map>
#include <stdexcept>

#include "matroidal/matroid.hpp"

namespace matroidal {

namespace {

using Monomial = std::vector<int>;  // exponent vector, length r

// Monomials of degree exactly d in r variables, lexicographically decreasing.
std::vector<Monomial> monomials_of_degree(int r, int d) {
  std::vector<Monomial> out;
  if (r == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  Monomial cur(r, 0);
  // Recursive enumeration in decreasing lex order.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == r - 1) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

// Homogeneous polynomial as monomial -> coefficient.
using DensePoly = std::map<Monomial, Rat, std::greater<Monomial>>;

DensePoly multiply_by_form(const DensePoly& p, const LinForm& f) {
  DensePoly out;
  for (const auto& [mono, c] : p) {
    for (size_t i = 0; i < f.coeff.size(); ++i) {
      if (f.coeff[i] == 0) continue;
      Monomial m2 = mono;
      ++m2[i];
      out[m2] += c * f.coeff[i];
    }
  }
  return out;
}

struct SpaceBuilder {
  int r = 0;
  // generators grouped by degree
  std::vector<std::vector<DensePoly>> gens;

  void add(const DensePoly& p, int degree) {
    if (static_cast<int>(gens.size()) <= degree) gens.resize(degree + 1);
    gens[degree].push_back(p);
  }

  GradedSpace build() const {
    GradedSpace out;
    out.variables = r;
    out.dims.assign(gens.size(), 0);
    out.generators_per_degree.assign(gens.size(), 0);
    out.basis.resize(gens.size());
    for (size_t d = 0; d < gens.size(); ++d) {
      out.generators_per_degree[d] = static_cast<int>(gens[d].size());
      const auto monos = monomials_of_degree(r, static_cast<int>(d));
      std::map<Monomial, int, std::greater<Monomial>> index;
      for (size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
      RatMatrix mat(static_cast<int>(gens[d].size()), static_cast<int>(monos.size()));
      for (size_t g = 0; g < gens[d].size(); ++g)
        for (const auto& [mono, c] : gens[d][g]) mat.at(g, index.at(mono)) = c;
      out.basis[d] = rref(mat);
      out.dims[d] = out.basis[d].rows;
      out.total += out.dims[d];
    }
    return out;
  }
};

void check_budget(const VectorConfig& x, const ZonotopalOptions& opts) {
  if (x.size() > opts.max_n || x.dimension() > opts.max_r)
    throw std::invalid_argument(
        "vector configuration exceeds the zonotopal size budget (N <= " +
        std::to_string(opts.max_n) + ", r <= " + std::to_string(opts.max_r) + ")");
  if (!x.spans())
    throw std::invalid_argument("zonotopal spaces require a spanning configuration");
}

// Expands the product of the forms selected by y; false when a zero form
// (loop vector) makes the whole product vanish.
bool expand_product(const VectorConfig& x, Subset y, DensePoly& out, int& degree) {
  const int r = x.dimension();
  out.clear();
  out.emplace(Monomial(r, 0), Rat(1));
  degree = 0;
  for (int i = 0; i < x.size(); ++i) {
    if (!(y >> i & 1u)) continue;
    LinForm f{x.vec(i)};
    if (f.is_zero()) return false;
    out = multiply_by_form(out, f);
    ++degree;
  }
  return true;
}

}  // namespace

GradedSpace central_space(const VectorConfig& x, const ZonotopalOptions& opts) {
  check_budget(x, opts);
  const int n = x.size();
  const int r = x.dimension();
  const Subset full = (n == 64) ? ~Subset(0) : (Subset(1) << n) - 1;
  const Matroid m = vector_matroid(x);

  SpaceBuilder builder;
  builder.r = r;
  bool dropped = false;
  for (Subset y = 0; y < (Subset(1) << n); ++y) {
    if (m.rank_of(full & ~y) != r) continue;
    DensePoly p;
    int degree = 0;
    if (!expand_product(x, y, p, degree))
      dropped = true;
    else
      builder.add(p, degree);
  }
  GradedSpace out = builder.build();
  out.dropped_zero_forms = dropped;
  return out;
}

GradedSpace internal_space(const VectorConfig& x, const ZonotopalOptions& opts) {
  check_budget(x, opts);
  const int n = x.size();
  const int r = x.dimension();
  const Subset full = (n == 64) ? ~Subset(0) : (Subset(1) << n) - 1;
  const Matroid m = vector_matroid(x);

  SpaceBuilder builder;
  builder.r = r;
  bool dropped = false;
  for (Subset y = 0; y < (Subset(1) << n); ++y) {
    // The complement must span, and must keep spanning after removing any one
    // further element (removing an element of Y again is a no-op and skipped).
    bool qualifies = m.rank_of(full & ~y) == r;
    for (int j = 0; j < n && qualifies; ++j) {
      if (y >> j & 1u) continue;
      if (m.rank_of(full & ~y & ~(Subset(1) << j)) != r) qualifies = false;
    }
    if (qualifies) {
      DensePoly p;
      int degree = 0;
      if (!expand_product(x, y, p, degree))
        dropped = true;
      else
        builder.add(p, degree);
    }
  }
  GradedSpace out = builder.build();
  out.dropped_zero_forms = dropped;
  return out;
}

UnivarPoly hilbert_series(const GradedSpace& space) {
  std::vector<Int> coeffs;
  coeffs.reserve(space.dims.size());
  for (int d : space.dims) coeffs.emplace_back(d);
  return UnivarPoly(std::move(coeffs));
}

GenericExtensionReport internal_equals_central_after_generic(
    const VectorConfig& x, const ZonotopalOptions& opts) {
  if (x.size() + 1 > opts.max_n)
    throw std::invalid_argument("extension exceeds the zonotopal size budget");

  GenericExtensionReport out{false, false, {}, {}, realize_free_extension(x)};
  out.internal_of_extension = internal_space(out.extended, opts);
  out.central_of_base = central_space(x, opts);

  const auto& a = out.internal_of_extension;
  const auto& b = out.central_of_base;
  const size_t common = std::max(a.dims.size(), b.dims.size());
  out.dims_equal = true;
  out.spaces_equal = true;
  for (size_t d = 0; d < common; ++d) {
    const int da = d < a.dims.size() ? a.dims[d] : 0;
    const int db = d < b.dims.size() ? b.dims[d] : 0;
    if (da != db) {
      out.dims_equal = false;
      out.spaces_equal = false;
      break;
    }
    if (da == 0) continue;
    if (!(a.basis[d] == b.basis[d])) out.spaces_equal = false;
  }
  if (a.total != b.total) out.dims_equal = out.spaces_equal = false;
  return out;
}

}  // namespace matroidal
