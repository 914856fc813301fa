#include "matroidal/vector_config.hpp"

#include <stdexcept>

namespace matroidal {

VectorConfig::VectorConfig(std::vector<std::vector<Rat>> vectors)
    : vectors_(std::move(vectors)) {
  if (vectors_.empty())
    throw std::invalid_argument("vector configuration must be non-empty");
  if (vectors_.size() > 64)
    throw std::invalid_argument("vector count over the 64-element ground-set limit");
  r_ = static_cast<int>(vectors_[0].size());
  for (const auto& v : vectors_)
    if (static_cast<int>(v.size()) != r_)
      throw std::invalid_argument("vectors of mixed dimension");
  scaled_.reserve(vectors_.size());
  for (const auto& v : vectors_) {
    Int lcm(1);
    for (const auto& x : v)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Int> col(r_);
    for (int i = 0; i < r_; ++i) {
      Rat s = v[i] * Rat(lcm);
      col[i] = s.get_num();
    }
    scaled_.push_back(std::move(col));
  }
  spans_ = rank_of((size() >= 64) ? ~Subset(0) : ((Subset(1) << size()) - 1)) == r_;
}

int VectorConfig::rank_of(Subset a) const {
  // Rows of the eliminated matrix are the selected (rescaled) vectors.
  std::vector<std::vector<Int>> rows;
  for (int i = 0; i < size(); ++i)
    if (a >> i & 1u) rows.push_back(scaled_[i]);
  if (rows.empty()) return 0;
  return rank_fraction_free(std::move(rows));
}

VectorConfig VectorConfig::with_appended(std::vector<Rat> v) const {
  auto vs = vectors_;
  vs.push_back(std::move(v));
  return VectorConfig(std::move(vs));
}

VectorConfig realize_free_extension(const VectorConfig& x) {
  const int r = x.dimension();
  const int n = x.size();
  if (!x.spans())
    throw std::invalid_argument("free extension realization requires a spanning list");
  if (r == 0) return x.with_appended({});  // the new element is a loop, like all of X

  // Candidate subsets spanning hyperplanes: independent subsets of size r-1.
  std::vector<Subset> hyperplane_bases;
  for (Subset a = 0; a < (Subset(1) << n); ++a)
    if (popcount64(a) == r - 1 && x.rank_of(a) == r - 1) hyperplane_bases.push_back(a);

  for (Int t(1);; ++t) {
    std::vector<Rat> cand(r);
    Int p(1);
    for (int i = 0; i < r; ++i) {
      cand[i] = Rat(p);
      p *= t;
    }
    VectorConfig ext = x.with_appended(cand);
    const Subset new_bit = Subset(1) << n;
    bool generic = true;
    for (Subset a : hyperplane_bases)
      if (ext.rank_of(a | new_bit) != r) {
        generic = false;
        break;
      }
    if (generic) return ext;
  }
}

VectorConfig dual_realization(const VectorConfig& x) {
  if (!x.spans())
    throw std::invalid_argument("dual realization requires a spanning list");
  const int r = x.dimension();
  const int n = x.size();
  RatMatrix m(r, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < r; ++i) m.at(i, j) = x.vec(j)[i];
  const auto kernel = kernel_basis(m);  // n - r vectors of length n
  const int dual_dim = n - r;
  std::vector<std::vector<Rat>> dual_vectors(n, std::vector<Rat>(dual_dim, Rat(0)));
  for (int b = 0; b < dual_dim; ++b)
    for (int j = 0; j < n; ++j) dual_vectors[j][b] = kernel[b][j];
  return VectorConfig(std::move(dual_vectors));
}

}  // namespace matroidal
