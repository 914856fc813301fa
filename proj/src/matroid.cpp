#include "matroidal/matroid.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace matroidal {

struct Matroid::Impl {
  int n = 0;
  int full_rank = 0;
  Provenance prov = Provenance::derived;
  std::function<int(Subset)> raw_rank;
  bool bases_validated = true;
  std::optional<MultiGraph> graph;

  mutable std::mutex mu;
  mutable std::unordered_map<Subset, int> rank_memo;
  mutable std::optional<BivarPoly> tutte;
};

namespace {

std::shared_ptr<Matroid::Impl> make_impl(int n, Provenance prov,
                                         std::function<int(Subset)> raw) {
  if (n < 0) throw std::invalid_argument("negative ground-set size");
  if (n > Matroid::kMaxGroundSize)
    throw std::invalid_argument("ground set over the 64-element limit");
  auto impl = std::make_shared<Matroid::Impl>();
  impl->n = n;
  impl->prov = prov;
  impl->raw_rank = std::move(raw);
  impl->full_rank = impl->raw_rank(n == 64 ? ~Subset(0) : (Subset(1) << n) - 1);
  return impl;
}

void check_subset(const Matroid& m, Subset a) {
  if (m.size() < 64 && (a >> m.size()) != 0)
    throw std::invalid_argument("subset contains elements outside the ground set");
}

void check_element(const Matroid& m, int e) {
  if (e < 0 || e >= m.size())
    throw std::invalid_argument("element out of range");
}

}  // namespace

int Matroid::size() const { return impl_->n; }
int Matroid::rank() const { return impl_->full_rank; }
Subset Matroid::full_set() const {
  return impl_->n == 64 ? ~Subset(0) : (Subset(1) << impl_->n) - 1;
}
Provenance Matroid::provenance() const { return impl_->prov; }
bool Matroid::bases_validated() const { return impl_->bases_validated; }
const std::optional<MultiGraph>& Matroid::graph() const { return impl_->graph; }

int Matroid::rank_of(Subset a) const {
  check_subset(*this, a);
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto it = impl_->rank_memo.find(a);
    if (it != impl_->rank_memo.end()) return it->second;
  }
  const int r = impl_->raw_rank(a);
  std::lock_guard<std::mutex> lock(impl_->mu);
  impl_->rank_memo.emplace(a, r);
  return r;
}

int Matroid::rank_of_uncached(Subset a) const {
  check_subset(*this, a);
  return impl_->raw_rank(a);
}

bool Matroid::is_loop(int e) const {
  check_element(*this, e);
  return rank_of(Subset(1) << e) == 0;
}

bool Matroid::is_coloop(int e) const {
  check_element(*this, e);
  return rank_of(full_set() & ~(Subset(1) << e)) < rank();
}

std::optional<BivarPoly> Matroid::cached_tutte() const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  return impl_->tutte;
}

void Matroid::store_tutte(const BivarPoly& t) const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  if (!impl_->tutte) impl_->tutte = t;
}

Matroid uniform_matroid(int r, int n) {
  if (r < 0 || n < 0 || r > n)
    throw std::invalid_argument("uniform matroid requires 0 <= r <= n");
  auto impl = make_impl(n, Provenance::uniform, [r](Subset a) {
    return std::min(r, popcount64(a));
  });
  return Matroid(std::move(impl));
}

Matroid graphic_matroid(const MultiGraph& g) {
  auto impl = make_impl(g.edge_count(), Provenance::graphic,
                        [g](Subset a) { return g.rank_of(a); });
  impl->graph = g;
  return Matroid(std::move(impl));
}

Matroid vector_matroid(const VectorConfig& x) {
  auto impl = make_impl(x.size(), Provenance::vectors,
                        [x](Subset a) { return x.rank_of(a); });
  return Matroid(std::move(impl));
}

Matroid bases_matroid(int n, const std::vector<Subset>& bases) {
  if (bases.empty()) throw std::invalid_argument("basis list must be non-empty");
  const int r = popcount64(bases[0]);
  std::set<Subset> basis_set;
  for (Subset b : bases) {
    if (popcount64(b) != r)
      throw std::invalid_argument("bases of unequal cardinality");
    if (n < 64 && (b >> n) != 0)
      throw std::invalid_argument("basis contains elements outside the ground set");
    basis_set.insert(b);
  }
  bool validated = false;
  if (n <= 12) {
    validated = true;
    for (Subset b1 : basis_set)
      for (Subset b2 : basis_set) {
        Subset only1 = b1 & ~b2;
        for (int e = 0; e < n; ++e) {
          if (!(only1 >> e & 1u)) continue;
          bool exchanged = false;
          Subset only2 = b2 & ~b1;
          for (int f = 0; f < n && !exchanged; ++f)
            if (only2 >> f & 1u)
              exchanged = basis_set.count((b1 & ~(Subset(1) << e)) | (Subset(1) << f)) > 0;
          if (!exchanged)
            throw std::invalid_argument("basis-exchange axiom violated");
        }
      }
  }
  std::vector<Subset> list(basis_set.begin(), basis_set.end());
  auto impl = make_impl(n, Provenance::bases, [list](Subset a) {
    int best = 0;
    for (Subset b : list) best = std::max(best, popcount64(a & b));
    return best;
  });
  impl->bases_validated = validated;
  return Matroid(std::move(impl));
}

Matroid dual(const Matroid& m) {
  const int r = m.rank();
  const Subset full = m.full_set();
  auto impl = make_impl(m.size(), Provenance::derived, [m, r, full](Subset a) {
    return popcount64(a) + m.rank_of(full & ~a) - r;
  });
  return Matroid(std::move(impl));
}

namespace {

// Maps a subset of the (n-1)-element minor ground set into the parent's
// labels, skipping the removed element e.
Subset embed_skipping(Subset a, int e) {
  const Subset low_mask = (Subset(1) << e) - 1;
  return (a & low_mask) | ((a & ~low_mask) << 1);
}

}  // namespace

Matroid deletion(const Matroid& m, int e) {
  if (e < 0 || e >= m.size()) throw std::invalid_argument("element out of range");
  auto impl = make_impl(m.size() - 1, Provenance::derived, [m, e](Subset a) {
    return m.rank_of(embed_skipping(a, e));
  });
  return Matroid(std::move(impl));
}

Matroid contraction(const Matroid& m, int e) {
  if (e < 0 || e >= m.size()) throw std::invalid_argument("element out of range");
  const Subset ebit = Subset(1) << e;
  const int re = m.rank_of(ebit);
  auto impl = make_impl(m.size() - 1, Provenance::derived, [m, e, ebit, re](Subset a) {
    return m.rank_of(embed_skipping(a, e) | ebit) - re;
  });
  return Matroid(std::move(impl));
}

Matroid free_extension(const Matroid& m) {
  const int n = m.size();
  if (n + 1 > Matroid::kMaxGroundSize)
    throw std::invalid_argument("free extension exceeds the ground-set limit");
  const int r = m.rank();
  const Subset new_bit = Subset(1) << n;
  auto impl = make_impl(n + 1, Provenance::derived, [m, r, new_bit](Subset a) {
    if (!(a & new_bit)) return m.rank_of(a);
    return std::min(m.rank_of(a & ~new_bit) + 1, r);
  });
  return Matroid(std::move(impl));
}

Matroid free_coextension(const Matroid& m) {
  Matroid result = dual(free_extension(dual(m)));
  if (result.rank() != m.rank() + 1)
    throw std::logic_error("free coextension must raise the rank by one");
  return result;
}

Matroid thicken(const Matroid& m, int k) {
  if (k <= 0) throw std::invalid_argument("thickening requires k >= 1");
  const long total = static_cast<long>(m.size()) * k;
  if (total > Matroid::kMaxGroundSize)
    throw std::invalid_argument("thickening exceeds the ground-set limit");
  const int n = m.size();
  const Subset copy_mask = (k == 64) ? ~Subset(0) : (Subset(1) << k) - 1;
  auto impl = make_impl(static_cast<int>(total), Provenance::derived,
                        [m, k, n, copy_mask](Subset a) {
                          Subset projected = 0;
                          for (int i = 0; i < n; ++i)
                            if (a & (copy_mask << (static_cast<Subset>(i) * k)))
                              projected |= Subset(1) << i;
                          return m.rank_of(projected);
                        });
  return Matroid(std::move(impl));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  const int n = a.size() + b.size();
  if (n > Matroid::kMaxGroundSize)
    throw std::invalid_argument("direct sum exceeds the ground-set limit");
  const int na = a.size();
  const Subset mask_a = a.full_set();
  auto impl = make_impl(n, Provenance::derived, [a, b, na, mask_a](Subset s) {
    return a.rank_of(s & mask_a) + b.rank_of(s >> na);
  });
  return Matroid(std::move(impl));
}

Matroid relabel(const Matroid& m, const std::vector<int>& perm) {
  const int n = m.size();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
  auto impl = make_impl(n, Provenance::derived, [m, perm, n](Subset a) {
    Subset mapped = 0;
    for (int i = 0; i < n; ++i)
      if (a >> i & 1u) mapped |= Subset(1) << perm[i];
    return m.rank_of(mapped);
  });
  return Matroid(std::move(impl));
}

std::vector<BasisActivity> bases_with_activities(const Matroid& m,
                                                 int enumeration_limit) {
  const int n = m.size();
  const int r = m.rank();
  if (n > enumeration_limit)
    throw std::invalid_argument(
        "ground set too large for basis enumeration; the 2^N subset sum is "
        "equally infeasible at this size — use deletion-contraction");
  std::vector<BasisActivity> out;

  auto activities_of = [&](Subset b) {
    BasisActivity act{b, 0, 0};
    // e in B is internally active iff no smaller f outside B re-completes
    // B - e to a basis.
    for (int e = 0; e < n; ++e) {
      if (!(b >> e & 1u)) continue;
      bool active = true;
      const Subset without = b & ~(Subset(1) << e);
      for (int f = 0; f < e && active; ++f)
        if (!(b >> f & 1u) && m.rank_of(without | (Subset(1) << f)) == r)
          active = false;
      if (active) ++act.internal_activity;
    }
    // e outside B is externally active iff no smaller f inside B can be
    // swapped out for e to give a basis.
    for (int e = 0; e < n; ++e) {
      if (b >> e & 1u) continue;
      bool active = true;
      const Subset with_e = b | (Subset(1) << e);
      for (int f = 0; f < e && active; ++f)
        if ((b >> f & 1u) && m.rank_of(with_e & ~(Subset(1) << f)) == r)
          active = false;
      if (active) ++act.external_activity;
    }
    return act;
  };

  if (r == 0) {
    out.push_back(activities_of(0));
    return out;
  }

  // Enumerate r-subsets of [0, n) in lexicographic combination order.
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    Subset b = 0;
    for (int i : idx) b |= Subset(1) << i;
    if (m.rank_of(b) == r) out.push_back(activities_of(b));
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace matroidal
