#include "freelat/presentations.hpp"

#include <algorithm>

namespace freelat {

FiniteSemilattice::FiniteSemilattice(GroundSet generators, std::vector<Subset> elems,
                                     bool meet_encoded)
    : generators_(std::move(generators)), elems_(std::move(elems)), meet_encoded_(meet_encoded) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

Subset FiniteSemilattice::op(Subset a, Subset b) const {
  Subset u = a | b;
  // least member containing the union; the member family is a closure system
  // minus the empty set, so intersecting all candidates stays a member
  Subset acc = generators_.all();
  bool seen = false;
  for (Subset e : elems_) {
    if (u.subset_of(e)) {
      acc &= e;
      seen = true;
    }
  }
  if (!seen || index_of(acc) < 0)
    fail(ErrorKind::NotClosed, "operation arguments do not join inside the semilattice");
  return acc;
}

bool FiniteSemilattice::elem_leq(Subset a, Subset b) const {
  return meet_encoded_ ? b.subset_of(a) : a.subset_of(b);
}

Subset FiniteSemilattice::generator_image(int ground_id) const {
  Subset acc = generators_.all();
  bool seen = false;
  for (Subset e : elems_) {
    if (e.has(ground_id)) {
      acc &= e;
      seen = true;
    }
  }
  if (!seen || index_of(acc) < 0)
    fail(ErrorKind::Invalid,
         "generator " + generators_.name(ground_id) + " has no image in the semilattice");
  return acc;
}

int FiniteSemilattice::index_of(Subset a) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), a);
  if (it == elems_.end() || *it != a) return -1;
  return static_cast<int>(it - elems_.begin());
}

std::vector<std::pair<int, int>> FiniteSemilattice::covers() const {
  const int n = size();
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !elem_leq(elems_[i], elems_[j])) continue;
      bool covered = true;
      for (int k = 0; k < n && covered; ++k) {
        if (k == i || k == j) continue;
        if (elem_leq(elems_[i], elems_[k]) && elem_leq(elems_[k], elems_[j])) covered = false;
      }
      if (covered) out.emplace_back(i, j);
    }
  }
  return out;
}

std::string FiniteSemilattice::render_elem(Subset a) const { return generators_.render(a); }

ImplicationFamily sigma_of_relations(const SemilatticePresentation& pres) {
  ImplicationFamily sigma{pres.ground, {}};
  sigma.implications.reserve(pres.relations.size());
  for (const auto& [left, right] : pres.relations)
    sigma.implications.push_back(Implication{left, right});
  return sigma;
}

FiniteSemilattice free_presented_semilattice(const SemilatticePresentation& pres,
                                             std::int64_t row_cap) {
  ClosureSystem cs = closure_system(sigma_of_relations(pres), row_cap);
  std::vector<Subset> elems;
  elems.reserve(cs.closed_sets.size());
  for (Subset s : cs.closed_sets.members())
    if (!s.is_empty()) elems.push_back(s);
  return FiniteSemilattice(pres.ground, std::move(elems));
}

FiniteSemilattice free_join_semilattice(const Poset& p, std::int64_t cap) {
  std::vector<Subset> elems;
  for (Subset s : enumerate_ideals(p, cap).members())
    if (!s.is_empty()) elems.push_back(s);
  return FiniteSemilattice(p.ground(), std::move(elems));
}

FiniteSemilattice free_meet_semilattice(const Poset& p, std::int64_t cap) {
  std::vector<Subset> elems;
  for (Subset s : enumerate_filters(p, cap).members())
    if (!s.is_empty()) elems.push_back(s);
  return FiniteSemilattice(p.ground(), std::move(elems), /*meet_encoded=*/true);
}

namespace {

// Least upper bound of xs in the poset, when it exists.
std::optional<int> poset_sup(const Poset& p, Subset xs) {
  Subset uppers = p.ground().all();
  for (int x : xs) uppers &= p.up(x);
  for (int u : uppers)
    if (uppers.subset_of(p.up(u))) return u;
  return std::nullopt;
}

}  // namespace

PartialSemilattice PartialSemilattice::create(Poset poset, const std::map<Subset, int>& defs) {
  for (const auto& [xs, s] : defs) {
    auto sup = poset_sup(poset, xs);
    if (!sup || *sup != s)
      fail(ErrorKind::Invalid, "declared join of " + poset.ground().render(xs) + " is " +
                                   poset.ground().name(s) +
                                   ", which is not the supremum in the poset");
  }
  // Saturate pairwise consequences: when two defined subsets have a defined
  // union, the three suprema must be compatible.
  for (const auto& [xs, sx] : defs) {
    for (const auto& [ys, sy] : defs) {
      auto it = defs.find(xs | ys);
      if (it == defs.end()) continue;
      auto pair_sup = poset_sup(poset, Subset::single(sx) | Subset::single(sy));
      if (!pair_sup || *pair_sup != it->second)
        fail(ErrorKind::Invalid, "defined joins are inconsistent on " +
                                     poset.ground().render(xs | ys));
    }
  }
  return create_unchecked(std::move(poset), defs);
}

PartialSemilattice PartialSemilattice::create_unchecked(Poset poset, std::map<Subset, int> defs) {
  PartialSemilattice ps;
  ps.poset_ = std::move(poset);
  // singleton entries are implicit; keep the map free of them
  for (auto it = defs.begin(); it != defs.end();) {
    if (it->first == Subset::single(it->second))
      it = defs.erase(it);
    else
      ++it;
  }
  ps.joins_ = std::move(defs);
  return ps;
}

ClosureSystem vee_ideals(const PartialSemilattice& ps, std::int64_t cap) {
  std::vector<Subset> out;
  for (Subset ideal : enumerate_ideals(ps.poset(), cap).members()) {
    bool closed = true;
    for (const auto& [xs, s] : ps.joins()) {
      if (xs.subset_of(ideal) && !ideal.has(s)) {
        closed = false;
        break;
      }
    }
    if (closed) out.push_back(ideal);
  }
  return ClosureSystem{ps.poset().ground(), SubsetFamily(ps.poset().ground(), std::move(out))};
}

FiniteSemilattice free_partial_semilattice(const PartialSemilattice& ps, std::int64_t cap) {
  ClosureSystem cs = vee_ideals(ps, cap);
  std::vector<Subset> elems;
  for (Subset s : cs.closed_sets.members())
    if (!s.is_empty()) elems.push_back(s);
  return FiniteSemilattice(ps.poset().ground(), std::move(elems));
}

}  // namespace freelat
