#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freelat/implications.hpp"
#include "freelat/order.hpp"

namespace freelat {

// Generators plus relations of the form  join(L) >= join(R)  with L, R
// nonempty subsets of the generators. Equalities are stored as two
// inequalities by the parser.
struct SemilatticePresentation {
  GroundSet ground;
  std::vector<std::pair<Subset, Subset>> relations;  // (left, right): vL >= vR
};

// Finite join-semilattice carried by a family of subsets of its generator
// set: the operation is "least member containing the union". A meet-encoded
// instance represents F_meet: the stored operation is the meet and the
// semilattice order is reverse inclusion.
class FiniteSemilattice {
 public:
  FiniteSemilattice() = default;
  FiniteSemilattice(GroundSet generators, std::vector<Subset> elems, bool meet_encoded = false);

  const GroundSet& generators() const { return generators_; }
  const std::vector<Subset>& elems() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool meet_encoded() const { return meet_encoded_; }

  Subset op(Subset a, Subset b) const;           // the semilattice operation
  bool elem_leq(Subset a, Subset b) const;       // semilattice order
  Subset generator_image(int ground_id) const;   // least member containing the generator
  int index_of(Subset a) const;                  // -1 when absent

  std::vector<std::pair<int, int>> covers() const;  // in semilattice order
  std::string render_elem(Subset a) const;

 private:
  GroundSet generators_;
  std::vector<Subset> elems_;  // sorted canonical
  bool meet_encoded_ = false;
};

// One implication per relation: premise = left symbols, conclusion = right.
ImplicationFamily sigma_of_relations(const SemilatticePresentation& pres);

// The semilattice freely generated by the presentation: all nonempty closed
// sets of sigma_of_relations, join = closure of the union. Generator a maps
// to closure({a}).
FiniteSemilattice free_presented_semilattice(const SemilatticePresentation& pres,
                                             std::int64_t row_cap = 100'000);

// Nonempty order ideals under union; generator x maps to its down-set.
FiniteSemilattice free_join_semilattice(const Poset& p, std::int64_t cap = 1'000'000);

// Nonempty order filters; the stored operation (filter union) is the meet and
// the semilattice order is reverse inclusion. Generator x maps to its up-set.
FiniteSemilattice free_meet_semilattice(const Poset& p, std::int64_t cap = 1'000'000);

// Poset with a partial supremum operation on designated subsets. Every
// defined join must be a genuine supremum in the poset; joins are stored only
// for the subsets explicitly given (singletons are implicit).
class PartialSemilattice {
 public:
  // defs: subset -> element holding its supremum. Validates the suprema and
  // saturates pairwise consequences, rejecting contradictions.
  static PartialSemilattice create(Poset poset, const std::map<Subset, int>& defs);
  // Trusted path for internal callers that construct defs from an ambient
  // lattice (suprema hold by construction).
  static PartialSemilattice create_unchecked(Poset poset, std::map<Subset, int> defs);

  const Poset& poset() const { return poset_; }
  const std::map<Subset, int>& joins() const { return joins_; }

 private:
  Poset poset_;
  std::map<Subset, int> joins_;
};

// All order ideals closed under every defined join, the empty set and the
// full set included when they qualify.
ClosureSystem vee_ideals(const PartialSemilattice& ps, std::int64_t cap = 1'000'000);

// vee_ideals minus the empty set, joins induced by the closure system.
FiniteSemilattice free_partial_semilattice(const PartialSemilattice& ps,
                                           std::int64_t cap = 1'000'000);

}  // namespace freelat
