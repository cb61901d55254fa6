#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "freelat/implications.hpp"
#include "freelat/order.hpp"
#include "freelat/presentations.hpp"

namespace freelat {

// Explicit finite lattice: named elements, the order, and join/meet computed
// from the order on demand. Element count is not tied to the 64-element
// ground-set cap of Poset.
class FiniteLattice {
 public:
  using Bits = boost::dynamic_bitset<>;

  FiniteLattice() = default;

  // Validates that every pair has a least upper and greatest lower bound;
  // construction-from-trusted-builders may skip the check.
  static FiniteLattice from_order(std::vector<std::string> names, std::vector<Bits> down_rows,
                                  bool validate = true);
  static FiniteLattice from_poset(const Poset& p, bool validate = true);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  int index_of(const std::string& name) const;  // -1 when absent

  bool leq(int x, int y) const { return down_[y].test(static_cast<std::size_t>(x)); }
  int join(int x, int y) const;
  int meet(int x, int y) const;
  int join_of(Subset xs) const;  // over element ids < 64; empty set joins to bottom
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  std::vector<std::pair<int, int>> covers() const;
  std::vector<int> lower_covers(int x) const;

 private:
  std::vector<std::string> names_;
  std::vector<Bits> down_, up_;
  int bottom_ = -1, top_ = -1;
};

// Nonzero elements with exactly one lower cover, in element order.
std::vector<int> join_irreducibles(const FiniteLattice& l);

// The closure system {J(a) : a in L} over the ground set of join
// irreducibles; its closure operator is X -> J(join X).
ClosureSystem natural_closure_system(const FiniteLattice& l);

struct JoinCoreReport {
  std::vector<int> irreducibles;           // J(L)
  std::vector<int> essentials;             // E_join(L)
  std::vector<int> core;                   // J union E_join
  std::map<int, std::vector<int>> witness;  // essential a -> quasiclosed nonclosed K (ids)

  std::string render(const FiniteLattice& l) const;
};

// Join-essential elements: a is essential when some K inside J(a) is
// quasiclosed, not closed, and generates J(a). Witness candidates range over
// the order ideals of (J, <=) only; the brute-force search over all subsets
// is kept in the test suite as the guarding oracle.
std::vector<int> join_essentials(const FiniteLattice& l,
                                 std::map<int, std::vector<int>>* witnesses = nullptr,
                                 std::int64_t ideal_cap = 1'000'000);

JoinCoreReport join_core(const FiniteLattice& l, std::int64_t ideal_cap = 1'000'000);

// Builds the partial semilattice induced on q_elems by l, takes its free
// semilattice, and decides whether a -> {q in Q : q <= a} is an isomorphism
// onto it.
bool verify_theorem2(const FiniteLattice& l, const std::vector<int>& q_elems,
                     std::int64_t cap = 1'000'000);

}  // namespace freelat
