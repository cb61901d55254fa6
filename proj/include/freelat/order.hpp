#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "freelat/error.hpp"
#include "freelat/subset.hpp"

namespace freelat {

// Ordered list of distinct element names. The position of a name in the list
// is the element's id for all bitset encodings, so it must never change once
// the set is built.
class GroundSet {
 public:
  GroundSet() = default;
  static GroundSet of(std::vector<std::string> names, int max_elements = Subset::max_size);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  int index(std::string_view name) const;          // throws UnknownElement
  std::optional<int> find(std::string_view) const;

  Subset all() const { return Subset::full(size()); }
  Subset subset_of_names(const std::vector<std::string>& names) const;
  std::string render(Subset s) const;  // "{a,b,e}" in ground order

  bool operator==(const GroundSet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

// Finite poset over a ground set. leq is kept as one down-set row per
// element; reflexivity, transitivity and antisymmetry are established at
// construction and never mutated.
class Poset {
 public:
  Poset() = default;

  // Reflexive-transitive closure of the given cover pairs (lo covered by hi).
  // Throws CycleError when the cover digraph has a directed cycle.
  static Poset from_covers(GroundSet ground, const std::vector<std::pair<std::string, std::string>>& covers);
  static Poset from_cover_ids(GroundSet ground, const std::vector<std::pair<int, int>>& covers);

  // Validates reflexivity, transitivity, antisymmetry of the given relation.
  static Poset from_leq(GroundSet ground, const std::vector<Subset>& down_rows);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }

  bool leq(int x, int y) const { return down_[y].has(x); }
  Subset down(int x) const { return down_[x]; }  // {y : y <= x}
  Subset up(int x) const { return up_[x]; }      // {y : y >= x}

  Subset down_of(Subset xs) const;  // union of down-sets
  Subset up_of(Subset xs) const;

  std::vector<std::pair<int, int>> covers() const;  // Hasse diagram, (lower, upper)
  std::vector<int> linear_extension() const;        // ids, minimal elements first
  Subset minimal_elements(Subset within) const;

  Poset dual() const;
  // Subposet on the given elements; keeps the original names, ids renumbered
  // in increasing order of the old ids.
  Poset induced(Subset elements) const;

 private:
  GroundSet ground_;
  std::vector<Subset> down_, up_;
};

// Canonical (sorted, deduplicated) finite family of subsets of a ground set.
class SubsetFamily {
 public:
  SubsetFamily() = default;
  SubsetFamily(GroundSet ground, std::vector<Subset> members);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Subset>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(Subset s) const;
  int index_of(Subset s) const;  // -1 when absent

  bool operator==(const SubsetFamily& o) const {
    return ground_ == o.ground_ && members_ == o.members_;
  }

 private:
  GroundSet ground_;
  std::vector<Subset> members_;
};

// Downward-closed subsets of p, the empty set and the full set included.
// Throws CapExceeded when more than cap ideals exist.
SubsetFamily enumerate_ideals(const Poset& p, std::int64_t cap = 1'000'000);
// Upward-closed subsets, enumerated over the dual poset (not by complementing
// ideals, so the complement bijection stays a testable fact).
SubsetFamily enumerate_filters(const Poset& p, std::int64_t cap = 1'000'000);

bool is_ideal(const Poset& p, Subset x);
bool is_filter(const Poset& p, Subset x);

}  // namespace freelat
