#pragma once

#include <functional>
#include <vector>

#include "freelat/order.hpp"

namespace freelat {

// A premise -> conclusion pair over a fixed ground set. The conclusion may
// intersect the premise; an empty premise forces the conclusion everywhere.
struct Implication {
  Subset premise;
  Subset conclusion;

  bool operator==(const Implication&) const = default;
};

struct ImplicationFamily {
  GroundSet ground;
  std::vector<Implication> implications;

  int size() const { return static_cast<int>(implications.size()); }
};

// Family of all closed subsets: contains the full ground set and is closed
// under pairwise intersection. Construction paths guarantee the invariant;
// validate() recomputes it for tests.
struct ClosureSystem {
  GroundSet ground;
  SubsetFamily closed_sets;

  bool validate() const;
};

bool is_sigma_closed(Subset x, const ImplicationFamily& sigma);

// Least sigma-closed superset of a, by forward chaining to a fixpoint.
Subset closure(Subset a, const ImplicationFamily& sigma);

// All sigma-closed subsets. row_cap bounds the intermediate compressed-row
// table of the enumeration engine.
ClosureSystem closure_system(const ImplicationFamily& sigma, std::int64_t row_cap = 100'000,
                             std::int64_t set_cap = 10'000'000);

// closure(x | y); both arguments must be closed.
Subset join_in_system(Subset x, Subset y, const ImplicationFamily& sigma);

using ClosureFn = std::function<Subset(Subset)>;

// Quasi-closure of x under an arbitrary closure operator: iterate
//   Y -> Y u union{ cl(Z) : Z subset of Y, cl(Z) != cl(Y) }
// until stationary. Enumerates all 2^|Y| subsets per round, so |Y| is capped.
Subset quasi_closure(Subset x, const ClosureFn& cl, int subset_cap = 20);
Subset quasi_closure(Subset x, const ImplicationFamily& sigma, int subset_cap = 20);

// One removal pass in input order: an implication is dropped when the
// remaining family still forces its conclusion from its premise.
ImplicationFamily nonredundant_base(const ImplicationFamily& sigma);

// Closures of the premises of a nonredundant base. Independent of which
// nonredundant base is used (that independence is a tested fact, not an
// assumption of this routine).
SubsetFamily essential_elements(const ImplicationFamily& sigma);

}  // namespace freelat
