#include "freelat/implications.hpp"

#include <unordered_map>

#include "freelat/engine.hpp"

namespace freelat {

bool ClosureSystem::validate() const {
  if (!closed_sets.contains(ground.all())) return false;
  const auto& m = closed_sets.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!closed_sets.contains(m[i] & m[j])) return false;
  return true;
}

bool is_sigma_closed(Subset x, const ImplicationFamily& sigma) {
  for (const auto& imp : sigma.implications)
    if (imp.premise.subset_of(x) && !imp.conclusion.subset_of(x)) return false;
  return true;
}

Subset closure(Subset a, const ImplicationFamily& sigma) {
  Subset x = a;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& imp : sigma.implications) {
      if (imp.premise.subset_of(x) && !imp.conclusion.subset_of(x)) {
        x |= imp.conclusion;
        changed = true;
      }
    }
  }
  return x;
}

ClosureSystem closure_system(const ImplicationFamily& sigma, std::int64_t row_cap,
                             std::int64_t set_cap) {
  RowTable table = ab_run(sigma, row_cap);
  return ClosureSystem{sigma.ground, ab_expand(table, set_cap)};
}

Subset join_in_system(Subset x, Subset y, const ImplicationFamily& sigma) {
  if (closure(x, sigma) != x)
    fail(ErrorKind::NotClosed, "left join argument " + sigma.ground.render(x) + " is not closed");
  if (closure(y, sigma) != y)
    fail(ErrorKind::NotClosed, "right join argument " + sigma.ground.render(y) + " is not closed");
  return closure(x | y, sigma);
}

Subset quasi_closure(Subset x, const ClosureFn& cl, int subset_cap) {
  std::unordered_map<Subset, Subset> memo;
  auto closed = [&](Subset z) {
    auto it = memo.find(z);
    if (it != memo.end()) return it->second;
    Subset c = cl(z);
    memo.emplace(z, c);
    return c;
  };
  Subset y = x;
  while (true) {
    if (y.count() > subset_cap)
      fail(ErrorKind::CapExceeded, "quasi-closure argument has more than " +
                                       std::to_string(subset_cap) + " elements");
    Subset cl_y = closed(y);
    Subset next = y;
    for_each_subset_of(y, [&](Subset z) {
      Subset cz = closed(z);
      if (cz != cl_y) next |= cz;
    });
    if (next == y) return y;
    y = next;
  }
}

Subset quasi_closure(Subset x, const ImplicationFamily& sigma, int subset_cap) {
  return quasi_closure(x, [&](Subset z) { return closure(z, sigma); }, subset_cap);
}

ImplicationFamily nonredundant_base(const ImplicationFamily& sigma) {
  std::vector<Implication> kept = sigma.implications;
  for (std::size_t i = 0; i < kept.size();) {
    ImplicationFamily rest{sigma.ground, {}};
    rest.implications.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) rest.implications.push_back(kept[j]);
    if (kept[i].conclusion.subset_of(closure(kept[i].premise, rest)))
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return ImplicationFamily{sigma.ground, std::move(kept)};
}

SubsetFamily essential_elements(const ImplicationFamily& sigma) {
  ImplicationFamily base = nonredundant_base(sigma);
  std::vector<Subset> out;
  out.reserve(base.implications.size());
  for (const auto& imp : base.implications) out.push_back(closure(imp.premise, sigma));
  return SubsetFamily(sigma.ground, std::move(out));
}

}  // namespace freelat
