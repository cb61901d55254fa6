#include "freelat/order.hpp"

#include <algorithm>

namespace freelat {

GroundSet GroundSet::of(std::vector<std::string> names, int max_elements) {
  if (static_cast<int>(names.size()) > max_elements || names.size() > Subset::max_size)
    fail(ErrorKind::CapExceeded,
         "ground set has " + std::to_string(names.size()) + " elements, cap is " +
             std::to_string(std::min<int>(max_elements, Subset::max_size)));
  GroundSet g;
  g.names_ = std::move(names);
  for (int i = 0; i < static_cast<int>(g.names_.size()); ++i) {
    if (g.names_[i].empty()) fail(ErrorKind::Invalid, "empty element name");
    if (!g.index_.emplace(g.names_[i], i).second)
      fail(ErrorKind::Invalid, "duplicate element name '" + g.names_[i] + "'");
  }
  return g;
}

int GroundSet::index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end())
    fail(ErrorKind::UnknownElement, "unknown element '" + std::string(name) + "'");
  return it->second;
}

std::optional<int> GroundSet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Subset GroundSet::subset_of_names(const std::vector<std::string>& names) const {
  Subset s;
  for (const auto& n : names) s.add(index(n));
  return s;
}

std::string GroundSet::render(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (int i : s) {
    if (!first) out += ",";
    out += name(i);
    first = false;
  }
  return out + "}";
}

Poset Poset::from_covers(GroundSet ground,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
  std::vector<std::pair<int, int>> ids;
  ids.reserve(covers.size());
  for (const auto& [lo, hi] : covers) ids.emplace_back(ground.index(lo), ground.index(hi));
  return from_cover_ids(std::move(ground), ids);
}

Poset Poset::from_cover_ids(GroundSet ground, const std::vector<std::pair<int, int>>& covers) {
  const int n = ground.size();
  std::vector<Subset> preds(n);  // direct cover predecessors
  for (auto [lo, hi] : covers) {
    if (lo == hi) fail(ErrorKind::Cycle, "cover " + ground.name(lo) + "<" + ground.name(hi) +
                                             " relates an element to itself");
    preds[hi].add(lo);
  }
  // Kahn topological pass doubles as the cycle check.
  std::vector<Subset> down(n);
  std::vector<int> order;
  Subset done;
  while (static_cast<int>(order.size()) < n) {
    bool progressed = false;
    for (int v = 0; v < n; ++v) {
      if (done.has(v) || !preds[v].subset_of(done)) continue;
      Subset d = Subset::single(v);
      for (int u : preds[v]) d |= down[u];
      down[v] = d;
      done.add(v);
      order.push_back(v);
      progressed = true;
    }
    if (!progressed) fail(ErrorKind::Cycle, "cover relation has a directed cycle");
  }
  Poset p;
  p.ground_ = std::move(ground);
  p.down_ = std::move(down);
  p.up_.assign(n, Subset{});
  for (int y = 0; y < n; ++y)
    for (int x : p.down_[y]) p.up_[x].add(y);
  return p;
}

Poset Poset::from_leq(GroundSet ground, const std::vector<Subset>& down_rows) {
  const int n = ground.size();
  for (int y = 0; y < n; ++y) {
    if (!down_rows[y].has(y)) fail(ErrorKind::Invalid, "relation is not reflexive");
    for (int x : down_rows[y]) {
      if (x != y && down_rows[x].has(y))
        fail(ErrorKind::Cycle, "relation is not antisymmetric at " + ground.name(x) + "," +
                                   ground.name(y));
      if (!down_rows[x].subset_of(down_rows[y]))
        fail(ErrorKind::Invalid, "relation is not transitive at " + ground.name(x) + "<=" +
                                     ground.name(y));
    }
  }
  Poset p;
  p.ground_ = std::move(ground);
  p.down_ = down_rows;
  p.up_.assign(n, Subset{});
  for (int y = 0; y < n; ++y)
    for (int x : p.down_[y]) p.up_[x].add(y);
  return p;
}

Subset Poset::down_of(Subset xs) const {
  Subset s;
  for (int x : xs) s |= down_[x];
  return s;
}

Subset Poset::up_of(Subset xs) const {
  Subset s;
  for (int x : xs) s |= up_[x];
  return s;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  const int n = size();
  for (int y = 0; y < n; ++y) {
    Subset strictly_below = down_[y] - Subset::single(y);
    for (int x : strictly_below) {
      // x is a lower cover of y when nothing sits strictly between them
      Subset between = strictly_below & (up_[x] - Subset::single(x));
      if (between.is_empty()) out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<int> Poset::linear_extension() const {
  std::vector<int> order;
  Subset done;
  const int n = size();
  while (static_cast<int>(order.size()) < n) {
    for (int v = 0; v < n; ++v) {
      if (done.has(v)) continue;
      if ((down_[v] - Subset::single(v)).subset_of(done)) {
        order.push_back(v);
        done.add(v);
      }
    }
  }
  return order;
}

Subset Poset::minimal_elements(Subset within) const {
  Subset out;
  for (int v : within)
    if (((down_[v] - Subset::single(v)) & within).is_empty()) out.add(v);
  return out;
}

Poset Poset::dual() const {
  Poset p;
  p.ground_ = ground_;
  p.down_ = up_;
  p.up_ = down_;
  return p;
}

Poset Poset::induced(Subset elements) const {
  std::vector<std::string> names;
  std::vector<int> old_ids;
  for (int v : elements) {
    names.push_back(ground_.name(v));
    old_ids.push_back(v);
  }
  const int m = static_cast<int>(old_ids.size());
  std::vector<Subset> down(m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i)
      if (leq(old_ids[i], old_ids[j])) down[j].add(i);
  Poset p;
  p.ground_ = GroundSet::of(std::move(names));
  p.down_ = std::move(down);
  p.up_.assign(m, Subset{});
  for (int y = 0; y < m; ++y)
    for (int x : p.down_[y]) p.up_[x].add(y);
  return p;
}

SubsetFamily::SubsetFamily(GroundSet ground, std::vector<Subset> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  Subset all = ground_.all();
  for (Subset m : members_)
    if (!m.subset_of(all)) fail(ErrorKind::Invalid, "family member outside the ground set");
}

bool SubsetFamily::contains(Subset s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

int SubsetFamily::index_of(Subset s) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it == members_.end() || *it != s) return -1;
  return static_cast<int>(it - members_.begin());
}

namespace {

// Depth-first extension along a fixed linear extension: element i may join
// the ideal only once all its strict predecessors are in. Every branch of
// the recursion emits at least one ideal, so no pruning beyond the subset
// test is needed.
void ideals_rec(const Poset& p, const std::vector<int>& order, std::size_t k, Subset cur,
                std::vector<Subset>& out, std::int64_t cap) {
  if (static_cast<std::int64_t>(out.size()) > cap)
    fail(ErrorKind::CapExceeded, "ideal enumeration exceeded cap " + std::to_string(cap));
  if (k == order.size()) {
    out.push_back(cur);
    return;
  }
  int v = order[k];
  ideals_rec(p, order, k + 1, cur, out, cap);  // v stays out
  if ((p.down(v) - Subset::single(v)).subset_of(cur))
    ideals_rec(p, order, k + 1, cur | Subset::single(v), out, cap);
}

}  // namespace

SubsetFamily enumerate_ideals(const Poset& p, std::int64_t cap) {
  std::vector<Subset> out;
  ideals_rec(p, p.linear_extension(), 0, Subset::empty(), out, cap);
  return SubsetFamily(p.ground(), std::move(out));
}

SubsetFamily enumerate_filters(const Poset& p, std::int64_t cap) {
  return enumerate_ideals(p.dual(), cap);
}

bool is_ideal(const Poset& p, Subset x) { return p.down_of(x).subset_of(x); }

bool is_filter(const Poset& p, Subset x) { return p.up_of(x).subset_of(x); }

}  // namespace freelat
