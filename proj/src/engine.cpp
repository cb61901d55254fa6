#include "freelat/engine.hpp"

#include <optional>

namespace freelat {

bool CompressedRow::denotes(Subset x) const {
  if (!ones.subset_of(x) || x.intersects(zeros)) return false;
  if (has_group() && x.has(alpha) && !betas.subset_of(x)) return false;
  return true;
}

unsigned long long CompressedRow::cardinality() const {
  if (twos.count() >= 64) fail(ErrorKind::Overflow, "row cardinality exceeds 64 bits");
  unsigned __int128 total = static_cast<unsigned __int128>(1) << twos.count();
  if (has_group()) total *= (static_cast<unsigned __int128>(1) << betas.count()) + 1;
  if (total > ~0ull) fail(ErrorKind::Overflow, "row cardinality exceeds 64 bits");
  return static_cast<unsigned long long>(total);
}

namespace {

// Forces one position to 0 or 1, resolving the interaction with the row's
// constraint group. Returns nullopt when the row becomes empty.
std::optional<CompressedRow> force(CompressedRow r, int pos, bool val) {
  Subset p = Subset::single(pos);
  auto dissolve_group = [&](bool alpha_val) {
    int a = r.alpha;
    r.alpha = -1;
    if (alpha_val) {
      r.ones |= Subset::single(a) | r.betas;
    } else {
      r.zeros |= Subset::single(a);
      r.twos |= r.betas;  // betas are free once alpha is out
    }
    r.betas = Subset::empty();
  };

  if (r.ones.has(pos)) {
    if (val) return r;
    return std::nullopt;
  }
  if (r.zeros.has(pos)) {
    if (!val) return r;
    return std::nullopt;
  }
  if (r.twos.has(pos)) {
    r.twos -= p;
    (val ? r.ones : r.zeros) |= p;
    return r;
  }
  if (pos == r.alpha) {
    dissolve_group(val);
    return r;
  }
  // pos is a beta
  if (val) {
    r.betas -= p;
    r.ones |= p;
    if (r.betas.is_empty()) {
      // constraint became vacuous, alpha is free again
      r.twos |= Subset::single(r.alpha);
      r.alpha = -1;
    }
  } else {
    r.betas -= p;
    r.zeros |= p;
    dissolve_group(false);  // alpha = 1 would need this beta = 1
  }
  return r;
}

std::optional<CompressedRow> force_all(CompressedRow r, Subset positions, bool val) {
  for (int pos : positions) {
    auto next = force(r, pos, val);
    if (!next) return std::nullopt;
    r = *next;
  }
  return r;
}

// Disjoint decomposition of "premise not contained in X": the j-th row fixes
// the first j-1 premise positions to 1 and the j-th to 0.
void append_premise_blocks(const CompressedRow& r, Subset premise,
                           std::vector<CompressedRow>& out) {
  CompressedRow base = r;
  for (int pos : premise) {
    if (auto blocked = force(base, pos, false)) out.push_back(*blocked);
    auto taken = force(base, pos, true);
    if (!taken) return;  // remaining blocks are empty
    base = *taken;
  }
}

}  // namespace

std::vector<CompressedRow> ab_impose(const CompressedRow& row, const Implication& imp) {
  Subset premise = imp.premise;
  Subset concl = imp.conclusion - premise;  // positions implied by themselves drop out

  if (premise.intersects(row.zeros)) return {row};  // premise can never hold
  Subset open_premise = premise - row.ones;
  Subset needed = concl - row.ones;
  if (needed.is_empty()) return {row};  // conclusion already forced

  if (open_premise.is_empty()) {
    // premise always holds: force the conclusion outright
    if (auto forced = force_all(row, needed, true)) return {*forced};
    return {};
  }

  if (needed.intersects(row.zeros)) {
    // conclusion can never hold: keep exactly the subsets missing the premise
    std::vector<CompressedRow> out;
    append_premise_blocks(row, open_premise, out);
    return out;
  }

  if (row.has_group() && open_premise == Subset::single(row.alpha) &&
      needed.subset_of(row.betas))
    return {row};  // already entailed by the group

  if (!row.has_group() && open_premise.count() == 1) {
    // encode the implication as the row's constraint group
    CompressedRow r = row;
    int a = *open_premise.begin();
    r.alpha = a;
    r.twos -= open_premise | needed;
    r.betas = needed;
    return {r};
  }

  std::vector<CompressedRow> out;
  append_premise_blocks(row, open_premise, out);
  auto taken = force_all(row, open_premise, true);
  if (taken) taken = force_all(*taken, needed, true);
  if (taken) out.push_back(*taken);
  return out;
}

RowTable ab_run(const ImplicationFamily& sigma, std::int64_t row_cap) {
  RowTable table{sigma.ground, {CompressedRow::all_free(sigma.ground.size())}};
  for (const auto& imp : sigma.implications) {
    std::vector<CompressedRow> next;
    next.reserve(table.rows.size());
    for (const auto& row : table.rows) {
      auto pieces = ab_impose(row, imp);
      next.insert(next.end(), pieces.begin(), pieces.end());
      if (static_cast<std::int64_t>(next.size()) > row_cap)
        fail(ErrorKind::CapExceeded, "row table exceeded cap " + std::to_string(row_cap));
    }
    table.rows = std::move(next);
  }
  return table;
}

unsigned long long ab_count(const RowTable& table) {
  unsigned __int128 total = 0;
  for (const auto& row : table.rows) total += row.cardinality();
  if (total > ~0ull) fail(ErrorKind::Overflow, "closure system size exceeds 64 bits");
  return static_cast<unsigned long long>(total);
}

std::vector<Subset> expand_row(const CompressedRow& row) {
  std::vector<Subset> out;
  out.reserve(row.cardinality());
  for_each_subset_of(row.twos, [&](Subset free_part) {
    Subset base = row.ones | free_part;
    if (!row.has_group()) {
      out.push_back(base);
      return;
    }
    out.push_back(base | Subset::single(row.alpha) | row.betas);  // alpha in
    for_each_subset_of(row.betas, [&](Subset beta_part) {         // alpha out
      out.push_back(base | beta_part);
    });
  });
  return out;
}

SubsetFamily ab_expand(const RowTable& table, std::int64_t set_cap) {
  if (static_cast<std::int64_t>(ab_count(table)) > set_cap)
    fail(ErrorKind::CapExceeded,
         "expansion would produce more than " + std::to_string(set_cap) + " sets");
  std::vector<Subset> all;
  for (const auto& row : table.rows) {
    auto sets = expand_row(row);
    all.insert(all.end(), sets.begin(), sets.end());
  }
  return SubsetFamily(table.ground, std::move(all));
}

std::string render_row(const CompressedRow& row) {
  std::string out;
  for (int i = 0; i < row.width; ++i) {
    if (i) out += ' ';
    if (row.ones.has(i))
      out += '1';
    else if (row.zeros.has(i))
      out += '0';
    else if (row.twos.has(i))
      out += '2';
    else if (i == row.alpha)
      out += 'a';
    else
      out += 'b';
  }
  return out;
}

std::string render_table(const RowTable& table, bool header) {
  std::string out;
  if (header) {
    for (int i = 0; i < table.ground.size(); ++i) {
      if (i) out += ' ';
      out += table.ground.name(i);
    }
    out += '\n';
  }
  for (const auto& row : table.rows) {
    out += render_row(row);
    out += '\n';
  }
  return out;
}

}  // namespace freelat
