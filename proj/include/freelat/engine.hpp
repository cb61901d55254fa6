#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "freelat/implications.hpp"
#include "freelat/order.hpp"

namespace freelat {

// One compressed row: every ground position carries 0, 1, 2 (free), or
// belongs to the row's single constraint group consisting of one alpha
// position and at least one beta position. The row denotes all subsets X with
//   ones subset of X,  X disjoint from zeros,  and  alpha in X => betas in X;
// beta positions are free whenever alpha is out, 2-positions are always free.
struct CompressedRow {
  int width = 0;
  Subset ones, zeros, twos, betas;
  int alpha = -1;  // -1: no constraint group

  static CompressedRow all_free(int width) {
    CompressedRow r;
    r.width = width;
    r.twos = Subset::full(width);
    return r;
  }

  bool has_group() const { return alpha >= 0; }
  bool denotes(Subset x) const;
  // number of denoted subsets: 2^#twos * (2^#betas + 1 when a group exists)
  unsigned long long cardinality() const;

  bool operator==(const CompressedRow&) const = default;
};

// Ordered list of pairwise disjoint compressed rows over one ground set.
// Row order is the deterministic production order of ab_run, which on the
// paper's worked example coincides with the published tables.
struct RowTable {
  GroundSet ground;
  std::vector<CompressedRow> rows;

  int size() const { return static_cast<int>(rows.size()); }
};

// Splits row into disjoint rows that denote exactly the subsets of row
// satisfying imp. At most |premise| + 1 rows come back.
std::vector<CompressedRow> ab_impose(const CompressedRow& row, const Implication& imp);

// Starting from the single all-free row, imposes each implication in input
// order. The resulting table denotes exactly the sigma-closed sets.
RowTable ab_run(const ImplicationFamily& sigma, std::int64_t row_cap = 100'000);

// Sum of the per-row cardinalities; rows are disjoint so this is the size of
// the denoted family.
unsigned long long ab_count(const RowTable& table);

SubsetFamily ab_expand(const RowTable& table, std::int64_t set_cap = 10'000'000);
std::vector<Subset> expand_row(const CompressedRow& row);

// Debug format: one row per line, symbols 0 1 2 a b in ground order.
std::string render_row(const CompressedRow& row);
std::string render_table(const RowTable& table, bool header = true);

}  // namespace freelat
