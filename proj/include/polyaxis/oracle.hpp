#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "polyaxis/dihedral.hpp"
#include "polyaxis/polygon.hpp"
#include "polyaxis/report.hpp"

// Ground-truth enumeration of every n-polygon for small n, with class
// grouping and symmetry histograms. Deliberately naive: it never uses the
// closed-form counts or any symmetry-reduced shortcut, so its totals are an
// independent check of the formulas.
//
// Each figure appears exactly once in the enumeration: cycles are based at
// vertex 0 and direction-deduped via order[1] < order[n-1], which puts the
// (n-1)!/2 emitted cycles in bijection with the distinct chord sets.

namespace polyaxis {

// Hard cap: 13!/2 is the practical ceiling for a full sweep.
inline constexpr int kOracleMaxN = 14;

// Calls visit(order, n) for every cycle, in lexicographic order of the
// order array. The buffer is reused between calls.
void for_each_polygon(int n, const std::function<void(const int*, int)>& visit);

// Materialized variant for small n (tests).
std::vector<VertexCycle> enumerate_all_polygons(int n);

struct ClassRecord {
  std::uint64_t packed_key = 0;  // canonical word, 4 bits per letter
  std::uint32_t multiplicity = 0;
  std::uint16_t axes = 0;
  std::uint16_t rotation_order = 0;

  SymmetryProfile profile() const {
    return {axes, rotation_order};
  }
  CanonicalKey key(int n, Relation relation) const;
  // Deterministic class representative: the canonical word, walked from
  // vertex 0.
  VertexCycle representative(int n) const;
};

struct ClassifyResult {
  int n = 0;
  Relation relation = Relation::Equivalent;
  SymmetryHistogram histogram;
  std::vector<ClassRecord> classes;  // sorted by packed_key
};

// Groups all cycles by canonical key. Work is partitioned by the value of
// order[1]; partitions are merged by summing multiplicities, so the result
// is identical for any thread count.
ClassifyResult classify(int n, Relation relation, int threads = 0);

// Number of classes with exactly n/2 axes (even n).
std::int64_t oracle_count_m_symmetric(const ClassifyResult& result);
std::int64_t oracle_count_m_symmetric(int n, Relation relation = Relation::Equivalent,
                                      int threads = 0);

// Runs every formula against the brute force for one n: census totals for
// both relations, the half-axes count against the pair-family formula, and
// the check that every exactly-(n/2)-axes class is an alternating class.
CensusReport cross_check(int n, int threads = 0);

}  // namespace polyaxis
