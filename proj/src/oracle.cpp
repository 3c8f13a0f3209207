#include "polyaxis/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "polyaxis/families.hpp"

namespace polyaxis {

namespace {

void check_cap(int n) {
  if (n < 3 || n > kOracleMaxN)
    throw std::invalid_argument("oracle supports 3 <= n <= " +
                                std::to_string(kOracleMaxN));
}

// Permutation backtracking over order[1..n-1] with a used-vertex bitmask.
// second_fixed pins order[1] for work partitioning; pass 0 for all.
// Invariant at the top of the loop: used holds exactly order[0..depth-1].
template <typename Visit>
void enumerate(int n, int second_fixed, Visit&& visit) {
  int order[kOracleMaxN];
  int chosen[kOracleMaxN];  // last value tried at each depth
  unsigned used = 1u;       // vertex 0
  order[0] = 0;

  int depth = 1;
  chosen[1] = second_fixed > 0 ? second_fixed - 1 : 0;
  while (depth >= 1) {
    int next = -1;
    for (int v = chosen[depth] + 1; v < n; ++v) {
      if (!(used & (1u << v))) {
        next = v;
        break;
      }
    }
    if (next < 0 || (second_fixed > 0 && depth == 1 && next != second_fixed)) {
      --depth;
      if (depth >= 1) used &= ~(1u << order[depth]);
      continue;
    }
    chosen[depth] = next;
    order[depth] = next;
    if (depth == n - 1) {
      if (order[1] < order[n - 1]) visit(order, n);
      continue;
    }
    used |= 1u << next;
    ++depth;
    chosen[depth] = 0;
  }
}

struct Accum {
  std::uint32_t multiplicity = 0;
};

// Packed words have structure in the low nibbles; mix before bucketing.
struct KeyHash {
  size_t operator()(std::uint64_t x) const {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return static_cast<size_t>(x);
  }
};

using ClassMap = std::unordered_map<std::uint64_t, Accum, KeyHash>;

void merge_into(ClassMap& global, const ClassMap& local) {
  for (auto& [key, acc] : local)
    global[key].multiplicity += acc.multiplicity;
}

SymmetryProfile profile_of_packed(std::uint64_t key, int n) {
  EdgeWord w = EdgeWord::from_steps(n, unpack_word(key, n));
  return symmetry_profile(chord_set(vertex_cycle_from_edge_word(w)));
}

}  // namespace

void for_each_polygon(int n, const std::function<void(const int*, int)>& visit) {
  check_cap(n);
  enumerate(n, 0, [&](const int* order, int len) { visit(order, len); });
}

std::vector<VertexCycle> enumerate_all_polygons(int n) {
  check_cap(n);
  if (n > 11)
    throw std::invalid_argument(
        "materializing enumeration is limited to n <= 11; use for_each_polygon");
  std::vector<VertexCycle> out;
  for_each_polygon(n, [&](const int* order, int len) {
    out.push_back(
        VertexCycle::from_order(len, std::vector<int>(order, order + len)));
  });
  return out;
}

CanonicalKey ClassRecord::key(int n, Relation relation) const {
  CanonicalKey k;
  k.relation = relation;
  k.word = unpack_word(packed_key, n);
  return k;
}

VertexCycle ClassRecord::representative(int n) const {
  return vertex_cycle_from_edge_word(
      EdgeWord::from_steps(n, unpack_word(packed_key, n)));
}

ClassifyResult classify(int n, Relation relation, int threads) {
  check_cap(n);
  if (threads <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    threads = hw > 0 ? static_cast<int>(hw) : 1;
  }
  threads = std::min(threads, n - 1);

  ClassMap global;
  std::mutex global_mutex;
  std::atomic<int> next_partition{1};

  auto worker = [&] {
    for (;;) {
      int second = next_partition.fetch_add(1);
      if (second > n - 1) return;
      ClassMap local;
      std::uint8_t steps[kOracleMaxN];
      enumerate(n, second, [&](const int* order, int len) {
        for (int i = 0; i < len; ++i) {
          int d = order[(i + 1) % len] - order[i];
          steps[i] = static_cast<std::uint8_t>(d < 0 ? d + len : d);
        }
        local[canonical_key_packed(steps, len, relation)].multiplicity += 1;
      });
      std::lock_guard<std::mutex> lock(global_mutex);
      merge_into(global, local);
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  ClassifyResult result;
  result.n = n;
  result.relation = relation;
  result.classes.reserve(global.size());
  for (auto& [key, acc] : global)
    result.classes.push_back({key, acc.multiplicity, 0, 0});
  std::sort(result.classes.begin(), result.classes.end(),
            [](const ClassRecord& a, const ClassRecord& b) {
              return a.packed_key < b.packed_key;
            });

  // Profiles are per class, not per cycle; parallelize over the class list.
  auto profile_range = [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      SymmetryProfile p = profile_of_packed(result.classes[i].packed_key, n);
      result.classes[i].axes = static_cast<std::uint16_t>(p.axes);
      result.classes[i].rotation_order =
          static_cast<std::uint16_t>(p.rotation_order);
    }
  };
  if (threads == 1 || result.classes.size() < 1024) {
    profile_range(0, result.classes.size());
  } else {
    std::vector<std::thread> pool;
    size_t chunk = (result.classes.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      size_t lo = t * chunk;
      size_t hi = std::min(result.classes.size(), lo + chunk);
      if (lo < hi) pool.emplace_back(profile_range, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  result.histogram.n = n;
  result.histogram.relation = relation;
  for (auto& rec : result.classes) {
    result.histogram.classes_by_axes[rec.axes] += 1;
    result.histogram.total += 1;
  }
  return result;
}

std::int64_t oracle_count_m_symmetric(const ClassifyResult& result) {
  if (result.n % 2 != 0)
    throw std::invalid_argument("half-axes count needs even n");
  auto it = result.histogram.classes_by_axes.find(result.n / 2);
  return it == result.histogram.classes_by_axes.end() ? 0 : it->second;
}

std::int64_t oracle_count_m_symmetric(int n, Relation relation, int threads) {
  return oracle_count_m_symmetric(classify(n, relation, threads));
}

CensusReport cross_check(int n, int threads) {
  check_cap(n);
  CensusReport report;
  report.n = n;
  report.formula_equivalence = count_equivalence_classes(n);
  report.formula_similarity = count_similarity_classes(n);

  ClassifyResult equiv = classify(n, Relation::Equivalent, threads);
  ClassifyResult simil = classify(n, Relation::Similar, threads);
  report.oracle_equivalence = BigCount(equiv.histogram.total);
  report.oracle_similarity = BigCount(simil.histogram.total);
  report.histograms = {equiv.histogram, simil.histogram};

  CheckFlags flags;
  flags.census_equivalence_ok =
      *report.oracle_equivalence == report.formula_equivalence;
  flags.census_similarity_ok =
      *report.oracle_similarity == report.formula_similarity;

  if (n % 2 == 0) {
    report.formula_m_symmetric = count_m_symmetric(n);
    report.oracle_m_symmetric = oracle_count_m_symmetric(equiv);
    flags.m_symmetric_ok =
        *report.formula_m_symmetric == *report.oracle_m_symmetric;
    flags.known_anomaly = n == 4 && !flags.m_symmetric_ok &&
                          *report.oracle_m_symmetric == 1 &&
                          *report.formula_m_symmetric == 0;

    // Every exactly-half-axes class must be one of the alternating-family
    // classes, and vice versa (n >= 6; the n = 4 class is not alternating).
    if (n >= 6) {
      std::vector<std::uint64_t> family_keys;
      for (auto& entry : enumerate_representatives(n).entries)
        family_keys.push_back(
            pack_word(canonical_key(entry.word, Relation::Equivalent).word));
      std::sort(family_keys.begin(), family_keys.end());

      std::vector<std::uint64_t> oracle_keys;
      for (auto& rec : equiv.classes)
        if (rec.axes == n / 2) oracle_keys.push_back(rec.packed_key);

      flags.alternating_cover_ok = family_keys == oracle_keys;
    }
  }

  report.checks = flags;
  return report;
}

}  // namespace polyaxis
