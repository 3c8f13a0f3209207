#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyaxis/census.hpp"
#include "polyaxis/polygon.hpp"

// Serialization of census results and integer sequences, plus comparison
// against checked-in reference sequences. Sequences use the b-file
// convention: one "index value" pair per line, consecutive indices.
// Big counts serialize as decimal strings in JSON.

namespace polyaxis {

struct SymmetryHistogram {
  int n = 0;
  Relation relation = Relation::Equivalent;
  std::map<int, std::int64_t> classes_by_axes;
  std::int64_t total = 0;

  bool operator==(const SymmetryHistogram&) const = default;
};

struct CheckFlags {
  bool census_equivalence_ok = true;
  bool census_similarity_ok = true;
  bool m_symmetric_ok = true;      // formula vs oracle, even n
  bool alternating_cover_ok = true;  // families keys == oracle half-axes keys
  bool known_anomaly = false;        // the n = 4 crossed-square blind spot

  // Pass/fail for CI: the documented n = 4 mismatch is tolerated.
  bool passed() const {
    return census_equivalence_ok && census_similarity_ok &&
           alternating_cover_ok && (m_symmetric_ok || known_anomaly);
  }
  bool operator==(const CheckFlags&) const = default;
};

struct CensusReport {
  int n = 0;
  BigCount formula_equivalence;
  BigCount formula_similarity;
  std::optional<std::int64_t> formula_m_symmetric;  // even n only
  std::optional<BigCount> oracle_equivalence;
  std::optional<BigCount> oracle_similarity;
  std::optional<std::int64_t> oracle_m_symmetric;
  std::vector<SymmetryHistogram> histograms;
  std::optional<CheckFlags> checks;

  bool operator==(const CensusReport&) const = default;
};

enum class TableFormat { Csv, Json };

// CSV: header "n,m,P_m_n", one row per report that carries a half-axes
// count, ordered by n. JSON: every field, absent optionals omitted.
std::string emit_table(const std::vector<CensusReport>& reports,
                       TableFormat format);

// Inverse of emit_table(..., Json).
std::vector<CensusReport> parse_reports(const std::string& json_text);

struct SequenceFile {
  std::int64_t offset = 0;
  std::vector<BigCount> values;

  bool operator==(const SequenceFile&) const = default;
};

std::string emit_bfile(const SequenceFile& seq);
SequenceFile parse_bfile(const std::string& text);
SequenceFile load_bfile(const std::filesystem::path& path);

struct SequenceMismatch {
  std::int64_t index = 0;
  BigCount computed;
  BigCount reference;
};

// Mismatches over the overlapping index range; empty means pass.
// Throws if the ranges do not overlap.
std::vector<SequenceMismatch> compare_sequence(const SequenceFile& computed,
                                               const SequenceFile& reference);

}  // namespace polyaxis
