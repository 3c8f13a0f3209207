#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <string>
#include <vector>

#include "polyaxis/census.hpp"
#include "polyaxis/report.hpp"

using namespace polyaxis;

namespace {

CensusReport table_row(int n, std::int64_t m_symmetric) {
  CensusReport r;
  r.n = n;
  r.formula_equivalence = count_equivalence_classes(n);
  r.formula_similarity = count_similarity_classes(n);
  r.formula_m_symmetric = m_symmetric;
  return r;
}

const std::filesystem::path kFixtures{POLYAXIS_FIXTURES_DIR};

}  // namespace

TEST_CASE("csv table layout") {
  // Values as listed in the reference table; n = 4 carries the
  // enumeration value.
  std::vector<CensusReport> reports = {table_row(4, 1), table_row(6, 1),
                                       table_row(8, 1), table_row(10, 4)};
  CHECK(emit_table(reports, TableFormat::Csv) ==
        "n,m,P_m_n\n4,2,1\n6,3,1\n8,4,1\n10,5,4\n");

  CHECK(emit_table({table_row(30, 28)}, TableFormat::Csv) ==
        "n,m,P_m_n\n30,15,28\n");

  // Rows are ordered by n regardless of input order.
  std::vector<CensusReport> shuffled = {table_row(8, 1), table_row(4, 1)};
  CHECK(emit_table(shuffled, TableFormat::Csv) ==
        "n,m,P_m_n\n4,2,1\n8,4,1\n");

  CHECK_THROWS_AS(emit_table({}, TableFormat::Csv), std::invalid_argument);
}

TEST_CASE("json reports round-trip") {
  CensusReport full = table_row(6, 1);
  full.oracle_equivalence = BigCount(14);
  full.oracle_similarity = BigCount(12);
  full.oracle_m_symmetric = 1;
  SymmetryHistogram h;
  h.n = 6;
  h.relation = Relation::Similar;
  h.classes_by_axes = {{6, 1}, {3, 1}, {2, 3}, {1, 5}, {0, 2}};
  h.total = 12;
  full.histograms.push_back(h);
  CheckFlags flags;
  flags.known_anomaly = false;
  full.checks = flags;

  CensusReport sparse = table_row(52, 72);  // no oracle fields at all

  // A count too large for any fixed-width integer must survive the trip.
  CensusReport big;
  big.n = 100;
  big.formula_equivalence = count_equivalence_classes(100);
  big.formula_similarity = count_similarity_classes(100);

  std::vector<CensusReport> reports = {full, sparse, big};
  std::string json = emit_table(reports, TableFormat::Json);
  auto parsed = parse_reports(json);
  REQUIRE(parsed.size() == 3);
  CHECK(parsed[0] == full);
  CHECK(parsed[1] == sparse);
  CHECK(parsed[2] == big);

  // Absent optionals stay absent.
  CHECK_FALSE(parsed[1].oracle_equivalence.has_value());
  CHECK_FALSE(parsed[1].checks.has_value());
  CHECK_FALSE(parsed[2].formula_m_symmetric.has_value());
  CHECK(json.find("\"oracle\"") != std::string::npos);  // present for `full`
}

TEST_CASE("bfile emission") {
  SequenceFile seq;
  seq.offset = 3;
  seq.values = {BigCount(1), BigCount(2)};
  CHECK(emit_bfile(seq) == "3 1\n4 2\n");

  SequenceFile msym;
  msym.offset = 1;
  for (int n = 4; n <= 10; n += 2)
    msym.values.emplace_back(n == 4 ? 1 : (n == 10 ? 4 : 1));
  CHECK(emit_bfile(msym) == "1 1\n2 1\n3 1\n4 4\n");
}

TEST_CASE("bfile parsing") {
  auto seq = parse_bfile("3 1\n4 2\n");
  CHECK(seq.offset == 3);
  CHECK(seq.values == std::vector<BigCount>{1, 2});

  // Comments and blank lines are tolerated.
  auto with_comments = parse_bfile("# header\n\n1 10\n2 20\n# done\n");
  CHECK(with_comments.offset == 1);
  CHECK(with_comments.values == std::vector<BigCount>{10, 20});

  // Indices must be consecutive.
  CHECK_THROWS_AS(parse_bfile("1 10\n3 30\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bfile("1 10\nbogus\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bfile(""), std::invalid_argument);

  // Values beyond 64 bits parse exactly.
  BigCount huge = count_equivalence_classes(60);
  auto round = parse_bfile("7 " + huge.get_str() + "\n");
  CHECK(round.values[0] == huge);
}

TEST_CASE("bfile round-trip") {
  SequenceFile seq;
  seq.offset = -2;
  seq.values = {BigCount(5), BigCount(0), count_similarity_classes(40)};
  CHECK(parse_bfile(emit_bfile(seq)) == seq);
}

TEST_CASE("sequence comparison") {
  SequenceFile a, b;
  a.offset = 1;
  a.values = {1, 1, 1, 4, 2};
  b = a;
  CHECK(compare_sequence(a, b).empty());

  b.values[3] = 9;
  auto diffs = compare_sequence(a, b);
  REQUIRE(diffs.size() == 1);
  CHECK(diffs[0].index == 4);
  CHECK(diffs[0].computed == 4);
  CHECK(diffs[0].reference == 9);

  // Partial overlap compares only the shared range.
  SequenceFile tail;
  tail.offset = 4;
  tail.values = {4, 2, 99};
  CHECK(compare_sequence(a, tail).empty());

  SequenceFile disjoint;
  disjoint.offset = 100;
  disjoint.values = {1};
  CHECK_THROWS_AS(compare_sequence(a, disjoint), std::invalid_argument);
}

TEST_CASE("checked-in reference sequences load") {
  auto half_axes_seq = load_bfile(kFixtures / "m_symmetric_counts.bfile");
  CHECK(half_axes_seq.offset == 1);
  REQUIRE(half_axes_seq.values.size() == 44);
  CHECK(half_axes_seq.values.front() == 1);
  CHECK(half_axes_seq.values[14] == 28);  // index 15 <-> n = 32
  CHECK(half_axes_seq.values.back() == 264);

  auto power_two_seq = load_bfile(kFixtures / "power_of_two_counts.bfile");
  CHECK(power_two_seq.offset == 3);
  CHECK(power_two_seq.values == std::vector<BigCount>{1, 6, 28, 120, 496, 2016});

  CHECK_THROWS(load_bfile(kFixtures / "no_such_file.bfile"));
}
