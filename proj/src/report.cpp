#include "polyaxis/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace polyaxis {

namespace {

using nlohmann::json;

const char* relation_name(Relation r) {
  return r == Relation::Equivalent ? "equivalent" : "similar";
}

Relation relation_from_name(const std::string& name) {
  if (name == "equivalent") return Relation::Equivalent;
  if (name == "similar") return Relation::Similar;
  throw std::invalid_argument("unknown relation: " + name);
}

json histogram_to_json(const SymmetryHistogram& h) {
  json axes = json::object();
  for (auto& [k, v] : h.classes_by_axes) axes[std::to_string(k)] = v;
  return json{{"n", h.n},
              {"relation", relation_name(h.relation)},
              {"classes_by_axes", axes},
              {"total", h.total}};
}

SymmetryHistogram histogram_from_json(const json& j) {
  SymmetryHistogram h;
  h.n = j.at("n").get<int>();
  h.relation = relation_from_name(j.at("relation").get<std::string>());
  for (auto& [k, v] : j.at("classes_by_axes").items())
    h.classes_by_axes[std::stoi(k)] = v.get<std::int64_t>();
  h.total = j.at("total").get<std::int64_t>();
  return h;
}

json report_to_json(const CensusReport& r) {
  json formula{{"equivalence_classes", r.formula_equivalence.get_str()},
               {"similarity_classes", r.formula_similarity.get_str()}};
  if (r.formula_m_symmetric) formula["m_symmetric"] = *r.formula_m_symmetric;

  json out{{"n", r.n}, {"formula", formula}};

  json oracle = json::object();
  if (r.oracle_equivalence)
    oracle["equivalence_classes"] = r.oracle_equivalence->get_str();
  if (r.oracle_similarity)
    oracle["similarity_classes"] = r.oracle_similarity->get_str();
  if (r.oracle_m_symmetric) oracle["m_symmetric"] = *r.oracle_m_symmetric;
  if (!oracle.empty()) out["oracle"] = oracle;

  if (!r.histograms.empty()) {
    json hs = json::array();
    for (auto& h : r.histograms) hs.push_back(histogram_to_json(h));
    out["histograms"] = hs;
  }

  if (r.checks) {
    out["checks"] = json{
        {"census_equivalence_ok", r.checks->census_equivalence_ok},
        {"census_similarity_ok", r.checks->census_similarity_ok},
        {"m_symmetric_ok", r.checks->m_symmetric_ok},
        {"alternating_cover_ok", r.checks->alternating_cover_ok},
        {"known_anomaly", r.checks->known_anomaly},
    };
  }
  return out;
}

CensusReport report_from_json(const json& j) {
  CensusReport r;
  r.n = j.at("n").get<int>();
  const json& formula = j.at("formula");
  r.formula_equivalence =
      BigCount(formula.at("equivalence_classes").get<std::string>());
  r.formula_similarity =
      BigCount(formula.at("similarity_classes").get<std::string>());
  if (formula.contains("m_symmetric"))
    r.formula_m_symmetric = formula.at("m_symmetric").get<std::int64_t>();

  if (j.contains("oracle")) {
    const json& oracle = j.at("oracle");
    if (oracle.contains("equivalence_classes"))
      r.oracle_equivalence =
          BigCount(oracle.at("equivalence_classes").get<std::string>());
    if (oracle.contains("similarity_classes"))
      r.oracle_similarity =
          BigCount(oracle.at("similarity_classes").get<std::string>());
    if (oracle.contains("m_symmetric"))
      r.oracle_m_symmetric = oracle.at("m_symmetric").get<std::int64_t>();
  }

  if (j.contains("histograms"))
    for (auto& h : j.at("histograms"))
      r.histograms.push_back(histogram_from_json(h));

  if (j.contains("checks")) {
    const json& c = j.at("checks");
    CheckFlags f;
    f.census_equivalence_ok = c.at("census_equivalence_ok").get<bool>();
    f.census_similarity_ok = c.at("census_similarity_ok").get<bool>();
    f.m_symmetric_ok = c.at("m_symmetric_ok").get<bool>();
    f.alternating_cover_ok = c.at("alternating_cover_ok").get<bool>();
    f.known_anomaly = c.at("known_anomaly").get<bool>();
    r.checks = f;
  }
  return r;
}

}  // namespace

std::string emit_table(const std::vector<CensusReport>& reports,
                       TableFormat format) {
  if (reports.empty()) throw std::invalid_argument("emit_table: no reports");

  std::vector<const CensusReport*> ordered;
  ordered.reserve(reports.size());
  for (auto& r : reports) ordered.push_back(&r);
  std::sort(ordered.begin(), ordered.end(),
            [](auto* a, auto* b) { return a->n < b->n; });

  if (format == TableFormat::Csv) {
    std::ostringstream out;
    out << "n,m,P_m_n\n";
    for (auto* r : ordered) {
      if (!r->formula_m_symmetric) continue;
      out << r->n << ',' << r->n / 2 << ',' << *r->formula_m_symmetric << '\n';
    }
    return out.str();
  }

  json arr = json::array();
  for (auto* r : ordered) arr.push_back(report_to_json(*r));
  return arr.dump(2) + "\n";
}

std::vector<CensusReport> parse_reports(const std::string& json_text) {
  json arr = json::parse(json_text);
  std::vector<CensusReport> reports;
  for (auto& j : arr) reports.push_back(report_from_json(j));
  return reports;
}

std::string emit_bfile(const SequenceFile& seq) {
  if (seq.values.empty()) throw std::invalid_argument("emit_bfile: no values");
  std::ostringstream out;
  for (size_t i = 0; i < seq.values.size(); ++i)
    out << seq.offset + static_cast<std::int64_t>(i) << ' '
        << seq.values[i].get_str() << '\n';
  return out.str();
}

SequenceFile parse_bfile(const std::string& text) {
  SequenceFile seq;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  std::int64_t expected = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::int64_t index;
    std::string value;
    if (!(fields >> index >> value))
      throw std::invalid_argument("bad b-file line: " + line);
    if (first) {
      seq.offset = index;
      expected = index;
      first = false;
    }
    if (index != expected)
      throw std::invalid_argument("b-file indices not consecutive at " +
                                  std::to_string(index));
    seq.values.emplace_back(value);
    ++expected;
  }
  if (seq.values.empty()) throw std::invalid_argument("empty b-file");
  return seq;
}

SequenceFile load_bfile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open b-file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_bfile(buf.str());
}

std::vector<SequenceMismatch> compare_sequence(const SequenceFile& computed,
                                               const SequenceFile& reference) {
  std::int64_t lo = std::max(computed.offset, reference.offset);
  std::int64_t hi =
      std::min(computed.offset + static_cast<std::int64_t>(computed.values.size()),
               reference.offset + static_cast<std::int64_t>(reference.values.size()));
  if (lo >= hi)
    throw std::invalid_argument("compare_sequence: index ranges do not overlap");

  std::vector<SequenceMismatch> diffs;
  for (std::int64_t i = lo; i < hi; ++i) {
    const BigCount& c = computed.values[i - computed.offset];
    const BigCount& r = reference.values[i - reference.offset];
    if (c != r) diffs.push_back({i, c, r});
  }
  return diffs;
}

}  // namespace polyaxis
