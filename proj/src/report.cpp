#include "sclab/lab.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace sclab {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Match: return "match";
    case Verdict::WithinBound: return "within-bound";
    case Verdict::ExceedsBound: return "exceeds-bound";
    case Verdict::Finding: return "finding";
  }
  return "unknown";
}

bool Report::passed() const {
  return std::none_of(rows.begin(), rows.end(),
                      [](const ReportRow& r) { return r.verdict == Verdict::ExceedsBound; });
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["experiment"] = experiment;
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [key, value] : config) cfg[key] = value;
  j["config"] = std::move(cfg);
  nlohmann::ordered_json rs = nlohmann::ordered_json::array();
  for (const ReportRow& r : rows) {
    nlohmann::ordered_json row;
    row["params"] = r.params;
    row["computed"] = r.computed;
    row["expected"] = r.expected;
    row["provenance"] = r.provenance;
    row["verdict"] = std::string(verdict_name(r.verdict));
    rs.push_back(std::move(row));
  }
  j["rows"] = std::move(rs);
  if (!argmax.empty()) j["argmax"] = argmax;
  j["partial"] = partial;
  j["passed"] = passed();
  return j;
}

std::string Report::render(ReportFormat format) const {
  if (format == ReportFormat::Json) return to_json().dump() + "\n";

  if (format == ReportFormat::Csv) {
    std::ostringstream out;
    out << "params,computed,expected,provenance,verdict\n";
    for (const ReportRow& r : rows)
      out << csv_field(r.params) << ',' << csv_field(r.computed) << ',' << csv_field(r.expected)
          << ',' << csv_field(r.provenance) << ',' << verdict_name(r.verdict) << "\n";
    return out.str();
  }

  // Aligned text.
  const std::array<std::string, 5> header = {"params", "computed", "expected", "provenance",
                                             "verdict"};
  std::array<std::size_t, 5> width;
  for (std::size_t i = 0; i < 5; ++i) width[i] = header[i].size();
  auto cells = [](const ReportRow& r) {
    return std::array<std::string, 5>{r.params, r.computed, r.expected, r.provenance,
                                      std::string(verdict_name(r.verdict))};
  };
  for (const ReportRow& r : rows) {
    auto c = cells(r);
    for (std::size_t i = 0; i < 5; ++i) width[i] = std::max(width[i], c[i].size());
  }

  std::ostringstream out;
  out << "experiment: " << experiment << "\n";
  for (const auto& [key, value] : config) out << "  " << key << " = " << value << "\n";
  auto emit = [&](const std::array<std::string, 5>& c) {
    for (std::size_t i = 0; i < 5; ++i) {
      out << c[i];
      if (i + 1 < 5) out << std::string(width[i] - c[i].size() + 2, ' ');
    }
    out << "\n";
  };
  emit(header);
  for (const ReportRow& r : rows) emit(cells(r));
  for (const auto& a : argmax) out << "argmax: " << a.dump() << "\n";
  if (partial) out << "partial: true\n";
  out << (passed() ? "result: pass\n" : "result: FAIL\n");
  return out.str();
}

ReportRow row_equal(std::string params, const Nat& computed, const Nat& expected,
                    std::string provenance) {
  ReportRow r;
  r.params = std::move(params);
  r.computed = computed.str();
  r.expected = expected.str();
  r.provenance = std::move(provenance);
  r.verdict = (computed == expected) ? Verdict::Match : Verdict::ExceedsBound;
  return r;
}

ReportRow row_leq(std::string params, const Nat& computed, const Nat& bound,
                  std::string provenance) {
  ReportRow r;
  r.params = std::move(params);
  r.computed = computed.str();
  r.expected = "<= " + bound.str();
  r.provenance = std::move(provenance);
  r.verdict = (computed <= bound) ? Verdict::WithinBound : Verdict::ExceedsBound;
  return r;
}

ReportRow row_finding(std::string params, std::string computed, std::string expected,
                      std::string provenance) {
  ReportRow r;
  r.params = std::move(params);
  r.computed = std::move(computed);
  r.expected = std::move(expected);
  r.provenance = std::move(provenance);
  r.verdict = Verdict::Finding;
  return r;
}

}  // namespace sclab
