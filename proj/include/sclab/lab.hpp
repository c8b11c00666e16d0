#pragma once

#include "sclab/automata_io.hpp"
#include "sclab/formulas.hpp"
#include "sclab/opexpr.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sclab {

enum class Verdict { Match, WithinBound, ExceedsBound, Finding };
std::string_view verdict_name(Verdict v);

struct ReportRow {
  std::string params;
  std::string computed;
  std::string expected;
  std::string provenance;
  Verdict verdict = Verdict::Finding;
};

enum class ReportFormat { Text, Json, Csv };

/// Structured experiment result. Verdicts are derived from the computed and
/// expected values, never set by hand; a report passes when nothing exceeds
/// its bound. Equal configurations serialize to identical bytes.
struct Report {
  std::string experiment;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<ReportRow> rows;
  std::vector<nlohmann::ordered_json> argmax;  // worst-case automata from searches
  bool partial = false;

  bool passed() const;
  nlohmann::ordered_json to_json() const;
  std::string render(ReportFormat format) const;
};

/// Row helpers: equality demands Match, a bound check yields WithinBound.
ReportRow row_equal(std::string params, const Nat& computed, const Nat& expected,
                    std::string provenance);
ReportRow row_leq(std::string params, const Nat& computed, const Nat& bound,
                  std::string provenance);
ReportRow row_finding(std::string params, std::string computed, std::string expected,
                      std::string provenance);

enum class WitnessFamily { Star, OddA, CatK };
enum class StarPipeline { Star, StarOfLeftQuotient, LeftQuotientOfStar };

struct WitnessVerifyConfig {
  WitnessFamily family = WitnessFamily::Star;
  StarPipeline pipeline = StarPipeline::Star;  // Star family only
  int n_lo = 3;
  int n_hi = 8;
  int k_lo = 2;  // CatK family: range of k
  int k_hi = 4;
  int size_lo = 2;  // CatK family: range of each component size
  int size_hi = 3;
};

/// Build each witness, run its pipeline, compare against the closed forms.
Report verify_witness(const WitnessVerifyConfig& cfg);

/// Size, estimate and exact-ratio tables for the four star-of operations
/// over a grid of argument sizes. Ranges must lie in [2,32].
Report reproduce_sc_neu_tables(int m_lo, int m_hi, int n_lo, int n_hi);

/// Cross-validate the catenation dynamic program against every printed
/// closed form and the estimate ordering. k_max <= 5, n_max <= 8.
Report cross_check_cat_formulas(int k_max, int n_max);

/// Exact estimate/exact ratios for k-fold catenation over the full grid,
/// with per-k maxima and whether everything stays under 3 as a finding.
Report ratio_sweep_cat(int k_max, int n_max);

inline constexpr std::uint64_t kDefaultSearchCeiling = 100000000;

/// Number of complete DFAs enumerated for the given size: every transition
/// table over `states` states (start fixed at 0) times every final set.
Nat dfa_enumeration_count(int states, int alphabet_size);

/// The index-th enumerated DFA; indices decode transition digits first,
/// final-set bits last.
Dfa dfa_from_enumeration_index(int states, const Alphabet& alphabet, std::uint64_t index);

/// Visit every enumerated DFA in index order.
void enumerate_dfas(int states, int alphabet_size, const std::function<void(const Dfa&)>& visit,
                    std::uint64_t ceiling = kDefaultSearchCeiling);

/// Seeded generator used by randomized searches: uniform transition targets,
/// each state final with probability 1/2 (final sets resampled while empty
/// or full when proper finals are required), start fixed at 0.
Dfa random_dfa(int states, const Alphabet& alphabet, std::uint64_t material, bool proper_finals);

enum class SearchMode { Exhaustive, Random };

struct SearchConfig {
  OpExpr op;                      // template with argument placeholders
  std::vector<int> sizes;         // one state count per argument slot
  int alphabet_size = 2;
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t sample_budget = 10000;  // random mode
  std::uint64_t seed = 0;               // random mode
  bool proper_finals_only = false;      // random mode
  std::uint64_t ceiling = kDefaultSearchCeiling;
  int threads = 1;  // execution detail; never part of the report
};

/// Maximum minimal-DFA size of the operation over enumerated or sampled
/// argument tuples, with the worst arguments embedded. When the operation
/// shape has a known closed-form bound the maximum is checked against it;
/// exhaustive runs larger than the ceiling are truncated and flagged
/// partial. Results are independent of the thread count.
Report search_worst_case(const SearchConfig& cfg);

}  // namespace sclab
