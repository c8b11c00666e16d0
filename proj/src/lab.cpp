#include "sclab/lab.hpp"

#include "sclab/regops.hpp"
#include "sclab/witnesses.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace sclab {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::string int_list(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string sizes_param(const std::vector<int>& ns) { return "n=(" + int_list(ns) + ")"; }

// All size vectors with k components in [lo, hi], in lexicographic order.
void for_each_size_vector(int k, int lo, int hi, const std::function<void(const SizeVector&)>& f) {
  std::vector<int> ns(k, lo);
  for (;;) {
    f(SizeVector(ns));
    int i = k - 1;
    while (i >= 0 && ns[i] == hi) {
      ns[i] = lo;
      --i;
    }
    if (i < 0) break;
    ++ns[i];
  }
}

std::string ratio_vs_bound(const Ratio& r, const char* rel, long bound) {
  std::ostringstream out;
  out << r.str() << " " << rel << " " << bound;
  return out.str();
}

}  // namespace

Report verify_witness(const WitnessVerifyConfig& cfg) {
  Report report;
  report.experiment = "verify-witness";

  if (cfg.family == WitnessFamily::OddA) {
    report.config.emplace_back("family", "odd-a");
    const Nat sc = state_complexity(op_star(witness_odd_a()));
    report.rows.push_back(row_equal("star of odd-a", sc, 3, "quotient-bound-floor"));
    return report;
  }

  if (cfg.family == WitnessFamily::CatK) {
    report.config.emplace_back("family", "cat-k");
    report.config.emplace_back("k", std::to_string(cfg.k_lo) + ".." + std::to_string(cfg.k_hi));
    report.config.emplace_back("n",
                               std::to_string(cfg.size_lo) + ".." + std::to_string(cfg.size_hi));
    require(cfg.k_lo >= 2 && cfg.k_hi >= cfg.k_lo, "verify_witness: bad k range");
    require(cfg.size_lo >= 2 && cfg.size_hi >= cfg.size_lo, "verify_witness: bad size range");
    for (int k = cfg.k_lo; k <= cfg.k_hi; ++k)
      for_each_size_vector(k, cfg.size_lo, cfg.size_hi, [&](const SizeVector& sv) {
        const Nat sc = state_complexity(catenation_k(witness_cat_k(sv)));
        report.rows.push_back(row_equal(sizes_param(sv.ns), sc, sc_cat_k(sv), "cat-tuple-count"));
      });
    return report;
  }

  report.config.emplace_back("family", "star");
  const char* pipeline_name = cfg.pipeline == StarPipeline::Star ? "star"
                              : cfg.pipeline == StarPipeline::StarOfLeftQuotient ? "slq"
                                                                                 : "lqs";
  report.config.emplace_back("pipeline", pipeline_name);
  report.config.emplace_back("n", std::to_string(cfg.n_lo) + ".." + std::to_string(cfg.n_hi));
  require(cfg.n_lo >= 2 && cfg.n_hi >= cfg.n_lo, "verify_witness: bad n range");

  for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    const Dfa machine = (n == 2) ? witness_odd_a() : witness_star(n);
    const Nat target = pow2(n - 1) + pow2(n - 2);
    const std::string params = "n=" + std::to_string(n);
    switch (cfg.pipeline) {
      case StarPipeline::Star: {
        const Nat sc = state_complexity(op_star(machine));
        report.rows.push_back(row_equal(params, sc, target, "star-bound-floor"));
        break;
      }
      case StarPipeline::StarOfLeftQuotient: {
        const Dfa built = star_of_left_quotient(dfa_epsilon_language(machine.alphabet), machine);
        report.rows.push_back(row_leq(params + " construction", built.state_count,
                                      quotient_bounds(n).star_lq_upper, "subset-bound"));
        report.rows.push_back(
            row_equal(params + " minimized", minimize(built).state_count, target,
                      "star-bound-floor"));
        break;
      }
      case StarPipeline::LeftQuotientOfStar: {
        const Dfa built = left_quotient_of_star(dfa_epsilon_language(machine.alphabet), machine);
        report.rows.push_back(row_leq(params + " construction", built.state_count,
                                      quotient_bounds(n).lq_star_upper, "subset-bound"));
        report.rows.push_back(
            row_equal(params + " minimized", minimize(built).state_count, target,
                      "star-bound-floor"));
        break;
      }
    }
  }
  return report;
}

Report reproduce_sc_neu_tables(int m_lo, int m_hi, int n_lo, int n_hi) {
  require(m_lo >= 2 && m_hi >= m_lo && m_hi <= 32, "tables: m range must lie in [2,32]");
  require(n_lo >= 2 && n_hi >= n_lo && n_hi <= 32, "tables: n range must lie in [2,32]");

  Report report;
  report.experiment = "tables";
  report.config.emplace_back("m", std::to_string(m_lo) + ".." + std::to_string(m_hi));
  report.config.emplace_back("n", std::to_string(n_lo) + ".." + std::to_string(n_hi));

  auto value_cell = [](const Nat& sc, const Nat& neu, const Ratio& r) {
    return "sc=" + sc.str() + " estimate=" + neu.str() + " ratio=" + r.str();
  };

  for (int m = m_lo; m <= m_hi; ++m)
    for (int n = n_lo; n <= n_hi; ++n) {
      const std::string params = "m=" + std::to_string(m) + " n=" + std::to_string(n);
      {
        const Nat sc = sc_star_union(m, n);
        const Nat neu = neu_star_of(BasicOp::Union, std::vector<int>{m, n});
        const Ratio r = ratio(neu, sc);
        ReportRow row;
        row.params = "star-of-union " + params;
        row.computed = value_cell(sc, neu, r);
        row.expected = "ratio > 8";
        row.provenance = "estimate-over-size";
        row.verdict = (r > Ratio(8)) ? Verdict::WithinBound : Verdict::ExceedsBound;
        report.rows.push_back(std::move(row));
      }
      {
        const Nat sc = sc_star_intersection(m, n);
        const Nat neu = neu_star_of(BasicOp::Intersection, std::vector<int>{m, n});
        const Ratio r = ratio(neu, sc);
        ReportRow row;
        row.params = "star-of-intersection " + params;
        row.computed = value_cell(sc, neu, r);
        row.expected = "ratio = 8/3";
        row.provenance = "estimate-over-size";
        row.verdict = (r == Ratio(Nat(8), Nat(3))) ? Verdict::Match : Verdict::ExceedsBound;
        report.rows.push_back(std::move(row));
      }
      {
        const Nat sc = sc_star_catenation(m, n);
        const Nat neu = neu_star_of(BasicOp::Catenation, std::vector<int>{m, n});
        const Ratio r = ratio(neu, sc);
        ReportRow row;
        row.params = "star-of-catenation " + params;
        row.computed = value_cell(sc, neu, r);
        row.provenance = "estimate-over-size";
        if (m == 3) {
          row.expected = "ratio = 4";
          row.verdict = (r == Ratio(4)) ? Verdict::Match : Verdict::ExceedsBound;
        } else if (m >= 4 && n >= 3) {
          row.expected = "ratio < 4";
          row.verdict = (r < Ratio(4)) ? Verdict::WithinBound : Verdict::ExceedsBound;
        } else {
          // Small argument sizes sit outside the asymptotic regime; the
          // excess is recorded, not judged.
          row.expected = "recorded (small sizes)";
          row.verdict = Verdict::Finding;
        }
        report.rows.push_back(std::move(row));
      }
    }

  for (int n = n_lo; n <= n_hi; ++n) {
    const Nat sc = sc_star_reversal(n);
    const Nat neu = neu_star_of(BasicOp::Reversal, std::vector<int>{n});
    const Ratio r = ratio(neu, sc);
    ReportRow row;
    row.params = "star-of-reversal n=" + std::to_string(n);
    row.computed = value_cell(sc, neu, r);
    row.expected = "ratio = 4";
    row.provenance = "estimate-over-size";
    row.verdict = (r == Ratio(4)) ? Verdict::Match : Verdict::ExceedsBound;
    report.rows.push_back(std::move(row));
  }
  return report;
}

Report cross_check_cat_formulas(int k_max, int n_max) {
  require(k_max >= 2 && k_max <= 5, "cross-check: k_max must lie in [2,5]");
  require(n_max >= 2 && n_max <= 8, "cross-check: n_max must lie in [2,8]");

  Report report;
  report.experiment = "cross-check-cat";
  report.config.emplace_back("k_max", std::to_string(k_max));
  report.config.emplace_back("n_max", std::to_string(n_max));

  const std::string grid = "[2," + std::to_string(n_max) + "]";

  {
    Nat cases = 0, matches = 0;
    for_each_size_vector(2, 2, n_max, [&](const SizeVector& sv) {
      ++cases;
      if (sc_cat_k(sv) == sc_cat2(sv.ns[0], sv.ns[1])) ++matches;
    });
    report.rows.push_back(
        row_equal("k=2 grid " + grid + "^2: tuple count vs pairwise form", matches, cases,
                  "pairwise-formula"));
  }
  if (k_max >= 3) {
    Nat cases = 0, matches = 0;
    for_each_size_vector(3, 2, n_max, [&](const SizeVector& sv) {
      ++cases;
      const CatKTerms t = cat_k_terms(sv);
      const Nat assembled = approx_cat_k(sv) - t.d - t.e1 - t.e2;
      if (sc_cat_k(sv) == assembled) ++matches;
    });
    report.rows.push_back(
        row_equal("k=3 grid " + grid + "^3: tuple count vs term assembly", matches, cases,
                  "exclusion-terms"));
  }
  if (k_max >= 4) {
    Nat cases = 0, matches = 0;
    for_each_size_vector(4, 2, n_max, [&](const SizeVector& sv) {
      ++cases;
      if (sc_cat_k(sv) == sc_cat4(sv.ns[0], sv.ns[1], sv.ns[2], sv.ns[3])) ++matches;
    });
    report.rows.push_back(
        row_equal("k=4 grid " + grid + "^4: tuple count vs four-fold form", matches, cases,
                  "four-fold-formula"));
  }
  {
    Nat cases = 0, ordered = 0;
    for (int k = 2; k <= k_max; ++k)
      for_each_size_vector(k, 2, n_max, [&](const SizeVector& sv) {
        ++cases;
        const Nat sc = sc_cat_k(sv);
        const Nat upper = claim_upper_cat_k(sv);
        const Nat approx = approx_cat_k(sv);
        if (sc <= upper && upper <= approx) ++ordered;
      });
    report.rows.push_back(row_equal("all grids: tuple count <= upper estimate <= simple estimate",
                                    ordered, cases, "estimate-ordering"));
  }

  report.rows.push_back(row_equal("anchor n=(2,2)", sc_cat_k(SizeVector({2, 2})), 6,
                                  "pairwise-formula"));
  if (k_max >= 3)
    report.rows.push_back(row_equal("anchor n=(2,2,2)", sc_cat_k(SizeVector({2, 2, 2})), 15,
                                    "tuple-enumeration"));
  if (k_max >= 4)
    report.rows.push_back(row_equal("anchor n=(2,2,2,2)", sc_cat_k(SizeVector({2, 2, 2, 2})), 37,
                                    "four-fold-formula"));
  return report;
}

Report ratio_sweep_cat(int k_max, int n_max) {
  require(k_max >= 2 && k_max <= 5, "ratio-sweep: k_max must lie in [2,5]");
  require(n_max >= 2 && n_max <= 8, "ratio-sweep: n_max must lie in [2,8]");

  Report report;
  report.experiment = "ratio-sweep";
  report.config.emplace_back("k_max", std::to_string(k_max));
  report.config.emplace_back("n_max", std::to_string(n_max));

  Ratio overall(0);
  std::vector<int> overall_arg;
  for (int k = 2; k <= k_max; ++k) {
    Ratio worst(0);
    std::vector<int> worst_arg;
    for_each_size_vector(k, 2, n_max, [&](const SizeVector& sv) {
      const Ratio r = ratio(approx_cat_k(sv), sc_cat_k(sv));
      if (r > worst) {
        worst = r;
        worst_arg = sv.ns;
      }
    });
    if (worst > overall) {
      overall = worst;
      overall_arg = worst_arg;
    }
    ReportRow row;
    row.params = "k=" + std::to_string(k) + " grid [2," + std::to_string(n_max) + "]^" +
                 std::to_string(k);
    row.computed = "max ratio " + worst.str() + " at " + sizes_param(worst_arg);
    row.expected = "ratio < 4";
    row.provenance = "estimate-over-count";
    row.verdict = (worst < Ratio(4)) ? Verdict::WithinBound : Verdict::ExceedsBound;
    report.rows.push_back(std::move(row));
  }

  {
    ReportRow row;
    row.params = "overall";
    row.computed = "max ratio " + overall.str() + " at " + sizes_param(overall_arg);
    row.expected = "ratio < 4";
    row.provenance = "estimate-over-count";
    row.verdict = (overall < Ratio(4)) ? Verdict::WithinBound : Verdict::ExceedsBound;
    report.rows.push_back(std::move(row));
  }
  report.rows.push_back(row_finding("observation", ratio_vs_bound(overall, overall < Ratio(3) ? "<" : ">=", 3),
                                    "whether the maximum stays under 3", "estimate-over-count"));
  return report;
}

Nat dfa_enumeration_count(int states, int alphabet_size) {
  require(states >= 1, "enumeration: need at least one state");
  require(alphabet_size >= 1, "enumeration: need at least one symbol");
  Nat transition_maps = 1;
  for (int i = 0; i < states * alphabet_size; ++i) transition_maps *= states;
  return transition_maps * pow2(states);
}

Dfa dfa_from_enumeration_index(int states, const Alphabet& alphabet, std::uint64_t index) {
  const int k = alphabet.size();
  const std::uint64_t final_masks = std::uint64_t(1) << states;
  std::uint64_t mask = index % final_masks;
  std::uint64_t digits = index / final_masks;

  std::vector<int> finals;
  for (int s = 0; s < states; ++s)
    if (mask & (std::uint64_t(1) << s)) finals.push_back(s);
  Dfa d = make_dfa(alphabet, states, 0, finals);
  for (int s = 0; s < states; ++s)
    for (int a = 0; a < k; ++a) {
      d.set_next(s, a, static_cast<int>(digits % states));
      digits /= states;
    }
  return d;
}

namespace {

Alphabet enumeration_alphabet(int alphabet_size) {
  static const char* names[] = {"a", "b", "c", "d"};
  require(alphabet_size >= 1 && alphabet_size <= 4, "enumeration: alphabet size must be in [1,4]");
  Alphabet a;
  for (int i = 0; i < alphabet_size; ++i) a.symbols.push_back(names[i]);
  return a;
}

}  // namespace

void enumerate_dfas(int states, int alphabet_size, const std::function<void(const Dfa&)>& visit,
                    std::uint64_t ceiling) {
  const Nat count = dfa_enumeration_count(states, alphabet_size);
  require(count <= ceiling, "enumeration: count exceeds the ceiling");
  const Alphabet alphabet = enumeration_alphabet(alphabet_size);
  const std::uint64_t total = count.convert_to<std::uint64_t>();
  for (std::uint64_t i = 0; i < total; ++i)
    visit(dfa_from_enumeration_index(states, alphabet, i));
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

struct SplitMixStream {
  std::uint64_t state;
  std::uint64_t next() { return state = splitmix64(state); }
};

}  // namespace

Dfa random_dfa(int states, const Alphabet& alphabet, std::uint64_t material, bool proper_finals) {
  require(states >= 1, "random_dfa: need at least one state");
  require(!proper_finals || states >= 2, "random_dfa: proper finals need two states");
  SplitMixStream rng{splitmix64(material)};

  Dfa d = make_dfa(alphabet, states, 0, {});
  for (int s = 0; s < states; ++s)
    for (int a = 0; a < alphabet.size(); ++a)
      d.set_next(s, a, static_cast<int>(rng.next() % states));

  const std::uint64_t full = (std::uint64_t(1) << states) - 1;
  std::uint64_t mask = rng.next() & full;
  while (proper_finals && (mask == 0 || mask == full)) mask = rng.next() & full;
  for (int s = 0; s < states; ++s) d.finals[s] = (mask >> s) & 1;
  return d;
}

namespace {

// Closed-form bound for the recognized operation shapes.
std::optional<std::pair<Nat, std::string>> shape_bound(const OpExpr& op,
                                                       const std::vector<int>& sizes) {
  if (op.kind != OpExpr::Kind::Star || op.children.size() != 1) return std::nullopt;
  const OpExpr& inner = op.children[0];
  auto all_args = [&](std::size_t n) {
    if (inner.children.size() != n) return false;
    for (const OpExpr& c : inner.children)
      if (c.kind != OpExpr::Kind::Arg) return false;
    return true;
  };
  switch (inner.kind) {
    case OpExpr::Kind::Union:
      if (all_args(2)) return std::make_pair(sc_star_union(sizes[0], sizes[1]), "star-of-union");
      break;
    case OpExpr::Kind::Intersection:
      if (all_args(2))
        return std::make_pair(sc_star_intersection(sizes[0], sizes[1]), "star-of-intersection");
      break;
    case OpExpr::Kind::Cat:
      if (all_args(2))
        return std::make_pair(sc_star_catenation(sizes[0], sizes[1]), "star-of-catenation");
      break;
    case OpExpr::Kind::Reversal:
      if (all_args(1)) return std::make_pair(sc_star_reversal(sizes[0]), "star-of-reversal");
      break;
    default:
      break;
  }
  return std::nullopt;
}

struct SearchBest {
  long long sc = -1;
  std::string key;  // canonical serialization of the argument tuple
  std::vector<nlohmann::ordered_json> args;

  void offer(long long candidate_sc, const std::vector<Dfa>& candidate) {
    if (candidate_sc < sc) return;
    std::string candidate_key;
    for (const Dfa& d : candidate) {
      candidate_key += canonical_text(d);
      candidate_key += '\n';
    }
    if (candidate_sc == sc && !key.empty() && key <= candidate_key) return;
    sc = candidate_sc;
    key = std::move(candidate_key);
    args.clear();
    for (const Dfa& d : candidate) args.push_back(to_json(d));
  }

  void merge(SearchBest&& other) {
    if (other.sc < 0) return;
    if (other.sc > sc || (other.sc == sc && (key.empty() || other.key < key))) *this = std::move(other);
  }
};

}  // namespace

Report search_worst_case(const SearchConfig& cfg) {
  const int arg_count = arg_slot_count(cfg.op);
  require(arg_count >= 1, "search: operation template needs argument placeholders");
  require(static_cast<int>(cfg.sizes.size()) == arg_count,
          "search: one size per argument slot required");
  for (int n : cfg.sizes) require(n >= 1 && n <= 6, "search: argument sizes must lie in [1,6]");
  require(cfg.threads >= 1, "search: thread count must be positive");
  const Alphabet alphabet = enumeration_alphabet(cfg.alphabet_size);

  std::vector<std::uint64_t> machine_counts(arg_count);
  bool partial = false;
  std::uint64_t limit = 0;
  if (cfg.mode == SearchMode::Exhaustive) {
    Nat total = 1;
    for (int j = 0; j < arg_count; ++j) {
      const Nat c = dfa_enumeration_count(cfg.sizes[j], cfg.alphabet_size);
      require(c <= std::numeric_limits<std::uint64_t>::max(), "search: argument space too large");
      machine_counts[j] = c.convert_to<std::uint64_t>();
      total *= c;
    }
    if (total > cfg.ceiling) {
      partial = true;
      limit = cfg.ceiling;
    } else {
      limit = total.convert_to<std::uint64_t>();
    }
  } else {
    limit = cfg.sample_budget;
  }

  auto args_for_index = [&](std::uint64_t index) {
    std::vector<Dfa> args;
    args.reserve(arg_count);
    if (cfg.mode == SearchMode::Exhaustive) {
      std::uint64_t rest = index;
      for (int j = 0; j < arg_count; ++j) {
        args.push_back(dfa_from_enumeration_index(cfg.sizes[j], alphabet,
                                                  rest % machine_counts[j]));
        rest /= machine_counts[j];
      }
    } else {
      for (int j = 0; j < arg_count; ++j) {
        const std::uint64_t material =
            splitmix64(cfg.seed) ^ splitmix64(index * 0x9fb21c651e98df25ull + j);
        args.push_back(random_dfa(cfg.sizes[j], alphabet, material, cfg.proper_finals_only));
      }
    }
    return args;
  };

  auto scan = [&](std::uint64_t begin, std::uint64_t end) {
    SearchBest best;
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::vector<Dfa> args = args_for_index(i);
      const Automaton result = eval_op_expr(cfg.op, nullptr, args);
      const int sc = std::holds_alternative<Dfa>(result)
                         ? state_complexity(std::get<Dfa>(result))
                         : state_complexity(std::get<Nfa>(result));
      best.offer(sc, args);
    }
    return best;
  };

  SearchBest best;
  const int workers = static_cast<int>(std::min<std::uint64_t>(cfg.threads, std::max<std::uint64_t>(limit, 1)));
  if (workers <= 1) {
    best = scan(0, limit);
  } else {
    std::vector<SearchBest> results(workers);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (limit + workers - 1) / workers;
    for (int t = 0; t < workers; ++t) {
      const std::uint64_t begin = chunk * t;
      const std::uint64_t end = std::min(limit, begin + chunk);
      pool.emplace_back([&, t, begin, end] { results[t] = scan(begin, end); });
    }
    for (std::thread& th : pool) th.join();
    for (SearchBest& r : results) best.merge(std::move(r));
  }

  Report report;
  report.experiment = "search";
  report.config.emplace_back("op", op_expr_to_string(cfg.op));
  report.config.emplace_back("sizes", int_list(cfg.sizes));
  report.config.emplace_back("alphabet", std::to_string(cfg.alphabet_size));
  report.config.emplace_back("mode", cfg.mode == SearchMode::Exhaustive ? "exhaustive" : "random");
  if (cfg.mode == SearchMode::Random) {
    report.config.emplace_back("budget", std::to_string(cfg.sample_budget));
    report.config.emplace_back("seed", std::to_string(cfg.seed));
    report.config.emplace_back("proper_finals", cfg.proper_finals_only ? "true" : "false");
  }
  report.partial = partial;

  const std::string params = op_expr_to_string(cfg.op) + " sizes=(" + int_list(cfg.sizes) + ")";
  const auto bound = shape_bound(cfg.op, cfg.sizes);
  if (best.sc < 0) {
    report.rows.push_back(row_finding(params, "no candidates evaluated", "-", "search"));
  } else if (bound) {
    report.rows.push_back(row_leq(params + " max sc", best.sc, bound->first, bound->second));
    report.rows.push_back(row_finding(params + " attainment",
                                      Nat(best.sc) == bound->first ? "bound attained"
                                                                   : "bound not attained",
                                      "recorded", bound->second));
  } else {
    report.rows.push_back(
        row_finding(params + " max sc", std::to_string(best.sc), "recorded (no closed form)",
                    "search"));
  }
  if (partial)
    report.rows.push_back(row_finding("enumeration", "truncated at " + std::to_string(limit),
                                      "ceiling " + std::to_string(cfg.ceiling), "search"));
  report.argmax = std::move(best.args);
  return report;
}

}  // namespace sclab
