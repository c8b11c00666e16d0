// Command line front end: evaluate formulas, generate witness automata,
// apply operations to automaton files, and run the lab experiments.
//
// Exit codes: 0 success, 1 experiment verdict failure, 2 usage error,
// 3 unreadable or invalid input file.

#include "sclab/formulas.hpp"
#include "sclab/lab.hpp"
#include "sclab/opexpr.hpp"
#include "sclab/regops.hpp"
#include "sclab/witnesses.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace sclab;

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadFile = 3;

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": expected a comma-separated integer list");
    }
  }
  if (out.empty())
    throw std::invalid_argument(std::string(what) + ": expected a comma-separated integer list");
  return out;
}

std::pair<int, int> parse_range(const std::string& text, const char* what) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + ": expected N or LO..HI");
  }
}

Nat parse_nat(const std::string& text, const char* what) {
  try {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument(text);
    return Nat(text);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + ": expected a nonnegative integer");
  }
}

void write_or_print(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw io_error("cannot write " + out_path);
  out << text;
}

// ---------------------------------------------------------------- formula

struct FormulaResult {
  std::string rendered;                                      // value in text form
  std::string form;                                          // closed form as text
  std::vector<std::pair<std::string, std::string>> fields;   // extra named values
};

int run_formula(const std::string& name, const std::string& m_text, const std::string& n_text,
                const std::string& f_text, const std::string& num_text,
                const std::string& den_text, bool as_json) {
  auto need_mn = [&]() {
    if (m_text.empty() || n_text.empty())
      throw std::invalid_argument(name + ": requires -m and -n");
    return std::pair<int, int>{std::stoi(m_text), std::stoi(n_text)};
  };
  auto need_n = [&]() {
    if (n_text.empty()) throw std::invalid_argument(name + ": requires -n");
    return std::stoi(n_text);
  };
  auto need_sizes = [&](std::size_t exact) {
    if (n_text.empty()) throw std::invalid_argument(name + ": requires -n N1,N2,...");
    std::vector<int> ns = parse_int_list(n_text, "-n");
    if (exact && ns.size() != exact)
      throw std::invalid_argument(name + ": expected " + std::to_string(exact) + " sizes");
    return ns;
  };

  FormulaResult r;
  std::string params;
  if (name == "sc-star-union") {
    auto [m, n] = need_mn();
    params = "m=" + std::to_string(m) + ", n=" + std::to_string(n);
    r.rendered = sc_star_union(m, n).str();
    r.form = "2^(m+n-1) - 2^(m-1) - 2^(n-1) + 1";
  } else if (name == "sc-star-intersection") {
    auto [m, n] = need_mn();
    params = "m=" + std::to_string(m) + ", n=" + std::to_string(n);
    r.rendered = sc_star_intersection(m, n).str();
    r.form = "3/4 * 2^(m*n)";
  } else if (name == "sc-star-catenation") {
    auto [m, n] = need_mn();
    params = "m=" + std::to_string(m) + ", n=" + std::to_string(n);
    r.rendered = sc_star_catenation(m, n).str();
    r.form = "2^(m+n-1) + 2^(m+n-4) - 2^(m-1) - 2^(n-1) + m + 1";
  } else if (name == "sc-star-reversal") {
    int n = need_n();
    params = "n=" + std::to_string(n);
    r.rendered = sc_star_reversal(n).str();
    r.form = "2^n";
  } else if (name == "neu-star-union" || name == "neu-star-intersection" ||
             name == "neu-star-catenation") {
    auto [m, n] = need_mn();
    params = "m=" + std::to_string(m) + ", n=" + std::to_string(n);
    const BasicOp op = name == "neu-star-union" ? BasicOp::Union
                       : name == "neu-star-intersection" ? BasicOp::Intersection
                                                         : BasicOp::Catenation;
    r.rendered = neu_star_of(op, std::vector<int>{m, n}).str();
    r.form = name == "neu-star-union" ? "2^(m+n+2)"
             : name == "neu-star-intersection" ? "2^(m*n+1)"
                                               : "2^(m+n+1)";
  } else if (name == "neu-star-reversal") {
    int n = need_n();
    params = "n=" + std::to_string(n);
    r.rendered = neu_star_of(BasicOp::Reversal, std::vector<int>{n}).str();
    r.form = "2^(n+2)";
  } else if (name == "sc-cat2") {
    auto ns = need_sizes(2);
    params = "n=(" + n_text + ")";
    r.rendered = sc_cat2(ns[0], ns[1]).str();
    r.form = "n1*2^n2 - 2^(n2-1)";
  } else if (name == "sc-cat4") {
    auto ns = need_sizes(4);
    params = "n=(" + n_text + ")";
    r.rendered = sc_cat4(ns[0], ns[1], ns[2], ns[3]).str();
    r.form = "9(2m-1)2^(n+p+q-5) - 3(m-1)2^(p+q-2) - (2m-1)2^(n+q-2) + (m-1)2^q + (2m-1)2^(n-2)";
  } else if (name == "sc-cat-k") {
    SizeVector sv(need_sizes(0));
    if (!f_text.empty()) sv.fs = parse_int_list(f_text, "-f");
    params = "n=(" + n_text + ")" + (f_text.empty() ? "" : ", f=(" + f_text + ")");
    r.rendered = sc_cat_k(sv).str();
    r.form = "valid tuple count (dynamic program)";
  } else if (name == "claim-upper-cat-k") {
    SizeVector sv(need_sizes(0));
    params = "n=(" + n_text + ")";
    r.rendered = claim_upper_cat_k(sv).str();
    r.form = "n1*2^(n2+..+nk) - 2^(n2+..+nk-1) - ... - 2^(nk-1)";
  } else if (name == "approx-cat-k") {
    SizeVector sv(need_sizes(0));
    params = "n=(" + n_text + ")";
    r.rendered = approx_cat_k(sv).str();
    r.form = "n1*2^(n2+..+nk)";
  } else if (name == "cat-k-terms") {
    SizeVector sv(need_sizes(0));
    params = "n=(" + n_text + ")";
    const CatKTerms t = cat_k_terms(sv);
    r.rendered = "D=" + t.d.str() + " E1=" + t.e1.str() + " E2=" + t.e2.str();
    r.form = "printed exclusion terms (single final state)";
    r.fields = {{"D", t.d.str()}, {"E1", t.e1.str()}, {"E2", t.e2.str()}};
  } else if (name == "quotient-bounds") {
    int n = need_n();
    params = "n=" + std::to_string(n);
    const QuotientBounds q = quotient_bounds(n);
    r.rendered = "star_lq_upper=" + q.star_lq_upper.str() +
                 " star_lq_lower=" + q.star_lq_lower.str() +
                 " lq_star_upper=" + q.lq_star_upper.str() +
                 " lq_star_approx=" + q.lq_star_approx.str();
    r.form = "(2^n, 2^(n-1)+2^(n-2), 2^(n+1)-1, 2^(n+1))";
    r.fields = {{"star_lq_upper", q.star_lq_upper.str()},
                {"star_lq_lower", q.star_lq_lower.str()},
                {"lq_star_upper", q.lq_star_upper.str()},
                {"lq_star_approx", q.lq_star_approx.str()}};
  } else if (name == "ratio") {
    if (num_text.empty() || den_text.empty())
      throw std::invalid_argument("ratio: requires --num and --den");
    params = "num=" + num_text + ", den=" + den_text;
    r.rendered = ratio(parse_nat(num_text, "--num"), parse_nat(den_text, "--den")).str();
    r.form = "max(a/b, b/a)";
  } else {
    throw std::invalid_argument("unknown formula \"" + name + "\"");
  }

  if (as_json) {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["params"] = params;
    j["value"] = r.rendered;
    if (!r.fields.empty()) {
      nlohmann::ordered_json fields = nlohmann::ordered_json::object();
      for (const auto& [key, value] : r.fields) fields[key] = value;
      j["fields"] = std::move(fields);
    }
    j["form"] = r.form;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << name << "(" << params << ") = " << r.rendered << "\n";
    std::cout << "  form: " << r.form << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- witness

int run_witness(const std::string& family, const std::string& n_text, const std::string& out,
                const std::string& out_dir) {
  if (family == "odd-a") {
    if (out.empty()) throw std::invalid_argument("witness odd-a: requires --out FILE");
    save_automaton(out, witness_odd_a());
    std::cout << out << ": 2 states\n";
    return kExitOk;
  }
  if (family == "star") {
    if (n_text.empty() || out.empty())
      throw std::invalid_argument("witness star: requires -n N and --out FILE");
    const Dfa d = witness_star(std::stoi(n_text));
    save_automaton(out, d);
    std::cout << out << ": " << d.state_count << " states\n";
    return kExitOk;
  }
  if (family == "cat-k") {
    if (n_text.empty() || out_dir.empty())
      throw std::invalid_argument("witness cat-k: requires -n N1,N2,... and --out-dir DIR");
    const std::vector<Dfa> machines = witness_cat_k(SizeVector(parse_int_list(n_text, "-n")));
    std::string prefix = out_dir;
    if (!prefix.empty() && prefix.back() != '/') prefix += '/';
    for (std::size_t i = 0; i < machines.size(); ++i) {
      const std::string path = prefix + "m" + std::to_string(i + 1) + ".json";
      save_automaton(path, machines[i]);
      std::cout << path << ": " << machines[i].state_count << " states\n";
    }
    return kExitOk;
  }
  throw std::invalid_argument("unknown witness family \"" + family + "\"");
}

// ---------------------------------------------------------------- op

int run_op(const std::string& expr_text, bool do_minimize, const std::string& out) {
  const OpExpr expr = parse_op_expr(expr_text);
  if (arg_slot_count(expr) > 0)
    throw std::invalid_argument("op: expression must not contain placeholders");
  const Automaton result = eval_op_expr(expr, [](const std::string& path) {
    return load_automaton(path);
  });
  std::cout << "states=" << states_of(result) << " kind=" << (holds_dfa(result) ? "dfa" : "nfa")
            << "\n";

  Automaton to_write = result;
  if (do_minimize) {
    const Dfa minimal = holds_dfa(result) ? minimize(complete(std::get<Dfa>(result)))
                                          : minimize(determinize(std::get<Nfa>(result)));
    std::cout << "sc=" << minimal.state_count << "\n";
    to_write = minimal;
  }
  if (!out.empty()) save_automaton(out, to_write);
  return kExitOk;
}

// ---------------------------------------------------------------- experiment

ReportFormat parse_format(const std::string& text) {
  if (text == "text") return ReportFormat::Text;
  if (text == "json") return ReportFormat::Json;
  if (text == "csv") return ReportFormat::Csv;
  throw std::invalid_argument("--format: expected text, json or csv");
}

int run_experiment(const std::string& name, const std::string& family,
                   const std::string& pipeline, const std::string& n_text,
                   const std::string& m_text, const std::string& k_text, int k_max, int n_max,
                   const std::string& op_text, const std::string& sizes_text, int alphabet_size,
                   const std::string& mode_text, std::uint64_t budget, std::uint64_t seed,
                   bool proper_finals, int threads, const std::string& format_text,
                   const std::string& out) {
  const ReportFormat format = parse_format(format_text);
  Report report;

  if (name == "verify-witness") {
    WitnessVerifyConfig cfg;
    if (family == "star") cfg.family = WitnessFamily::Star;
    else if (family == "odd-a") cfg.family = WitnessFamily::OddA;
    else if (family == "cat-k") cfg.family = WitnessFamily::CatK;
    else throw std::invalid_argument("verify-witness: --family must be star, odd-a or cat-k");
    if (pipeline == "star") cfg.pipeline = StarPipeline::Star;
    else if (pipeline == "slq") cfg.pipeline = StarPipeline::StarOfLeftQuotient;
    else if (pipeline == "lqs") cfg.pipeline = StarPipeline::LeftQuotientOfStar;
    else throw std::invalid_argument("verify-witness: --pipeline must be star, slq or lqs");
    if (cfg.family == WitnessFamily::CatK) {
      if (!k_text.empty()) std::tie(cfg.k_lo, cfg.k_hi) = parse_range(k_text, "--k");
      if (!n_text.empty()) std::tie(cfg.size_lo, cfg.size_hi) = parse_range(n_text, "-n");
    } else if (!n_text.empty()) {
      std::tie(cfg.n_lo, cfg.n_hi) = parse_range(n_text, "-n");
    }
    report = verify_witness(cfg);
  } else if (name == "tables") {
    auto [m_lo, m_hi] = m_text.empty() ? std::pair<int, int>{2, 6} : parse_range(m_text, "-m");
    auto [lo, hi] = n_text.empty() ? std::pair<int, int>{2, 6} : parse_range(n_text, "-n");
    report = reproduce_sc_neu_tables(m_lo, m_hi, lo, hi);
  } else if (name == "cross-check-cat") {
    report = cross_check_cat_formulas(k_max, n_max);
  } else if (name == "ratio-sweep") {
    report = ratio_sweep_cat(k_max, n_max);
  } else if (name == "search") {
    if (op_text.empty() || sizes_text.empty())
      throw std::invalid_argument("search: requires --op TEMPLATE and --sizes N1,N2,...");
    SearchConfig cfg;
    cfg.op = parse_op_expr(op_text);
    cfg.sizes = parse_int_list(sizes_text, "--sizes");
    cfg.alphabet_size = alphabet_size;
    if (mode_text == "exhaustive") cfg.mode = SearchMode::Exhaustive;
    else if (mode_text == "random") cfg.mode = SearchMode::Random;
    else throw std::invalid_argument("search: --mode must be exhaustive or random");
    cfg.sample_budget = budget;
    cfg.seed = seed;
    cfg.proper_finals_only = proper_finals;
    cfg.threads = threads;
    if (const char* ceiling = std::getenv("SC_LAB_CEILING")) {
      try {
        cfg.ceiling = std::stoull(ceiling);
      } catch (const std::exception&) {
        throw std::invalid_argument("SC_LAB_CEILING: expected an integer");
      }
    }
    report = search_worst_case(cfg);
  } else {
    throw std::invalid_argument("unknown experiment \"" + name + "\"");
  }

  write_or_print(out, report.render(format));
  return report.passed() ? kExitOk : kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"State-complexity laboratory for regular languages"};
  app.require_subcommand(1);

  // formula
  std::string f_name, f_m, f_n, f_f, f_num, f_den;
  bool f_json = false;
  CLI::App* formula = app.add_subcommand("formula", "Evaluate a closed-form value exactly");
  formula->add_option("name", f_name, "Formula name (e.g. sc-star-union, sc-cat-k, ratio)")
      ->required();
  formula->add_option("-m", f_m, "First argument size");
  formula->add_option("-n", f_n, "Second argument size, or comma list for cat formulas");
  formula->add_option("-f", f_f, "Final-state counts for sc-cat-k");
  formula->add_option("--num", f_num, "Numerator for ratio");
  formula->add_option("--den", f_den, "Denominator for ratio");
  formula->add_flag("--json", f_json, "Emit JSON instead of text");

  // witness
  std::string w_family, w_n, w_out, w_out_dir;
  CLI::App* witness = app.add_subcommand("witness", "Generate a worst-case automaton family");
  witness->add_option("family", w_family, "star, odd-a or cat-k")->required();
  witness->add_option("-n", w_n, "Size (star) or comma list of sizes (cat-k)");
  witness->add_option("--out", w_out, "Output file");
  witness->add_option("--out-dir", w_out_dir, "Output directory for cat-k");

  // op
  std::string o_expr, o_out;
  bool o_minimize = false;
  CLI::App* op = app.add_subcommand("op", "Apply an operation expression to automaton files");
  op->add_option("expr", o_expr, "Expression, e.g. \"star(union(@a.json,@b.json))\"")->required();
  op->add_flag("--minimize", o_minimize, "Also minimize and report sc");
  op->add_option("--out", o_out, "Write the resulting automaton here");

  // experiment
  std::string e_name, e_family = "star", e_pipeline = "star", e_n, e_m, e_k;
  std::string e_op, e_sizes, e_mode = "exhaustive", e_format = "text", e_out;
  int e_k_max = 4, e_n_max = 6, e_threads = 1, e_alphabet = 2;
  std::uint64_t e_budget = 10000, e_seed = 0;
  bool e_proper = false;
  CLI::App* experiment = app.add_subcommand("experiment", "Run a lab experiment");
  experiment
      ->add_option("name", e_name,
                   "verify-witness, tables, cross-check-cat, ratio-sweep or search")
      ->required();
  experiment->add_option("--family", e_family, "verify-witness: star, odd-a or cat-k");
  experiment->add_option("--pipeline", e_pipeline, "verify-witness star family: star, slq or lqs");
  experiment->add_option("-n", e_n, "Range LO..HI");
  experiment->add_option("-m", e_m, "Range LO..HI (tables)");
  experiment->add_option("--k", e_k, "Range LO..HI of k (verify-witness cat-k)");
  experiment->add_option("--k-max", e_k_max, "Largest k (cross-check-cat, ratio-sweep)");
  experiment->add_option("--n-max", e_n_max, "Largest size (cross-check-cat, ratio-sweep)");
  experiment->add_option("--op", e_op, "search: operation template, e.g. \"star(union(_,_))\"");
  experiment->add_option("--sizes", e_sizes, "search: one state count per placeholder");
  experiment->add_option("--alphabet", e_alphabet, "search: alphabet size, 1 to 4");
  experiment->add_option("--mode", e_mode, "search: exhaustive or random");
  experiment->add_option("--budget", e_budget, "search random mode: sample count");
  experiment->add_option("--seed", e_seed, "search random mode: seed");
  experiment->add_flag("--proper-finals", e_proper,
                       "search random mode: resample empty or full final sets");
  experiment->add_option("--threads", e_threads, "Worker threads (results are unaffected)");
  experiment->add_option("--format", e_format, "text, json or csv");
  experiment->add_option("--out", e_out, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (formula->parsed()) return run_formula(f_name, f_m, f_n, f_f, f_num, f_den, f_json);
    if (witness->parsed()) return run_witness(w_family, w_n, w_out, w_out_dir);
    if (op->parsed()) return run_op(o_expr, o_minimize, o_out);
    if (experiment->parsed())
      return run_experiment(e_name, e_family, e_pipeline, e_n, e_m, e_k, e_k_max, e_n_max, e_op,
                            e_sizes, e_alphabet, e_mode, e_budget, e_seed, e_proper, e_threads,
                            e_format, e_out);
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadFile;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
