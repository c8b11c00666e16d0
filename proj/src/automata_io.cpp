#include "sclab/automata_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace sclab {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw io_error("automaton: " + msg); }

void check_keys(const json& j, const std::set<std::string>& required,
                const std::set<std::string>& optional) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!required.count(key) && !optional.count(key)) fail("unknown field \"" + key + "\"");
  }
  for (const std::string& key : required)
    if (!j.contains(key)) fail("missing field \"" + key + "\"");
}

int get_int(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

Alphabet parse_alphabet(const json& j) {
  if (!j.is_array() || j.empty()) fail("alphabet must be a nonempty array");
  Alphabet a;
  for (const json& s : j) {
    if (!s.is_string()) fail("alphabet entries must be strings");
    a.symbols.push_back(s.get<std::string>());
  }
  return a;
}

std::vector<int> parse_state_list(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const json& e : j) out.push_back(get_int(e, what));
  return out;
}

Dfa parse_dfa(const json& j) {
  check_keys(j, {"kind", "alphabet", "states", "start", "finals", "transitions"}, {});
  Alphabet alphabet = parse_alphabet(j["alphabet"]);
  int states = get_int(j["states"], "states");
  if (states < 1) fail("a dfa needs at least one state");
  int start = get_int(j["start"], "start");
  std::vector<int> finals = parse_state_list(j["finals"], "finals");

  Dfa d;
  try {
    d = make_dfa(std::move(alphabet), states, start, finals);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }

  if (!j["transitions"].is_array()) fail("transitions must be an array");
  for (const json& t : j["transitions"]) {
    if (!t.is_array() || t.size() != 3) fail("dfa transitions are [from, symbol, to]");
    int from = get_int(t[0], "transition source");
    if (!t[1].is_string()) fail("transition symbol must be a string");
    int sym = d.alphabet.index_of(t[1].get<std::string>());
    int to = get_int(t[2], "transition target");
    if (from < 0 || from >= states || to < 0 || to >= states) fail("transition state out of range");
    if (sym < 0) fail("transition symbol not in alphabet");
    if (d.next(from, sym) >= 0) fail("duplicate dfa transition");
    d.set_next(from, sym, to);
  }
  return d;
}

Nfa parse_nfa(const json& j) {
  check_keys(j, {"kind", "alphabet", "states", "starts", "finals", "transitions"}, {"epsilon"});
  Alphabet alphabet = parse_alphabet(j["alphabet"]);
  int states = get_int(j["states"], "states");
  if (states < 0) fail("negative state count");
  std::vector<int> starts = parse_state_list(j["starts"], "starts");
  std::vector<int> finals = parse_state_list(j["finals"], "finals");

  Nfa n;
  try {
    n = make_nfa(std::move(alphabet), states, starts, finals);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }

  if (!j["transitions"].is_array()) fail("transitions must be an array");
  for (const json& t : j["transitions"]) {
    if (!t.is_array() || t.size() != 3) fail("nfa transitions are [from, symbol, [to...]]");
    int from = get_int(t[0], "transition source");
    if (!t[1].is_string()) fail("transition symbol must be a string");
    int sym = n.alphabet.index_of(t[1].get<std::string>());
    if (sym < 0) fail("transition symbol not in alphabet");
    if (from < 0 || from >= states) fail("transition state out of range");
    std::vector<int> targets = parse_state_list(t[2], "transition targets");
    for (int to : targets) {
      if (to < 0 || to >= states) fail("transition state out of range");
      add_transition(n, from, sym, to);
    }
  }
  if (j.contains("epsilon")) {
    if (!j["epsilon"].is_array()) fail("epsilon must be an array");
    for (const json& e : j["epsilon"]) {
      if (!e.is_array() || e.size() != 2) fail("epsilon entries are [from, to]");
      int from = get_int(e[0], "epsilon source");
      int to = get_int(e[1], "epsilon target");
      if (from < 0 || from >= states || to < 0 || to >= states)
        fail("epsilon state out of range");
      add_epsilon(n, from, to);
    }
  }
  return n;
}

}  // namespace

nlohmann::ordered_json to_json(const Dfa& d) {
  validate(d);
  ordered_json j;
  j["kind"] = "dfa";
  j["alphabet"] = d.alphabet.symbols;
  j["states"] = d.state_count;
  j["start"] = d.start;
  j["finals"] = d.final_list();
  ordered_json trans = ordered_json::array();
  for (int s = 0; s < d.state_count; ++s)
    for (int a = 0; a < d.alphabet.size(); ++a)
      if (d.next(s, a) >= 0) trans.push_back({s, d.alphabet.symbols[a], d.next(s, a)});
  j["transitions"] = std::move(trans);
  return j;
}

nlohmann::ordered_json to_json(const Nfa& n) {
  validate(n);
  ordered_json j;
  j["kind"] = "nfa";
  j["alphabet"] = n.alphabet.symbols;
  j["states"] = n.state_count;
  j["starts"] = n.starts;
  j["finals"] = n.final_list();
  ordered_json trans = ordered_json::array();
  for (int s = 0; s < n.state_count; ++s)
    for (int a = 0; a < n.alphabet.size(); ++a)
      if (!n.targets(s, a).empty()) trans.push_back({s, n.alphabet.symbols[a], n.targets(s, a)});
  j["transitions"] = std::move(trans);
  ordered_json eps = ordered_json::array();
  for (int s = 0; s < n.state_count; ++s)
    for (int t : n.epsilon[s]) eps.push_back({s, t});
  if (!eps.empty()) j["epsilon"] = std::move(eps);
  return j;
}

std::string canonical_text(const Dfa& d) { return to_json(d).dump(); }
std::string canonical_text(const Nfa& n) { return to_json(n).dump(); }
std::string canonical_text(const Automaton& a) {
  return std::visit([](const auto& m) { return canonical_text(m); }, a);
}

Automaton automaton_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail("document must be an object");
  if (!j.contains("kind") || !j["kind"].is_string()) fail("missing \"kind\"");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "dfa") return parse_dfa(j);
  if (kind == "nfa") return parse_nfa(j);
  fail("kind must be \"dfa\" or \"nfa\"");
}

Automaton load_automaton(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw io_error(path + ": " + e.what());
  }
  try {
    return automaton_from_json(j);
  } catch (const io_error& e) {
    throw io_error(path + ": " + e.what());
  }
}

void save_automaton(const std::string& path, const Automaton& a) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write " + path);
  out << canonical_text(a) << "\n";
  if (!out) throw io_error("write failed for " + path);
}

int states_of(const Automaton& a) {
  return std::visit([](const auto& m) { return m.state_count; }, a);
}

bool holds_dfa(const Automaton& a) { return std::holds_alternative<Dfa>(a); }

}  // namespace sclab
