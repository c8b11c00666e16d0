#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sclab {

/// Ordered list of named input symbols. Symbol names are nonempty and
/// unique; alphabets compare by the full ordered list.
struct Alphabet {
  std::vector<std::string> symbols;

  int size() const { return static_cast<int>(symbols.size()); }
  int index_of(std::string_view name) const;  // -1 when absent
  bool operator==(const Alphabet&) const = default;
};

Alphabet alphabet_ab();

/// A word over an alphabet, as symbol indices.
using Word = std::vector<int>;

/// Word from single-character symbol names, e.g. "aba" over {a,b}.
Word word_from_chars(const Alphabet& alphabet, std::string_view text);

/// Deterministic automaton. The transition table may temporarily hold -1
/// for missing entries; complete() totalizes it. Every operation that
/// returns a Dfa returns a complete one.
struct Dfa {
  Alphabet alphabet;
  int state_count = 0;
  int start = 0;
  std::vector<std::uint8_t> finals;  // one flag per state
  std::vector<int> delta;            // [state * |alphabet| + symbol] -> state

  int next(int state, int symbol) const {
    return delta[static_cast<std::size_t>(state) * alphabet.symbols.size() + symbol];
  }
  void set_next(int state, int symbol, int to) {
    delta[static_cast<std::size_t>(state) * alphabet.symbols.size() + symbol] = to;
  }
  bool is_final(int state) const { return finals[state] != 0; }
  std::vector<int> final_list() const;
};

/// Nondeterministic automaton with a set of initial states and epsilon
/// transitions. `starts` may be empty; that value accepts nothing.
struct Nfa {
  Alphabet alphabet;
  int state_count = 0;
  std::vector<int> starts;                // sorted, unique
  std::vector<std::uint8_t> finals;       // one flag per state
  std::vector<std::vector<int>> delta;    // [state * |alphabet| + symbol] -> sorted targets
  std::vector<std::vector<int>> epsilon;  // [state] -> sorted targets

  const std::vector<int>& targets(int state, int symbol) const {
    return delta[static_cast<std::size_t>(state) * alphabet.symbols.size() + symbol];
  }
  bool is_final(int state) const { return finals[state] != 0; }
  std::vector<int> final_list() const;
};

/// Dfa with all transitions missing; fill via set_next.
Dfa make_dfa(Alphabet alphabet, int states, int start, const std::vector<int>& finals);
Nfa make_nfa(Alphabet alphabet, int states, const std::vector<int>& starts,
             const std::vector<int>& finals);
void add_transition(Nfa& nfa, int from, int symbol, int to);
void add_epsilon(Nfa& nfa, int from, int to);

/// Throw std::invalid_argument when the automaton is malformed.
void validate(const Dfa&);
void validate(const Nfa&);

bool is_complete(const Dfa&);

/// Totalizes the transition function. If anything was missing, a fresh
/// non-final sink state with self-loops is appended; the language is
/// unchanged. Complete input comes back as-is.
Dfa complete(const Dfa&);

/// The same automaton as an Nfa with a singleton start set.
Nfa lift(const Dfa&);

/// Subset construction with epsilon closure. Result states are the
/// reachable closed subsets, numbered in breadth-first discovery order with
/// symbols in alphabet order; the empty subset becomes a sink only when
/// reachable. Always returns a complete Dfa.
Dfa determinize(const Nfa&);

/// Minimal complete DFA, computed by partition refinement. The dead state
/// is kept when the language needs one; numbering is breadth-first from the
/// start. Idempotent. Requires a complete input.
Dfa minimize(const Dfa&);

/// Number of states of the minimal complete DFA for the language.
int state_complexity(const Dfa&);
int state_complexity(const Nfa&);

bool accepts(const Dfa&, const Word&);
bool accepts(const Nfa&, const Word&);

/// Reachable product automaton of two complete DFAs over the same alphabet.
/// A pair is final according to `combine` applied to the two final flags.
Dfa product(const Dfa& a, const Dfa& b, bool (*combine)(bool, bool));

/// Exact language equality, decided by product reachability.
bool equivalent(const Dfa&, const Dfa&);
bool equivalent(const Nfa&, const Nfa&);
bool equivalent(const Dfa&, const Nfa&);
bool equivalent(const Nfa&, const Dfa&);

Dfa dfa_empty_language(const Alphabet&);    // 1 state, accepts nothing
Dfa dfa_epsilon_language(const Alphabet&);  // 2 states, accepts only the empty word
Dfa dfa_sigma_star(const Alphabet&);        // 1 state, accepts everything

}  // namespace sclab
