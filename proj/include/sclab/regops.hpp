#pragma once

#include "sclab/automata.hpp"

#include <vector>

namespace sclab {

Dfa op_union(const Dfa& a, const Dfa& b);
Dfa op_intersection(const Dfa& a, const Dfa& b);

/// Catenation by epsilon links from the finals of `a` to the starts of `b`.
Nfa op_catenation(const Nfa& a, const Nfa& b);
Nfa op_catenation(const Dfa& a, const Dfa& b);

/// Star by one fresh state that is both initial and final, epsilon-linked
/// to the old starts, with epsilon back-links from the old finals.
Nfa op_star(const Nfa& a);
Nfa op_star(const Dfa& a);

/// Transitions reversed; starts and finals swap roles.
Nfa op_reversal(const Dfa& a);

/// States of m reachable from its start by some word of L(l). Both machines
/// are completed first; the returned ids refer to complete(m).
std::vector<int> entry_states(const Dfa& m, const Dfa& l);

/// Accepts the left quotient of L(r) by L(l): the machine r restarted from
/// its entry states under l.
Nfa left_quotient(const Dfa& l, const Dfa& r);

/// Star of the left quotient, built as one deterministic automaton:
/// the quotiented machine with entry starts and final-to-entry epsilon
/// links, determinized, then topped with a fresh initial+final state that
/// copies the start's transitions. At most 2^n states for an n-state
/// complete m. The empty entry set yields the 2-state automaton for the
/// empty word.
Dfa star_of_left_quotient(const Dfa& l, const Dfa& m);

/// Left quotient of the star, determinized from the starred machine with
/// its start set replaced by the entry states under l. At most 2^(n+1)-1
/// states for an n-state complete m.
Dfa left_quotient_of_star(const Dfa& l, const Dfa& m);

/// Deterministic k-fold catenation. States are tuples of one state of the
/// first machine and one state subset per later machine; the entry state of
/// machine i+1 joins its subset whenever the updated component i hits a
/// final. Built lazily from the reachable start tuple.
Dfa catenation_k(const std::vector<Dfa>& machines);

/// One reachable tuple of the k-fold catenation automaton.
struct CatTuple {
  int head = 0;                         // state of the first machine
  std::vector<std::vector<int>> sets;   // one sorted subset per later machine
};

/// Reachable tuples in discovery order; index i labels state i of
/// catenation_k on the same inputs.
std::vector<CatTuple> catenation_k_tuples(const std::vector<Dfa>& machines);

}  // namespace sclab
