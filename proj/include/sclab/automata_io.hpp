#pragma once

#include "sclab/automata.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <variant>

namespace sclab {

/// File or format problem; unrelated to in-memory contract violations.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Automaton = std::variant<Dfa, Nfa>;

nlohmann::ordered_json to_json(const Dfa&);
nlohmann::ordered_json to_json(const Nfa&);

/// Deterministic one-line serialization; equal automata give equal bytes.
std::string canonical_text(const Dfa&);
std::string canonical_text(const Nfa&);
std::string canonical_text(const Automaton&);

/// Strict parse: unknown or missing fields are rejected.
Automaton automaton_from_json(const nlohmann::json& j);

Automaton load_automaton(const std::string& path);
void save_automaton(const std::string& path, const Automaton&);

int states_of(const Automaton&);
bool holds_dfa(const Automaton&);

}  // namespace sclab
