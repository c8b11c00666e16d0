#include "sclab/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>

namespace sclab {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void sort_unique(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void insert_sorted(std::vector<int>& v, int x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}

std::vector<int> flags_to_list(const std::vector<std::uint8_t>& flags) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(flags.size()); ++i)
    if (flags[i]) out.push_back(i);
  return out;
}

void check_alphabet(const Alphabet& a) {
  require(!a.symbols.empty(), "alphabet: needs at least one symbol");
  std::set<std::string> seen;
  for (const std::string& s : a.symbols) {
    require(!s.empty(), "alphabet: symbol names must be nonempty");
    require(seen.insert(s).second, "alphabet: duplicate symbol");
  }
}

void check_states_sorted(const std::vector<int>& v, int n, const char* msg) {
  int prev = -1;
  for (int s : v) {
    require(s >= 0 && s < n, msg);
    require(s > prev, msg);
    prev = s;
  }
}

// Per-state epsilon closures, each sorted.
std::vector<std::vector<int>> epsilon_closures(const Nfa& n) {
  std::vector<std::vector<int>> closure(n.state_count);
  std::vector<char> seen(n.state_count);
  for (int s = 0; s < n.state_count; ++s) {
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int q = stack.back();
      stack.pop_back();
      for (int t : n.epsilon[q])
        if (!seen[t]) {
          seen[t] = 1;
          stack.push_back(t);
        }
    }
    for (int q = 0; q < n.state_count; ++q)
      if (seen[q]) closure[s].push_back(q);
  }
  return closure;
}

std::vector<int> close_set(const std::vector<std::vector<int>>& closures,
                           const std::vector<int>& states) {
  std::vector<int> out;
  for (int s : states)
    for (int q : closures[s]) out.push_back(q);
  sort_unique(out);
  return out;
}

}  // namespace

int Alphabet::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (symbols[i] == name) return i;
  return -1;
}

Alphabet alphabet_ab() { return Alphabet{{"a", "b"}}; }

Word word_from_chars(const Alphabet& alphabet, std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    int idx = alphabet.index_of(std::string_view(&c, 1));
    if (idx < 0) throw std::invalid_argument("word_from_chars: symbol not in alphabet");
    w.push_back(idx);
  }
  return w;
}

std::vector<int> Dfa::final_list() const { return flags_to_list(finals); }
std::vector<int> Nfa::final_list() const { return flags_to_list(finals); }

Dfa make_dfa(Alphabet alphabet, int states, int start, const std::vector<int>& finals) {
  Dfa d;
  d.alphabet = std::move(alphabet);
  d.state_count = states;
  d.start = start;
  d.finals.assign(states, 0);
  d.delta.assign(static_cast<std::size_t>(states) * d.alphabet.symbols.size(), -1);
  for (int f : finals) {
    require(f >= 0 && f < states, "make_dfa: final state out of range");
    d.finals[f] = 1;
  }
  validate(d);
  return d;
}

Nfa make_nfa(Alphabet alphabet, int states, const std::vector<int>& starts,
             const std::vector<int>& finals) {
  Nfa n;
  n.alphabet = std::move(alphabet);
  n.state_count = states;
  n.starts = starts;
  sort_unique(n.starts);
  n.finals.assign(states, 0);
  for (int f : finals) {
    require(f >= 0 && f < states, "make_nfa: final state out of range");
    n.finals[f] = 1;
  }
  n.delta.assign(static_cast<std::size_t>(states) * n.alphabet.symbols.size(), {});
  n.epsilon.assign(states, {});
  validate(n);
  return n;
}

void add_transition(Nfa& nfa, int from, int symbol, int to) {
  require(from >= 0 && from < nfa.state_count && to >= 0 && to < nfa.state_count,
          "add_transition: state out of range");
  require(symbol >= 0 && symbol < nfa.alphabet.size(), "add_transition: bad symbol");
  insert_sorted(nfa.delta[static_cast<std::size_t>(from) * nfa.alphabet.symbols.size() + symbol],
                to);
}

void add_epsilon(Nfa& nfa, int from, int to) {
  require(from >= 0 && from < nfa.state_count && to >= 0 && to < nfa.state_count,
          "add_epsilon: state out of range");
  insert_sorted(nfa.epsilon[from], to);
}

void validate(const Dfa& d) {
  check_alphabet(d.alphabet);
  require(d.state_count >= 1, "dfa: needs at least one state");
  require(d.start >= 0 && d.start < d.state_count, "dfa: start out of range");
  require(static_cast<int>(d.finals.size()) == d.state_count, "dfa: finals size mismatch");
  require(d.delta.size() == static_cast<std::size_t>(d.state_count) * d.alphabet.symbols.size(),
          "dfa: transition table size mismatch");
  for (int t : d.delta) require(t >= -1 && t < d.state_count, "dfa: transition out of range");
}

void validate(const Nfa& n) {
  check_alphabet(n.alphabet);
  require(n.state_count >= 0, "nfa: negative state count");
  require(static_cast<int>(n.finals.size()) == n.state_count, "nfa: finals size mismatch");
  require(n.delta.size() == static_cast<std::size_t>(n.state_count) * n.alphabet.symbols.size(),
          "nfa: transition table size mismatch");
  require(static_cast<int>(n.epsilon.size()) == n.state_count, "nfa: epsilon table size mismatch");
  check_states_sorted(n.starts, n.state_count, "nfa: start state out of range");
  for (const auto& ts : n.delta)
    check_states_sorted(ts, n.state_count, "nfa: transition target out of range");
  for (const auto& ts : n.epsilon)
    check_states_sorted(ts, n.state_count, "nfa: epsilon target out of range");
}

bool is_complete(const Dfa& d) {
  for (int t : d.delta)
    if (t < 0) return false;
  return true;
}

Dfa complete(const Dfa& input) {
  validate(input);
  if (is_complete(input)) return input;
  const int k = input.alphabet.size();
  const int sink = input.state_count;
  Dfa d;
  d.alphabet = input.alphabet;
  d.state_count = input.state_count + 1;
  d.start = input.start;
  d.finals = input.finals;
  d.finals.push_back(0);
  d.delta.assign(static_cast<std::size_t>(d.state_count) * k, sink);
  for (int s = 0; s < input.state_count; ++s)
    for (int a = 0; a < k; ++a) {
      int t = input.next(s, a);
      d.set_next(s, a, t < 0 ? sink : t);
    }
  return d;
}

Nfa lift(const Dfa& d) {
  validate(d);
  Nfa n = make_nfa(d.alphabet, d.state_count, {d.start}, d.final_list());
  for (int s = 0; s < d.state_count; ++s)
    for (int a = 0; a < d.alphabet.size(); ++a)
      if (d.next(s, a) >= 0) add_transition(n, s, a, d.next(s, a));
  return n;
}

Dfa determinize(const Nfa& n) {
  validate(n);
  const int k = n.alphabet.size();
  const auto closures = epsilon_closures(n);

  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> subsets;
  std::vector<std::uint8_t> subset_final;
  std::deque<int> work;

  auto intern = [&](std::vector<int> subset) {
    auto [it, fresh] = ids.emplace(std::move(subset), static_cast<int>(subsets.size()));
    if (fresh) {
      subsets.push_back(it->first);
      bool fin = false;
      for (int s : it->first) fin = fin || n.is_final(s);
      subset_final.push_back(fin ? 1 : 0);
      work.push_back(it->second);
    }
    return it->second;
  };

  intern(close_set(closures, n.starts));

  std::vector<int> delta;
  while (!work.empty()) {
    int id = work.front();
    work.pop_front();
    delta.resize(static_cast<std::size_t>(id + 1) * k, -1);
    for (int a = 0; a < k; ++a) {
      std::vector<int> succ;
      for (int s : subsets[id])
        for (int t : n.targets(s, a)) succ.push_back(t);
      sort_unique(succ);
      delta[static_cast<std::size_t>(id) * k + a] = intern(close_set(closures, succ));
    }
  }

  Dfa d;
  d.alphabet = n.alphabet;
  d.state_count = static_cast<int>(subsets.size());
  d.start = 0;
  d.finals = std::move(subset_final);
  d.delta = std::move(delta);
  d.delta.resize(static_cast<std::size_t>(d.state_count) * k, -1);
  return d;
}

namespace {

// Breadth-first renumbering from the start; unreachable states are dropped.
Dfa renumber_reachable(const Dfa& d) {
  const int k = d.alphabet.size();
  std::vector<int> pos(d.state_count, -1);
  std::vector<int> order;
  order.push_back(d.start);
  pos[d.start] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int a = 0; a < k; ++a) {
      int t = d.next(order[i], a);
      if (t >= 0 && pos[t] < 0) {
        pos[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }

  Dfa out;
  out.alphabet = d.alphabet;
  out.state_count = static_cast<int>(order.size());
  out.start = 0;
  out.finals.assign(out.state_count, 0);
  out.delta.assign(static_cast<std::size_t>(out.state_count) * k, -1);
  for (int i = 0; i < out.state_count; ++i) {
    out.finals[i] = d.finals[order[i]];
    for (int a = 0; a < k; ++a) {
      int t = d.next(order[i], a);
      out.set_next(i, a, t < 0 ? -1 : pos[t]);
    }
  }
  return out;
}

}  // namespace

Dfa minimize(const Dfa& input) {
  validate(input);
  require(is_complete(input), "minimize: automaton must be complete");

  const Dfa d = renumber_reachable(input);
  const int m = d.state_count;
  const int k = d.alphabet.size();

  // Inverse transitions.
  std::vector<std::vector<std::vector<int>>> inv(
      k, std::vector<std::vector<int>>(m));
  for (int s = 0; s < m; ++s)
    for (int a = 0; a < k; ++a) inv[a][d.next(s, a)].push_back(s);

  // Partition refinement with a worklist of (block, symbol) splitters.
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of(m, -1);
  {
    std::vector<int> fin, nonfin;
    for (int s = 0; s < m; ++s) (d.is_final(s) ? fin : nonfin).push_back(s);
    if (!fin.empty()) blocks.push_back(std::move(fin));
    if (!nonfin.empty()) blocks.push_back(std::move(nonfin));
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
      for (int s : blocks[b]) block_of[s] = b;
  }

  std::deque<std::pair<int, int>> work;
  std::vector<std::vector<char>> queued(blocks.size(), std::vector<char>(k, 0));
  if (blocks.size() == 2) {
    int seed = blocks[0].size() <= blocks[1].size() ? 0 : 1;
    for (int a = 0; a < k; ++a) {
      work.emplace_back(seed, a);
      queued[seed][a] = 1;
    }
  }

  std::vector<char> in_x(m, 0);
  while (!work.empty()) {
    auto [bi, a] = work.front();
    work.pop_front();
    queued[bi][a] = 0;

    std::vector<int> xs;
    for (int t : blocks[bi])
      for (int s : inv[a][t]) {
        if (!in_x[s]) {
          in_x[s] = 1;
          xs.push_back(s);
        }
      }

    std::vector<int> touched;
    std::vector<int> hits(blocks.size(), 0);
    for (int s : xs) {
      int b = block_of[s];
      if (hits[b]++ == 0) touched.push_back(b);
    }

    for (int b : touched) {
      if (hits[b] == static_cast<int>(blocks[b].size())) continue;  // no split
      std::vector<int> inside, outside;
      for (int s : blocks[b]) (in_x[s] ? inside : outside).push_back(s);
      int nb = static_cast<int>(blocks.size());
      blocks[b] = std::move(outside);
      blocks.push_back(std::move(inside));
      for (int s : blocks[nb]) block_of[s] = nb;
      queued.emplace_back(k, 0);
      for (int c = 0; c < k; ++c) {
        if (queued[b][c]) {
          queued[nb][c] = 1;
          work.emplace_back(nb, c);
        } else {
          int smaller = blocks[b].size() <= blocks[nb].size() ? b : nb;
          queued[smaller][c] = 1;
          work.emplace_back(smaller, c);
        }
      }
    }
    for (int s : xs) in_x[s] = 0;
  }

  // Quotient automaton over the blocks, then canonical numbering.
  Dfa q;
  q.alphabet = d.alphabet;
  q.state_count = static_cast<int>(blocks.size());
  q.start = block_of[d.start];
  q.finals.assign(q.state_count, 0);
  q.delta.assign(static_cast<std::size_t>(q.state_count) * k, -1);
  for (int b = 0; b < q.state_count; ++b) {
    int rep = blocks[b].front();
    q.finals[b] = d.finals[rep];
    for (int a = 0; a < k; ++a) q.set_next(b, a, block_of[d.next(rep, a)]);
  }
  return renumber_reachable(q);
}

int state_complexity(const Dfa& d) { return minimize(complete(d)).state_count; }
int state_complexity(const Nfa& n) { return minimize(determinize(n)).state_count; }

bool accepts(const Dfa& d, const Word& w) {
  validate(d);
  int s = d.start;
  for (int a : w) {
    require(a >= 0 && a < d.alphabet.size(), "accepts: symbol not in alphabet");
    s = d.next(s, a);
    if (s < 0) return false;
  }
  return d.is_final(s);
}

bool accepts(const Nfa& n, const Word& w) {
  validate(n);
  const auto closures = epsilon_closures(n);
  std::vector<int> current = close_set(closures, n.starts);
  for (int a : w) {
    require(a >= 0 && a < n.alphabet.size(), "accepts: symbol not in alphabet");
    std::vector<int> succ;
    for (int s : current)
      for (int t : n.targets(s, a)) succ.push_back(t);
    sort_unique(succ);
    current = close_set(closures, succ);
  }
  for (int s : current)
    if (n.is_final(s)) return true;
  return false;
}

Dfa product(const Dfa& a, const Dfa& b, bool (*combine)(bool, bool)) {
  validate(a);
  validate(b);
  require(a.alphabet == b.alphabet, "product: alphabet mismatch");
  require(is_complete(a) && is_complete(b), "product: automata must be complete");
  const int k = a.alphabet.size();

  std::vector<int> ids(static_cast<std::size_t>(a.state_count) * b.state_count, -1);
  std::vector<std::pair<int, int>> pairs;
  auto intern = [&](int p, int q) {
    int& slot = ids[static_cast<std::size_t>(p) * b.state_count + q];
    if (slot < 0) {
      slot = static_cast<int>(pairs.size());
      pairs.emplace_back(p, q);
    }
    return slot;
  };

  intern(a.start, b.start);
  std::vector<int> delta;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [p, q] = pairs[i];
    for (int c = 0; c < k; ++c) delta.push_back(intern(a.next(p, c), b.next(q, c)));
  }

  Dfa out;
  out.alphabet = a.alphabet;
  out.state_count = static_cast<int>(pairs.size());
  out.start = 0;
  out.finals.assign(out.state_count, 0);
  for (int i = 0; i < out.state_count; ++i)
    out.finals[i] = combine(a.is_final(pairs[i].first), b.is_final(pairs[i].second)) ? 1 : 0;
  out.delta = std::move(delta);
  return out;
}

bool equivalent(const Dfa& a_in, const Dfa& b_in) {
  validate(a_in);
  validate(b_in);
  require(a_in.alphabet == b_in.alphabet, "equivalent: alphabet mismatch");
  const Dfa a = complete(a_in);
  const Dfa b = complete(b_in);
  const int k = a.alphabet.size();

  std::vector<char> seen(static_cast<std::size_t>(a.state_count) * b.state_count, 0);
  std::deque<std::pair<int, int>> work{{a.start, b.start}};
  seen[static_cast<std::size_t>(a.start) * b.state_count + b.start] = 1;
  while (!work.empty()) {
    auto [p, q] = work.front();
    work.pop_front();
    if (a.is_final(p) != b.is_final(q)) return false;
    for (int c = 0; c < k; ++c) {
      int p2 = a.next(p, c), q2 = b.next(q, c);
      char& mark = seen[static_cast<std::size_t>(p2) * b.state_count + q2];
      if (!mark) {
        mark = 1;
        work.emplace_back(p2, q2);
      }
    }
  }
  return true;
}

bool equivalent(const Nfa& a, const Nfa& b) { return equivalent(determinize(a), determinize(b)); }
bool equivalent(const Dfa& a, const Nfa& b) { return equivalent(a, determinize(b)); }
bool equivalent(const Nfa& a, const Dfa& b) { return equivalent(determinize(a), b); }

Dfa dfa_empty_language(const Alphabet& alphabet) {
  Dfa d = make_dfa(alphabet, 1, 0, {});
  for (int a = 0; a < d.alphabet.size(); ++a) d.set_next(0, a, 0);
  return d;
}

Dfa dfa_epsilon_language(const Alphabet& alphabet) {
  Dfa d = make_dfa(alphabet, 2, 0, {0});
  for (int a = 0; a < d.alphabet.size(); ++a) {
    d.set_next(0, a, 1);
    d.set_next(1, a, 1);
  }
  return d;
}

Dfa dfa_sigma_star(const Alphabet& alphabet) {
  Dfa d = make_dfa(alphabet, 1, 0, {0});
  for (int a = 0; a < d.alphabet.size(); ++a) d.set_next(0, a, 0);
  return d;
}

}  // namespace sclab
