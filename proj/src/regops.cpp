#include "sclab/regops.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <stdexcept>
#include <utility>

namespace sclab {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void check_same_alphabet(const Alphabet& a, const Alphabet& b) {
  require(a == b, "alphabet mismatch");
}

bool combine_or(bool x, bool y) { return x || y; }
bool combine_and(bool x, bool y) { return x && y; }

// Appends a disjoint copy of src to dst, returning the id offset.
int append_states(Nfa& dst, const Nfa& src) {
  const int offset = dst.state_count;
  const int k = dst.alphabet.size();
  dst.state_count += src.state_count;
  dst.finals.resize(dst.state_count, 0);
  dst.delta.resize(static_cast<std::size_t>(dst.state_count) * k);
  dst.epsilon.resize(dst.state_count);
  for (int s = 0; s < src.state_count; ++s) {
    for (int a = 0; a < k; ++a)
      for (int t : src.targets(s, a)) add_transition(dst, s + offset, a, t + offset);
    for (int t : src.epsilon[s]) add_epsilon(dst, s + offset, t + offset);
  }
  return offset;
}

}  // namespace

Dfa op_union(const Dfa& a, const Dfa& b) {
  check_same_alphabet(a.alphabet, b.alphabet);
  return product(complete(a), complete(b), combine_or);
}

Dfa op_intersection(const Dfa& a, const Dfa& b) {
  check_same_alphabet(a.alphabet, b.alphabet);
  return product(complete(a), complete(b), combine_and);
}

Nfa op_catenation(const Nfa& a, const Nfa& b) {
  validate(a);
  validate(b);
  check_same_alphabet(a.alphabet, b.alphabet);
  Nfa out = a;
  out.finals.assign(out.state_count, 0);
  const int offset = append_states(out, b);
  for (int f : a.final_list())
    for (int s : b.starts) add_epsilon(out, f, s + offset);
  for (int f : b.final_list()) out.finals[f + offset] = 1;
  return out;
}

Nfa op_catenation(const Dfa& a, const Dfa& b) { return op_catenation(lift(a), lift(b)); }

Nfa op_star(const Nfa& a) {
  validate(a);
  Nfa out = a;
  const int fresh = out.state_count;
  out.state_count += 1;
  out.finals.push_back(1);
  out.delta.resize(static_cast<std::size_t>(out.state_count) * out.alphabet.size());
  out.epsilon.resize(out.state_count);
  for (int s : a.starts) add_epsilon(out, fresh, s);
  for (int f : a.final_list()) add_epsilon(out, f, fresh);
  out.starts = {fresh};
  return out;
}

Nfa op_star(const Dfa& a) { return op_star(lift(a)); }

Nfa op_reversal(const Dfa& a) {
  validate(a);
  Nfa out = make_nfa(a.alphabet, a.state_count, a.final_list(), {a.start});
  for (int s = 0; s < a.state_count; ++s)
    for (int c = 0; c < a.alphabet.size(); ++c)
      if (a.next(s, c) >= 0) add_transition(out, a.next(s, c), c, s);
  return out;
}

std::vector<int> entry_states(const Dfa& m_in, const Dfa& l_in) {
  check_same_alphabet(m_in.alphabet, l_in.alphabet);
  const Dfa m = complete(m_in);
  const Dfa l = complete(l_in);
  const int k = m.alphabet.size();

  std::vector<char> seen(static_cast<std::size_t>(m.state_count) * l.state_count, 0);
  std::vector<char> entered(m.state_count, 0);
  std::deque<std::pair<int, int>> work{{m.start, l.start}};
  seen[static_cast<std::size_t>(m.start) * l.state_count + l.start] = 1;
  while (!work.empty()) {
    auto [q, p] = work.front();
    work.pop_front();
    if (l.is_final(p)) entered[q] = 1;
    for (int c = 0; c < k; ++c) {
      int q2 = m.next(q, c), p2 = l.next(p, c);
      char& mark = seen[static_cast<std::size_t>(q2) * l.state_count + p2];
      if (!mark) {
        mark = 1;
        work.emplace_back(q2, p2);
      }
    }
  }

  std::vector<int> out;
  for (int q = 0; q < m.state_count; ++q)
    if (entered[q]) out.push_back(q);
  return out;
}

Nfa left_quotient(const Dfa& l, const Dfa& r) {
  check_same_alphabet(l.alphabet, r.alphabet);
  const Dfa rc = complete(r);
  Nfa out = lift(rc);
  out.starts = entry_states(rc, l);
  return out;
}

Dfa star_of_left_quotient(const Dfa& l, const Dfa& m) {
  check_same_alphabet(l.alphabet, m.alphabet);
  const Dfa mc = complete(m);
  const std::vector<int> entries = entry_states(mc, l);
  if (entries.empty()) return dfa_epsilon_language(m.alphabet);

  Nfa restarted = lift(mc);
  restarted.starts = entries;
  for (int f : mc.final_list())
    for (int s : entries) add_epsilon(restarted, f, s);
  const Dfa body = determinize(restarted);

  // Fresh initial+final state 0 duplicating the old start's row. It accepts
  // the empty word; everything else runs through the determinized body.
  const int k = body.alphabet.size();
  Dfa out;
  out.alphabet = body.alphabet;
  out.state_count = body.state_count + 1;
  out.start = 0;
  out.finals.assign(out.state_count, 0);
  out.finals[0] = 1;
  for (int s = 0; s < body.state_count; ++s) out.finals[s + 1] = body.finals[s];
  out.delta.assign(static_cast<std::size_t>(out.state_count) * k, -1);
  for (int c = 0; c < k; ++c) out.set_next(0, c, body.next(body.start, c) + 1);
  for (int s = 0; s < body.state_count; ++s)
    for (int c = 0; c < k; ++c) out.set_next(s + 1, c, body.next(s, c) + 1);
  return out;
}

Dfa left_quotient_of_star(const Dfa& l, const Dfa& m) {
  check_same_alphabet(l.alphabet, m.alphabet);
  const Dfa mc = complete(m);
  const Dfa lc = complete(l);
  Nfa starred = op_star(mc);
  const int fresh = mc.state_count;
  const int k = starred.alphabet.size();

  // Entry states of the starred machine under l, tracked with epsilon
  // closure on the starred side.
  std::vector<std::vector<int>> closure(starred.state_count);
  {
    for (int s = 0; s < starred.state_count; ++s) {
      std::vector<char> seen_states(starred.state_count, 0);
      std::vector<int> stack{s};
      seen_states[s] = 1;
      while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (int t : starred.epsilon[q])
          if (!seen_states[t]) {
            seen_states[t] = 1;
            stack.push_back(t);
          }
      }
      for (int q = 0; q < starred.state_count; ++q)
        if (seen_states[q]) closure[s].push_back(q);
    }
  }

  std::vector<char> seen(static_cast<std::size_t>(starred.state_count) * lc.state_count, 0);
  std::vector<char> entered(starred.state_count, 0);
  std::deque<std::pair<int, int>> work;
  for (int q : closure[fresh]) {
    seen[static_cast<std::size_t>(q) * lc.state_count + lc.start] = 1;
    work.emplace_back(q, lc.start);
  }
  while (!work.empty()) {
    auto [q, p] = work.front();
    work.pop_front();
    if (lc.is_final(p)) entered[q] = 1;
    for (int c = 0; c < k; ++c) {
      int p2 = lc.next(p, c);
      for (int t : starred.targets(q, c))
        for (int q2 : closure[t]) {
          char& mark = seen[static_cast<std::size_t>(q2) * lc.state_count + p2];
          if (!mark) {
            mark = 1;
            work.emplace_back(q2, p2);
          }
        }
    }
  }

  std::vector<int> entries;
  for (int q = 0; q < starred.state_count; ++q)
    if (entered[q]) entries.push_back(q);
  starred.starts = std::move(entries);
  return determinize(starred);
}

namespace {

struct CatBuild {
  Dfa dfa;
  std::vector<CatTuple> tuples;
};

CatBuild build_catenation_k(const std::vector<Dfa>& machines) {
  require(machines.size() >= 2, "catenation_k: need at least two automata");
  std::vector<Dfa> ms;
  ms.reserve(machines.size());
  for (const Dfa& m : machines) ms.push_back(complete(m));
  const int k = static_cast<int>(ms.size());
  for (int i = 1; i < k; ++i) check_same_alphabet(ms[0].alphabet, ms[i].alphabet);
  for (const Dfa& m : ms)
    require(m.state_count <= 63, "catenation_k: component automaton too large");
  const int symbols = ms[0].alphabet.size();

  std::vector<std::uint64_t> final_mask(k, 0);
  for (int i = 0; i < k; ++i)
    for (int f : ms[i].final_list()) final_mask[i] |= std::uint64_t(1) << f;

  auto step_mask = [&](int i, std::uint64_t mask, int sym) {
    std::uint64_t out = 0;
    while (mask) {
      int s = std::countr_zero(mask);
      mask &= mask - 1;
      out |= std::uint64_t(1) << ms[i].next(s, sym);
    }
    return out;
  };

  // A tuple is the head state followed by one subset mask per later machine.
  using Key = std::vector<std::uint64_t>;
  std::map<Key, int> ids;
  std::vector<Key> states;
  std::deque<int> work;
  auto intern = [&](Key key) {
    auto [it, fresh] = ids.emplace(std::move(key), static_cast<int>(states.size()));
    if (fresh) {
      states.push_back(it->first);
      work.push_back(it->second);
    }
    return it->second;
  };

  Key start(k);
  start[0] = static_cast<std::uint64_t>(ms[0].start);
  {
    bool carry = ms[0].is_final(ms[0].start);
    for (int i = 1; i < k; ++i) {
      start[i] = carry ? (std::uint64_t(1) << ms[i].start) : 0;
      carry = carry && (start[i] & final_mask[i]);
    }
  }
  intern(std::move(start));

  std::vector<int> delta;
  while (!work.empty()) {
    int id = work.front();
    work.pop_front();
    const Key current = states[id];
    delta.resize(static_cast<std::size_t>(id + 1) * symbols, -1);
    for (int a = 0; a < symbols; ++a) {
      Key next(k);
      next[0] = static_cast<std::uint64_t>(ms[0].next(static_cast<int>(current[0]), a));
      bool prev_hit = ms[0].is_final(static_cast<int>(next[0]));
      for (int i = 1; i < k; ++i) {
        next[i] = step_mask(i, current[i], a);
        if (prev_hit) next[i] |= std::uint64_t(1) << ms[i].start;
        prev_hit = (next[i] & final_mask[i]) != 0;
      }
      delta[static_cast<std::size_t>(id) * symbols + a] = intern(std::move(next));
    }
  }

  CatBuild out;
  out.dfa.alphabet = ms[0].alphabet;
  out.dfa.state_count = static_cast<int>(states.size());
  out.dfa.start = 0;
  out.dfa.finals.assign(out.dfa.state_count, 0);
  for (int i = 0; i < out.dfa.state_count; ++i)
    out.dfa.finals[i] = (states[i][k - 1] & final_mask[k - 1]) ? 1 : 0;
  out.dfa.delta = std::move(delta);

  out.tuples.reserve(states.size());
  for (const Key& key : states) {
    CatTuple t;
    t.head = static_cast<int>(key[0]);
    t.sets.resize(k - 1);
    for (int i = 1; i < k; ++i) {
      std::uint64_t mask = key[i];
      while (mask) {
        int s = std::countr_zero(mask);
        mask &= mask - 1;
        t.sets[i - 1].push_back(s);
      }
    }
    out.tuples.push_back(std::move(t));
  }
  return out;
}

}  // namespace

Dfa catenation_k(const std::vector<Dfa>& machines) { return build_catenation_k(machines).dfa; }

std::vector<CatTuple> catenation_k_tuples(const std::vector<Dfa>& machines) {
  return build_catenation_k(machines).tuples;
}

}  // namespace sclab
