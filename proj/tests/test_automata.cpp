#include "doctest.h"

#include "oracles.hpp"
#include "sclab/automata.hpp"
#include "sclab/automata_io.hpp"
#include "sclab/regops.hpp"
#include "sclab/witnesses.hpp"

using namespace sclab;

namespace {

bool or_combine(bool x, bool y) { return x || y; }
bool and_combine(bool x, bool y) { return x && y; }

// 3-state DFA over {a,b} for words ending in "ab".
Dfa ends_in_ab() {
  Dfa d = make_dfa(alphabet_ab(), 3, 0, {2});
  d.set_next(0, 0, 1); d.set_next(0, 1, 0);
  d.set_next(1, 0, 1); d.set_next(1, 1, 2);
  d.set_next(2, 0, 1); d.set_next(2, 1, 0);
  return d;
}

}  // namespace

TEST_CASE("alphabet lookup and validation") {
  Alphabet ab = alphabet_ab();
  CHECK(ab.index_of("a") == 0);
  CHECK(ab.index_of("b") == 1);
  CHECK(ab.index_of("c") == -1);
  CHECK_THROWS_AS(make_dfa(Alphabet{{"a", "a"}}, 1, 0, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_dfa(Alphabet{{}}, 1, 0, {}), std::invalid_argument);
  CHECK_THROWS_AS(word_from_chars(ab, "ac"), std::invalid_argument);
}

TEST_CASE("complete leaves total automata alone") {
  const Dfa odd = witness_odd_a();
  CHECK(is_complete(odd));
  CHECK(canonical_text(complete(odd)) == canonical_text(odd));
  const Dfa star4 = witness_star(4);
  CHECK(is_complete(star4));
  CHECK(canonical_text(complete(star4)) == canonical_text(star4));
}

TEST_CASE("complete appends a sink for missing transitions") {
  Dfa d = make_dfa(alphabet_ab(), 1, 0, {0});
  d.set_next(0, 0, 0);  // "b" missing
  const Dfa c = complete(d);
  CHECK(c.state_count == 2);
  CHECK(is_complete(c));
  CHECK(!c.is_final(1));
  CHECK(accepts(c, word_from_chars(c.alphabet, "aa")));
  CHECK(!accepts(c, word_from_chars(c.alphabet, "ab")));
  // The incomplete original rejects through the missing entry as well.
  CHECK(!accepts(d, word_from_chars(d.alphabet, "ab")));
}

TEST_CASE("determinize keeps deterministic input intact") {
  const Dfa odd = witness_odd_a();
  const Dfa det = determinize(lift(odd));
  CHECK(det.state_count == odd.state_count);
  CHECK(equivalent(det, odd));
}

TEST_CASE("determinize of an empty start set accepts nothing") {
  const Nfa none = make_nfa(alphabet_ab(), 3, {}, {0, 1, 2});
  const Dfa det = determinize(none);
  CHECK(det.state_count == 1);
  CHECK(!det.is_final(0));
  CHECK(equivalent(det, dfa_empty_language(alphabet_ab())));
}

TEST_CASE("determinize handles epsilon chains") {
  Nfa n = make_nfa(alphabet_ab(), 3, {0}, {2});
  add_epsilon(n, 0, 1);
  add_epsilon(n, 1, 2);
  add_transition(n, 2, 0, 0);
  CHECK(accepts(n, Word{}));
  CHECK(accepts(n, word_from_chars(n.alphabet, "a")));
  CHECK(!accepts(n, word_from_chars(n.alphabet, "b")));
  const Dfa det = determinize(n);
  CHECK(equivalent(det, n));
}

TEST_CASE("star pipeline sizes for the witness family") {
  CHECK(state_complexity(op_star(witness_star(3))) == 6);
  CHECK(minimize(determinize(op_star(witness_star(5)))).state_count == 24);
  CHECK(state_complexity(op_star(witness_star(6))) == 48);
}

TEST_CASE("minimize is idempotent and canonical") {
  const Dfa m = minimize(determinize(op_star(witness_odd_a())));
  CHECK(m.state_count == 3);
  const Dfa again = minimize(m);
  CHECK(again.state_count == m.state_count);
  CHECK(canonical_text(again) == canonical_text(m));
}

TEST_CASE("minimize keeps two states for odd-a") {
  CHECK(minimize(witness_odd_a()).state_count == 2);
}

TEST_CASE("minimize merges duplicated states and drops unreachable ones") {
  // Two copies of odd-a glued side by side, plus an unreachable state.
  Dfa d = make_dfa(alphabet_ab(), 5, 0, {1, 3});
  d.set_next(0, 0, 1); d.set_next(0, 1, 2);
  d.set_next(1, 0, 0); d.set_next(1, 1, 3);
  d.set_next(2, 0, 3); d.set_next(2, 1, 0);
  d.set_next(3, 0, 2); d.set_next(3, 1, 1);
  d.set_next(4, 0, 4); d.set_next(4, 1, 4);
  const Dfa m = minimize(d);
  CHECK(m.state_count == 2);
  CHECK(equivalent(m, witness_odd_a()));
  CHECK_THROWS_AS(minimize(make_dfa(alphabet_ab(), 1, 0, {})), std::invalid_argument);
}

TEST_CASE("minimize full behavior on random machines") {
  oracle::Rng rng(0x5eedbeef);
  const Alphabet alphabets[] = {Alphabet{{"a"}}, alphabet_ab(), Alphabet{{"a", "b", "c"}}};
  for (int i = 0; i < 300; ++i) {
    const Alphabet& alphabet = alphabets[rng.below(3)];
    const Dfa d = oracle::random_dfa(rng, 1 + rng.below(8), alphabet);
    const Dfa m = minimize(d);
    CHECK(equivalent(d, m));
    CHECK(m.state_count <= d.state_count);
    const Dfa mm = minimize(m);
    CHECK(mm.state_count == m.state_count);
    CHECK(canonical_text(mm) == canonical_text(m));
    CHECK(oracle::all_states_distinguishable(m));
  }
}

TEST_CASE("state complexity") {
  CHECK(state_complexity(dfa_empty_language(alphabet_ab())) == 1);
  CHECK(state_complexity(dfa_sigma_star(alphabet_ab())) == 1);
  CHECK(state_complexity(witness_star(6)) == 6);
  CHECK(state_complexity(dfa_epsilon_language(alphabet_ab())) == 2);
}

TEST_CASE("acceptance basics") {
  const Dfa odd = witness_odd_a();
  CHECK(!accepts(odd, word_from_chars(odd.alphabet, "aba")));
  CHECK(accepts(odd, word_from_chars(odd.alphabet, "a")));
  CHECK(accepts(op_star(odd), Word{}));
}

TEST_CASE("equivalence") {
  const Dfa odd = witness_odd_a();
  CHECK(equivalent(odd, odd));
  CHECK(equivalent(odd, minimize(determinize(lift(odd)))));

  Dfa even = odd;  // complement
  even.finals[0] = 1;
  even.finals[1] = 0;
  CHECK(!equivalent(odd, even));

  const Dfa other = dfa_empty_language(Alphabet{{"x", "y"}});
  CHECK_THROWS_AS(equivalent(odd, other), std::invalid_argument);
}

TEST_CASE("product combiners") {
  const Dfa odd_a = witness_odd_a();
  Dfa odd_b = make_dfa(alphabet_ab(), 2, 0, {1});
  odd_b.set_next(0, 1, 1); odd_b.set_next(1, 1, 0);
  odd_b.set_next(0, 0, 0); odd_b.set_next(1, 0, 1);

  CHECK(equivalent(product(odd_a, odd_a, and_combine), odd_a));

  const Dfa both = product(odd_a, odd_b, and_combine);
  CHECK(both.state_count == 4);
  CHECK(accepts(both, word_from_chars(both.alphabet, "ab")));
  CHECK(!accepts(both, word_from_chars(both.alphabet, "a")));

  CHECK(equivalent(product(odd_a, dfa_sigma_star(alphabet_ab()), or_combine),
                   dfa_sigma_star(alphabet_ab())));

  Dfa partial = make_dfa(alphabet_ab(), 1, 0, {0});
  partial.set_next(0, 0, 0);
  CHECK_THROWS_AS(product(partial, odd_a, and_combine), std::invalid_argument);
}

TEST_CASE("reversal membership on a concrete machine") {
  const Dfa d = ends_in_ab();
  const Nfa rev = op_reversal(d);
  CHECK(accepts(rev, word_from_chars(d.alphabet, "ba")));
  CHECK(!accepts(rev, word_from_chars(d.alphabet, "ab")));
}

TEST_CASE("determinization agrees with direct nfa membership") {
  oracle::Rng rng(0xa0701);
  for (int i = 0; i < 200; ++i) {
    const int sigma = 2 + rng.below(2);
    const Alphabet alphabet = sigma == 2 ? alphabet_ab() : Alphabet{{"a", "b", "c"}};
    const Nfa n = oracle::random_nfa(rng, 1 + rng.below(5), alphabet);
    const Dfa det = determinize(n);
    const Dfa min = minimize(det);
    const int max_len = sigma == 2 ? 8 : 6;
    oracle::for_each_word(sigma, max_len, [&](const Word& w) {
      const bool direct = accepts(n, w);
      CHECK(direct == accepts(det, w));
      CHECK(direct == accepts(min, w));
    });
  }
}

TEST_CASE("canonical serialization is run independent") {
  const Nfa star_nfa = op_star(witness_star(4));
  CHECK(canonical_text(determinize(star_nfa)) == canonical_text(determinize(star_nfa)));
  CHECK(canonical_text(minimize(determinize(star_nfa))) ==
        canonical_text(minimize(determinize(star_nfa))));
}
