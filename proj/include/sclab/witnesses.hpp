#pragma once

#include "sclab/automata.hpp"
#include "sclab/formulas.hpp"

#include <vector>

namespace sclab {

/// 2-state DFA over {a,b} for words with an odd number of a's.
Dfa witness_odd_a();

/// n-state DFA over {a,b}, n >= 3: symbol a cycles every state forward,
/// symbol b fixes state 0 and cycles the rest, the single final state is
/// n-1. Its star needs 2^(n-1) + 2^(n-2) states; the generator checks that
/// bound for n = 3 and 4 on first use and refuses to produce anything if
/// the family misbehaves.
Dfa witness_star(int n);

/// The k machines of the catenation family over the shared alphabet
/// a1..a(2k-1). The first machine cycles on a1 and resets to 0 on a(2k-2);
/// machine i >= 2 cycles on a(2i-2) and jumps every state to 1 on a(2i-1);
/// all other symbols act as the identity. Every machine starts at 0 and has
/// the single final state n_i - 1.
std::vector<Dfa> witness_cat_k(const SizeVector& sv);

}  // namespace sclab
