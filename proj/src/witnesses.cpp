#include "sclab/witnesses.hpp"

#include "sclab/regops.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace sclab {

namespace {

Dfa build_star_witness(int n) {
  Dfa d = make_dfa(alphabet_ab(), n, 0, {n - 1});
  for (int i = 0; i < n; ++i) d.set_next(i, 0, (i + 1) % n);
  d.set_next(0, 1, 0);
  for (int j = 1; j < n; ++j) d.set_next(j, 1, (j + 1) % n);
  return d;
}

void star_family_self_check() {
  for (int n : {3, 4}) {
    const Nat expected = pow2(n - 1) + pow2(n - 2);
    const int got = state_complexity(op_star(build_star_witness(n)));
    if (Nat(got) != expected)
      throw std::logic_error("witness_star: star of the n=" + std::to_string(n) +
                             " witness minimized to " + std::to_string(got) + ", expected " +
                             expected.str());
  }
}

}  // namespace

Dfa witness_odd_a() {
  Dfa d = make_dfa(alphabet_ab(), 2, 0, {1});
  d.set_next(0, 0, 1);
  d.set_next(1, 0, 0);
  d.set_next(0, 1, 0);
  d.set_next(1, 1, 1);
  return d;
}

Dfa witness_star(int n) {
  if (n < 3) throw std::invalid_argument("witness_star: n must be >= 3");
  static std::once_flag checked;
  std::call_once(checked, star_family_self_check);
  return build_star_witness(n);
}

std::vector<Dfa> witness_cat_k(const SizeVector& sv) {
  const int k = sv.k();
  if (k < 2) throw std::invalid_argument("witness_cat_k: need at least two sizes");
  for (int n : sv.ns)
    if (n < 2) throw std::invalid_argument("witness_cat_k: sizes must be >= 2");
  for (int f : sv.finals_or_default())
    if (f != 1) throw std::invalid_argument("witness_cat_k: machines have one final state each");

  Alphabet alphabet;
  for (int j = 1; j <= 2 * k - 1; ++j) alphabet.symbols.push_back("a" + std::to_string(j));

  std::vector<Dfa> out;
  out.reserve(k);
  {
    const int n = sv.ns[0];
    Dfa d = make_dfa(alphabet, n, 0, {n - 1});
    for (int t = 0; t < n; ++t)
      for (int s = 0; s < alphabet.size(); ++s) d.set_next(t, s, t);
    for (int t = 0; t < n; ++t) d.set_next(t, 0, (t + 1) % n);           // a1 cycles
    for (int t = 0; t < n; ++t) d.set_next(t, 2 * k - 3, 0);             // a(2k-2) resets
    out.push_back(std::move(d));
  }
  for (int i = 2; i <= k; ++i) {
    const int n = sv.ns[i - 1];
    Dfa d = make_dfa(alphabet, n, 0, {n - 1});
    for (int t = 0; t < n; ++t)
      for (int s = 0; s < alphabet.size(); ++s) d.set_next(t, s, t);
    for (int t = 0; t < n; ++t) d.set_next(t, 2 * i - 3, (t + 1) % n);   // a(2i-2) cycles
    for (int t = 0; t < n; ++t) d.set_next(t, 2 * i - 2, 1);             // a(2i-1) jumps to 1
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace sclab
