#pragma once

#include "sclab/bignum.hpp"

#include <span>
#include <utility>
#include <vector>

namespace sclab {

/// State counts n1..nk of the automata feeding a k-fold catenation, plus the
/// number of final states per automaton (defaults to one each).
struct SizeVector {
  std::vector<int> ns;
  std::vector<int> fs;  // empty means all ones

  SizeVector() = default;
  SizeVector(std::vector<int> sizes) : ns(std::move(sizes)) {}
  SizeVector(std::vector<int> sizes, std::vector<int> finals)
      : ns(std::move(sizes)), fs(std::move(finals)) {}

  int k() const { return static_cast<int>(ns.size()); }
  std::vector<int> finals_or_default() const;
};

enum class BasicOp { Union, Intersection, Catenation, Star, Reversal };

// Minimal-DFA sizes of the four star-of composed operations, as functions of
// the argument DFA sizes.
Nat sc_star_union(int m, int n);         // 2^(m+n-1) - 2^(m-1) - 2^(n-1) + 1
Nat sc_star_intersection(int m, int n);  // 3/4 * 2^(m*n)
Nat sc_star_catenation(int m, int n);    // 2^(m+n-1) + 2^(m+n-4) - 2^(m-1) - 2^(n-1) + m + 1
Nat sc_star_reversal(int n);             // 2^n

/// Minimal-NFA size of one basic operation as a function of its argument
/// sizes: union m+n+1, intersection m*n, catenation m+n, star n+1,
/// reversal n+1.
Nat nsc_basic(BasicOp op, std::span<const Nat> sizes);

/// An outer operation applied to inner operations with concrete argument
/// sizes.
struct NeuSpec {
  BasicOp outer;
  std::vector<std::pair<BasicOp, std::vector<int>>> inner;
};

/// 2 raised to the composed minimal-NFA size; a deterministic upper bound
/// for the composed operation.
Nat neu_bound(const NeuSpec& spec);

/// neu_bound for star applied to a single inner operation.
Nat neu_star_of(BasicOp inner, std::span<const int> sizes);

Nat sc_cat2(int n1, int n2);              // n1 * 2^n2 - 2^(n2-1)
Nat sc_cat4(int m, int n, int p, int q);  // five-term closed form

/// Upper estimate for k-fold catenation:
/// n1*2^(n2+..+nk) - 2^(n2+..+nk-1) - 2^(n3+..+nk-1) - ... - 2^(nk-1).
Nat claim_upper_cat_k(const SizeVector& sv);

/// Exact k-fold catenation state complexity, computed as the number of valid
/// tuples <u1,u2,..,uk> (u1 a state of A1, ui a subset of Ai's states)
/// under the structural constraints of the tuple construction:
///   (a) ui empty forces u(i+1) empty,       2 <= i < k
///   (b) u1 final forces entry in u2,
///   (c) ui hitting a final forces entry in u(i+1), 2 <= i < k.
/// Counted left to right by a dynamic program over (empty, final-hit) of the
/// previous component. For k=2 this equals (n1-f1)*2^n2 + f1*2^(n2-1).
Nat sc_cat_k(const SizeVector& sv);

/// The printed closed-form exclusion terms for the single-final-state case.
/// E2 is meaningful for k >= 3 and reported as zero for k=2.
struct CatKTerms {
  Nat d;
  Nat e1;
  Nat e2;
};
CatKTerms cat_k_terms(const SizeVector& sv);

/// n1 * 2^(n2+..+nk), the simple estimate for k-fold catenation.
Nat approx_cat_k(const SizeVector& sv);

struct QuotientBounds {
  Nat star_lq_upper;   // 2^n
  Nat star_lq_lower;   // 2^(n-1) + 2^(n-2)
  Nat lq_star_upper;   // 2^(n+1) - 1
  Nat lq_star_approx;  // 2^(n+1)
};
QuotientBounds quotient_bounds(int n);

/// max(a/b, b/a) as a reduced rational; both arguments must be positive.
Ratio ratio(const Nat& a, const Nat& b);

}  // namespace sclab
