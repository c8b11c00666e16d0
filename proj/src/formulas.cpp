#include "sclab/formulas.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace sclab {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void check_size_vector(const SizeVector& sv) {
  require(sv.k() >= 2, "size vector: need at least two components");
  for (int n : sv.ns) require(n >= 2, "size vector: every component size must be >= 2");
  if (!sv.fs.empty()) {
    require(static_cast<int>(sv.fs.size()) == sv.k(),
            "size vector: final counts must match component count");
    for (int i = 0; i < sv.k(); ++i)
      require(sv.fs[i] > 0 && sv.fs[i] < sv.ns[i],
              "size vector: final counts must satisfy 0 < f < n");
  }
}

long sum_tail(const std::vector<int>& ns, int from) {
  long s = 0;
  for (std::size_t i = from; i < ns.size(); ++i) s += ns[i];
  return s;
}

}  // namespace

std::vector<int> SizeVector::finals_or_default() const {
  if (!fs.empty()) return fs;
  return std::vector<int>(ns.size(), 1);
}

Nat sc_star_union(int m, int n) {
  require(m >= 2 && n >= 2, "sc_star_union: sizes must be >= 2");
  return pow2(m + n - 1) - pow2(m - 1) - pow2(n - 1) + 1;
}

Nat sc_star_intersection(int m, int n) {
  require(m >= 1 && n >= 1 && m * n >= 2,
          "sc_star_intersection: m*n must be >= 2 for an integral value");
  return 3 * pow2(static_cast<long>(m) * n - 2);
}

Nat sc_star_catenation(int m, int n) {
  require(m >= 2 && n >= 2, "sc_star_catenation: sizes must be >= 2");
  return pow2(m + n - 1) + pow2(m + n - 4) - pow2(m - 1) - pow2(n - 1) + m + 1;
}

Nat sc_star_reversal(int n) {
  require(n >= 2, "sc_star_reversal: size must be >= 2");
  return pow2(n);
}

Nat nsc_basic(BasicOp op, std::span<const Nat> sizes) {
  for (const Nat& s : sizes) require(s >= 1, "nsc_basic: sizes must be >= 1");
  switch (op) {
    case BasicOp::Union:
      require(sizes.size() == 2, "nsc_basic: union takes two sizes");
      return sizes[0] + sizes[1] + 1;
    case BasicOp::Intersection:
      require(sizes.size() == 2, "nsc_basic: intersection takes two sizes");
      return sizes[0] * sizes[1];
    case BasicOp::Catenation:
      require(sizes.size() == 2, "nsc_basic: catenation takes two sizes");
      return sizes[0] + sizes[1];
    case BasicOp::Star:
      require(sizes.size() == 1, "nsc_basic: star takes one size");
      return sizes[0] + 1;
    case BasicOp::Reversal:
      require(sizes.size() == 1, "nsc_basic: reversal takes one size");
      return sizes[0] + 1;
  }
  throw std::invalid_argument("nsc_basic: unknown operation");
}

Nat neu_bound(const NeuSpec& spec) {
  std::vector<Nat> inner_values;
  inner_values.reserve(spec.inner.size());
  for (const auto& [op, sizes] : spec.inner) {
    std::vector<Nat> args(sizes.begin(), sizes.end());
    inner_values.push_back(nsc_basic(op, args));
  }
  Nat exponent = nsc_basic(spec.outer, inner_values);
  require(exponent <= 1000000, "neu_bound: exponent too large");
  return pow2(exponent.convert_to<long>());
}

Nat neu_star_of(BasicOp inner, std::span<const int> sizes) {
  return neu_bound({BasicOp::Star, {{inner, {sizes.begin(), sizes.end()}}}});
}

Nat sc_cat2(int n1, int n2) {
  require(n1 >= 2 && n2 >= 2, "sc_cat2: sizes must be >= 2");
  return n1 * pow2(n2) - pow2(n2 - 1);
}

Nat sc_cat4(int m, int n, int p, int q) {
  require(m >= 2 && n >= 2 && p >= 2 && q >= 2, "sc_cat4: sizes must be >= 2");
  return 9 * (2 * m - 1) * pow2(n + p + q - 5) - 3 * (m - 1) * pow2(p + q - 2) -
         (2 * m - 1) * pow2(n + q - 2) + (m - 1) * pow2(q) + (2 * m - 1) * pow2(n - 2);
}

Nat claim_upper_cat_k(const SizeVector& sv) {
  check_size_vector(sv);
  Nat value = sv.ns[0] * pow2(sum_tail(sv.ns, 1));
  for (int t = 1; t < sv.k(); ++t) value -= pow2(sum_tail(sv.ns, t) - 1);
  return value;
}

Nat sc_cat_k(const SizeVector& sv) {
  check_size_vector(sv);
  const std::vector<int> fs = sv.finals_or_default();

  // Counts of tuples grouped by the state of the last processed component:
  // already empty, hitting a final, or nonempty without a final.
  Nat empty = 0;
  Nat hit = fs[0];
  Nat quiet = sv.ns[0] - fs[0];

  for (int i = 1; i < sv.k(); ++i) {
    const int n = sv.ns[i];
    const int f = fs[i];
    const Nat with_entry_hit = pow2(n - 1) - pow2(n - 1 - f);
    const Nat with_entry_quiet = pow2(n - 1 - f);
    const Nat free_hit = pow2(n) - pow2(n - f);
    const Nat free_quiet_nonempty = pow2(n - f) - 1;

    Nat next_empty = empty + quiet;  // a quiet predecessor may choose the empty set
    Nat next_hit = hit * with_entry_hit + quiet * free_hit;
    Nat next_quiet = hit * with_entry_quiet + quiet * free_quiet_nonempty;

    empty = std::move(next_empty);
    hit = std::move(next_hit);
    quiet = std::move(next_quiet);
  }
  return empty + hit + quiet;
}

CatKTerms cat_k_terms(const SizeVector& sv) {
  check_size_vector(sv);
  for (int f : sv.finals_or_default())
    require(f == 1, "cat_k_terms: closed forms are for one final state per automaton");

  const std::vector<int>& ns = sv.ns;
  const int k = sv.k();

  // Nested tail products, indexed by 1-based component position.
  // B(k+1) = 1, B(k) = 2^nk, B(j) = 1 + (2^nj - 1) B(j+1);
  // C(j) = 1 + (2^(nj-1) - 1) B(j+1).
  std::vector<Nat> b(k + 2);
  b[k + 1] = 1;
  b[k] = pow2(ns[k - 1]);
  for (int j = k - 1; j >= 2; --j) b[j] = 1 + (pow2(ns[j - 1]) - 1) * b[j + 1];
  auto chain = [&](int j) { return 1 + (pow2(ns[j - 1] - 1) - 1) * b[j + 1]; };

  CatKTerms terms;
  terms.e1 = chain(2);
  terms.e2 = (k >= 3) ? (Nat(ns[0] - 1) * pow2(ns[1] - 1) + pow2(ns[1] - 2)) * chain(3) : Nat(0);

  terms.d = 0;
  for (int t = 2; t <= k - 1; ++t) {
    Nat term = ns[0];
    for (int j = 2; j < t; ++j) term *= pow2(ns[j - 1]) - 1;
    term *= pow2(sum_tail(ns, t)) - 1;
    terms.d += term;
  }
  return terms;
}

Nat approx_cat_k(const SizeVector& sv) {
  check_size_vector(sv);
  return sv.ns[0] * pow2(sum_tail(sv.ns, 1));
}

QuotientBounds quotient_bounds(int n) {
  require(n >= 2, "quotient_bounds: size must be >= 2");
  return {pow2(n), pow2(n - 1) + pow2(n - 2), pow2(n + 1) - 1, pow2(n + 1)};
}

Ratio ratio(const Nat& a, const Nat& b) {
  require(a > 0 && b > 0, "ratio: operands must be positive");
  if (a >= b) return Ratio(a, b);
  return Ratio(b, a);
}

}  // namespace sclab
