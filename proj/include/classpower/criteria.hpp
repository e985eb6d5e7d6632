#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "classpower/char_table.hpp"
#include "classpower/class_algebra.hpp"
#include "classpower/conjugacy.hpp"
#include "classpower/group.hpp"
#include "classpower/subgroup.hpp"

namespace classpower {

// m1 / m2 / alpha values must sit this close to an integer (relative to their size).
constexpr double kNearIntegerTol = 1e-6;

namespace detail {

/// Exact small-integer powers; the exp/log path of std::pow is avoided so
/// zero and negative-real values stay exact.
inline Complex cpow(Complex z, unsigned n) {
  Complex r{1, 0};
  while (n) {
    if (n & 1u) r *= z;
    z *= z;
    n >>= 1u;
  }
  return r;
}

inline double dpow(double x, unsigned n) {
  double r = 1;
  while (n) {
    if (n & 1u) r *= x;
    x *= x;
    n >>= 1u;
  }
  return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Character-side criteria
// ---------------------------------------------------------------------------

/// Outcome of one character criterion on one (class, n).
struct CharVerdict {
  bool holds = false;
  std::optional<std::size_t> witness_row;         // first row failing the row-wise identity
  double max_residual = 0.0;                      // worst row-wise residual seen
  std::optional<std::int64_t> m1, m2;             // rounded multiplicities, when computed
  bool mass_ok = true;                            // multiplicity mass identity
  std::optional<std::size_t> summed_witness_row;  // first row failing the summed identity
  std::string note;
};

/// chi(x)^n = chi(1)^(n-1) chi(x^n) for every irreducible; the character
/// criterion for K^n being a single class.
inline CharVerdict single_class_power_criterion(const CharacterTable& t, ClassIndex xclass,
                                                unsigned n) {
  if (n < 2) throw Error("single_class_power_criterion: n must be >= 2");
  const ClassIndex xn = class_of_power(t, xclass, n);
  CharVerdict v;
  v.holds = true;
  for (std::size_t r = 0; r < t.k; ++r) {
    const double degpow = detail::dpow(t.degrees[r], n - 1);
    const Complex lhs = detail::cpow(t.values[r][xclass], n);
    const Complex rhs = degpow * t.values[r][xn];
    const double residual = std::abs(lhs - rhs);
    v.max_residual = std::max(v.max_residual, residual);
    if (residual > t.tolerance * (1 + degpow) && v.holds) {
      v.holds = false;
      v.witness_row = r;
    }
  }
  return v;
}

/// chi(x_1)...chi(x_r) = chi(1)^(r-1) chi(d) for every irreducible; the
/// criterion for a product of classes being the single class of d.
inline CharVerdict product_is_class_criterion(const CharacterTable& t,
                                              const std::vector<ClassIndex>& xs, ClassIndex d) {
  if (xs.size() < 2) throw Error("product_is_class_criterion: need at least two classes");
  CharVerdict v;
  v.holds = true;
  for (std::size_t r = 0; r < t.k; ++r) {
    Complex prod{1, 0};
    for (ClassIndex x : xs) prod *= t.values[r][x];
    const double degpow = detail::dpow(t.degrees[r], static_cast<unsigned>(xs.size() - 1));
    const double residual = std::abs(prod - degpow * t.values[r][d]);
    v.max_residual = std::max(v.max_residual, residual);
    if (residual > t.tolerance * (1 + degpow) && v.holds) {
      v.holds = false;
      v.witness_row = r;
    }
  }
  return v;
}

struct RoundedInteger {
  std::int64_t value = 0;
  double residual = 0.0;
};

/// Multiplicity of class `target` in the product of class sums over `xs`,
/// evaluated from the character table:
///   alpha = (prod |K_i| / |G|) * sum_chi (prod chi(x_i)) conj(chi(d)) / chi(1)^(r-1).
/// Throws NonIntegral if the result is not a near-integer (a bad table).
inline RoundedInteger class_multiplicity_from_table(const CharacterTable& t,
                                                    const std::vector<ClassIndex>& xs,
                                                    ClassIndex target) {
  if (xs.empty()) throw Error("class_multiplicity_from_table: empty class list");
  double size_factor = 1.0;
  for (ClassIndex x : xs) size_factor *= static_cast<double>(t.class_sizes[x]);
  size_factor /= static_cast<double>(t.group_order);

  Complex sum{0, 0};
  for (std::size_t r = 0; r < t.k; ++r) {
    Complex prod{1, 0};
    for (ClassIndex x : xs) prod *= t.values[r][x];
    sum += prod * std::conj(t.values[r][target]) /
           detail::dpow(t.degrees[r], static_cast<unsigned>(xs.size() - 1));
  }
  const Complex raw = size_factor * sum;
  RoundedInteger out;
  out.value = std::llround(raw.real());
  out.residual = std::abs(raw - Complex{static_cast<double>(out.value), 0});
  if (out.value < 0 || out.residual > kNearIntegerTol * std::max(1.0, std::abs(raw)))
    throw NonIntegral("class multiplicity " + std::to_string(raw.real()) +
                      " is not a nonnegative near-integer");
  return out;
}

/// Character criterion for K^n = {1} u D: the multiplicities m1 (of the
/// trivial class) and m2 (of D) must be positive integers and the row-wise
/// and mass identities must hold:
///   chi(x)^n |K|^n = chi(1)^(n-1) (m1 chi(1) + m2 |D| chi(d)),  |K|^n = m1 + m2 |D|.
inline CharVerdict trivial_plus_class_criterion(const CharacterTable& t, ClassIndex xclass,
                                                ClassIndex dclass, unsigned n) {
  if (n < 2) throw Error("trivial_plus_class_criterion: n must be >= 2");
  if (dclass == 0) throw Error("trivial_plus_class_criterion: companion must be nontrivial");
  const std::vector<ClassIndex> xs(n, xclass);
  const RoundedInteger m1 = class_multiplicity_from_table(t, xs, 0);
  const RoundedInteger m2 = class_multiplicity_from_table(t, xs, dclass);

  CharVerdict v;
  v.m1 = m1.value;
  v.m2 = m2.value;
  v.holds = m1.value >= 1 && m2.value >= 1;

  const double ksize = static_cast<double>(t.class_sizes[xclass]);
  const double dsize = static_cast<double>(t.class_sizes[dclass]);
  const double kn = detail::dpow(ksize, n);
  v.mass_ok = std::abs(kn - (m1.value + m2.value * dsize)) <= t.tolerance * (1 + kn);
  v.holds = v.holds && v.mass_ok;

  for (std::size_t r = 0; r < t.k; ++r) {
    const double deg = t.degrees[r];
    const double degpow = detail::dpow(deg, n - 1);
    const Complex lhs = detail::cpow(t.values[r][xclass], n) * kn;
    const Complex rhs =
        degpow * (static_cast<double>(m1.value) * deg +
                  static_cast<double>(m2.value) * dsize * t.values[r][dclass]);
    const double residual = std::abs(lhs - rhs);
    v.max_residual = std::max(v.max_residual, residual);
    if (residual > t.tolerance * (1 + kn * detail::dpow(deg, n))) {
      if (!v.witness_row) v.witness_row = r;
      v.holds = false;
    }
  }
  return v;
}

/// Character criterion for K^n = D u D^-1 with D the class of x^n:
///   chi(x)^n |K|^n = chi(1)^(n-1) |D| (m1 chi(x^n) + m2 chi(x^-n)),
///   |K|^n = (m1 + m2) |D|, and the summed identity
///   chi(x)^n + chi(x^-1)^n = chi(1)^(n-1) (chi(x^n) + chi(x^-n)).
///
/// When D is real the two multiplicity sums coincide and double-count the
/// single class, so the mass identity fails and the verdict is false; that
/// matches the oracle, which labels the degenerate case SingleClass (it falls
/// under the single-class criterion instead). The note field documents this.
inline CharVerdict class_plus_inverse_criterion(const CharacterTable& t, ClassIndex xclass,
                                                unsigned n) {
  if (n < 2) throw Error("class_plus_inverse_criterion: n must be >= 2");
  const ClassIndex dclass = class_of_power(t, xclass, n);
  const ClassIndex dinv = t.inverse_classes[dclass];
  const ClassIndex xinv = t.inverse_classes[xclass];
  const std::vector<ClassIndex> xs(n, xclass);
  const RoundedInteger m1 = class_multiplicity_from_table(t, xs, dclass);
  const RoundedInteger m2 = class_multiplicity_from_table(t, xs, dinv);

  CharVerdict v;
  v.m1 = m1.value;
  v.m2 = m2.value;
  v.holds = m1.value >= 1 && m2.value >= 1;
  if (dclass == dinv) v.note = "companion class is real; mass identity double-counts it";

  const double ksize = static_cast<double>(t.class_sizes[xclass]);
  const double dsize = static_cast<double>(t.class_sizes[dclass]);
  const double kn = detail::dpow(ksize, n);
  v.mass_ok = std::abs(kn - (m1.value + m2.value) * dsize) <= t.tolerance * (1 + kn);
  v.holds = v.holds && v.mass_ok;

  for (std::size_t r = 0; r < t.k; ++r) {
    const double deg = t.degrees[r];
    const double degpow = detail::dpow(deg, n - 1);
    const Complex lhs = detail::cpow(t.values[r][xclass], n) * kn;
    const Complex rhs = degpow * dsize *
                        (static_cast<double>(m1.value) * t.values[r][dclass] +
                         static_cast<double>(m2.value) * t.values[r][dinv]);
    const double residual = std::abs(lhs - rhs);
    v.max_residual = std::max(v.max_residual, residual);
    if (residual > t.tolerance * (1 + kn * detail::dpow(deg, n))) {
      if (!v.witness_row) v.witness_row = r;
      v.holds = false;
    }

    // summed identity, scale-free in |K|
    const Complex slhs = detail::cpow(t.values[r][xclass], n) +
                         detail::cpow(t.values[r][xinv], n);
    const Complex srhs = degpow * (t.values[r][dclass] + t.values[r][dinv]);
    if (std::abs(slhs - srhs) > t.tolerance * (1 + detail::dpow(deg, n))) {
      if (!v.summed_witness_row) v.summed_witness_row = r;
      v.holds = false;
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Element-set helpers for the oracle-side conclusions
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<ElementIndex> set_product(const FiniteGroup& G,
                                             const std::vector<ElementIndex>& a,
                                             const std::vector<ElementIndex>& b) {
  std::vector<bool> in(G.order(), false);
  std::vector<ElementIndex> out;
  for (ElementIndex x : a)
    for (ElementIndex y : b) {
      ElementIndex p = G.mult(x, y);
      if (!in[p]) {
        in[p] = true;
        out.push_back(p);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// Union of the members of the support classes (= the product set itself).
inline std::vector<ElementIndex> support_set(const ClassDecomposition& dec,
                                             const ClassMultiset& ms) {
  std::vector<ElementIndex> out;
  for (const auto& [c, mult] : ms.multiplicities) {
    const auto& m = dec.classes[c].members;
    out.insert(out.end(), m.begin(), m.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_prime(std::uint64_t n) {
  auto f = factorize(n);
  return f.size() == 1 && f[0].second == 1;
}

inline bool is_prime_power(std::uint64_t n) { return factorize(n).size() == 1; }

inline bool is_power_of_two(std::uint64_t n) { return n >= 1 && (n & (n - 1)) == 0; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Structural-conclusion verifiers
// ---------------------------------------------------------------------------

struct Conclusion {
  std::string name;
  bool holds = false;
  std::string details;
};

namespace detail {

inline void add(std::vector<Conclusion>& out, std::string name, bool holds,
                std::string details = "") {
  out.push_back({std::move(name), holds, std::move(details)});
}

}  // namespace detail

/// Three independently computed routes to "K^n is a single class":
///   (a) the support of the exact power,
///   (b) centralizer sizes plus the set x^-1 K being a normal subgroup,
///   (c) centralizer sizes plus every chi(x) being 0 or of maximal modulus.
struct ThreeRouteResult {
  bool support_route = false;
  bool normal_set_route = false;
  bool character_route = false;
  bool all_equal = false;
};

inline ThreeRouteResult single_class_equivalence_check(const FiniteGroup& G,
                                                       const ClassDecomposition& dec,
                                                       ClassProductCache& cache,
                                                       const CharacterTable& t,
                                                       ClassIndex xclass, unsigned n) {
  ThreeRouteResult r;
  const ElementIndex x = dec.classes[xclass].rep;
  const ClassIndex xnclass = dec.class_of[G.power(x, n)];

  r.support_route = class_power(cache, xclass, n).multiplicities.size() == 1;

  const bool centralizers_equal = dec.size(xclass) == dec.size(xnclass);
  CommutatorStructures cs = commutator_structures(G, dec, x);
  r.normal_set_route =
      centralizers_equal && cs.set_is_subgroup && cs.commutator_subgroup.is_normal;

  bool rows_ok = true;
  for (std::size_t row = 0; row < t.k && rows_ok; ++row) {
    const double mod = std::abs(t.values[row][xclass]);
    rows_ok = mod <= t.tolerance * (1 + t.degrees[row]) ||
              std::abs(mod - t.degrees[row]) <= t.tolerance * (1 + t.degrees[row]);
  }
  r.character_route = centralizers_equal && rows_ok;

  r.all_equal = r.support_route == r.normal_set_route && r.support_route == r.character_route;
  return r;
}

/// Conclusions that must hold once the oracle says K^n is a single class:
/// solvability of <K>, the size and return behaviour of the power chain,
/// periodicity when K^n = K, and the stronger facts when the power lands on a
/// real class.
inline std::vector<Conclusion> verify_single_class_conclusions(
    const FiniteGroup& G, const ClassDecomposition& dec, ClassProductCache& cache,
    ClassIndex xclass, unsigned n, unsigned max_n) {
  std::vector<Conclusion> out;
  const ElementIndex x = dec.classes[xclass].rep;
  const std::uint64_t o = dec.element_order_of_class[xclass];
  const std::uint64_t ksize = dec.size(xclass);

  const ClassMultiset pn = class_power(cache, xclass, n);
  if (pn.multiplicities.size() != 1)
    throw Error("verify_single_class_conclusions: power is not a single class");
  const ClassIndex companion = pn.multiplicities.begin()->first;

  const SubgroupInfo gen = subgroup_closure(G, dec.classes[xclass].members);
  detail::add(out, "generated_subgroup_solvable", gen.is_solvable(),
              "order " + std::to_string(gen.order));

  bool sizes_ok = true;
  {
    ClassMultiset acc;
    acc.multiplicities[xclass] = BigUint{1};
    for (unsigned r = 2; r <= max_n; ++r) {
      acc = multiset_times_class(cache, acc, xclass);
      sizes_ok = sizes_ok && acc.support_element_count(dec) == ksize;
    }
  }
  detail::add(out, "power_set_sizes_equal_class_size", sizes_ok);

  const ClassMultiset p_plus = class_power(cache, xclass, static_cast<unsigned>(o + 1));
  detail::add(out, "power_order_plus_one_is_class",
              p_plus.multiplicities.size() == 1 &&
                  p_plus.multiplicities.begin()->first == xclass);

  if (o >= 2) {
    const ClassMultiset p_minus = class_power(cache, xclass, static_cast<unsigned>(o - 1));
    detail::add(out, "power_order_minus_one_is_inverse",
                p_minus.multiplicities.size() == 1 &&
                    p_minus.multiplicities.begin()->first == dec.inverse_class[xclass]);
  }

  bool coprime_ok = true;
  for (unsigned m = 2; m <= max_n; ++m) {
    if (std::gcd<std::uint64_t>(m, o) != 1) continue;
    coprime_ok = coprime_ok && class_power(cache, xclass, m).multiplicities.size() == 1;
  }
  detail::add(out, "coprime_powers_are_single_classes", coprime_ok);

  if (detail::is_prime(o))
    detail::add(out, "prime_order_implies_solvable", gen.is_solvable());
  if (detail::is_power_of_two(o))
    detail::add(out, "two_element_implies_solvable", gen.is_solvable());

  if (companion == xclass) {
    // K^n = K: periodicity, the stabilized power, and the order/period primes
    bool period_ok = true;
    for (unsigned k = 1; k * (n - 1) + 1 <= max_n; ++k) {
      for (unsigned r = 1; k * (n - 1) + r <= max_n; ++r) {
        const auto a = class_power(cache, xclass, k * (n - 1) + r).support();
        const auto b = class_power(cache, xclass, r).support();
        period_ok = period_ok && a == b;
      }
    }
    detail::add(out, "power_period_divides_n_minus_one", period_ok);

    CommutatorStructures cs = commutator_structures(G, dec, x);
    const auto stabilized = detail::support_set(dec, class_power(cache, xclass, n - 1));
    detail::add(out, "stabilized_power_is_commutator_subgroup",
                stabilized == cs.commutator_subgroup.members &&
                    cs.commutator_subgroup.is_normal);

    bool primes_ok = true;
    for (auto [p, e] : factorize(o)) primes_ok = primes_ok && (n - 1) % p == 0;
    detail::add(out, "order_primes_divide_n_minus_one", primes_ok);
  }

  if (dec.is_real(companion)) {
    // the power lands on a real class
    const auto d3 = class_power(cache, companion, 3);
    detail::add(out, "companion_cubed_is_companion",
                d3.multiplicities.size() == 1 && d3.multiplicities.begin()->first == companion);
    detail::add(out, "companion_is_two_element",
                detail::is_power_of_two(dec.element_order_of_class[companion]) ||
                    dec.element_order_of_class[companion] == 1);

    // the power-of-two exponent case needs x^n != 1: a trivial companion
    // forces |K| = 1 and o(x) | n instead, so it is excluded here
    if (detail::is_power_of_two(n) && companion != 0) {
      detail::add(out, "power_of_two_exponent_case", ksize % 2 == 1 && o == 2 * n,
                  "|K| = " + std::to_string(ksize) + ", o(x) = " + std::to_string(o));
    }

    if (companion == xclass) {
      bool odd_ok = true;
      for (unsigned m = 3; m <= max_n; m += 2) {
        const auto pm = class_power(cache, xclass, m);
        odd_ok = odd_ok && pm.multiplicities.size() == 1 &&
                 pm.multiplicities.begin()->first == xclass;
      }
      CommutatorStructures cs = commutator_structures(G, dec, x);
      const auto square = detail::support_set(dec, class_power(cache, xclass, 2));
      detail::add(out, "self_companion_case",
                  detail::is_power_of_two(o) && odd_ok &&
                      square == cs.commutator_subgroup.members &&
                      cs.commutator_subgroup.is_normal);
    }
  }
  return out;
}

/// Conclusions for an oracle hit K^n = {1} u D: the product with the inverse
/// class collapses to the same union, <K> is solvable, and the norm identity
/// |K| |chi(x)|^2 = chi(1)^2 + (|K|-1) chi(1) chi(d) holds on every row.
inline std::vector<Conclusion> verify_trivial_plus_class_conclusions(
    const FiniteGroup& G, const ClassDecomposition& dec, ClassProductCache& cache,
    const CharacterTable& t, ClassIndex xclass, unsigned n, ClassIndex dclass) {
  std::vector<Conclusion> out;
  const auto& kkinv = cache.product(xclass, dec.inverse_class[xclass]);
  const std::vector<ClassIndex> expected{0, dclass};
  detail::add(out, "product_with_inverse_is_trivial_plus_companion",
              kkinv.support() == expected);

  const SubgroupInfo gen = subgroup_closure(G, dec.classes[xclass].members);
  detail::add(out, "generated_subgroup_solvable", gen.is_solvable(),
              "order " + std::to_string(gen.order));

  bool rows_ok = true;
  double worst = 0;
  const double ksize = static_cast<double>(dec.size(xclass));
  for (std::size_t r = 0; r < t.k; ++r) {
    const Complex lhs = ksize * std::norm(t.values[r][xclass]);
    const Complex rhs = t.degrees[r] * t.degrees[r] +
                        (ksize - 1) * t.degrees[r] * t.values[r][dclass];
    worst = std::max(worst, std::abs(lhs - rhs));
    rows_ok = rows_ok && std::abs(lhs - rhs) < kNearIntegerTol;
  }
  detail::add(out, "norm_identity_every_row", rows_ok, "max residual " + std::to_string(worst));
  return out;
}

/// Conclusions for an oracle hit K^n = D u D^-1 with D != D^-1: the size
/// dichotomy |D| = |K|/2 or |D| = |K|, solvability in the halved case, and
/// non-reality of K.
inline std::vector<Conclusion> verify_class_plus_inverse_conclusions(
    const FiniteGroup& G, const ClassDecomposition& dec, ClassIndex xclass, ClassIndex dclass) {
  std::vector<Conclusion> out;
  const std::uint64_t ksize = dec.size(xclass);
  const std::uint64_t dsize = dec.size(dclass);
  detail::add(out, "companion_size_half_or_equal", 2 * dsize == ksize || dsize == ksize,
              "|K| = " + std::to_string(ksize) + ", |D| = " + std::to_string(dsize));
  if (2 * dsize == ksize) {
    const SubgroupInfo gen = subgroup_closure(G, dec.classes[xclass].members);
    detail::add(out, "half_case_generated_solvable", gen.is_solvable());
  }
  detail::add(out, "base_class_not_real", !dec.is_real(xclass));
  return out;
}

/// Conclusions for an oracle hit K^2 = K u K^-1: solvability, prime-power
/// element order, and the proof-level set identities around
/// S = K K^-1 minus ({1} u K u K^-1).
inline std::vector<Conclusion> verify_self_plus_inverse_conclusions(
    const FiniteGroup& G, const ClassDecomposition& dec, ClassIndex xclass) {
  std::vector<Conclusion> out;
  const SubgroupInfo gen = subgroup_closure(G, dec.classes[xclass].members);
  detail::add(out, "generated_subgroup_solvable", gen.is_solvable(),
              "order " + std::to_string(gen.order));
  detail::add(out, "base_order_prime_power",
              detail::is_prime_power(dec.element_order_of_class[xclass]));

  const auto& k_members = dec.classes[xclass].members;
  const auto& kinv_members = dec.classes[dec.inverse_class[xclass]].members;
  const auto kkinv = detail::set_product(G, k_members, kinv_members);

  std::vector<ElementIndex> trivial_union{0};
  trivial_union.insert(trivial_union.end(), k_members.begin(), k_members.end());
  trivial_union.insert(trivial_union.end(), kinv_members.begin(), kinv_members.end());
  std::sort(trivial_union.begin(), trivial_union.end());
  trivial_union.erase(std::unique(trivial_union.begin(), trivial_union.end()),
                      trivial_union.end());

  std::vector<ElementIndex> s_set;
  std::set_difference(kkinv.begin(), kkinv.end(), trivial_union.begin(), trivial_union.end(),
                      std::back_inserter(s_set));

  if (s_set.empty()) {
    // K K^-1 = {1} u K u K^-1 forces <K> elementary abelian
    bool same = kkinv == trivial_union && gen.members == kkinv;
    bool elementary = gen.is_abelian();
    std::uint64_t p = 0;
    for (ElementIndex e : gen.members) {
      if (e == 0) continue;
      std::uint64_t oe = element_order(G, e);
      if (p == 0) p = oe;
      elementary = elementary && oe == p && detail::is_prime(oe);
    }
    detail::add(out, "empty_complement_elementary_abelian", same && elementary);
  } else {
    const auto ks = detail::set_product(G, k_members, s_set);
    bool ks_is_k = ks == k_members;
    const SubgroupInfo s_gen = subgroup_closure(G, s_set);
    std::vector<ElementIndex> s_union{0};
    s_union.insert(s_union.end(), s_set.begin(), s_set.end());
    bool s_closed = s_gen.members == s_union;
    bool gen_is_union = gen.members == kkinv;
    detail::add(out, "complement_set_identities", ks_is_k && s_closed && gen_is_union,
                "|S| = " + std::to_string(s_set.size()));
  }
  return out;
}

/// Group-level check: when every class of pi-elements has some n in
/// [2, max_n] with K^n a single class, the quotient by the pi'-core must be
/// nilpotent. Returns (hypothesis_met, conclusion).
inline std::pair<bool, Conclusion> verify_pi_quotient_nilpotent(
    const FiniteGroup& G, const ClassDecomposition& dec, ClassProductCache& cache,
    const std::vector<std::uint64_t>& pi, unsigned max_n) {
  auto is_pi_number = [&pi](std::uint64_t n) {
    for (auto [p, e] : factorize(n)) {
      bool in_pi = false;
      for (std::uint64_t q : pi) in_pi = in_pi || q == p;
      if (!in_pi) return false;
    }
    return true;
  };

  bool hypothesis = true;
  for (ClassIndex c = 1; c < dec.count() && hypothesis; ++c) {
    if (!is_pi_number(dec.element_order_of_class[c])) continue;
    bool some_power_is_class = false;
    for (unsigned n = 2; n <= max_n && !some_power_is_class; ++n)
      some_power_is_class = class_power(cache, c, n).multiplicities.size() == 1;
    hypothesis = some_power_is_class;
  }
  if (!hypothesis)
    return {false, {"pi_quotient_nilpotent", true, "hypothesis not met; nothing to check"}};

  const SubgroupInfo core = largest_normal_pi_prime(G, dec, pi);
  const FiniteGroup quotient = quotient_group(G, core);
  const SubgroupInfo whole = whole_group(quotient);
  return {true,
          {"pi_quotient_nilpotent", whole.is_nilpotent,
           "core order " + std::to_string(core.order) + ", quotient order " +
               std::to_string(quotient.order())}};
}

}  // namespace classpower
