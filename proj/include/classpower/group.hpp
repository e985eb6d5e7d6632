#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "classpower/errors.hpp"
#include "classpower/perm.hpp"

namespace classpower {

using ElementIndex = std::uint32_t;

constexpr std::uint64_t kDefaultGroupCap = 5040;

/// Fully enumerated finite permutation group with index-based arithmetic.
///
/// Element 0 is the identity; the remaining indices follow breadth-first
/// discovery order from the sorted generator list, so indices (and everything
/// derived from them) are reproducible across runs.
class FiniteGroup {
 public:
  std::uint64_t order() const { return elements_.size(); }
  std::size_t degree() const { return elements_.empty() ? 0 : elements_[0].degree(); }

  const Perm& element(ElementIndex i) const { return elements_[i]; }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<ElementIndex>& generator_indices() const { return generator_indices_; }

  ElementIndex index_of(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw InternalError("permutation is not a group element");
    return it->second;
  }

  ElementIndex mult(ElementIndex i, ElementIndex j) const {
    if (!mult_table_.empty()) return mult_table_[i * elements_.size() + j];
    return index_of(elements_[i] * elements_[j]);
  }

  ElementIndex inv(ElementIndex i) const { return inverse_[i]; }

  /// g^-1 * x * g.
  ElementIndex conj(ElementIndex x, ElementIndex g) const {
    return mult(mult(inverse_[g], x), g);
  }

  /// [x, g] = x^-1 * g^-1 * x * g.
  ElementIndex commutator(ElementIndex x, ElementIndex g) const {
    return mult(inverse_[x], conj(x, g));
  }

  ElementIndex power(ElementIndex i, std::uint64_t n) const {
    ElementIndex acc = 0;
    ElementIndex base = i;
    while (n) {
      if (n & 1u) acc = mult(acc, base);
      base = mult(base, base);
      n >>= 1u;
    }
    return acc;
  }

  friend FiniteGroup enumerate_group(std::vector<Perm> generators, std::uint64_t cap);
  friend FiniteGroup finite_group_from_elements(std::vector<Perm> elements,
                                                std::vector<ElementIndex> generator_indices);

 private:
  std::vector<Perm> elements_;
  std::unordered_map<Perm, ElementIndex, PermHash> index_;
  std::vector<ElementIndex> inverse_;
  std::vector<ElementIndex> mult_table_;  // row-major, built only for small orders
  std::vector<ElementIndex> generator_indices_;

  // Orders up to this bound get a dense multiplication table; larger groups
  // fall back to compose-and-hash lookups.
  static constexpr std::uint64_t kMultTableLimit = 1024;
};

/// Closure of the generators under composition, canonically indexed.
///
/// Throws DegreeMismatch for inconsistent generators and CapExceeded once the
/// closure grows past `cap`.
inline FiniteGroup enumerate_group(std::vector<Perm> generators,
                                   std::uint64_t cap = kDefaultGroupCap) {
  if (generators.empty()) throw Error("enumerate_group: no generators");
  const std::size_t degree = generators[0].degree();
  for (const Perm& g : generators) {
    if (g.degree() != degree) throw DegreeMismatch("generators have inconsistent degrees");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  FiniteGroup G;
  auto add = [&G](const Perm& p) -> ElementIndex {
    ElementIndex idx = static_cast<ElementIndex>(G.elements_.size());
    G.elements_.push_back(p);
    G.index_.emplace(p, idx);
    return idx;
  };

  add(Perm::identity(degree));
  for (std::size_t frontier = 0; frontier < G.elements_.size(); ++frontier) {
    for (const Perm& g : generators) {
      Perm p = G.elements_[frontier] * g;
      if (G.index_.find(p) == G.index_.end()) {
        if (G.elements_.size() >= cap)
          throw CapExceeded("group closure exceeds cap of " + std::to_string(cap));
        add(p);
      }
    }
  }

  G.inverse_.resize(G.elements_.size());
  for (ElementIndex i = 0; i < G.elements_.size(); ++i)
    G.inverse_[i] = G.index_.at(G.elements_[i].inverse());

  if (G.order() <= FiniteGroup::kMultTableLimit) {
    const std::size_t n = G.elements_.size();
    G.mult_table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        G.mult_table_[i * n + j] = G.index_.at(G.elements_[i] * G.elements_[j]);
  }

  G.generator_indices_.reserve(generators.size());
  for (const Perm& g : generators) G.generator_indices_.push_back(G.index_.at(g));
  return G;
}

/// Rebuild a group from a previously enumerated element list, preserving the
/// element indexing exactly (cache restore path). The list is checked for the
/// identity at index 0, inverses, and closure under the stated generators.
inline FiniteGroup finite_group_from_elements(std::vector<Perm> elements,
                                              std::vector<ElementIndex> generator_indices) {
  if (elements.empty() || !elements[0].is_identity())
    throw Error("element list must start with the identity");
  FiniteGroup G;
  G.elements_ = std::move(elements);
  for (ElementIndex i = 0; i < G.elements_.size(); ++i) {
    if (G.elements_[i].degree() != G.elements_[0].degree())
      throw DegreeMismatch("cached elements have inconsistent degrees");
    if (!G.index_.emplace(G.elements_[i], i).second)
      throw Error("duplicate element in cached list");
  }
  G.inverse_.resize(G.elements_.size());
  for (ElementIndex i = 0; i < G.elements_.size(); ++i) {
    auto it = G.index_.find(G.elements_[i].inverse());
    if (it == G.index_.end()) throw Error("cached element list is not inverse-closed");
    G.inverse_[i] = it->second;
  }
  for (ElementIndex g : generator_indices) {
    if (g >= G.elements_.size()) throw Error("cached generator index out of range");
    for (ElementIndex i = 0; i < G.elements_.size(); ++i)
      if (G.index_.find(G.elements_[i] * G.elements_[g]) == G.index_.end())
        throw Error("cached element list is not closed under its generators");
  }
  G.generator_indices_ = std::move(generator_indices);
  if (G.order() <= FiniteGroup::kMultTableLimit) {
    const std::size_t n = G.elements_.size();
    G.mult_table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        G.mult_table_[i * n + j] = G.index_.at(G.elements_[i] * G.elements_[j]);
  }
  return G;
}

/// Smallest m >= 1 with element^m = identity.
inline std::uint64_t element_order(const FiniteGroup& G, ElementIndex i) {
  std::uint64_t m = 1;
  ElementIndex acc = i;
  while (acc != 0) {
    acc = G.mult(acc, i);
    ++m;
  }
  return m;
}

inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> fac;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      fac.emplace_back(p, e);
    }
  }
  if (n > 1) fac.emplace_back(n, 1);
  return fac;
}

/// Commuting prime-part factorization of an element.
///
/// For o(x) = prod p^a returns one (p, x_p) pair per prime, where each x_p is
/// the power of x of order p^a and the product of the parts is x itself. The
/// identity yields an empty list; x is a p-element iff at most one pair comes back.
inline std::vector<std::pair<std::uint64_t, ElementIndex>> p_part_decomposition(
    const FiniteGroup& G, ElementIndex i) {
  const std::uint64_t o = element_order(G, i);
  std::vector<std::pair<std::uint64_t, ElementIndex>> parts;
  if (o == 1) return parts;
  for (auto [p, e] : factorize(o)) {
    std::uint64_t pa = 1;
    for (unsigned k = 0; k < e; ++k) pa *= p;
    const std::uint64_t q = o / pa;
    // exponent s with s = 0 mod q and s = 1 mod p^a picks out the p-part
    std::uint64_t t = 1;
    while ((q % pa) * (t % pa) % pa != 1 % pa) ++t;
    parts.emplace_back(p, G.power(i, q * t));
  }
  ElementIndex prod = 0;
  for (auto& [p, xp] : parts) prod = G.mult(prod, xp);
  if (prod != i) throw InternalError("p-part product mismatch");
  return parts;
}

inline bool is_p_element(const FiniteGroup& G, ElementIndex i) {
  return p_part_decomposition(G, i).size() <= 1;
}

}  // namespace classpower
