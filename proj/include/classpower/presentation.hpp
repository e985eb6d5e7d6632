#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "classpower/errors.hpp"
#include "classpower/group.hpp"

namespace classpower {

/// Finite group presentation with a declared order.
///
/// Relator words are strings over the generator names; a name followed by
/// a prime (') denotes the inverse. Names are matched longest-first, so
/// multi-character names are allowed as long as the word is unambiguous
/// under greedy tokenization.
struct Presentation {
  std::string name;
  std::vector<std::string> generators;
  std::vector<std::string> relators;
  std::uint64_t order = 0;
};

namespace detail {

/// Letters are 2*g for generator g and 2*g+1 for its inverse.
inline std::vector<unsigned> parse_word(const std::string& word,
                                        const std::vector<std::string>& names) {
  std::vector<std::size_t> by_length(names.size());
  std::iota(by_length.begin(), by_length.end(), std::size_t{0});
  std::sort(by_length.begin(), by_length.end(), [&names](std::size_t a, std::size_t b) {
    return names[a].size() > names[b].size();
  });

  std::vector<unsigned> letters;
  std::size_t pos = 0;
  while (pos < word.size()) {
    if (word[pos] == ' ') {
      ++pos;
      continue;
    }
    bool matched = false;
    for (std::size_t g : by_length) {
      const std::string& nm = names[g];
      if (word.compare(pos, nm.size(), nm) == 0) {
        pos += nm.size();
        bool inverse = pos < word.size() && word[pos] == '\'';
        if (inverse) ++pos;
        letters.push_back(2 * static_cast<unsigned>(g) + (inverse ? 1u : 0u));
        matched = true;
        break;
      }
    }
    if (!matched)
      throw ParseError("cannot tokenize word '" + word + "' at position " + std::to_string(pos));
  }
  if (letters.empty()) throw ParseError("empty relator word");
  return letters;
}

/// Todd-Coxeter coset enumeration over the trivial subgroup.
///
/// HLT strategy with full coincidence processing; the resulting table is the
/// regular action of the presented group, so the live coset count is the
/// group order. Passes repeat until a pass makes no definition and finds no
/// coincidence, which guarantees the final table is total and relator-closed.
class CosetEnumerator {
 public:
  CosetEnumerator(std::size_t n_generators, const std::vector<std::vector<unsigned>>& relators,
                  std::size_t coset_limit)
      : n_letters_(2 * n_generators), relators_(relators), limit_(coset_limit) {
    new_coset();
  }

  void run() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < rows_.size(); ++a) {
        if (!alive(a)) continue;
        for (const auto& rel : relators_) {
          changed |= scan_and_fill(a, rel);
          if (!alive(a)) break;
        }
        if (!alive(a)) continue;
        for (unsigned x = 0; x < n_letters_; ++x) {
          if (entry(a, x) == kUndef) {
            define(a, x);
            changed = true;
          }
        }
      }
    }
  }

  std::vector<std::size_t> live_cosets() const {
    std::vector<std::size_t> live;
    for (std::size_t a = 0; a < rows_.size(); ++a)
      if (rep_[a] == a) live.push_back(a);
    return live;
  }

  /// Image of coset a under right multiplication by generator g.
  std::size_t image(std::size_t a, unsigned g) const { return rows_[a][2 * g]; }

 private:
  static constexpr std::size_t kUndef = static_cast<std::size_t>(-1);

  bool alive(std::size_t a) { return find(a) == a; }

  std::size_t find(std::size_t a) {
    while (rep_[a] != a) {
      rep_[a] = rep_[rep_[a]];
      a = rep_[a];
    }
    return a;
  }

  std::size_t& entry(std::size_t a, unsigned x) { return rows_[a][x]; }

  static unsigned inv(unsigned x) { return x ^ 1u; }

  std::size_t new_coset() {
    if (rows_.size() >= limit_)
      throw CapExceeded("coset enumeration exceeded limit of " + std::to_string(limit_));
    rows_.emplace_back(n_letters_, kUndef);
    rep_.push_back(rows_.size() - 1);
    return rows_.size() - 1;
  }

  void define(std::size_t a, unsigned x) {
    std::size_t b = new_coset();
    entry(a, x) = b;
    entry(b, inv(x)) = a;
  }

  void merge(std::size_t k, std::size_t l, std::deque<std::size_t>& queue) {
    k = find(k);
    l = find(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    rep_[l] = k;
    queue.push_back(l);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::deque<std::size_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      std::size_t dead = queue.front();
      queue.pop_front();
      for (unsigned x = 0; x < n_letters_; ++x) {
        std::size_t d = rows_[dead][x];
        if (d == kUndef) continue;
        rows_[d][inv(x)] = kUndef;
        std::size_t mu = find(dead);
        std::size_t nu = find(d);
        if (entry(mu, x) != kUndef) {
          merge(nu, entry(mu, x), queue);
        } else if (entry(nu, inv(x)) != kUndef) {
          merge(mu, entry(nu, inv(x)), queue);
        } else {
          entry(mu, x) = nu;
          entry(nu, inv(x)) = mu;
        }
      }
    }
  }

  /// Scans relator `rel` at coset a, defining cosets as needed until the scan
  /// closes. Returns true if anything changed.
  bool scan_and_fill(std::size_t a, const std::vector<unsigned>& rel) {
    bool changed = false;
    while (true) {
      if (!alive(a)) return changed;
      std::size_t f = a;
      std::size_t i = 0;
      while (i < rel.size() && entry(f, rel[i]) != kUndef) f = entry(f, rel[i++]);
      if (i == rel.size()) {
        if (f != a) {
          coincidence(f, a);
          changed = true;
        }
        return changed;
      }
      std::size_t b = a;
      std::size_t j = rel.size();
      while (j > i && entry(b, inv(rel[j - 1])) != kUndef) b = entry(b, inv(rel[--j]));
      if (j == i) {
        // forward and backward scans met with a mismatch
        if (f != b) {
          coincidence(f, b);
          changed = true;
        }
        return changed;
      }
      if (j == i + 1) {
        entry(f, rel[i]) = b;
        entry(b, inv(rel[i])) = f;
        return true;
      }
      define(f, rel[i]);
      changed = true;
    }
  }

  unsigned n_letters_;
  const std::vector<std::vector<unsigned>>& relators_;
  std::size_t limit_;
  std::vector<std::vector<std::size_t>> rows_;
  std::vector<std::size_t> rep_;
};

}  // namespace detail

/// Regular permutation representation of a presented group.
///
/// The coset table over the trivial subgroup is the multiplication action of
/// the group on itself; its columns are returned as one permutation per
/// generator. The live coset count must match the declared order, otherwise
/// the presentation (or the declared order) is wrong and an error is thrown.
inline std::vector<Perm> regular_representation(const Presentation& pres) {
  if (pres.generators.empty()) throw Error("presentation has no generators");
  if (pres.order == 0) throw Error("presentation must declare a positive order");
  std::vector<std::vector<unsigned>> relators;
  relators.reserve(pres.relators.size());
  for (const std::string& w : pres.relators)
    relators.push_back(detail::parse_word(w, pres.generators));

  const std::size_t limit = std::max<std::size_t>(1024, 16 * pres.order);
  detail::CosetEnumerator enumerator(pres.generators.size(), relators, limit);
  enumerator.run();

  std::vector<std::size_t> live = enumerator.live_cosets();
  if (live.size() != pres.order)
    throw Error("presentation '" + pres.name + "' enumerates to order " +
                std::to_string(live.size()) + ", declared " + std::to_string(pres.order));
  if (live.size() > 0xffffu) throw CapExceeded("presentation order exceeds point range");

  std::vector<std::size_t> new_id(live.back() + 1);
  for (std::size_t k = 0; k < live.size(); ++k) new_id[live[k]] = k;

  std::vector<Perm> perms;
  for (std::size_t g = 0; g < pres.generators.size(); ++g) {
    std::vector<Point> img(live.size());
    for (std::size_t k = 0; k < live.size(); ++k)
      img[k] = static_cast<Point>(new_id[enumerator.image(live[k], static_cast<unsigned>(g))]);
    perms.push_back(Perm(std::move(img)));
  }
  return perms;
}

/// Enumerated group from a presentation (regular representation).
inline FiniteGroup group_from_presentation(const Presentation& pres,
                                           std::uint64_t cap = kDefaultGroupCap) {
  FiniteGroup G = enumerate_group(regular_representation(pres), cap);
  if (G.order() != pres.order)
    throw Error("presentation '" + pres.name + "' produced group of order " +
                std::to_string(G.order()) + ", declared " + std::to_string(pres.order));
  return G;
}

}  // namespace classpower
