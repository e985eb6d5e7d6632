#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "classpower/bigint.hpp"
#include "classpower/conjugacy.hpp"
#include "classpower/errors.hpp"

namespace classpower {

constexpr unsigned kDefaultMaxN = 8;

/// Product of class sums as an exact class-id -> multiplicity map.
struct ClassMultiset {
  std::map<ClassIndex, BigUint> multiplicities;  // only nonzero entries

  /// Sum over classes of multiplicity * class size.
  BigUint total_mass(const ClassDecomposition& dec) const {
    BigUint m;
    for (const auto& [c, mult] : multiplicities) m += mult * BigUint{dec.size(c)};
    return m;
  }

  std::vector<ClassIndex> support() const {
    std::vector<ClassIndex> s;
    s.reserve(multiplicities.size());
    for (const auto& [c, mult] : multiplicities) s.push_back(c);
    return s;
  }

  /// Number of group elements covered by the support classes.
  std::uint64_t support_element_count(const ClassDecomposition& dec) const {
    std::uint64_t n = 0;
    for (const auto& [c, mult] : multiplicities) n += dec.size(c);
    return n;
  }
};

/// Exact multiplicities of K_i * K_j: for each output class, the number of
/// pairs (a, b) mapping onto its representative. Counting at one representative
/// is enough because the count is constant across a class.
inline ClassMultiset class_product(const FiniteGroup& G, const ClassDecomposition& dec,
                                   ClassIndex i, ClassIndex j) {
  std::vector<std::uint64_t> hist(G.order(), 0);
  for (ElementIndex a : dec.classes[i].members)
    for (ElementIndex b : dec.classes[j].members) ++hist[G.mult(a, b)];
  ClassMultiset out;
  for (ClassIndex c = 0; c < dec.count(); ++c) {
    std::uint64_t m = hist[dec.classes[c].rep];
    if (m) out.multiplicities[c] = BigUint{m};
  }
  return out;
}

/// Three-index table c[i][j][l]: multiplicity of class l in K_i * K_j.
struct StructureConstants {
  std::size_t k = 0;
  std::vector<std::uint64_t> c;  // flattened [i][j][l]

  std::uint64_t at(ClassIndex i, ClassIndex j, ClassIndex l) const {
    return c[(static_cast<std::size_t>(i) * k + j) * k + l];
  }
};

inline StructureConstants structure_constants(const FiniteGroup& G,
                                              const ClassDecomposition& dec) {
  StructureConstants sc;
  sc.k = dec.count();
  sc.c.assign(sc.k * sc.k * sc.k, 0);
  for (ClassIndex i = 0; i < sc.k; ++i) {
    for (ClassIndex j = 0; j < sc.k; ++j) {
      ClassMultiset ms = class_product(G, dec, i, j);
      for (const auto& [l, mult] : ms.multiplicities)
        sc.c[(static_cast<std::size_t>(i) * sc.k + j) * sc.k + l] = mult.as_u64();
    }
  }
  return sc;
}

/// Memoized pairwise class products; scans take many powers of many classes
/// over the same decomposition and this keeps each product to one computation.
class ClassProductCache {
 public:
  ClassProductCache(const FiniteGroup& G, const ClassDecomposition& dec) : G_(G), dec_(dec) {}

  const ClassMultiset& product(ClassIndex i, ClassIndex j) {
    auto key = std::make_pair(i, j);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, class_product(G_, dec_, i, j)).first;
    return it->second;
  }

  const FiniteGroup& group() const { return G_; }
  const ClassDecomposition& decomposition() const { return dec_; }

 private:
  const FiniteGroup& G_;
  const ClassDecomposition& dec_;
  std::map<std::pair<ClassIndex, ClassIndex>, ClassMultiset> cache_;
};

/// One multiplication step: (ms * K_i) with exact multiplicities.
inline ClassMultiset multiset_times_class(ClassProductCache& cache, const ClassMultiset& ms,
                                          ClassIndex i) {
  ClassMultiset next;
  for (const auto& [l, mult] : ms.multiplicities) {
    for (const auto& [m, cval] : cache.product(l, i).multiplicities)
      next.multiplicities[m] += mult * cval;
  }
  return next;
}

/// Iterated class-sum power K^n with unbounded-integer multiplicities.
inline ClassMultiset class_power(ClassProductCache& cache, ClassIndex i, unsigned n) {
  if (n < 1) throw Error("class_power: n must be >= 1");
  ClassMultiset acc;
  acc.multiplicities[i] = BigUint{1};
  for (unsigned step = 1; step < n; ++step) acc = multiset_times_class(cache, acc, i);
  return acc;
}

inline ClassMultiset class_power(const FiniteGroup& G, const ClassDecomposition& dec,
                                 ClassIndex i, unsigned n) {
  ClassProductCache cache(G, dec);
  return class_power(cache, i, n);
}

/// The support shapes the analysis distinguishes.
enum class ShapeTag {
  SingleClass,      // K^n = D
  TrivialPlusClass, // K^n = {1} u D, D nontrivial
  ClassPlusInverse, // K^n = D u D^-1, D != D^-1, D != K
  SelfPlusInverse,  // K^n = K u K^-1, K != K^-1
  Other,
};

inline const char* shape_name(ShapeTag t) {
  switch (t) {
    case ShapeTag::SingleClass: return "SingleClass";
    case ShapeTag::TrivialPlusClass: return "TrivialPlusClass";
    case ShapeTag::ClassPlusInverse: return "ClassPlusInverse";
    case ShapeTag::SelfPlusInverse: return "SelfPlusInverse";
    case ShapeTag::Other: return "Other";
  }
  return "Other";
}

struct SupportShape {
  ShapeTag tag = ShapeTag::Other;
  std::vector<ClassIndex> support;
  /// The distinguished class D of the tag: the single class, the nontrivial
  /// companion, or (for the inverse-pair tags) the class of the power of the
  /// base representative. Unset (=0 with tag Other) when tag is Other.
  ClassIndex companion = 0;
};

/// Classify the support of a power of class `base`.
///
/// Precedence: SingleClass, then TrivialPlusClass, then the inverse-pair tags,
/// then Other. A real class D with support {D} is SingleClass, never an
/// inverse pair.
inline SupportShape classify_support(const ClassDecomposition& dec, ClassIndex base,
                                     const ClassMultiset& ms, ClassIndex power_class) {
  SupportShape s;
  s.support = ms.support();
  if (s.support.size() == 1) {
    s.tag = ShapeTag::SingleClass;
    s.companion = s.support[0];
    return s;
  }
  if (s.support.size() == 2) {
    ClassIndex a = s.support[0], b = s.support[1];
    if (a == 0) {
      s.tag = ShapeTag::TrivialPlusClass;
      s.companion = b;
      return s;
    }
    if (dec.inverse_class[a] == b) {
      // a < b here, so a == base or b == base means {a, b} = {base, base^-1}
      s.tag = (a == base || b == base) ? ShapeTag::SelfPlusInverse : ShapeTag::ClassPlusInverse;
      // the class containing x^n is the canonical companion
      s.companion = (power_class == a || power_class == b) ? power_class : a;
      return s;
    }
  }
  s.tag = ShapeTag::Other;
  return s;
}

/// true iff the class equals its inverse class.
inline bool is_real_class(const ClassDecomposition& dec, ClassIndex i) {
  return dec.inverse_class[i] == i;
}

}  // namespace classpower
