#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "classpower/group.hpp"

namespace classpower {

using ClassIndex = std::uint32_t;

/// Partition of a group into conjugacy classes.
///
/// Class 0 is the trivial class; the rest are ordered by (size ascending,
/// smallest member index ascending) so class ids are reproducible.
struct ClassDecomposition {
  struct ConjClass {
    ElementIndex rep;
    std::vector<ElementIndex> members;  // sorted
    std::uint64_t size;
  };

  std::vector<ConjClass> classes;
  std::vector<ClassIndex> class_of;            // element index -> class id
  std::vector<ClassIndex> inverse_class;       // class id -> class id, an involution
  std::vector<std::uint64_t> element_order_of_class;

  std::size_t count() const { return classes.size(); }
  std::uint64_t size(ClassIndex c) const { return classes[c].size; }
  bool is_real(ClassIndex c) const { return inverse_class[c] == c; }
};

inline ClassDecomposition conjugacy_classes(const FiniteGroup& G) {
  const std::size_t n = G.order();
  ClassDecomposition dec;
  dec.class_of.assign(n, 0);

  std::vector<bool> seen(n, false);
  std::vector<std::vector<ElementIndex>> orbits;
  for (ElementIndex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    // conjugation orbit; conjugating by generators suffices for closure
    std::vector<ElementIndex> orbit{start};
    seen[start] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (ElementIndex g : G.generator_indices()) {
        ElementIndex y = G.conj(orbit[k], g);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) {
    if (a[0] == 0 || b[0] == 0) return a[0] == 0;  // trivial class first
    if (a.size() != b.size()) return a.size() < b.size();
    return a[0] < b[0];
  });

  dec.classes.reserve(orbits.size());
  for (auto& orbit : orbits) {
    ClassIndex id = static_cast<ClassIndex>(dec.classes.size());
    for (ElementIndex e : orbit) dec.class_of[e] = id;
    dec.classes.push_back({orbit[0], std::move(orbit), 0});
    dec.classes.back().size = dec.classes.back().members.size();
  }

  dec.inverse_class.resize(dec.classes.size());
  dec.element_order_of_class.resize(dec.classes.size());
  for (ClassIndex c = 0; c < dec.classes.size(); ++c) {
    dec.inverse_class[c] = dec.class_of[G.inv(dec.classes[c].rep)];
    dec.element_order_of_class[c] = element_order(G, dec.classes[c].rep);
  }
  return dec;
}

}  // namespace classpower
