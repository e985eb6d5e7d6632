#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "classpower/conjugacy.hpp"
#include "classpower/group.hpp"

namespace classpower {

// Series that run longer than this indicate a bug, not a big group.
constexpr int kSeriesStepLimit = 64;

struct SubgroupInfo {
  std::vector<ElementIndex> members;  // sorted, contains 0
  std::uint64_t order = 0;
  bool is_normal = false;             // normal in the ambient group
  std::optional<int> derived_length;  // absent = not solvable within the step limit
  bool is_nilpotent = false;

  bool is_trivial() const { return order == 1; }
  bool is_abelian() const { return derived_length.has_value() && *derived_length <= 1; }
  bool is_solvable() const { return derived_length.has_value(); }

  bool contains(ElementIndex e) const {
    return std::binary_search(members.begin(), members.end(), e);
  }
};

namespace detail {

/// Closure of a seed set under multiplication (inverses follow by finiteness).
inline std::vector<ElementIndex> closure_members(const FiniteGroup& G,
                                                 const std::vector<ElementIndex>& seed) {
  std::vector<bool> in(G.order(), false);
  std::vector<ElementIndex> elems{0};
  in[0] = true;
  std::vector<ElementIndex> gens;
  for (ElementIndex s : seed) {
    if (!in[s]) {
      in[s] = true;
      elems.push_back(s);
    }
    gens.push_back(s);
  }
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (ElementIndex g : gens) {
      ElementIndex p = G.mult(elems[k], g);
      if (!in[p]) {
        in[p] = true;
        elems.push_back(p);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

inline bool is_normal_set(const FiniteGroup& G, const std::vector<ElementIndex>& members) {
  std::vector<bool> in(G.order(), false);
  for (ElementIndex e : members) in[e] = true;
  for (ElementIndex g : G.generator_indices())
    for (ElementIndex e : members)
      if (!in[G.conj(e, g)]) return false;
  return true;
}

/// Subgroup generated by all commutators [a, b] with a in A, b in B.
inline std::vector<ElementIndex> commutator_subgroup_members(
    const FiniteGroup& G, const std::vector<ElementIndex>& A,
    const std::vector<ElementIndex>& B) {
  std::set<ElementIndex> comms;
  for (ElementIndex a : A)
    for (ElementIndex b : B) comms.insert(G.commutator(a, b));
  return closure_members(G, {comms.begin(), comms.end()});
}

}  // namespace detail

inline std::vector<SubgroupInfo> derived_series(const FiniteGroup& G, const SubgroupInfo& H);
inline std::vector<SubgroupInfo> lower_central_series(const FiniteGroup& G, const SubgroupInfo& H);

/// Wrap a closed member set as SubgroupInfo, computing the structural flags.
inline SubgroupInfo make_subgroup(const FiniteGroup& G, std::vector<ElementIndex> members) {
  SubgroupInfo H;
  H.members = std::move(members);
  H.order = H.members.size();
  if (G.order() % H.order != 0) throw InternalError("subgroup order violates Lagrange");
  H.is_normal = detail::is_normal_set(G, H.members);

  // derived series without recursing through make_subgroup
  std::vector<ElementIndex> cur = H.members;
  int steps = 0;
  while (cur.size() > 1) {
    std::vector<ElementIndex> next = detail::commutator_subgroup_members(G, cur, cur);
    if (next.size() == cur.size()) break;  // perfect, not solvable
    cur = std::move(next);
    if (++steps > kSeriesStepLimit) throw InternalError("derived series exceeded step limit");
  }
  if (cur.size() == 1) H.derived_length = steps;

  std::vector<ElementIndex> gamma = H.members;
  steps = 0;
  while (gamma.size() > 1) {
    std::vector<ElementIndex> next = detail::commutator_subgroup_members(G, H.members, gamma);
    if (next.size() == gamma.size()) break;
    gamma = std::move(next);
    if (++steps > kSeriesStepLimit) throw InternalError("lower central series exceeded step limit");
  }
  H.is_nilpotent = gamma.size() == 1;
  return H;
}

/// Smallest subgroup of G containing the seed elements.
inline SubgroupInfo subgroup_closure(const FiniteGroup& G, const std::vector<ElementIndex>& seed) {
  if (seed.empty()) throw Error("subgroup_closure: empty seed");
  return make_subgroup(G, detail::closure_members(G, seed));
}

inline SubgroupInfo trivial_subgroup(const FiniteGroup& G) { return make_subgroup(G, {0}); }

inline SubgroupInfo whole_group(const FiniteGroup& G) {
  std::vector<ElementIndex> all(G.order());
  std::iota(all.begin(), all.end(), 0u);
  return make_subgroup(G, std::move(all));
}

/// All elements commuting with element i.
inline SubgroupInfo centralizer(const FiniteGroup& G, ElementIndex i) {
  std::vector<ElementIndex> members;
  for (ElementIndex j = 0; j < G.order(); ++j)
    if (G.mult(j, i) == G.mult(i, j)) members.push_back(j);
  return make_subgroup(G, std::move(members));
}

struct CommutatorStructures {
  std::vector<ElementIndex> commutator_set;  // { x^-1 * x^g : g in G }, sorted
  SubgroupInfo commutator_subgroup;          // its closure, [x, G]
  bool set_is_subgroup = false;              // raw set already equals the closure
};

inline CommutatorStructures commutator_structures(const FiniteGroup& G,
                                                  const ClassDecomposition& dec,
                                                  ElementIndex i) {
  CommutatorStructures out;
  const auto& cls = dec.classes[dec.class_of[i]];
  const ElementIndex xinv = G.inv(i);
  std::set<ElementIndex> set;
  for (ElementIndex y : cls.members) set.insert(G.mult(xinv, y));
  out.commutator_set.assign(set.begin(), set.end());
  out.commutator_subgroup = subgroup_closure(G, out.commutator_set);
  out.set_is_subgroup = out.commutator_set == out.commutator_subgroup.members;
  return out;
}

/// H >= H' >= H'' >= ... until stabilization; solvable iff the last term is trivial.
inline std::vector<SubgroupInfo> derived_series(const FiniteGroup& G, const SubgroupInfo& H) {
  std::vector<SubgroupInfo> series{H};
  int steps = 0;
  while (true) {
    const auto& cur = series.back().members;
    std::vector<ElementIndex> next = detail::commutator_subgroup_members(G, cur, cur);
    if (next.size() == cur.size()) break;
    series.push_back(make_subgroup(G, std::move(next)));
    if (++steps > kSeriesStepLimit) throw InternalError("derived series exceeded step limit");
  }
  return series;
}

/// gamma_1 = H, gamma_{k+1} = [H, gamma_k] until stabilization.
inline std::vector<SubgroupInfo> lower_central_series(const FiniteGroup& G,
                                                      const SubgroupInfo& H) {
  std::vector<SubgroupInfo> series{H};
  int steps = 0;
  while (true) {
    std::vector<ElementIndex> next =
        detail::commutator_subgroup_members(G, H.members, series.back().members);
    if (next.size() == series.back().members.size()) break;
    series.push_back(make_subgroup(G, std::move(next)));
    if (++steps > kSeriesStepLimit) throw InternalError("lower central series exceeded step limit");
  }
  return series;
}

/// Largest normal subgroup whose order is coprime to every prime in pi.
///
/// Computed as the join of the normal closures of all conjugacy classes whose
/// closure is a pi'-group; every normal pi'-subgroup is a union of such classes,
/// so the join is the full pi'-core.
inline SubgroupInfo largest_normal_pi_prime(const FiniteGroup& G, const ClassDecomposition& dec,
                                            const std::vector<std::uint64_t>& pi) {
  if (pi.empty()) throw Error("largest_normal_pi_prime: empty prime set");
  auto is_pi_prime_order = [&pi](std::uint64_t n) {
    for (std::uint64_t p : pi)
      if (n % p == 0) return false;
    return true;
  };
  std::vector<ElementIndex> pool{0};
  for (ClassIndex c = 1; c < dec.count(); ++c) {
    SubgroupInfo ncl = subgroup_closure(G, dec.classes[c].members);
    if (is_pi_prime_order(ncl.order)) {
      pool.insert(pool.end(), dec.classes[c].members.begin(), dec.classes[c].members.end());
    }
  }
  SubgroupInfo core = subgroup_closure(G, pool);
  if (!core.is_normal || !is_pi_prime_order(core.order))
    throw InternalError("pi'-core construction violated its contract");
  return core;
}

/// G/N realized as a permutation group acting on the cosets of N.
///
/// Coset 0 is N itself and cosets are indexed by their minimal member, so the
/// quotient's element indexing is again deterministic.
inline FiniteGroup quotient_group(const FiniteGroup& G, const SubgroupInfo& N) {
  if (!N.is_normal) throw NotNormal("quotient by a non-normal subgroup");
  const std::size_t n = G.order();
  const std::uint32_t kUnassigned = 0xffffffffu;
  std::vector<std::uint32_t> coset_of(n, kUnassigned);
  std::vector<ElementIndex> coset_rep;
  for (ElementIndex e = 0; e < n; ++e) {
    if (coset_of[e] != kUnassigned) continue;
    std::uint32_t id = static_cast<std::uint32_t>(coset_rep.size());
    coset_rep.push_back(e);
    for (ElementIndex m : N.members) coset_of[G.mult(e, m)] = id;
  }
  const std::size_t q = coset_rep.size();
  if (q > 0xffffu) throw CapExceeded("quotient degree exceeds permutation point range");

  std::vector<Perm> gens;
  for (ElementIndex g : G.generator_indices()) {
    std::vector<Point> img(q);
    for (std::size_t c = 0; c < q; ++c)
      img[c] = static_cast<Point>(coset_of[G.mult(coset_rep[c], g)]);
    gens.push_back(Perm(std::move(img)));
  }
  FiniteGroup Q = enumerate_group(std::move(gens), q + 1);
  if (Q.order() * N.order != G.order()) throw InternalError("quotient order mismatch");
  return Q;
}

}  // namespace classpower
