#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "classpower/criteria.hpp"

namespace classpower {

struct ScanOptions {
  unsigned n_lo = 2;
  unsigned n_hi = 6;
};

/// Everything the scanner learned about one (class, n) pair.
///
/// `agreement` is the oracle/character reconciliation verdict: each character
/// criterion must say yes exactly when the brute-force shape says it should.
/// A false value is the most important finding the scanner can produce, since
/// it means a table is corrupt or a tolerance misfired.
struct CriterionReport {
  std::string group;
  ClassIndex class_id = 0;
  std::uint64_t class_size = 0;
  std::uint64_t element_order = 0;
  unsigned n = 0;

  bool oracle_available = false;
  ShapeTag shape = ShapeTag::Other;
  std::vector<ClassIndex> support;
  ClassIndex companion = 0;
  // exact K^n multiset, multiplicities as decimal strings (they outgrow 64 bits)
  std::vector<std::pair<ClassIndex, std::string>> multiset;

  CharVerdict single_class;                                      // chi(x)^n test
  std::vector<std::pair<ClassIndex, CharVerdict>> trivial_plus;  // per candidate D
  CharVerdict class_plus_inverse;                                // D = class of x^n
  std::optional<ThreeRouteResult> three_route;

  std::vector<Conclusion> conclusions;
  bool agreement = true;

  bool all_conclusions_hold() const {
    for (const Conclusion& c : conclusions)
      if (!c.holds) return false;
    return true;
  }

  bool is_hit() const {
    return shape == ShapeTag::SingleClass || shape == ShapeTag::TrivialPlusClass ||
           shape == ShapeTag::ClassPlusInverse || shape == ShapeTag::SelfPlusInverse;
  }

  bool is_finding() const { return !agreement || !all_conclusions_hold(); }
};

namespace detail {

/// Candidate companions for the trivial-plus-class criterion. When x^n != 1
/// the companion can only be the class of x^n; when x^n = 1 any nontrivial
/// support class is possible, so all of them are tested.
inline std::vector<ClassIndex> trivial_plus_candidates(const ClassMultiset& power,
                                                       ClassIndex power_class) {
  std::vector<ClassIndex> out;
  if (power_class != 0) {
    out.push_back(power_class);
    return out;
  }
  for (const auto& [c, mult] : power.multiplicities)
    if (c != 0) out.push_back(c);
  return out;
}

/// A non-integral multiplicity means the table is damaged; the scan reports
/// that as a failed verdict (a finding) instead of crashing.
template <typename Fn>
CharVerdict guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const NonIntegral& e) {
    CharVerdict v;
    v.holds = false;
    v.mass_ok = false;
    v.note = std::string("non-integral multiplicity: ") + e.what();
    return v;
  }
}

}  // namespace detail

/// Full oracle + character scan of one internally built group.
inline std::vector<CriterionReport> scan_group(const FiniteGroup& G,
                                               const ClassDecomposition& dec,
                                               const CharacterTable& table,
                                               const ScanOptions& opts,
                                               const std::string& group_name) {
  std::vector<CriterionReport> reports;
  ClassProductCache cache(G, dec);

  for (ClassIndex c = 1; c < dec.count(); ++c) {
    ClassMultiset acc;
    acc.multiplicities[c] = BigUint{1};
    for (unsigned n = 2; n <= opts.n_hi; ++n) {
      acc = multiset_times_class(cache, acc, c);
      if (n < opts.n_lo) continue;

      CriterionReport rep;
      rep.group = group_name;
      rep.class_id = c;
      rep.class_size = dec.size(c);
      rep.element_order = dec.element_order_of_class[c];
      rep.n = n;
      rep.oracle_available = true;

      const ElementIndex x = dec.classes[c].rep;
      const ClassIndex power_class = dec.class_of[G.power(x, n)];
      SupportShape shape = classify_support(dec, c, acc, power_class);
      rep.shape = shape.tag;
      rep.support = shape.support;
      rep.companion = shape.companion;
      for (const auto& [cls, mult] : acc.multiplicities)
        rep.multiset.emplace_back(cls, mult.to_string());

      rep.single_class = single_class_power_criterion(table, c, n);
      rep.class_plus_inverse =
          detail::guarded([&] { return class_plus_inverse_criterion(table, c, n); });

      std::vector<ClassIndex> candidates = detail::trivial_plus_candidates(acc, power_class);
      if (shape.tag == ShapeTag::TrivialPlusClass &&
          std::find(candidates.begin(), candidates.end(), shape.companion) == candidates.end())
        candidates.push_back(shape.companion);
      for (ClassIndex d : candidates)
        rep.trivial_plus.emplace_back(
            d, detail::guarded([&] { return trivial_plus_class_criterion(table, c, d, n); }));

      rep.three_route = single_class_equivalence_check(G, dec, cache, table, c, n);

      rep.agreement = rep.single_class.holds == (shape.tag == ShapeTag::SingleClass);
      const bool inverse_pair =
          shape.tag == ShapeTag::ClassPlusInverse || shape.tag == ShapeTag::SelfPlusInverse;
      rep.agreement = rep.agreement && rep.class_plus_inverse.holds == inverse_pair;
      for (const auto& [d, verdict] : rep.trivial_plus) {
        const bool expect =
            shape.tag == ShapeTag::TrivialPlusClass && d == shape.companion;
        rep.agreement = rep.agreement && verdict.holds == expect;
      }
      rep.agreement = rep.agreement && rep.three_route->all_equal;

      switch (shape.tag) {
        case ShapeTag::SingleClass:
          rep.conclusions = verify_single_class_conclusions(G, dec, cache, c, n, opts.n_hi);
          break;
        case ShapeTag::TrivialPlusClass:
          rep.conclusions = verify_trivial_plus_class_conclusions(G, dec, cache, table, c, n,
                                                                  shape.companion);
          break;
        case ShapeTag::ClassPlusInverse:
          rep.conclusions = verify_class_plus_inverse_conclusions(G, dec, c, shape.companion);
          break;
        case ShapeTag::SelfPlusInverse: {
          rep.conclusions = verify_class_plus_inverse_conclusions(G, dec, c, shape.companion);
          if (n == 2) {
            auto extra = verify_self_plus_inverse_conclusions(G, dec, c);
            rep.conclusions.insert(rep.conclusions.end(), extra.begin(), extra.end());
          }
          break;
        }
        case ShapeTag::Other:
          break;
      }

      reports.push_back(std::move(rep));
    }
  }
  return reports;
}

/// Character-criteria-only scan of an imported table (no group available).
inline std::vector<CriterionReport> scan_table(const CharacterTable& table,
                                               const ScanOptions& opts,
                                               const std::string& group_name) {
  std::vector<CriterionReport> reports;
  for (ClassIndex c = 1; c < table.k; ++c) {
    for (unsigned n = opts.n_lo; n <= opts.n_hi; ++n) {
      CriterionReport rep;
      rep.group = group_name;
      rep.class_id = c;
      rep.class_size = table.class_sizes[c];
      rep.element_order = table.element_orders[c];
      rep.n = n;
      rep.oracle_available = false;
      rep.shape = ShapeTag::Other;

      rep.single_class = single_class_power_criterion(table, c, n);
      rep.class_plus_inverse =
          detail::guarded([&] { return class_plus_inverse_criterion(table, c, n); });
      const ClassIndex power_class = class_of_power(table, c, n);
      if (power_class != 0) {
        rep.trivial_plus.emplace_back(power_class, detail::guarded([&] {
                                        return trivial_plus_class_criterion(table, c,
                                                                            power_class, n);
                                      }));
      } else {
        for (ClassIndex d = 1; d < table.k; ++d)
          rep.trivial_plus.emplace_back(
              d, detail::guarded([&] { return trivial_plus_class_criterion(table, c, d, n); }));
      }
      reports.push_back(std::move(rep));
    }
  }
  return reports;
}

/// Table-only hit: some character criterion says a studied shape occurs.
inline bool table_scan_hit(const CriterionReport& rep) {
  if (rep.single_class.holds || rep.class_plus_inverse.holds) return true;
  for (const auto& [d, verdict] : rep.trivial_plus)
    if (verdict.holds) return true;
  return false;
}

}  // namespace classpower
