// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its own tolerances; the oracle side is exact
// integer arithmetic throughout.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "classpower/classpower.hpp"

using namespace classpower;

namespace {

int g_failures = 0;

struct Prepared {
  std::string name;
  FiniteGroup G;
  ClassDecomposition dec;
  StructureConstants sc;
  CharacterTable table;
  std::vector<CriterionReport> reports;
};

std::vector<Prepared> prepare_catalogue() {
  std::vector<Prepared> out;
  for (const auto& entry : build_catalogue()) {
    if (entry.is_table_fixture()) continue;
    Prepared p;
    p.name = entry.name;
    BuiltEntry built = build_entry(entry);
    auto failures = check_expected_facts(entry, built);
    if (!failures.empty()) {
      for (const auto& f : failures) std::fprintf(stderr, "expected-fact failure: %s\n", f.c_str());
      std::exit(1);
    }
    p.G = std::move(built.group);
    p.dec = std::move(built.dec);
    p.sc = structure_constants(p.G, p.dec);
    p.table = compute_character_table(p.G, p.dec, p.sc);
    p.table.name = p.name;
    ScanOptions opts;
    opts.n_hi = p.G.order() <= 60 ? 8 : 6;
    p.reports = scan_group(p.G, p.dec, p.table, opts, p.name);
    out.push_back(std::move(p));
  }
  return out;
}

const Prepared& by_name(const std::vector<Prepared>& cat, const std::string& name) {
  for (const auto& p : cat)
    if (p.name == name) return p;
  std::fprintf(stderr, "missing catalogue group %s\n", name.c_str());
  std::exit(1);
}

ClassIndex class_with(const ClassDecomposition& dec, std::uint64_t order, std::uint64_t size) {
  for (ClassIndex c = 0; c < dec.count(); ++c)
    if (dec.element_order_of_class[c] == order && dec.size(c) == size) return c;
  std::fprintf(stderr, "missing class o=%llu size=%llu\n",
               static_cast<unsigned long long>(order), static_cast<unsigned long long>(size));
  std::exit(1);
}

void criterion(int number, const std::string& title, const std::function<std::string()>& run) {
  const auto start = std::chrono::steady_clock::now();
  std::string failure;
  try {
    failure = run();
  } catch (const std::exception& e) {
    failure = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (failure.empty()) {
    std::printf("[PASS] criterion %d: %s (%.2fs)\n", number, title.c_str(), secs);
  } else {
    std::printf("[FAIL] criterion %d: %s (%.2fs) -- %s\n", number, title.c_str(), secs,
                failure.c_str());
    ++g_failures;
  }
  std::fflush(stdout);
}

std::string check(bool ok, const std::string& what) { return ok ? "" : what; }

}  // namespace

int main() {
  const auto cat = prepare_catalogue();
  const CharacterTable m11 = m11_character_table();

  // 1. worked examples, exact integer facts
  criterion(1, "worked examples hold exactly", [&cat]() -> std::string {
    // (i) Z3:Z4: |K| = 3 and K^3 is a single class != K
    {
      const Prepared& p = by_name(cat, "Z3:Z4");
      ClassIndex k = class_with(p.dec, 4, 3);
      if (p.dec.size(k) != 3) return "(i) |K| != 3";
      ClassMultiset cube = class_power(p.G, p.dec, k, 3);
      auto s = cube.support();
      if (s.size() != 1 || s[0] == k) return "(i) K^3 is not a single class distinct from K";
    }
    // (ii) A4: |K| = 4, K^3 = {1} u D with D the double-transposition class
    {
      const Prepared& p = by_name(cat, "A4");
      ClassIndex k = class_with(p.dec, 3, 4);
      ClassIndex d = class_with(p.dec, 2, 3);
      ClassMultiset cube = class_power(p.G, p.dec, k, 3);
      if (cube.support() != std::vector<ClassIndex>{0, d}) return "(ii) K^3 != {1} u D";
    }
    // (iii) order-126 group: order-21 class, |K| = 6, K^3 = {1} u D, |D| = 6,
    // D of order-7 elements, <K> abelian of order 21
    {
      const Prepared& p = by_name(cat, "G126");
      ClassIndex k = class_with(p.dec, 21, 6);
      ClassMultiset cube = class_power(p.G, p.dec, k, 3);
      auto s = cube.support();
      if (s.size() != 2 || s[0] != 0) return "(iii) K^3 != {1} u D";
      if (p.dec.size(s[1]) != 6) return "(iii) |D| != 6";
      if (p.dec.element_order_of_class[s[1]] != 7) return "(iii) D not order-7 elements";
      SubgroupInfo gen = subgroup_closure(p.G, p.dec.classes[k].members);
      if (gen.order != 21 || !gen.is_abelian()) return "(iii) <K> not abelian of order 21";
    }
    // (iv) SL(2,3): order-6 class with |K| = 4, K K^-1 = {1} u D, |D| = 6,
    // and no n in [2,12] with K^n = {1} u D
    {
      const Prepared& p = by_name(cat, "SL23");
      ClassIndex k = class_with(p.dec, 6, 4);
      ClassMultiset kk = class_product(p.G, p.dec, k, p.dec.inverse_class[k]);
      auto s = kk.support();
      if (s.size() != 2 || s[0] != 0 || p.dec.size(s[1]) != 6)
        return "(iv) K K^-1 != {1} u D with |D| = 6";
      ClassProductCache cache(p.G, p.dec);
      for (unsigned n = 2; n <= 12; ++n) {
        const std::vector<ClassIndex> bad{0, s[1]};
        if (class_power(cache, k, n).support() == bad)
          return "(iv) some K^n equals {1} u D after all";
      }
    }
    // (v) M16: K = a^G, |K| = 2, K^2 = D u D^-1 with |D| = 1
    {
      const Prepared& p = by_name(cat, "M16");
      ClassIndex k = class_with(p.dec, 8, 2);
      ClassMultiset sq = class_power(p.G, p.dec, k, 2);
      ClassIndex pc = p.dec.class_of[p.G.power(p.dec.classes[k].rep, 2)];
      SupportShape shape = classify_support(p.dec, k, sq, pc);
      if (shape.tag != ShapeTag::ClassPlusInverse || p.dec.size(shape.companion) != 1)
        return "(v) K^2 != D u D^-1 with |D| = 1";
    }
    // (vi) Z2 x (Z7:Z3): order-14 class, K^2 = D u D^-1, |K| = |D| = 3
    {
      const Prepared& p = by_name(cat, "Z2xF21");
      ClassIndex k = class_with(p.dec, 14, 3);
      ClassMultiset sq = class_power(p.G, p.dec, k, 2);
      ClassIndex pc = p.dec.class_of[p.G.power(p.dec.classes[k].rep, 2)];
      SupportShape shape = classify_support(p.dec, k, sq, pc);
      if (shape.tag != ShapeTag::ClassPlusInverse || p.dec.size(shape.companion) != 3)
        return "(vi) K^2 != D u D^-1 with |D| = 3";
    }
    // (vii) AGammaL(1,8): order-7 class of size 24, K^2 = K u K^-1, |<K>| = 56
    {
      const Prepared& p = by_name(cat, "AGammaL18");
      ClassIndex k = class_with(p.dec, 7, 24);
      ClassMultiset sq = class_power(p.G, p.dec, k, 2);
      ClassIndex pc = p.dec.class_of[p.G.power(p.dec.classes[k].rep, 2)];
      if (classify_support(p.dec, k, sq, pc).tag != ShapeTag::SelfPlusInverse)
        return "(vii) K^2 != K u K^-1";
      SubgroupInfo gen = subgroup_closure(p.G, p.dec.classes[k].members);
      if (gen.order != 56) return "(vii) |<K>| != 56";
    }
    return "";
  });

  // 2. oracle / character-criterion agreement on every (class, n)
  criterion(2, "oracle and character criteria agree everywhere", [&cat]() -> std::string {
    std::size_t pairs = 0;
    for (const Prepared& p : cat)
      for (const CriterionReport& r : p.reports) {
        ++pairs;
        if (!r.agreement)
          return p.name + " class " + std::to_string(r.class_id) + " n=" + std::to_string(r.n) +
                 " disagrees";
      }
    if (pairs == 0) return "no (class, n) pairs scanned";
    return "";
  });

  // 3. multiplicity reconstruction from the table, residual < 1e-6
  criterion(3, "table multiplicities reproduce exact structure constants",
            [&cat]() -> std::string {
    for (const Prepared& p : cat) {
      const std::size_t k = p.sc.k;
      for (ClassIndex i = 0; i < k; ++i)
        for (ClassIndex j = 0; j < k; ++j)
          for (ClassIndex l = 0; l < k; ++l) {
            RoundedInteger alpha = class_multiplicity_from_table(p.table, {i, j}, l);
            if (alpha.value != static_cast<std::int64_t>(p.sc.at(i, j, l)) ||
                alpha.residual >= 1e-6)
              return p.name + " pair multiplicity mismatch";
          }
      ClassProductCache cache(p.G, p.dec);
      for (ClassIndex c = 0; c < k; ++c) {
        for (unsigned n = 2; n <= 4; ++n) {
          ClassMultiset power = class_power(cache, c, n);
          const std::vector<ClassIndex> tuple(n, c);
          for (ClassIndex l = 0; l < k; ++l) {
            RoundedInteger alpha = class_multiplicity_from_table(p.table, tuple, l);
            auto it = power.multiplicities.find(l);
            const std::int64_t expect =
                it == power.multiplicities.end() ? 0 : static_cast<std::int64_t>(it->second.as_u64());
            if (alpha.value != expect || alpha.residual >= 1e-6)
              return p.name + " power multiplicity mismatch";
          }
        }
      }
    }
    return "";
  });

  // 4. every shape hit passes all of its structural conclusions
  criterion(4, "every hit passes its structural conclusions", [&cat]() -> std::string {
    std::size_t hits = 0;
    for (const Prepared& p : cat)
      for (const CriterionReport& r : p.reports) {
        if (r.is_hit()) ++hits;
        for (const Conclusion& c : r.conclusions)
          if (!c.holds)
            return p.name + " class " + std::to_string(r.class_id) + " n=" +
                   std::to_string(r.n) + " violates " + c.name;
      }
    if (hits == 0) return "no hits found at all";
    return "";
  });

  // 5. simple-group controls: A5 and M11 have zero hits; M11's product and
  // summed identities fail with an explicit witness on every (class, n)
  criterion(5, "simple-group controls are hit-free with explicit witnesses",
            [&cat, &m11]() -> std::string {
    const Prepared& a5 = by_name(cat, "A5");
    for (const CriterionReport& r : a5.reports)
      if (r.is_hit()) return "A5 has a shape hit";
    ScanOptions opts;
    opts.n_hi = 6;
    auto reports = scan_table(m11, opts, "M11");
    if (reports.size() != 9 * 5) return "M11 scan size unexpected";
    for (const CriterionReport& r : reports) {
      if (table_scan_hit(r)) return "M11 has a table hit";
      if (r.single_class.holds || !r.single_class.witness_row)
        return "M11 product identity lacks a witness";
      if (r.class_plus_inverse.holds || !r.class_plus_inverse.summed_witness_row)
        return "M11 summed identity lacks a witness";
    }
    return "";
  });

  // 6. character-table engine validation at 1e-8 plus determinism
  criterion(6, "computed tables: orthogonality 1e-8, integer degrees, determinism",
            [&cat]() -> std::string {
    for (const Prepared& p : cat) {
      const CharacterTable& t = p.table;
      const std::size_t k = t.k;
      double degsq = 0;
      for (std::size_t r = 0; r < k; ++r) {
        if (t.degrees[r] != std::round(t.degrees[r]) || t.degrees[r] < 1)
          return p.name + " non-integer degree";
        degsq += t.degrees[r] * t.degrees[r];
      }
      if (degsq != static_cast<double>(p.G.order())) return p.name + " degree square sum";
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t s = 0; s < k; ++s) {
          Complex acc{0, 0};
          for (std::size_t l = 0; l < k; ++l)
            acc += static_cast<double>(t.class_sizes[l]) * t.values[r][l] *
                   std::conj(t.values[s][l]);
          acc /= static_cast<double>(t.group_order);
          if (std::abs(acc - (r == s ? Complex{1, 0} : Complex{0, 0})) >= 1e-8)
            return p.name + " row orthogonality residual >= 1e-8";
        }
      for (std::size_t l = 0; l < k; ++l)
        for (std::size_t m = 0; m < k; ++m) {
          Complex acc{0, 0};
          for (std::size_t r = 0; r < k; ++r)
            acc += t.values[r][l] * std::conj(t.values[r][m]);
          double expect = l == m ? static_cast<double>(t.group_order) / t.class_sizes[l] : 0.0;
          if (std::abs(acc - Complex{expect, 0}) >= 1e-8 * (1 + expect))
            return p.name + " column orthogonality residual >= 1e-8";
        }
      // central characters are eigenvalue systems of the class algebra
      for (std::size_t r = 0; r < k; ++r) {
        std::vector<Complex> omega(k);
        for (std::size_t l = 0; l < k; ++l)
          omega[l] =
              static_cast<double>(t.class_sizes[l]) * t.values[r][l] / t.degrees[r];
        for (ClassIndex i = 0; i < k; ++i)
          for (ClassIndex j = 0; j < k; ++j) {
            Complex sum{0, 0};
            for (ClassIndex l = 0; l < k; ++l)
              sum += static_cast<double>(p.sc.at(i, j, l)) * omega[l];
            if (std::abs(sum - omega[i] * omega[j]) >
                10 * t.tolerance * (1 + std::abs(omega[i] * omega[j])))
              return p.name + " central character eigen residual";
          }
      }
      // determinism for the fixed default seed
      CharacterTable again = compute_character_table(p.G, p.dec, p.sc);
      if (again.values != t.values) return p.name + " not deterministic";
    }
    return "";
  });

  // 7. property suite
  criterion(7, "algebraic property suite", [&cat]() -> std::string {
    for (const Prepared& p : cat) {
      const std::size_t k = p.dec.count();
      // mass conservation on every pairwise product
      for (ClassIndex i = 0; i < k; ++i)
        for (ClassIndex j = 0; j < k; ++j) {
          ClassMultiset ms = class_product(p.G, p.dec, i, j);
          if (!(ms.total_mass(p.dec) == BigUint{p.dec.size(i)} * BigUint{p.dec.size(j)}))
            return p.name + " mass conservation";
        }
      // coefficient identities on all structure constants
      const auto& inv = p.dec.inverse_class;
      for (ClassIndex i = 0; i < k; ++i)
        for (ClassIndex j = 0; j < k; ++j)
          for (ClassIndex l = 0; l < k; ++l) {
            if (p.sc.at(i, j, l) != p.sc.at(inv[i], inv[j], inv[l]))
              return p.name + " inverse-triple identity";
            if (p.sc.at(i, j, l) * p.dec.size(l) != p.sc.at(i, inv[l], inv[j]) * p.dec.size(j))
              return p.name + " weighted swap identity";
            if (p.sc.at(i, j, i) != p.sc.at(j, inv[i], inv[i]) ||
                p.sc.at(i, j, i) != p.sc.at(inv[j], i, i))
              return p.name + " diagonal identity";
          }
      // no nontrivial class squares to itself
      for (ClassIndex c = 1; c < k; ++c)
        if (class_power(p.G, p.dec, c, 2).support() == std::vector<ClassIndex>{c})
          return p.name + " has K^2 = K";
      // inverse-pair hits have non-real base class
      for (const CriterionReport& r : p.reports)
        if ((r.shape == ShapeTag::ClassPlusInverse || r.shape == ShapeTag::SelfPlusInverse) &&
            is_real_class(p.dec, r.class_id))
          return p.name + " real class with inverse-pair power";
      // closed commutator set forces single classes at coprime exponents
      ClassProductCache cache(p.G, p.dec);
      for (ClassIndex c = 1; c < k; ++c) {
        CommutatorStructures cs = commutator_structures(p.G, p.dec, p.dec.classes[c].rep);
        if (!cs.set_is_subgroup) continue;
        const std::uint64_t o = p.dec.element_order_of_class[c];
        for (unsigned n = 2; n <= 8; ++n) {
          if (std::gcd<std::uint64_t>(n, o) != 1) continue;
          if (class_power(cache, c, n).multiplicities.size() != 1)
            return p.name + " commutator-set implication";
        }
      }
    }
    return "";
  });

  if (g_failures) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all 7 acceptance criteria passed\n");
  return 0;
}
