#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "classpower/class_algebra.hpp"
#include "classpower/conjugacy.hpp"
#include "classpower/errors.hpp"
#include "classpower/group.hpp"
#include "classpower/linalg.hpp"

namespace classpower {

constexpr double kComputedTableTolerance = 1e-8;
constexpr double kImportedTableTolerance = 1e-6;
constexpr std::uint64_t kDefaultSeed = 0xC1A55;
constexpr std::size_t kClassCountLimit = 64;

/// Ordinary character table: one row per irreducible, one column per class,
/// column 0 the trivial class. Values are complex doubles; every verdict that
/// matters is cross-checked against exact integer class arithmetic elsewhere,
/// so the single tolerance here only serves the character-side criteria.
struct CharacterTable {
  std::string name;
  std::optional<std::string> provenance;  // free-form note carried by fixtures
  std::size_t k = 0;
  std::uint64_t group_order = 0;
  std::vector<std::vector<Complex>> values;        // [row][class]
  std::vector<double> degrees;                     // chi(1), snapped to integers
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::uint64_t> element_orders;
  std::map<std::uint64_t, std::vector<ClassIndex>> power_maps;  // prime -> map
  std::vector<ClassIndex> inverse_classes;
  double tolerance = kComputedTableTolerance;

  const std::vector<ClassIndex>& power_map(std::uint64_t p) const {
    auto it = power_maps.find(p);
    if (it == power_maps.end()) throw MissingPowerMap(p);
    return it->second;
  }
};

/// Class of x^n obtained by composing prime power maps; composition order is
/// immaterial and covered by a property test.
inline ClassIndex class_of_power(const CharacterTable& t, ClassIndex l, std::uint64_t n) {
  if (n == 0) throw Error("class_of_power: n must be >= 1");
  ClassIndex cur = l;
  for (auto [p, e] : factorize(n)) {
    const auto& pm = t.power_map(p);
    for (unsigned step = 0; step < e; ++step) cur = pm[cur];
  }
  return cur;
}

/// Multiplication-by-class-sum matrices M_i with M_i[l][j] = c[i][j][l].
/// They commute pairwise because the center of the group algebra does.
inline std::vector<std::vector<std::int64_t>> class_matrices(const StructureConstants& sc) {
  const std::size_t k = sc.k;
  std::vector<std::vector<std::int64_t>> mats(k, std::vector<std::int64_t>(k * k, 0));
  for (ClassIndex i = 0; i < k; ++i)
    for (ClassIndex j = 0; j < k; ++j)
      for (ClassIndex l = 0; l < k; ++l)
        mats[i][l * k + j] = static_cast<std::int64_t>(sc.at(i, j, l));
  return mats;
}

namespace detail {

/// Throws ValidationFailed naming the first violated invariant.
inline void validate_table(const CharacterTable& t) {
  const double tol = t.tolerance;
  if (t.k == 0) throw ValidationFailed("table has no classes");
  if (t.values.size() != t.k) throw ValidationFailed("row count differs from class count");
  for (const auto& row : t.values)
    if (row.size() != t.k) throw ValidationFailed("ragged value rows");
  if (t.class_sizes.size() != t.k || t.element_orders.size() != t.k ||
      t.degrees.size() != t.k || t.inverse_classes.size() != t.k)
    throw ValidationFailed("metadata length differs from class count");
  if (t.class_sizes[0] != 1) throw ValidationFailed("column 0 is not the trivial class");
  if (t.element_orders[0] != 1) throw ValidationFailed("column 0 has element order != 1");

  std::uint64_t mass = 0;
  for (std::uint64_t s : t.class_sizes) mass += s;
  if (mass != t.group_order) throw ValidationFailed("class sizes do not sum to the group order");

  double degsq = 0;
  for (std::size_t r = 0; r < t.k; ++r) {
    double d = t.degrees[r];
    if (!(d > 0) || std::abs(d - std::round(d)) > tol * (1 + d))
      throw ValidationFailed("degree is not a positive near-integer");
    if (std::abs(t.values[r][0] - Complex{d, 0}) > tol * (1 + d))
      throw ValidationFailed("column 0 differs from the degree");
    degsq += d * d;
  }
  if (std::abs(degsq - static_cast<double>(t.group_order)) >
      tol * (1 + static_cast<double>(t.group_order)))
    throw ValidationFailed("degree squares do not sum to the group order");

  for (std::size_t r = 0; r < t.k; ++r) {
    for (std::size_t s = r; s < t.k; ++s) {
      Complex acc{0, 0};
      for (std::size_t l = 0; l < t.k; ++l)
        acc += static_cast<double>(t.class_sizes[l]) * t.values[r][l] *
               std::conj(t.values[s][l]);
      acc /= static_cast<double>(t.group_order);
      Complex expect = r == s ? Complex{1, 0} : Complex{0, 0};
      if (std::abs(acc - expect) > tol) throw ValidationFailed("row orthogonality");
    }
  }
  for (std::size_t l = 0; l < t.k; ++l) {
    for (std::size_t m = l; m < t.k; ++m) {
      Complex acc{0, 0};
      for (std::size_t r = 0; r < t.k; ++r) acc += t.values[r][l] * std::conj(t.values[r][m]);
      double expect = l == m ? static_cast<double>(t.group_order) / t.class_sizes[l] : 0.0;
      if (std::abs(acc - Complex{expect, 0}) > tol * (1 + expect))
        throw ValidationFailed("column orthogonality");
    }
  }

  for (const auto& [p, pm] : t.power_maps) {
    if (pm.size() != t.k) throw ValidationFailed("power map length differs from class count");
    if (pm[0] != 0) throw ValidationFailed("power map moves the trivial class");
    for (std::size_t l = 0; l < t.k; ++l) {
      if (pm[l] >= t.k) throw ValidationFailed("power map image out of range");
      std::uint64_t o = t.element_orders[l];
      if (t.element_orders[pm[l]] != o / std::gcd(o, p))
        throw ValidationFailed("power map inconsistent with element orders");
    }
  }

  for (std::size_t l = 0; l < t.k; ++l) {
    ClassIndex m = t.inverse_classes[l];
    if (m >= t.k || t.inverse_classes[m] != l)
      throw ValidationFailed("inverse-class map is not an involution");
    for (std::size_t r = 0; r < t.k; ++r)
      if (std::abs(t.values[r][m] - std::conj(t.values[r][l])) > 10 * tol * (1 + t.degrees[r]))
        throw ValidationFailed("inverse class columns are not conjugate");
  }
}

/// Locate each column's inverse class by conjugate-value matching; column
/// orthogonality makes the match unique when it exists.
inline std::vector<ClassIndex> inverse_classes_from_values(
    const std::vector<std::vector<Complex>>& values, double tol) {
  const std::size_t k = values.size();
  std::vector<ClassIndex> inv(k, 0);
  for (std::size_t l = 0; l < k; ++l) {
    bool found = false;
    for (std::size_t m = 0; m < k; ++m) {
      bool match = true;
      for (std::size_t r = 0; r < k && match; ++r)
        match = std::abs(values[r][m] - std::conj(values[r][l])) <=
                10 * tol * (1 + std::abs(values[r][0]));
      if (match) {
        if (found) throw ValidationFailed("ambiguous inverse class for column " + std::to_string(l));
        inv[l] = static_cast<ClassIndex>(m);
        found = true;
      }
    }
    if (!found) throw ValidationFailed("no inverse class for column " + std::to_string(l));
  }
  return inv;
}

inline void sort_rows_canonically(CharacterTable& t) {
  std::vector<std::size_t> order(t.k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto key = [&t](std::size_t r) {
    std::vector<std::int64_t> k;
    k.reserve(2 * t.k + 1);
    k.push_back(std::llround(t.degrees[r] * 1e6));
    for (const Complex& z : t.values[r]) k.push_back(std::llround(z.real() * 1e6));
    // conjugate rows share all real parts; imaginary parts break the tie
    for (const Complex& z : t.values[r]) k.push_back(std::llround(z.imag() * 1e6));
    return k;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&key](std::size_t a, std::size_t b) { return key(a) < key(b); });
  std::vector<std::vector<Complex>> values;
  std::vector<double> degrees;
  for (std::size_t r : order) {
    values.push_back(std::move(t.values[r]));
    degrees.push_back(t.degrees[r]);
  }
  t.values = std::move(values);
  t.degrees = std::move(degrees);
}

}  // namespace detail

/// Character table by simultaneous eigendecomposition of the class matrices.
///
/// A random real combination of the class matrices is diagonalized; with all
/// eigenvalues simple, its eigenvectors are the central-character vectors
/// shared by the whole commuting family. The combination is redrawn (up to 20
/// times) whenever the spectrum is degenerate.
inline CharacterTable compute_character_table(const FiniteGroup& G, const ClassDecomposition& dec,
                                              const StructureConstants& sc,
                                              std::uint64_t seed = kDefaultSeed) {
  const std::size_t k = sc.k;
  if (k > kClassCountLimit)
    throw Error("class count " + std::to_string(k) + " exceeds table limit");

  std::mt19937_64 rng(seed);
  auto draw = [&rng]() {
    // uniform in [1, 2), derived from raw engine output so every platform
    // produces identical streams
    return 1.0 + static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };

  std::vector<std::vector<Complex>> omegas;
  for (int attempt = 0; attempt < 20 && omegas.empty(); ++attempt) {
    std::vector<double> t(k);
    for (double& x : t) x = draw();

    // B(j, l) = sum_i t_i c[i][j][l]; right eigenvectors of B are the
    // central-character vectors with eigenvalue sum_i t_i omega(i)
    CMatrix b(k);
    for (ClassIndex i = 0; i < k; ++i)
      for (ClassIndex j = 0; j < k; ++j)
        for (ClassIndex l = 0; l < k; ++l)
          b(j, l) += t[i] * static_cast<double>(sc.at(i, j, l));

    std::vector<Complex> eig = linalg::eigenvalues(b);
    double scale = 1.0;
    for (const Complex& z : eig) scale = std::max(scale, std::abs(z));
    bool separated = true;
    for (std::size_t r = 0; r < k && separated; ++r)
      for (std::size_t s = r + 1; s < k && separated; ++s)
        separated = std::abs(eig[r] - eig[s]) > 1e-6 * scale;
    if (!separated) continue;

    omegas.reserve(k);
    for (const Complex& lambda : eig) {
      std::vector<Complex> v = linalg::eigenvector(b, lambda);
      if (std::abs(v[0]) < 1e-12)
        throw InternalError("central character vector vanishes at the trivial class");
      Complex v0 = v[0];
      for (Complex& z : v) z /= v0;
      omegas.push_back(std::move(v));
    }
  }
  if (omegas.empty())
    throw DegenerateSpectrum("no simple spectrum after 20 random combinations");

  CharacterTable t;
  t.k = k;
  t.group_order = G.order();
  t.tolerance = kComputedTableTolerance;
  t.class_sizes.resize(k);
  t.element_orders.resize(k);
  for (ClassIndex c = 0; c < k; ++c) {
    t.class_sizes[c] = dec.size(c);
    t.element_orders[c] = dec.element_order_of_class[c];
  }

  t.values.assign(k, std::vector<Complex>(k));
  t.degrees.resize(k);
  for (std::size_t r = 0; r < k; ++r) {
    const auto& omega = omegas[r];
    double s = 0;
    for (std::size_t l = 0; l < k; ++l) s += std::norm(omega[l]) / t.class_sizes[l];
    double degree = std::sqrt(static_cast<double>(G.order()) / s);
    double snapped = std::round(degree);
    if (!(snapped >= 1) || std::abs(degree - snapped) > t.tolerance * (1 + degree))
      throw ValidationFailed("computed degree is not a positive near-integer");
    t.degrees[r] = snapped;
    for (std::size_t l = 0; l < k; ++l)
      t.values[r][l] = snapped * omega[l] / static_cast<double>(t.class_sizes[l]);
    t.values[r][0] = Complex{snapped, 0};
  }

  detail::sort_rows_canonically(t);

  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    std::vector<ClassIndex> pm(k);
    for (ClassIndex c = 0; c < k; ++c)
      pm[c] = dec.class_of[G.power(dec.classes[c].rep, p)];
    t.power_maps[p] = std::move(pm);
  }
  t.inverse_classes = dec.inverse_class;

  detail::validate_table(t);
  return t;
}

// ---------------------------------------------------------------------------
// JSON import / export
//
// Schema: { "name": str, "order": int, "class_sizes": [int],
//           "element_orders": [int], "power_maps": { "<prime>": [int] },
//           "irreducibles": [ [ [re, im], ... ] ] }
// Column 0 must be the trivial class. An optional "provenance" string is
// carried through round trips.
// ---------------------------------------------------------------------------

inline CharacterTable import_table_from_json(const nlohmann::json& doc) {
  CharacterTable t;
  try {
    t.name = doc.at("name").get<std::string>();
    if (doc.contains("provenance")) t.provenance = doc.at("provenance").get<std::string>();
    t.group_order = doc.at("order").get<std::uint64_t>();
    t.class_sizes = doc.at("class_sizes").get<std::vector<std::uint64_t>>();
    t.element_orders = doc.at("element_orders").get<std::vector<std::uint64_t>>();
    t.k = t.class_sizes.size();
    for (const auto& [key, val] : doc.at("power_maps").items()) {
      std::uint64_t p = 0;
      try {
        p = std::stoull(key);
      } catch (const std::exception&) {
        throw ParseError("power map key '" + key + "' is not a prime");
      }
      t.power_maps[p] = val.get<std::vector<ClassIndex>>();
    }
    for (const auto& row : doc.at("irreducibles")) {
      std::vector<Complex> r;
      for (const auto& pair : row) {
        if (!pair.is_array() || pair.size() != 2)
          throw ParseError("character value is not an [re, im] pair");
        r.emplace_back(pair[0].get<double>(), pair[1].get<double>());
      }
      t.values.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("character table JSON: ") + e.what());
  }
  t.tolerance = kImportedTableTolerance;
  t.degrees.reserve(t.k);
  for (const auto& row : t.values) {
    if (row.empty()) throw ParseError("empty irreducible row");
    t.degrees.push_back(std::round(row[0].real()));
  }
  if (t.values.size() != t.k)
    throw ValidationFailed("irreducible count differs from class count");
  t.inverse_classes = detail::inverse_classes_from_values(t.values, t.tolerance);
  detail::validate_table(t);
  return t;
}

inline CharacterTable import_table_from_string(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("character table JSON does not parse");
  return import_table_from_json(doc);
}

inline CharacterTable import_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open character table file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return import_table_from_string(buf.str());
}

inline nlohmann::ordered_json export_table_to_json(const CharacterTable& t) {
  nlohmann::ordered_json doc;
  doc["name"] = t.name;
  if (t.provenance) doc["provenance"] = *t.provenance;
  doc["order"] = t.group_order;
  doc["class_sizes"] = t.class_sizes;
  doc["element_orders"] = t.element_orders;
  nlohmann::ordered_json pm = nlohmann::ordered_json::object();
  for (const auto& [p, map] : t.power_maps) pm[std::to_string(p)] = map;
  doc["power_maps"] = std::move(pm);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : t.values) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const Complex& z : row) r.push_back({z.real(), z.imag()});
    rows.push_back(std::move(r));
  }
  doc["irreducibles"] = std::move(rows);
  return doc;
}

inline std::string export_table_to_string(const CharacterTable& t) {
  return export_table_to_json(t).dump(2) + "\n";
}

inline void export_table(const CharacterTable& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write character table file " + path);
  out << export_table_to_string(t);
}

/// Row-permutation-tolerant comparison of two tables over the same classes.
inline bool tables_match(const CharacterTable& a, const CharacterTable& b, double tol) {
  if (a.k != b.k || a.group_order != b.group_order) return false;
  if (a.class_sizes != b.class_sizes) return false;
  std::vector<bool> used(b.k, false);
  for (std::size_t r = 0; r < a.k; ++r) {
    bool matched = false;
    for (std::size_t s = 0; s < b.k && !matched; ++s) {
      if (used[s]) continue;
      bool ok = true;
      for (std::size_t l = 0; l < a.k && ok; ++l)
        ok = std::abs(a.values[r][l] - b.values[s][l]) <= tol * (1 + std::abs(a.values[r][0]));
      if (ok) {
        used[s] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace classpower
