#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "classpower/catalogue.hpp"
#include "classpower/errors.hpp"
#include "classpower/group.hpp"
#include "classpower/presentation.hpp"

namespace classpower {

/// A named group source: explicit generators or a presentation.
///
/// File schema, one of:
///   { "name": str, "degree": int, "generators": [[images...], ...] }
///   { "name": str, "presentation":
///       { "generators": [names], "relators": [words], "order": int } }
struct GroupInput {
  std::string name;
  std::variant<GeneratorConstruction, Presentation> construction;
};

inline GroupInput group_input_from_json(const nlohmann::json& doc) {
  GroupInput in;
  try {
    in.name = doc.at("name").get<std::string>();
    if (doc.contains("presentation")) {
      const auto& p = doc.at("presentation");
      Presentation pres;
      pres.name = in.name;
      pres.generators = p.at("generators").get<std::vector<std::string>>();
      pres.relators = p.at("relators").get<std::vector<std::string>>();
      pres.order = p.at("order").get<std::uint64_t>();
      in.construction = std::move(pres);
    } else {
      GeneratorConstruction gc;
      gc.degree = doc.at("degree").get<std::size_t>();
      for (const auto& g : doc.at("generators"))
        gc.generators.push_back(g.get<std::vector<Point>>());
      in.construction = std::move(gc);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("group input JSON: ") + e.what());
  }
  return in;
}

inline GroupInput load_group_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open group file " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  nlohmann::json doc = nlohmann::json::parse(buf.str(), nullptr, false);
  if (doc.is_discarded()) throw ParseError("group file " + path + " does not parse as JSON");
  return group_input_from_json(doc);
}

inline nlohmann::ordered_json group_input_to_json(const GroupInput& in) {
  nlohmann::ordered_json doc;
  doc["name"] = in.name;
  if (const auto* gc = std::get_if<GeneratorConstruction>(&in.construction)) {
    doc["degree"] = gc->degree;
    doc["generators"] = gc->generators;
  } else {
    const auto& p = std::get<Presentation>(in.construction);
    doc["presentation"] = {{"generators", p.generators},
                           {"relators", p.relators},
                           {"order", p.order}};
  }
  return doc;
}

/// Catalogue entries export to the same group-input schema.
inline nlohmann::ordered_json catalogue_entry_to_group_json(const CatalogueEntry& entry) {
  if (entry.is_table_fixture())
    throw Error("entry '" + entry.name + "' is a table fixture; it has no group input form");
  GroupInput in;
  in.name = entry.name;
  if (const auto* gc = std::get_if<GeneratorConstruction>(&entry.construction))
    in.construction = *gc;
  else
    in.construction = std::get<Presentation>(entry.construction);
  return group_input_to_json(in);
}

namespace detail {

inline std::uint64_t fnv1a_bytes(std::uint64_t h, const void* data, std::size_t len) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t generator_cache_key(const std::vector<Perm>& gens, std::uint64_t cap) {
  std::uint64_t h = 1469598103934665603ull;
  h = fnv1a_bytes(h, &cap, sizeof(cap));
  for (const Perm& g : gens) {
    std::uint64_t d = g.degree();
    h = fnv1a_bytes(h, &d, sizeof(d));
    h = fnv1a_bytes(h, g.images().data(), g.images().size() * sizeof(Point));
  }
  return h;
}

}  // namespace detail

/// enumerate_group with an optional on-disk memo, controlled by the
/// CLASSPOWER_CACHE_DIR environment variable. The cached file preserves the
/// exact element indexing so class ids stay reproducible across runs.
inline FiniteGroup enumerate_group_cached(std::vector<Perm> generators,
                                          std::uint64_t cap = kDefaultGroupCap) {
  const char* dir = std::getenv("CLASSPOWER_CACHE_DIR");
  if (!dir || !*dir) return enumerate_group(std::move(generators), cap);

  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  const std::uint64_t key = detail::generator_cache_key(generators, cap);
  std::ostringstream name;
  name << "group-" << std::hex << key << ".json";
  const std::filesystem::path path = std::filesystem::path(dir) / name.str();

  if (std::filesystem::exists(path)) {
    std::ifstream f(path);
    std::stringstream buf;
    buf << f.rdbuf();
    nlohmann::json doc = nlohmann::json::parse(buf.str(), nullptr, false);
    if (!doc.is_discarded()) {
      try {
        std::vector<Perm> elements;
        for (const auto& img : doc.at("elements"))
          elements.push_back(Perm(img.get<std::vector<Point>>()));
        auto gen_idx = doc.at("generators").get<std::vector<ElementIndex>>();
        return finite_group_from_elements(std::move(elements), std::move(gen_idx));
      } catch (const std::exception&) {
        // fall through to a fresh enumeration on any cache damage
      }
    }
  }

  FiniteGroup G = enumerate_group(generators, cap);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  nlohmann::ordered_json doc;
  doc["generators"] = G.generator_indices();
  nlohmann::ordered_json elems = nlohmann::ordered_json::array();
  for (const Perm& p : G.elements()) elems.push_back(p.images());
  doc["elements"] = std::move(elems);
  std::ofstream out(path);
  if (out) out << doc.dump() << "\n";
  return G;
}

/// Build a loaded group input (generators or presentation).
inline FiniteGroup build_group_input(const GroupInput& in, std::uint64_t cap = kDefaultGroupCap) {
  if (const auto* gc = std::get_if<GeneratorConstruction>(&in.construction)) {
    std::vector<Perm> gens;
    for (const auto& img : gc->generators) {
      if (img.size() != gc->degree) throw DegreeMismatch("generator image list length != degree");
      gens.push_back(Perm(img));
    }
    return enumerate_group_cached(std::move(gens), cap);
  }
  const auto& pres = std::get<Presentation>(in.construction);
  return enumerate_group_cached(regular_representation(pres), cap);
}

}  // namespace classpower
