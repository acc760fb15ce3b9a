#pragma once

// Finitely presented groups: the catalog of surface, free, pure Artin braid
// and direct-product groups, and the presentation text format.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "braidcoh/words.hpp"

namespace braidcoh {

struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;
  /// Provenance string carried from a `source:` line, empty for catalog groups.
  std::string source;
  std::vector<std::string> warnings;

  std::size_t generator_count() const { return alphabet.size(); }

  /// Throws if a relator is empty or uses a generator outside the alphabet.
  void check() const;
  /// Same alphabet and relators; provenance and warnings are ignored.
  bool same_group_data(const Presentation& other) const {
    return alphabet == other.alphabet && relators == other.relators;
  }
};

/// Identifier for catalog groups: `surface:g`, `free:k`, `artin_pure:n`,
/// and products written with `*`, e.g. `surface:1*surface:1`.
struct CatalogId {
  enum class Kind { Surface, Free, ArtinPure, Product };
  Kind kind = Kind::Free;
  int param = 0;
  std::vector<CatalogId> factors;

  static CatalogId surface(int g) { return {Kind::Surface, g, {}}; }
  static CatalogId free(int k) { return {Kind::Free, k, {}}; }
  static CatalogId artin_pure(int n) { return {Kind::ArtinPure, n, {}}; }
  static CatalogId product(std::vector<CatalogId> f) { return {Kind::Product, 0, std::move(f)}; }

  static CatalogId parse(std::string_view text);
  std::string str() const;
};

Presentation catalog(const CatalogId& id);

/// Pi_g = < a1,b1,...,ag,bg | [a1,b1]...[ag,bg] > (generators `a`, `b` for g = 1).
/// g = 0 yields the trivial presentation with a warning.
Presentation surface_group(int g);
Presentation free_group(int k);
/// Pure braid group of the plane on generators A{i}_{j}, 1 <= i < j <= n.
Presentation artin_pure_braid(int n);
/// Disjoint union of alphabets (names suffixed `_k` for factor k) with every
/// cross commutator appended.
Presentation direct_product(const std::vector<Presentation>& factors);

Presentation parse_presentation(std::string_view text);
std::string serialize_presentation(const Presentation& p);
/// Reads a presentation file; its `source:` line becomes the provenance.
Presentation load_external(const std::filesystem::path& path);

}  // namespace braidcoh
