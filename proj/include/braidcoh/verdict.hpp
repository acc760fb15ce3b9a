#pragma once
// Kahler verdicts for braid groups of surfaces with a rule trace, the
// structure of braid groups of higher-dimensional manifolds, and the
// characteristic-p variant.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidcoh/cohomology.hpp"
#include "braidcoh/space.hpp"

namespace braidcoh {

enum class VerdictStatus { Kahler, NotKahler, OutOfScope, NotInClassP };
enum class BraidFlavor { Pure, Full };

std::string to_string(VerdictStatus s);
std::string to_string(BraidFlavor f);
BraidFlavor parse_flavor(std::string_view text);

struct TraceStep {
  std::string rule;    // R1..R11
  std::string anchor;  // statement text from the anchor table
  std::string text;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::OutOfScope;
  std::vector<TraceStep> trace;
  /// Computed data cited by the trace, e.g. "b1" -> {3}, "sigma1_dims" -> {2, 2, 2}.
  std::map<std::string, std::vector<std::int64_t>> witnesses;
};

/// Ids of rules that obstruct (as opposed to constructing a Kahler manifold).
bool is_obstruction_rule(const std::string& rule);

Verdict kahler_verdict(const SpaceSpec& space, int n, BraidFlavor flavor);

/// Odd first Betti number rules out compact Kahler manifolds.
std::optional<TraceStep> parity_obstruction(const AbelianProfile& h1);

struct TorusComponent {
  std::int64_t dim = 0;
  bool untranslated = true;
};

struct BeauvilleResult {
  bool obstructed = false;
  std::vector<int> forced_genera;  // one per untranslated component of dim 2g >= 4
  std::vector<TraceStep> trace;
};

BeauvilleResult beauville_obstruction(const std::vector<TorusComponent>& components);

struct WreathFacts {
  std::string pure_iso, full_iso;
  AbelianProfile pure_h1;             // n copies of H_1 of the base
  AbelianProfile full_coinvariants;   // S_n coinvariants of pure_h1
  AbelianProfile full_h1;             // coinvariants plus Z/2 from S_n (n >= 2)
  std::optional<bool> projective;     // present when the construction applies
  bool full_is_finite = false;        // trivial base: B_n(X) = S_n
  std::vector<TraceStep> trace;
};

/// Higher-dimensional spaces only; throws OutOfScope otherwise.
WreathFacts wreath_facts(const SpaceSpec& space, int n);

/// Coinvariants of A^n under the permutation action, by Smith normal form.
AbelianProfile sn_coinvariants(const AbelianProfile& factor, int n);

struct CharPGroup {
  enum class Kind { ArtinPure, SpherePure, SurfacePure };
  Kind kind = Kind::ArtinPure;
  int n = 2;
  int genus = 0;  // SurfacePure
  /// `artin_pure:<n>`, `sphere_pure:<n>`, `surface_pure:<g>:<n>`.
  static CharPGroup parse(std::string_view text);
  std::string str() const;
};

/// Throws PreconditionError when p is not prime.
Verdict charp_verdict(const CharPGroup& group, std::uint64_t p);

}  // namespace braidcoh
