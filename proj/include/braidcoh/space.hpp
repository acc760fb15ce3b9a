#pragma once
// The surfaces (and higher-dimensional manifolds) whose configuration
// spaces the library reasons about.

#include <optional>
#include <string>
#include <string_view>

#include "braidcoh/cohomology.hpp"

namespace braidcoh {

struct SpaceSpec {
  enum class Kind { Sphere, Plane, Disk, CStar, CompactGenus, NoncompactHyperbolic, HigherDim };

  Kind kind = Kind::Sphere;
  int genus = 0;      // CompactGenus
  int free_rank = 0;  // NoncompactHyperbolic: rank of the free fundamental group
  // HigherDim
  int real_dim = 0;
  int complex_dim = 0;       // 0 when the manifold is not complex
  bool projective = false;   // compact projective manifold
  bool trivial_base = false; // pi_1 is the trivial group
  AbelianProfile base;       // H_1 of pi_1

  static SpaceSpec sphere() { return {}; }
  static SpaceSpec plane() { return with(Kind::Plane); }
  static SpaceSpec disk() { return with(Kind::Disk); }
  static SpaceSpec c_star() { return with(Kind::CStar); }
  /// g = 0 gives the sphere.
  static SpaceSpec compact_genus(int g);
  static SpaceSpec hyperbolic(int k);
  static SpaceSpec higher(int real_dim, AbelianProfile base, bool projective = false, int complex_dim = 0,
                          bool trivial_base = false);

  /// Genus of a compact surface: 0 for the sphere, g for CompactGenus.
  std::optional<int> compact_genus_value() const;

  /// Grammar: `sphere`, `plane`, `disk`, `c-star`, `genus:<g>`,
  /// `hyperbolic:<k>`, `higher:<d>[:projective][:complex=<c>][:b1=<r>]
  /// [:torsion=<t1>,<t2>...][:trivial]`.
  static SpaceSpec parse(std::string_view text);
  std::string str() const;

 private:
  static SpaceSpec with(Kind k) {
    SpaceSpec s;
    s.kind = k;
    return s;
  }
};

}  // namespace braidcoh
