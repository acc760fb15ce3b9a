#pragma once
// Low-degree E_2 page of the Leray spectral sequence for the inclusion of
// the configuration space C_n(X) into X^n, Betti numbers and twisted H^1 of
// pure braid groups, and the first cohomology jump locus.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "braidcoh/exactlin.hpp"
#include "braidcoh/representation.hpp"
#include "braidcoh/space.hpp"

namespace braidcoh {

std::int64_t binom2(std::int64_t n);

/// Class of the diagonal in H^2(X_g x X_g) in the Kunneth basis: e1 = w (x) 1,
/// e2 = 1 (x) w, and block(r, s) = coefficient of alpha_r (x) alpha_s where
/// alpha_1..alpha_2g = a1, b1, ..., ag, bg.
struct DiagonalClass {
  int genus = 0;
  mpz_class e1 = 1, e2 = 1;
  IntMatrix block;
};

DiagonalClass diagonal_class(int g);

struct E2Fragment {
  std::string space;
  int n = 0;
  std::size_t rank10 = 0, rank01 = 0, rank20 = 0;
  std::vector<std::string> labels10, labels01, labels20;
  IntMatrix d2;  // rank20 x rank01, column k is d2(G_ij) for the k-th pair
};

/// Trivial integer coefficients over the compact surface of genus g >= 0.
E2Fragment e2_trivial(int g, int n);
/// Same page built from an arbitrary diagonal class (used to test the gate).
E2Fragment e2_from_diagonal(const DiagonalClass& diag, int n);
/// Sphere, compact genus, or C^*. Throws OutOfScope otherwise.
E2Fragment e2_trivial(const SpaceSpec& space, int n);

struct BettiReport {
  std::int64_t free_rank = 0;
  std::size_t rank10 = 0, rank01 = 0, rank20 = 0, d2_rank = 0;
  std::vector<mpz_class> divisors;  // nonzero elementary divisors of d2
  std::vector<mpz_class> torsion;   // torsion of coker d2
  bool divisors_all_one = true;
  bool d2_injective = false;
  std::string anchor_key;
};

/// rank H^1 of P_n(X) as rank E_2^{10} + rank ker d2. Supports the sphere,
/// compact genus g >= 1 and C^*; n >= 2.
BettiReport b1_pure_braid(const SpaceSpec& space, int n);

struct TwistedReport {
  std::int64_t h1 = 0;
  std::int64_t e2_10 = 0;  // Kunneth H^1(X^n, C_rho)
  std::int64_t e2_01 = 0;  // number of pairs with rho_i rho_j = 1
  std::int64_t e2_20 = 0;  // Kunneth H^2(X^n, C_rho)
  std::int64_t d2_rank = 0;
  std::vector<std::pair<int, int>> pairs;  // 1-indexed, i < j
  bool trivial_routed = false;             // trivial tuple answered by b1
  std::string anchor_key;
};

/// Components are characters of the factor group: Pi_g (2g generators) for
/// compact genus, Z (1 generator) for C^*, the trivial group for the sphere.
TwistedReport twisted_report(const SpaceSpec& space, int n, const CharacterTuple& rho);
std::int64_t h1_twisted_pure_braid(const SpaceSpec& space, int n, const CharacterTuple& rho);

struct Sigma1Component {
  enum class Kind { Pullback, Pair };
  Kind kind = Kind::Pair;
  int i = 0, j = 0;  // 1-indexed; j unused for Pullback
  std::string label;
  std::int64_t dim = 0;
  std::string condition;
  bool contains(const CharacterTuple& rho) const;
};

struct JumpLocusDescription {
  std::string space;
  int n = 0;
  std::string ambient;
  std::int64_t ambient_dim = 0;
  std::vector<Sigma1Component> components;
  std::string anchor_key;
};

/// Compact genus g >= 1 or C^*.
JumpLocusDescription sigma1_components(const SpaceSpec& space, int n);

struct MembershipReport {
  bool trivial = false;  // the trivial tuple, reported apart from the locus
  bool member = false;
  std::vector<std::string> components;
  std::int64_t h1 = 0;
  std::vector<std::string> anchor_keys;
};

MembershipReport sigma1_membership(const SpaceSpec& space, int n, const CharacterTuple& rho);

struct SurjectionReport {
  bool excluded = false;
  bool conditional = false;  // excluded only under the stated condition
  std::string reason;
  std::string anchor_key;
};

/// Whether the jump-locus dimension count rules out P_n(X) ->> Pi_h, h >= 2.
SurjectionReport surjection_excluded(const SpaceSpec& space, int n, int h);

/// k distinct members (sigma_N, sigma_N^-1, 1, ..., 1) of the jump locus of
/// P_n(X_1), sigma_N(a) = zeta_N, sigma_N(b) = 1, N = 3, 4, ...
std::vector<CharacterTuple> sigma1_infinite_witness(int n, std::size_t k);

struct FactQuery {
  std::int64_t value = 0;
  std::string anchor_key;
};

/// Rank of the pullback H^{2m}(Pi_g^m) -> H^{2m}(P_n(X_g)); g >= 1,
/// 2 <= m <= n. Not computed: returns the known value 0.
FactQuery pullback_top_degree(int g, int n, int m);

}  // namespace braidcoh

namespace braidcoh {

struct DiagonalGate {
  bool e_coefficients_ok = false;  // e1 = e2 = 1
  bool slant_injective = false;    // v -> block * v injective on H^1(X)
  bool d2_injective = false;       // on (g, 2)
  bool passed() const { return e_coefficients_ok && slant_injective && d2_injective; }
};

/// Self-check of a candidate diagonal class.
DiagonalGate diagonal_gate(const DiagonalClass& diag);

}  // namespace braidcoh

namespace braidcoh {

/// Independent route for C^*: C_{n+1}(C) = C x C_n(C^*), so P_n(C^*) is the
/// Artin pure braid group on n + 1 strands. The tuple pulls back to
/// A_{1,k+1} -> rho_k and A_{ij} -> 1 otherwise; H^1 comes from the Fox
/// Jacobian. Components must be characters of Z.
std::int64_t h1_cstar_via_artin(int n, const CharacterTuple& rho, const RankOptions& opt = {});

}  // namespace braidcoh
