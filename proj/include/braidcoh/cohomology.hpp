#pragma once

// Twisted H^0 and H^1 of finitely presented groups through Fox Jacobians,
// Kunneth combinators, surface-group profiles, character-variety dimension
// formulas and Zariski tangent spaces.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "braidcoh/exactlin.hpp"
#include "braidcoh/presentation.hpp"
#include "braidcoh/representation.hpp"

namespace braidcoh {

/// Free rank plus torsion coefficients (each >= 2, in divisibility order).
struct AbelianProfile {
  std::int64_t free_rank = 0;
  std::vector<mpz_class> torsion;

  bool operator==(const AbelianProfile&) const = default;
};

/// Exponent-sum matrix, one row per relator.
IntMatrix abelianized_relator_matrix(const Presentation& p);
AbelianProfile abelianization(const Presentation& p);

enum class RankMode { Exact, Fast };

/// Fast mode computes ranks in a prime field F_q with N | q - 1; the prime
/// is derived from `seed`. Fast ranks are lower bounds for exact ranks.
struct RankOptions {
  RankMode mode = RankMode::Exact;
  std::uint64_t seed = 0;
};

std::size_t matrix_rank(const FieldMatrix& m, const RankOptions& opt = {});

/// Block (r, j) is rho(d rel_r / d x_j); the kernel is Z^1(G, V).
FieldMatrix fox_jacobian(const Presentation& p, const LinearRep& rho);

/// dim V^G. The representation must already be validated against p.
std::size_t h0_dim(const Presentation& p, const LinearRep& rho, const RankOptions& opt = {});
/// dim Z^1 - dim B^1 with B^1 of dimension dim V - h0.
std::size_t h1_dim(const Presentation& p, const LinearRep& rho, const RankOptions& opt = {});

/// Convenience overloads; throw PreconditionError if the character or
/// representation does not satisfy the relators.
std::size_t h0_dim(const Presentation& p, const Character& chi, const RankOptions& opt = {});
std::size_t h1_dim(const Presentation& p, const Character& chi, const RankOptions& opt = {});
std::size_t h0_dim(const Presentation& p, const MatrixRep& rho, const RankOptions& opt = {});
std::size_t h1_dim(const Presentation& p, const MatrixRep& rho, const RankOptions& opt = {});

/// H^1 of a direct product from factor (h0, h1) pairs:
/// sum_i h1_i * prod_{j != i} h0_j.
std::int64_t kunneth_h1(std::span<const std::pair<std::int64_t, std::int64_t>> profiles);

struct CohomologyProfile {
  std::int64_t h0 = 0, h1 = 0;
  std::optional<std::int64_t> h2;
  std::int64_t euler = 0;
};

/// Profile of Pi_g with coefficients in C_chi, computed on the catalog
/// presentation; h2 comes from duality, h2(chi) = h0(chi^-1).
CohomologyProfile surface_profile(int g, const Character& chi, const RankOptions& opt = {});

struct CharVarDims {
  std::vector<std::int64_t> hom_dims;   // dim Hom(Pi_g, G_r) per factor
  std::vector<std::int64_t> char_dims;  // dim Char(Pi_g, G_r) per factor
  std::int64_t tangent = 0;             // dim of the tangent space of Char(Pi_g^n, G)
};

/// Closed forms at irreducible points; one rank per factor of Pi_g^n.
/// Throws RangeError for g < 2.
CharVarDims charvar_dims(int g, const std::vector<int>& ranks, MatrixFlavor flavor);

struct TangentDims {
  std::size_t z1 = 0;  // dim Z^1(G, ad rho)
  std::size_t h0 = 0;  // dim of the invariants of ad rho
  std::size_t h1 = 0;  // dim H^1(G, ad rho)
};

/// Adjoint coefficients: sl(V) for the SL flavor, End(V) for GL.
TangentDims tangent_dim_at(const Presentation& p, const MatrixRep& rho, const RankOptions& opt = {});

struct SL2SampleBatch {
  std::vector<MatrixRep> accepted;
  std::size_t rejected_reducible = 0;  // failed h0(ad) == 0
  std::size_t rejected_relator = 0;    // relator check failed (never expected)
};

/// Integer SL_2 representations of Pi_g. For each pair of handles,
/// A1, A2 are random products of elementary matrices E12(t), E21(t) with
/// 1 <= |t| <= 3, and the second handle is solved from the relator as
/// (A3, A4) = (P A2 P^-1, P A1 P^-1) with P = +-[A2, A1]^m, m in {0, 1, 2},
/// so that [A1, A2][A3, A4] = 1. An odd leftover handle gets (B, B^m).
/// Samples with h0(ad) != 0 are discarded and counted.
SL2SampleBatch sample_sl2_surface_reps(int g, std::size_t count, std::uint64_t seed,
                                       std::size_t max_attempts = 0);

}  // namespace braidcoh
