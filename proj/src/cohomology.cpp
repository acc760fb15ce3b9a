#include "braidcoh/cohomology.hpp"

#include "braidcoh/errors.hpp"
#include "braidcoh/random.hpp"

namespace braidcoh {

IntMatrix abelianized_relator_matrix(const Presentation& p) {
  IntMatrix m(p.relators.size(), p.generator_count());
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (const auto& l : p.relators[r].letters()) m(r, l.gen) += l.sign;
  return m;
}

AbelianProfile abelianization(const Presentation& p) {
  const IntMatrix m = abelianized_relator_matrix(p);
  DivisorProfile d = elementary_divisor_profile(m);
  return {static_cast<std::int64_t>(p.generator_count() - d.rank), d.torsion};
}

std::size_t matrix_rank(const FieldMatrix& m, const RankOptions& opt) {
  if (opt.mode == RankMode::Fast) return modular_rank(m, PrimeFieldEmbedding(m.field().order(), opt.seed));
  return exact_rank(m);
}

FieldMatrix fox_jacobian(const Presentation& p, const LinearRep& rho) {
  if (rho.generator_count() != p.generator_count())
    throw AlphabetMismatch("representation and presentation have different generator counts");
  const std::size_t d = rho.dim(), k = p.generator_count();
  FieldMatrix jac(rho.field(), p.relators.size() * d, k * d);
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (std::uint32_t j = 0; j < k; ++j) {
      GroupRingElement dr = fox_derivative(p.relators[r], Generator{j});
      if (dr.is_zero()) continue;
      FieldMatrix block = evaluate(dr, rho);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) jac.set(r * d + a, j * d + b, block(a, b));
    }
  return jac;
}

std::size_t h0_dim(const Presentation& p, const LinearRep& rho, const RankOptions& opt) {
  const std::size_t d = rho.dim(), k = p.generator_count();
  if (k == 0) return d;
  FieldMatrix stacked(rho.field(), k * d, d);
  const FieldMatrix id = FieldMatrix::identity(rho.field(), d);
  for (std::size_t j = 0; j < k; ++j) {
    FieldMatrix diff = rho.image(j) - id;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) stacked.set(j * d + a, b, diff(a, b));
  }
  return d - matrix_rank(stacked, opt);
}

std::size_t h1_dim(const Presentation& p, const LinearRep& rho, const RankOptions& opt) {
  const std::size_t d = rho.dim(), k = p.generator_count();
  const std::size_t z1 = k * d - (p.relators.empty() ? 0 : matrix_rank(fox_jacobian(p, rho), opt));
  const std::size_t b1 = d - h0_dim(p, rho, opt);
  return z1 - b1;
}

namespace {

void require_valid(const ValidationResult& v) {
  if (!v.ok) throw PreconditionError("representation does not satisfy the relators: " + v.reason);
}

}  // namespace

std::size_t h0_dim(const Presentation& p, const Character& chi, const RankOptions& opt) {
  require_valid(validate_character(p, chi));
  return h0_dim(p, LinearRep::from_character(chi), opt);
}

std::size_t h1_dim(const Presentation& p, const Character& chi, const RankOptions& opt) {
  require_valid(validate_character(p, chi));
  return h1_dim(p, LinearRep::from_character(chi), opt);
}

std::size_t h0_dim(const Presentation& p, const MatrixRep& rho, const RankOptions& opt) {
  require_valid(validate_matrix_rep(p, rho));
  return h0_dim(p, LinearRep::from_matrix(rho), opt);
}

std::size_t h1_dim(const Presentation& p, const MatrixRep& rho, const RankOptions& opt) {
  require_valid(validate_matrix_rep(p, rho));
  return h1_dim(p, LinearRep::from_matrix(rho), opt);
}

std::int64_t kunneth_h1(std::span<const std::pair<std::int64_t, std::int64_t>> profiles) {
  if (profiles.empty()) throw PreconditionError("Kunneth formula needs at least one factor");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    std::int64_t term = profiles[i].second;
    for (std::size_t j = 0; j < profiles.size(); ++j)
      if (j != i) term *= profiles[j].first;
    total += term;
  }
  return total;
}

CohomologyProfile surface_profile(int g, const Character& chi, const RankOptions& opt) {
  if (g < 1) throw RangeError("surface profile needs genus >= 1");
  const Presentation p = surface_group(g);
  CohomologyProfile out;
  out.h0 = static_cast<std::int64_t>(h0_dim(p, chi, opt));
  out.h1 = static_cast<std::int64_t>(h1_dim(p, chi, opt));
  out.h2 = static_cast<std::int64_t>(h0_dim(p, chi.inverse(), opt));
  out.euler = out.h0 - out.h1 + *out.h2;
  return out;
}

CharVarDims charvar_dims(int g, const std::vector<int>& ranks, MatrixFlavor flavor) {
  if (g < 2) throw RangeError("character-variety dimensions need genus >= 2");
  if (ranks.empty()) throw RangeError("at least one factor rank is required");
  CharVarDims out;
  const std::int64_t n = static_cast<std::int64_t>(ranks.size());
  std::int64_t sl_sum = 0;
  for (int r : ranks) {
    if (r < 1) throw RangeError("ranks must be positive");
    const std::int64_t s = static_cast<std::int64_t>(r) * r - 1;
    const std::int64_t sl_char = 2 * s * (g - 1);
    sl_sum += sl_char;
    if (flavor == MatrixFlavor::SL) {
      out.hom_dims.push_back(s * (2 * g - 1));
      out.char_dims.push_back(sl_char);
    } else {
      // The determinant contributes a copy of Char(Pi_g, C*) of dimension 2g.
      out.char_dims.push_back(2 * g + sl_char);
      out.hom_dims.push_back(2 * g + sl_char + s);
    }
  }
  out.tangent = flavor == MatrixFlavor::SL ? sl_sum : 2 * g * n + sl_sum;
  return out;
}

TangentDims tangent_dim_at(const Presentation& p, const MatrixRep& rho, const RankOptions& opt) {
  require_valid(validate_matrix_rep(p, rho));
  const LinearRep ad = LinearRep::adjoint_of(rho, rho.flavor);
  TangentDims out;
  const std::size_t d = ad.dim(), k = p.generator_count();
  out.z1 = k * d - (p.relators.empty() ? 0 : matrix_rank(fox_jacobian(p, ad), opt));
  out.h0 = h0_dim(p, ad, opt);
  out.h1 = out.z1 - (d - out.h0);
  return out;
}

namespace {

FieldMatrix int_matrix2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return FieldMatrix::from_rationals(2, 2, {mpq_class(a), mpq_class(b), mpq_class(c), mpq_class(d)});
}

FieldMatrix random_elementary_product(Rng& rng) {
  const int factors = static_cast<int>(rng.between(2, 5));
  FieldMatrix m = FieldMatrix::identity(CyclotomicField::get(1), 2);
  bool upper = rng.coin();
  for (int f = 0; f < factors; ++f) {
    std::int64_t t = rng.between(1, 3) * (rng.coin() ? 1 : -1);
    m = m * (upper ? int_matrix2(1, t, 0, 1) : int_matrix2(1, 0, t, 1));
    upper = !upper;
  }
  return m;
}

FieldMatrix power(const FieldMatrix& m, int e) {
  FieldMatrix out = FieldMatrix::identity(m.field(), m.rows());
  for (int i = 0; i < e; ++i) out = out * m;
  return out;
}

}  // namespace

SL2SampleBatch sample_sl2_surface_reps(int g, std::size_t count, std::uint64_t seed, std::size_t max_attempts) {
  if (g < 1) throw RangeError("surface genus must be >= 1");
  if (max_attempts == 0) max_attempts = 20 * count + 100;
  const Presentation p = surface_group(g);
  const auto& q = CyclotomicField::get(1);
  Rng rng(seed);
  SL2SampleBatch batch;
  for (std::size_t attempt = 0; attempt < max_attempts && batch.accepted.size() < count; ++attempt) {
    MatrixRep rho;
    rho.flavor = MatrixFlavor::SL;
    rho.adjoint = true;
    int handle = 0;
    for (; handle + 1 < g; handle += 2) {
      FieldMatrix a1 = random_elementary_product(rng), a2 = random_elementary_product(rng);
      FieldMatrix c = a2 * a1 * a2.inverse() * a1.inverse();  // [A2, A1] = [A1, A2]^-1
      FieldMatrix pm = power(c, static_cast<int>(rng.between(0, 2)));
      if (rng.coin()) pm = pm.scaled(Cyc(q, -1));
      FieldMatrix pinv = pm.inverse();
      rho.images.push_back(a1);
      rho.images.push_back(a2);
      rho.images.push_back(pm * a2 * pinv);
      rho.images.push_back(pm * a1 * pinv);
    }
    if (handle < g) {
      FieldMatrix b = random_elementary_product(rng);
      rho.images.push_back(b);
      rho.images.push_back(power(b, static_cast<int>(rng.between(0, 2))));
    }
    if (!validate_matrix_rep(p, rho).ok) {
      ++batch.rejected_relator;
      continue;
    }
    if (h0_dim(p, LinearRep::adjoint_of(rho, MatrixFlavor::SL)) != 0) {
      ++batch.rejected_reducible;
      continue;
    }
    batch.accepted.push_back(std::move(rho));
  }
  return batch;
}

}  // namespace braidcoh
