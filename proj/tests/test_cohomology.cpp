#include "doctest.h"

#include <numeric>

#include "braidcoh/cohomology.hpp"
#include "braidcoh/errors.hpp"
#include "braidcoh/random.hpp"

using namespace braidcoh;

namespace {

Character random_nontrivial(Rng& rng, std::size_t gens) {
  for (;;) {
    const auto n = static_cast<std::uint32_t>(2 + rng.below(11));
    std::vector<std::int64_t> e(gens);
    for (auto& x : e) x = static_cast<std::int64_t>(rng.below(n));
    Character c(n, e);
    if (!c.is_trivial()) return c;
  }
}

Character random_character(Rng& rng, std::size_t gens) {
  if (rng.below(4) == 0) return Character::trivial(gens);
  return random_nontrivial(rng, gens);
}

std::vector<std::int64_t> concat(const Character& a, const Character& b, std::uint32_t n) {
  auto x = a.rescaled(n).exponents();
  auto y = b.rescaled(n).exponents();
  x.insert(x.end(), y.begin(), y.end());
  return x;
}

std::uint32_t lcm(std::uint32_t a, std::uint32_t b) { return std::lcm(a, b); }

}  // namespace

TEST_CASE("h0 examples") {
  CHECK(h0_dim(surface_group(2), Character::trivial(4)) == 1);
  CHECK(h0_dim(surface_group(2), Character(3, {0, 0, 1, 0})) == 0);
  CHECK(h0_dim(free_group(1), Character(3, {1})) == 0);
}

TEST_CASE("h1 examples") {
  CHECK(h1_dim(surface_group(2), Character(5, {0, 2, 0, 0})) == 2);
  CHECK(h1_dim(surface_group(1), Character(4, {1, 3})) == 0);
  CHECK(h1_dim(surface_group(2), Character::trivial(4)) == 4);
  CHECK(h1_dim(free_group(3), Character(2, {1, 0, 0})) == 2);
}

TEST_CASE("h1 rejects unvalidated characters") {
  Presentation cyc3 = parse_presentation("gens: a\nrel: a a a");
  CHECK_THROWS_AS(h1_dim(cyc3, Character(4, {1})), PreconditionError);
  CHECK(h1_dim(cyc3, Character(3, {1})) == 0);
  CHECK(h1_dim(cyc3, Character::trivial(1)) == 0);
}

TEST_CASE("surface Fox Jacobian row is nonzero and rank one off the trivial character") {
  Character chi(3, {1, 0, 0, 0});
  FieldMatrix j = fox_jacobian(surface_group(2), LinearRep::from_character(chi));
  CHECK(j.rows() == 1);
  CHECK(j.cols() == 4);
  CHECK(exact_rank(j) == 1);
}

TEST_CASE("surface groups: h1 = 2g - 2 at nontrivial characters") {
  Rng rng(42);
  for (int g = 2; g <= 3; ++g)
    for (int trial = 0; trial < 50; ++trial)
      CHECK(h1_dim(surface_group(g), random_nontrivial(rng, 2 * g)) == static_cast<std::size_t>(2 * g - 2));
}

TEST_CASE("trivial-character h1 equals abelianization free rank") {
  for (const char* id : {"surface:1", "surface:3", "free:4", "artin_pure:4", "surface:1*free:2", "artin_pure:3*surface:2"}) {
    Presentation p = catalog(CatalogId::parse(id));
    CHECK(static_cast<std::int64_t>(h1_dim(p, Character::trivial(p.generator_count()))) == abelianization(p).free_rank);
  }
}

TEST_CASE("fast mode agrees with exact mode") {
  Rng rng(5);
  Presentation p = catalog(CatalogId::parse("surface:2*surface:1"));
  for (int trial = 0; trial < 20; ++trial) {
    Character chi = random_character(rng, p.generator_count());
    RankOptions fast{RankMode::Fast, 77u + static_cast<std::uint64_t>(trial)};
    CHECK(h1_dim(p, chi, fast) == h1_dim(p, chi));
  }
}

TEST_CASE("kunneth examples") {
  std::vector<std::pair<std::int64_t, std::int64_t>> a{{1, 4}, {1, 4}}, b{{0, 2}, {1, 4}}, c{{0, 2}, {0, 2}};
  CHECK(kunneth_h1(a) == 8);
  CHECK(kunneth_h1(b) == 2);
  CHECK(kunneth_h1(c) == 0);
}

TEST_CASE("Fox oracle agrees with Kunneth on products") {
  Rng rng(77);
  const std::vector<std::pair<const char*, const char*>> pairs{
      {"surface:2", "surface:2"}, {"surface:1", "surface:1"}, {"surface:2", "free:2"}, {"artin_pure:3", "surface:1"}};
  for (const auto& [l, r] : pairs) {
    Presentation p = catalog(CatalogId::parse(l)), q = catalog(CatalogId::parse(r));
    Presentation prod = direct_product({p, q});
    for (int trial = 0; trial < 10; ++trial) {
      Character a = random_character(rng, p.generator_count());
      Character b = random_character(rng, q.generator_count());
      const std::uint32_t n = lcm(a.order(), b.order());
      Character ab(n, concat(a, b, n));
      std::vector<std::pair<std::int64_t, std::int64_t>> prof{
          {static_cast<std::int64_t>(h0_dim(p, a)), static_cast<std::int64_t>(h1_dim(p, a))},
          {static_cast<std::int64_t>(h0_dim(q, b)), static_cast<std::int64_t>(h1_dim(q, b))}};
      CHECK(static_cast<std::int64_t>(h1_dim(prod, ab)) == kunneth_h1(prof));
    }
  }
}

TEST_CASE("surface profiles") {
  auto t = surface_profile(2, Character::trivial(4));
  CHECK(t.h0 == 1);
  CHECK(t.h1 == 4);
  CHECK(t.h2 == 1);
  CHECK(t.euler == -2);
  auto nt = surface_profile(2, Character(3, {0, 1, 0, 0}));
  CHECK(nt.h0 == 0);
  CHECK(nt.h1 == 2);
  CHECK(nt.h2 == 0);
  CHECK(nt.euler == -2);
  auto one = surface_profile(1, Character(4, {1, 1}));
  CHECK(one.h0 == 0);
  CHECK(one.h1 == 0);
  CHECK(one.h2 == 0);
  CHECK(one.euler == 0);
}

TEST_CASE("surface euler characteristic is independent of the character") {
  Rng rng(101);
  for (int g = 1; g <= 3; ++g)
    for (int trial = 0; trial < 50; ++trial) {
      auto prof = surface_profile(g, random_character(rng, 2 * g));
      CHECK(prof.euler == 2 - 2 * g);
      CHECK(prof.euler == prof.h0 - prof.h1 + *prof.h2);
    }
}

TEST_CASE("character variety dimensions") {
  auto sl2 = charvar_dims(2, {2}, MatrixFlavor::SL);
  CHECK(sl2.hom_dims == std::vector<std::int64_t>{9});
  CHECK(sl2.char_dims == std::vector<std::int64_t>{6});
  CHECK(sl2.tangent == 6);
  CHECK(charvar_dims(2, {3}, MatrixFlavor::SL).char_dims == std::vector<std::int64_t>{16});
  CHECK(charvar_dims(2, {2}, MatrixFlavor::GL).tangent == 10);
  CHECK(charvar_dims(3, {2, 3}, MatrixFlavor::SL).tangent == 2 * 3 * 2 + 2 * 8 * 2);
  CHECK_THROWS_AS(charvar_dims(1, {2}, MatrixFlavor::SL), RangeError);
}

TEST_CASE("tangent spaces at trivial and free representations") {
  const auto& q = CyclotomicField::get(1);
  MatrixRep triv;
  for (int i = 0; i < 4; ++i) triv.images.push_back(FieldMatrix::identity(q, 2));
  auto t = tangent_dim_at(surface_group(2), triv);
  CHECK(t.z1 == 12);
  CHECK(t.h1 == 12);
  CHECK(t.h0 == 3);

  MatrixRep f;
  f.images = {FieldMatrix::from_rationals(2, 2, {1, 1, 0, 1}), FieldMatrix::from_rationals(2, 2, {2, 1, 1, 1})};
  CHECK(tangent_dim_at(free_group(2), f).z1 == 6);
}

TEST_CASE("sampled irreducible SL2 representations have tangent dimension 6") {
  SL2SampleBatch batch = sample_sl2_surface_reps(2, 25, 2024);
  REQUIRE(batch.accepted.size() == 25);
  CHECK(batch.rejected_relator == 0);
  Presentation s2 = surface_group(2);
  for (const auto& rho : batch.accepted) {
    CHECK(validate_matrix_rep(s2, rho).ok);
    auto t = tangent_dim_at(s2, rho);
    CHECK(t.h0 == 0);
    CHECK(t.h1 == 6);
  }
}

TEST_CASE("sampler is deterministic in the seed") {
  auto a = sample_sl2_surface_reps(2, 5, 9), b = sample_sl2_surface_reps(2, 5, 9);
  REQUIRE(a.accepted.size() == b.accepted.size());
  for (std::size_t i = 0; i < a.accepted.size(); ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(a.accepted[i].images[j] == b.accepted[i].images[j]);
}
