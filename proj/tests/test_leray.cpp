#include "doctest.h"

#include <set>

#include "braidcoh/cohomology.hpp"
#include "braidcoh/errors.hpp"
#include "braidcoh/leray.hpp"
#include "braidcoh/random.hpp"

using namespace braidcoh;

namespace {

Character random_factor_char(Rng& rng, std::size_t gens, bool allow_trivial = true) {
  for (;;) {
    const auto n = static_cast<std::uint32_t>(1 + rng.below(12));
    std::vector<std::int64_t> e(gens);
    for (auto& x : e) x = static_cast<std::int64_t>(rng.below(n));
    Character c(n, e);
    if (allow_trivial || !c.is_trivial()) return c;
  }
}

// Tuples biased toward the jump locus: some components are forced to be
// inverse to or equal to others, or trivial.
CharacterTuple random_tuple(Rng& rng, int n, std::size_t gens) {
  std::vector<Character> comps;
  for (int i = 0; i < n; ++i) {
    const auto roll = rng.below(5);
    if (i > 0 && roll == 0) comps.push_back(comps[rng.below(static_cast<std::uint64_t>(i))].inverse());
    else if (roll == 1) comps.push_back(Character::trivial(gens));
    else comps.push_back(random_factor_char(rng, gens));
  }
  return CharacterTuple(std::move(comps));
}

Presentation power(const Presentation& p, int n) {
  return direct_product(std::vector<Presentation>(static_cast<std::size_t>(n), p));
}

}  // namespace

TEST_CASE("diagonal classes") {
  DiagonalClass d0 = diagonal_class(0);
  CHECK(d0.e1 == 1);
  CHECK(d0.e2 == 1);
  CHECK(d0.block.rows() == 0);
  for (int g = 1; g <= 3; ++g) {
    DiagonalClass d = diagonal_class(g);
    CHECK(d.block.rows() == static_cast<std::size_t>(2 * g));
    CHECK(determinant(d.block) == 1);
    IntMatrix neg = d.block;
    for (std::size_t r = 0; r < neg.rows(); ++r) neg.negate_row(r);
    CHECK(d.block.transpose() == neg);
    CHECK(diagonal_gate(d).passed());
  }
}

TEST_CASE("diagonal gate rejects singular blocks") {
  DiagonalClass zero = diagonal_class(1);
  zero.block = IntMatrix(2, 2);
  DiagonalGate gz = diagonal_gate(zero);
  CHECK_FALSE(gz.passed());
  CHECK_FALSE(gz.slant_injective);
  // A single column always survives through its e-part.
  CHECK(gz.d2_injective);

  DiagonalClass rank_one = diagonal_class(1);
  rank_one.block = IntMatrix(2, 2, {1, 1, 1, 1});
  CHECK_FALSE(diagonal_gate(rank_one).passed());

  DiagonalClass half = diagonal_class(2);
  half.block(2, 3) = 0;
  half.block(3, 2) = 0;
  CHECK_FALSE(diagonal_gate(half).passed());
}

TEST_CASE("E2 ranks") {
  E2Fragment a = e2_trivial(1, 2);
  CHECK(a.rank10 == 4);
  CHECK(a.rank01 == 1);
  CHECK(a.rank20 == 6);
  CHECK(smith_normal_form(a.d2).divisors.size() == 1);

  E2Fragment b = e2_trivial(0, 3);
  CHECK(b.rank10 == 0);
  CHECK(b.rank01 == 3);
  CHECK(b.rank20 == 3);
  CHECK(b.d2 == IntMatrix(3, 3, {1, 1, 0, 1, 0, 1, 0, 1, 1}));

  E2Fragment c = e2_trivial(2, 3);
  CHECK(c.rank10 == 12);
  CHECK(c.rank01 == 3);
  CHECK(c.rank20 == 51);
  CHECK(c.d2.rows() == 51);
  CHECK(c.d2.cols() == 3);
  CHECK(c.labels01 == std::vector<std::string>{"G_12", "G_13", "G_23"});

  E2Fragment s = e2_trivial(SpaceSpec::c_star(), 4);
  CHECK(s.rank10 == 4);
  CHECK(s.rank01 == 6);
  CHECK(s.rank20 == 6);
  CHECK(smith_normal_form(s.d2).divisors.empty());
  CHECK_THROWS_AS(e2_trivial(SpaceSpec::plane(), 3), OutOfScope);
}

TEST_CASE("d2 is injective with unit divisors for positive genus") {
  for (int g = 1; g <= 3; ++g)
    for (int n = 2; n <= 5; ++n) {
      BettiReport r = b1_pure_braid(SpaceSpec::compact_genus(g), n);
      CHECK(r.free_rank == 2 * g * n);
      CHECK(r.d2_injective);
      CHECK(r.divisors_all_one);
    }
}

TEST_CASE("b1 examples") {
  BettiReport g2 = b1_pure_braid(SpaceSpec::compact_genus(2), 3);
  CHECK(g2.free_rank == 12);
  CHECK(g2.divisors_all_one);

  BettiReport s4 = b1_pure_braid(SpaceSpec::sphere(), 4);
  CHECK(s4.free_rank == 2);
  CHECK(s4.torsion == std::vector<mpz_class>{2});
  CHECK(b1_pure_braid(SpaceSpec::sphere(), 2).free_rank == 0);
  for (int n = 3; n <= 6; ++n) {
    BettiReport s = b1_pure_braid(SpaceSpec::sphere(), n);
    CHECK(s.free_rank == binom2(n) - n);
    CHECK(s.d2_rank == static_cast<std::size_t>(n));
    CHECK(s.torsion == std::vector<mpz_class>{2});
  }

  CHECK(b1_pure_braid(SpaceSpec::c_star(), 2).free_rank == 3);
  for (int n = 2; n <= 6; ++n) CHECK(b1_pure_braid(SpaceSpec::c_star(), n).free_rank == n + binom2(n));

  CHECK_THROWS_AS(b1_pure_braid(SpaceSpec::plane(), 3), OutOfScope);
  CHECK_THROWS_AS(b1_pure_braid(SpaceSpec::compact_genus(1), 1), RangeError);
}

TEST_CASE("twisted examples") {
  const SpaceSpec torus = SpaceSpec::compact_genus(1), g2 = SpaceSpec::compact_genus(2);
  Character sigma(5, {1, 2});
  CHECK(h1_twisted_pure_braid(torus, 3, CharacterTuple({sigma, sigma.inverse(), sigma})) == 2);
  Character r1(3, {1, 0, 2, 0});
  CHECK(h1_twisted_pure_braid(g2, 2, CharacterTuple({r1, Character::trivial(4)})) == 2);
  CHECK(h1_twisted_pure_braid(g2, 2, CharacterTuple({r1, r1.inverse()})) == 0);
  CHECK(h1_twisted_pure_braid(SpaceSpec::c_star(), 2, CharacterTuple({Character::trivial(1), Character(4, {1})})) == 0);
  auto t = twisted_report(torus, 3, CharacterTuple({sigma, sigma.inverse(), sigma}));
  CHECK(t.pairs == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  CHECK(t.d2_rank == 0);
}

TEST_CASE("twisted input validation") {
  const SpaceSpec torus = SpaceSpec::compact_genus(1);
  Character s(3, {1, 0});
  CHECK_THROWS_AS(h1_twisted_pure_braid(torus, 3, CharacterTuple({s, s})), PreconditionError);
  CHECK_THROWS_AS(h1_twisted_pure_braid(torus, 2, CharacterTuple({s, Character(3, {1})})), Error);
  CHECK_THROWS_AS(h1_twisted_pure_braid(SpaceSpec::disk(), 2, CharacterTuple({s, s})), OutOfScope);
}

TEST_CASE("trivial tuple agrees with b1") {
  const std::vector<SpaceSpec> spaces{SpaceSpec::sphere(), SpaceSpec::compact_genus(1), SpaceSpec::compact_genus(2),
                                      SpaceSpec::compact_genus(3), SpaceSpec::c_star()};
  for (const auto& sp : spaces)
    for (int n = 2; n <= 6; ++n) {
      const std::size_t gens = sp.kind == SpaceSpec::Kind::CStar ? 1 : static_cast<std::size_t>(2 * sp.genus);
      auto t = twisted_report(sp, n, CharacterTuple::trivial(static_cast<std::size_t>(n), gens));
      CHECK(t.trivial_routed);
      CHECK(t.h1 == b1_pure_braid(sp, n).free_rank);
    }
}

TEST_CASE("genus >= 2 twisted values match the Fox oracle on Pi_g^n") {
  Rng rng(404);
  for (int g = 2; g <= 3; ++g)
    for (int n = 2; n <= 3; ++n) {
      if (g == 3 && n == 3) continue;
      Presentation prod = power(surface_group(g), n);
      for (int trial = 0; trial < 8; ++trial) {
        CharacterTuple rho = random_tuple(rng, n, static_cast<std::size_t>(2 * g));
        const auto fox = static_cast<std::int64_t>(h1_dim(prod, rho.product_character()));
        CHECK(h1_twisted_pure_braid(SpaceSpec::compact_genus(g), n, rho) == fox);
      }
    }
}

TEST_CASE("jump locus components") {
  auto a = sigma1_components(SpaceSpec::compact_genus(3), 2);
  REQUIRE(a.components.size() == 2);
  for (const auto& c : a.components) CHECK(c.dim == 6);
  auto b = sigma1_components(SpaceSpec::compact_genus(1), 3);
  REQUIRE(b.components.size() == 3);
  CHECK(b.components[0].label == "T_12");
  CHECK(b.components[1].label == "T_13");
  CHECK(b.components[2].label == "T_23");
  for (const auto& c : b.components) CHECK(c.dim == 4);
  auto c = sigma1_components(SpaceSpec::c_star(), 3);
  REQUIRE(c.components.size() == 3);
  for (const auto& comp : c.components) CHECK(comp.dim == 2);
  CHECK_THROWS_AS(sigma1_components(SpaceSpec::sphere(), 3), OutOfScope);
}

TEST_CASE("membership examples") {
  const SpaceSpec torus = SpaceSpec::compact_genus(1);
  Character sigma(4, {1, 3});
  auto m = sigma1_membership(torus, 2, CharacterTuple({sigma, sigma.inverse()}));
  CHECK(m.member);
  CHECK(m.components == std::vector<std::string>{"T_12"});
  CHECK(m.h1 == 1);

  auto n2 = sigma1_membership(SpaceSpec::compact_genus(2), 2, CharacterTuple({Character(3, {1, 0, 0, 0}), Character(5, {0, 0, 2, 0})}));
  CHECK_FALSE(n2.member);
  CHECK(n2.h1 == 0);

  Character s3(3, {1, 1});
  auto n3 = sigma1_membership(torus, 2, CharacterTuple({s3, s3}));
  CHECK_FALSE(n3.member);
  CHECK(n3.h1 == 0);

  auto triv = sigma1_membership(torus, 3, CharacterTuple::trivial(3, 2));
  CHECK(triv.trivial);
  CHECK(triv.h1 == 6);
}

TEST_CASE("membership is bidirectional") {
  Rng rng(2718);
  const std::vector<SpaceSpec> spaces{SpaceSpec::compact_genus(1), SpaceSpec::compact_genus(2), SpaceSpec::c_star()};
  for (const auto& sp : spaces)
    for (int n = 2; n <= 4; ++n) {
      const std::size_t gens = sp.kind == SpaceSpec::Kind::CStar ? 1 : static_cast<std::size_t>(2 * sp.genus);
      for (int trial = 0; trial < 100; ++trial) {
        CharacterTuple rho = random_tuple(rng, n, gens);
        if (rho.is_trivial()) continue;
        auto m = sigma1_membership(sp, n, rho);
        CHECK(m.member == (m.h1 > 0));
        CHECK(m.member == !m.components.empty());
      }
    }
}

TEST_CASE("general points of T_ij have h1 = 1") {
  Rng rng(99);
  const SpaceSpec torus = SpaceSpec::compact_genus(1);
  int checked = 0;
  while (checked < 200) {
    const int n = 2 + static_cast<int>(rng.below(3));
    CharacterTuple rho = [&] {
      std::vector<Character> c;
      for (int i = 0; i < n; ++i) c.push_back(random_factor_char(rng, 2, false));
      const auto i = rng.below(static_cast<std::uint64_t>(n));
      auto j = rng.below(static_cast<std::uint64_t>(n - 1));
      if (j >= i) ++j;
      c[j] = c[i].inverse();
      return CharacterTuple(std::move(c));
    }();
    if (twisted_report(torus, n, rho).pairs.size() != 1) continue;
    CHECK(h1_twisted_pure_braid(torus, n, rho) == 1);
    ++checked;
  }
}

TEST_CASE("surjection exclusion") {
  auto a = surjection_excluded(SpaceSpec::compact_genus(2), 5, 3);
  CHECK(a.excluded);
  auto b = surjection_excluded(SpaceSpec::compact_genus(1), 4, 3);
  CHECK(b.excluded);
  CHECK(b.reason.find("T_ij") != std::string::npos);
  CHECK_FALSE(surjection_excluded(SpaceSpec::compact_genus(3), 2, 2).excluded);
  CHECK_FALSE(surjection_excluded(SpaceSpec::compact_genus(1), 5, 3).excluded);
  CHECK(surjection_excluded(SpaceSpec::compact_genus(1), 2, 2).excluded);
  auto c = surjection_excluded(SpaceSpec::c_star(), 4, 2);
  CHECK(c.conditional);
  CHECK_FALSE(c.excluded);
  CHECK_THROWS_AS(surjection_excluded(SpaceSpec::compact_genus(2), 3, 1), OutOfScope);
  CHECK_THROWS_AS(surjection_excluded(SpaceSpec::sphere(), 4, 2), OutOfScope);
}

TEST_CASE("infinite jump locus witness") {
  const SpaceSpec torus = SpaceSpec::compact_genus(1);
  for (int n = 2; n <= 4; ++n) {
    auto w = sigma1_infinite_witness(n, 6);
    REQUIRE(w.size() == 6);
    for (std::size_t a = 0; a < w.size(); ++a) {
      for (std::size_t c = 0; c < w[a].size(); ++c) CHECK(validate_character(surface_group(1), w[a][c]).ok);
      CHECK(h1_twisted_pure_braid(torus, n, w[a]) > 0);
      CHECK(sigma1_components(torus, n).components[0].contains(w[a]));
      for (std::size_t b = a + 1; b < w.size(); ++b) CHECK_FALSE(w[a][0] == w[b][0]);
    }
  }
  CHECK(sigma1_infinite_witness(2, 1).size() == 1);
}

TEST_CASE("pullback fact query") {
  CHECK(pullback_top_degree(2, 3, 2).value == 0);
  CHECK(pullback_top_degree(1, 4, 4).anchor_key == "partC");
  CHECK_THROWS_AS(pullback_top_degree(2, 3, 1), RangeError);
  CHECK_THROWS_AS(pullback_top_degree(2, 3, 4), RangeError);
}

TEST_CASE("space syntax") {
  for (const char* s : {"sphere", "plane", "disk", "c-star", "genus:2", "hyperbolic:3", "higher:4:projective:complex=2:b1=4",
                        "higher:3:b1=1:torsion=2,4", "higher:6:projective:complex=3:trivial"})
    CHECK(SpaceSpec::parse(s).str() == s);
  CHECK(SpaceSpec::parse("genus:0").kind == SpaceSpec::Kind::Sphere);
  CHECK(SpaceSpec::parse("higher:4:projective").complex_dim == 2);
  CHECK_THROWS_AS(SpaceSpec::parse("genus:x"), ParseError);
  CHECK_THROWS_AS(SpaceSpec::parse("klein"), ParseError);
  CHECK_THROWS_AS(SpaceSpec::parse("higher:2"), RangeError);
}

TEST_CASE("C^* twisted values for two points agree with the Artin route") {
  Rng rng(5150);
  const SpaceSpec cs = SpaceSpec::c_star();
  for (int trial = 0; trial < 60; ++trial) {
    CharacterTuple rho = random_tuple(rng, 2, 1);
    if (rng.below(3) == 0) {  // radial values exercise non-unitary characters
      const mpq_class r(static_cast<long>(1 + rng.below(4)), static_cast<long>(1 + rng.below(4)));
      Character a(rho[0].order(), {rho[0].exponent(0)}, std::vector<mpq_class>{r});
      rho = CharacterTuple({a, rng.coin() ? a.inverse() : rho[1]});
    }
    CAPTURE(rho[0].exponent(0));
    CAPTURE(rho[0].radial_at(0).get_str());
    CAPTURE(rho[1].exponent(0));
    CAPTURE(rho[1].radial_at(0).get_str());
    CAPTURE(rho.order());
    CHECK(h1_twisted_pure_braid(cs, 2, rho) == h1_cstar_via_artin(2, rho));
  }
}

TEST_CASE("Artin route: a nontrivial value on the full twist kills H^1") {
  Rng rng(6);
  for (int n = 3; n <= 4; ++n)
    for (int trial = 0; trial < 15; ++trial) {
      CharacterTuple rho = random_tuple(rng, n, 1);
      if (rho.product_character().is_trivial()) continue;
      Character prod = rho[0];
      for (std::size_t i = 1; i < rho.size(); ++i) prod = prod * rho[i];
      if (prod.is_trivial()) continue;
      CHECK(h1_cstar_via_artin(n, rho) == 0);
    }
  CHECK(h1_cstar_via_artin(3, CharacterTuple::trivial(3, 1)) == 6);
}
