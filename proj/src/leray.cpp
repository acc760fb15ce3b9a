#include "braidcoh/leray.hpp"

#include <algorithm>
#include <array>

#include "braidcoh/errors.hpp"

namespace braidcoh {

namespace {

using Kind = SpaceSpec::Kind;

std::string basis_name(int g, int r) {
  const char ab = (r % 2 == 0) ? 'a' : 'b';
  if (g == 1) return std::string(1, ab);
  return std::string(1, ab) + std::to_string(r / 2 + 1);
}

std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

void require_n(int n) {
  if (n < 2) throw RangeError("n must be at least 2");
}

std::string pair_label(int i, int j) { return "G_" + std::to_string(i) + std::to_string(j); }

std::string torus_label(int i, int j) { return "T_" + std::to_string(i) + std::to_string(j); }

// Poincare polynomial of one factor, truncated at degree 2.
using Poly = std::array<std::int64_t, 3>;

Poly factor_poly(const SpaceSpec& space, const Character& chi) {
  const bool triv = chi.is_trivial();
  switch (space.kind) {
    case Kind::Sphere: return {1, 0, 1};
    case Kind::CompactGenus: {
      const std::int64_t g = space.genus;
      return triv ? Poly{1, 2 * g, 1} : Poly{0, 2 * g - 2, 0};
    }
    case Kind::CStar: return triv ? Poly{1, 1, 0} : Poly{0, 0, 0};
    default: throw OutOfScope("twisted cohomology needs a compact surface or C^*");
  }
}

std::size_t factor_generators(const SpaceSpec& space) {
  switch (space.kind) {
    case Kind::Sphere: return 0;
    case Kind::CompactGenus: return static_cast<std::size_t>(2 * space.genus);
    case Kind::CStar: return 1;
    default: throw OutOfScope("twisted cohomology needs a compact surface or C^*");
  }
}

void check_tuple(const SpaceSpec& space, int n, const CharacterTuple& rho) {
  require_n(n);
  if (rho.size() != static_cast<std::size_t>(n))
    throw PreconditionError("character tuple has " + std::to_string(rho.size()) + " components, expected " + std::to_string(n));
  const std::size_t gens = factor_generators(space);
  for (std::size_t i = 0; i < rho.size(); ++i)
    if (rho[i].generator_count() != gens)
      throw PreconditionError("component " + std::to_string(i + 1) + " is not a character of the factor group");
}

}  // namespace

std::int64_t binom2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

DiagonalClass diagonal_class(int g) {
  if (g < 0) throw RangeError("genus must be nonnegative");
  DiagonalClass d;
  d.genus = g;
  d.block = IntMatrix(static_cast<std::size_t>(2 * g), static_cast<std::size_t>(2 * g));
  for (int k = 0; k < g; ++k) {
    d.block(2 * k, 2 * k + 1) = 1;
    d.block(2 * k + 1, 2 * k) = -1;
  }
  return d;
}

E2Fragment e2_from_diagonal(const DiagonalClass& diag, int n) {
  require_n(n);
  const int g = diag.genus;
  const std::size_t b = static_cast<std::size_t>(2 * g);
  const auto pairs = all_pairs(n);
  E2Fragment e;
  e.space = SpaceSpec::compact_genus(g).str();
  e.n = n;
  for (int i = 1; i <= n; ++i)
    for (int r = 0; r < 2 * g; ++r) e.labels10.push_back(basis_name(g, r) + "(" + std::to_string(i) + ")");
  for (auto [i, j] : pairs) e.labels01.push_back(pair_label(i, j));
  for (int i = 1; i <= n; ++i) e.labels20.push_back("w(" + std::to_string(i) + ")");
  for (auto [i, j] : pairs)
    for (int r = 0; r < 2 * g; ++r)
      for (int s = 0; s < 2 * g; ++s)
        e.labels20.push_back(basis_name(g, r) + "(" + std::to_string(i) + ")" + basis_name(g, s) + "(" + std::to_string(j) + ")");
  e.rank10 = e.labels10.size();
  e.rank01 = e.labels01.size();
  e.rank20 = e.labels20.size();
  e.d2 = IntMatrix(e.rank20, e.rank01);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto [i, j] = pairs[p];
    e.d2(static_cast<std::size_t>(i - 1), p) = diag.e1;
    e.d2(static_cast<std::size_t>(j - 1), p) = diag.e2;
    const std::size_t base = static_cast<std::size_t>(n) + p * b * b;
    for (std::size_t r = 0; r < b; ++r)
      for (std::size_t s = 0; s < b; ++s) e.d2(base + r * b + s, p) = diag.block(r, s);
  }
  return e;
}

E2Fragment e2_trivial(int g, int n) { return e2_from_diagonal(diagonal_class(g), n); }

E2Fragment e2_trivial(const SpaceSpec& space, int n) {
  if (auto g = space.compact_genus_value()) return e2_trivial(*g, n);
  if (space.kind != Kind::CStar) throw OutOfScope("E_2 page is available for compact surfaces and C^* only");
  require_n(n);
  E2Fragment e;
  e.space = space.str();
  e.n = n;
  for (int i = 1; i <= n; ++i) e.labels10.push_back("t(" + std::to_string(i) + ")");
  for (auto [i, j] : all_pairs(n)) {
    e.labels01.push_back(pair_label(i, j));
    e.labels20.push_back("t(" + std::to_string(i) + ")t(" + std::to_string(j) + ")");
  }
  e.rank10 = e.labels10.size();
  e.rank01 = e.labels01.size();
  e.rank20 = e.labels20.size();
  e.d2 = IntMatrix(e.rank20, e.rank01);  // the diagonal class vanishes in H^2(C^* x C^*)
  return e;
}

BettiReport b1_pure_braid(const SpaceSpec& space, int n) {
  require_n(n);
  const auto g = space.compact_genus_value();
  if (!g && space.kind != Kind::CStar) throw OutOfScope("b1 is available for the sphere, compact surfaces and C^*");
  E2Fragment e = e2_trivial(space, n);
  SNFResult snf = smith_normal_form(e.d2);
  BettiReport r;
  r.rank10 = e.rank10;
  r.rank01 = e.rank01;
  r.rank20 = e.rank20;
  r.d2_rank = snf.divisors.size();
  r.divisors = snf.divisors;
  for (const auto& d : snf.divisors)
    if (d > 1) r.torsion.push_back(d);
  r.divisors_all_one = r.torsion.empty();
  r.d2_injective = r.d2_rank == r.rank01;
  r.free_rank = static_cast<std::int64_t>(r.rank10 + r.rank01 - r.d2_rank);
  r.anchor_key = !g ? "betti.cstar" : (*g == 0 ? "betti.sphere" : "betti.genus");
  return r;
}

TwistedReport twisted_report(const SpaceSpec& space, int n, const CharacterTuple& rho) {
  check_tuple(space, n, rho);
  TwistedReport t;
  const auto g = space.compact_genus_value();
  t.anchor_key = space.kind == Kind::CStar ? "twisted.cstar" : (g && *g >= 2 ? "twisted.genus" : "twisted.torus");
  Poly acc{1, 0, 0};
  for (const auto& c : rho.components()) {
    Poly f = factor_poly(space, c), next{0, 0, 0};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; a + b < 3; ++b) next[a + b] += acc[a] * f[b];
    acc = next;
  }
  t.e2_10 = acc[1];
  t.e2_20 = acc[2];
  for (auto [i, j] : all_pairs(n))
    if (rho.pair_is_inverse(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1))) t.pairs.emplace_back(i, j);
  t.e2_01 = static_cast<std::int64_t>(t.pairs.size());
  if (rho.is_trivial()) {
    BettiReport b = b1_pure_braid(space, n);
    t.trivial_routed = true;
    t.d2_rank = static_cast<std::int64_t>(b.d2_rank);
    t.h1 = b.free_rank;
    t.anchor_key = b.anchor_key;
    return t;
  }
  // Nontrivial tuples: the twisted d2 is injective on the surviving G_ij
  // for g >= 2 and vanishes for g = 1 and C^*.
  t.d2_rank = (g && *g >= 2) ? t.e2_01 : 0;
  t.h1 = t.e2_10 + t.e2_01 - t.d2_rank;
  return t;
}

std::int64_t h1_twisted_pure_braid(const SpaceSpec& space, int n, const CharacterTuple& rho) {
  return twisted_report(space, n, rho).h1;
}

bool Sigma1Component::contains(const CharacterTuple& rho) const {
  if (kind == Kind::Pair) return rho.pair_is_inverse(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
  for (std::size_t k = 0; k < rho.size(); ++k)
    if (static_cast<int>(k) != i - 1 && !rho[k].is_trivial()) return false;
  return true;
}

JumpLocusDescription sigma1_components(const SpaceSpec& space, int n) {
  require_n(n);
  JumpLocusDescription d;
  d.space = space.str();
  d.n = n;
  if (space.kind == Kind::CompactGenus && space.genus >= 2) {
    const int g = space.genus;
    d.ambient = "Char(Pi_" + std::to_string(g) + "^" + std::to_string(n) + ")";
    d.ambient_dim = 2 * g * n;
    d.anchor_key = "sigma1.genus";
    for (int i = 1; i <= n; ++i) {
      Sigma1Component c;
      c.kind = Sigma1Component::Kind::Pullback;
      c.i = i;
      c.label = "pi_" + std::to_string(i) + "^*Char(Pi_" + std::to_string(g) + ")";
      c.dim = 2 * g;
      c.condition = "rho_k = 1 for k != " + std::to_string(i);
      d.components.push_back(std::move(c));
    }
    return d;
  }
  const bool torus = space.kind == Kind::CompactGenus && space.genus == 1;
  if (!torus && space.kind != Kind::CStar) throw OutOfScope("jump loci are available for compact genus >= 1 and C^*");
  d.ambient = torus ? "Char(Pi_1^" + std::to_string(n) + ")" : "J_n^*Char(Z^" + std::to_string(n) + ")";
  d.ambient_dim = torus ? 2 * n : n;
  d.anchor_key = torus ? "sigma1.torus" : "sigma1.cstar";
  for (auto [i, j] : all_pairs(n)) {
    Sigma1Component c;
    c.kind = Sigma1Component::Kind::Pair;
    c.i = i;
    c.j = j;
    c.label = torus_label(i, j);
    c.dim = torus ? 2 * n - 2 : n - 1;
    c.condition = "rho_" + std::to_string(i) + " rho_" + std::to_string(j) + " = 1";
    d.components.push_back(std::move(c));
  }
  return d;
}

MembershipReport sigma1_membership(const SpaceSpec& space, int n, const CharacterTuple& rho) {
  JumpLocusDescription locus = sigma1_components(space, n);
  TwistedReport t = twisted_report(space, n, rho);
  MembershipReport m;
  m.trivial = rho.is_trivial();
  m.h1 = t.h1;
  m.member = t.h1 > 0;
  for (const auto& c : locus.components)
    if (c.contains(rho)) m.components.push_back(c.label);
  m.anchor_keys = {locus.anchor_key, t.anchor_key};
  return m;
}

SurjectionReport surjection_excluded(const SpaceSpec& space, int n, int h) {
  require_n(n);
  if (h < 2) throw OutOfScope("surjection tests need a target genus h >= 2");
  SurjectionReport s;
  const std::string H = std::to_string(h);
  if (space.kind == Kind::CompactGenus && space.genus >= 2) {
    const int g = space.genus;
    s.anchor_key = "surj.genus";
    s.excluded = h > g;
    s.reason = s.excluded ? "2h = " + std::to_string(2 * h) + " exceeds the component dimension 2g = " + std::to_string(2 * g)
                          : "h <= g: the component dimension 2g = " + std::to_string(2 * g) + " admits a 2h-dimensional pullback";
    return s;
  }
  if (space.kind == Kind::CompactGenus && space.genus == 1) {
    s.anchor_key = "surj.torus";
    if (h > n) {
      s.excluded = true;
      s.reason = "2h = " + std::to_string(2 * h) + " exceeds dim Char(P_n) = 2n = " + std::to_string(2 * n);
    } else if (h == n) {
      s.excluded = true;
      s.reason = "2h = " + std::to_string(2 * h) + " exceeds the component dimension 2n - 2 = " + std::to_string(2 * n - 2);
    } else if (h == n - 1) {
      s.excluded = true;
      s.reason = "the pullback would equal some T_ij, forcing h1 >= 2h - 2 = " + std::to_string(2 * h - 2) +
                 " > 1 at general points of T_ij";
    } else {
      s.reason = "h < n - 1: the dimension count does not exclude it";
    }
    return s;
  }
  if (space.kind == Kind::CStar) {
    s.anchor_key = "surj.cstar";
    s.conditional = true;
    s.reason = "excluded for every surjection whose pullback of Char(Pi_" + H + ") contains some T_ij";
    return s;
  }
  throw OutOfScope("surjection tests are available for compact genus >= 1 and C^*");
}

std::vector<CharacterTuple> sigma1_infinite_witness(int n, std::size_t k) {
  require_n(n);
  if (k == 0) throw RangeError("need at least one witness");
  std::vector<CharacterTuple> out;
  for (std::size_t w = 0; w < k; ++w) {
    const auto order = static_cast<std::uint32_t>(3 + w);
    Character sigma(order, {1, 0});
    std::vector<Character> comps{sigma, sigma.inverse()};
    for (int i = 2; i < n; ++i) comps.push_back(Character::trivial(2));
    out.emplace_back(std::move(comps));
  }
  return out;
}

FactQuery pullback_top_degree(int g, int n, int m) {
  if (g < 1) throw RangeError("genus must be at least 1");
  require_n(n);
  if (m < 2 || m > n) throw RangeError("need 2 <= m <= n");
  return {0, "partC"};
}

}  // namespace braidcoh

namespace braidcoh {

DiagonalGate diagonal_gate(const DiagonalClass& diag) {
  DiagonalGate gate;
  gate.e_coefficients_ok = diag.e1 == 1 && diag.e2 == 1;
  const std::size_t b = static_cast<std::size_t>(2 * diag.genus);
  gate.slant_injective = smith_normal_form(diag.block).divisors.size() == b;
  E2Fragment e = e2_from_diagonal(diag, 2);
  gate.d2_injective = smith_normal_form(e.d2).divisors.size() == e.rank01;
  return gate;
}

}  // namespace braidcoh

namespace braidcoh {

std::int64_t h1_cstar_via_artin(int n, const CharacterTuple& rho, const RankOptions& opt) {
  check_tuple(SpaceSpec::c_star(), n, rho);
  const Presentation p = artin_pure_braid(n + 1);
  // Generators A{i}_{j} appear in the order (1,2), (1,3), ..., (1,n+1), (2,3), ...
  std::vector<std::int64_t> exps(p.generator_count(), 0);
  std::vector<mpq_class> radial(p.generator_count(), 1);
  for (int k = 1; k <= n; ++k) {
    const std::string name = "A1_" + std::to_string(k + 1);
    const auto gen = p.alphabet.find(name);
    if (!gen) throw Error("missing generator " + name);
    exps[gen->index] = rho[static_cast<std::size_t>(k - 1)].exponent(0);
    radial[gen->index] = rho[static_cast<std::size_t>(k - 1)].radial_at(0);
  }
  const Character chi(rho.order(), exps, radial);
  return static_cast<std::int64_t>(h1_dim(p, chi, opt));
}

}  // namespace braidcoh
