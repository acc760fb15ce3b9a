#include "braidcoh/verdict.hpp"

#include <charconv>

#include "braidcoh/anchors.hpp"
#include "braidcoh/errors.hpp"
#include "braidcoh/exactlin.hpp"
#include "braidcoh/leray.hpp"

namespace braidcoh {

namespace {

using Kind = SpaceSpec::Kind;

TraceStep step(const std::string& rule, const std::string& anchor_key, std::string text) {
  return {rule, anchor(anchor_key), std::move(text)};
}

std::string S(std::int64_t v) { return std::to_string(v); }

std::vector<std::int64_t> to_i64(const std::vector<mpz_class>& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

// Canonical form (divisibility chain) of Z^r + sum Z/t_k.
AbelianProfile normalize(std::int64_t free_rank, const std::vector<mpz_class>& torsion) {
  IntMatrix d(torsion.size(), torsion.size());
  for (std::size_t k = 0; k < torsion.size(); ++k) d(k, k) = torsion[k];
  AbelianProfile p;
  p.free_rank = free_rank;
  for (const auto& t : smith_normal_form(d).divisors)
    if (t > 1) p.torsion.push_back(t);
  return p;
}

Verdict not_kahler() {
  Verdict v;
  v.status = VerdictStatus::NotKahler;
  return v;
}

Verdict plane_verdict(int n, const std::string& what) {
  Verdict v = not_kahler();
  const std::int64_t b1 = abelianization(artin_pure_braid(n)).free_rank;
  v.witnesses["b1"] = {b1};
  if (auto par = parity_obstruction(AbelianProfile{b1, {}})) v.trace.push_back(*par);
  if (n >= 3)
    v.trace.push_back(step("R1", "R1", "P_n(" + what + ") maps onto P_3(" + what +
                                           ") = F_2 x Z and then onto F_2, which has infinitely many ends; the kernel is finitely generated"));
  return v;
}

Verdict cstar_verdict(int n) {
  Verdict v = not_kahler();
  const SpaceSpec cs = SpaceSpec::c_star();
  const BettiReport b = b1_pure_braid(cs, n);
  v.witnesses["b1"] = {b.free_rank};
  if (auto par = parity_obstruction(AbelianProfile{b.free_rank, {}})) {
    par->text += "; b1(P_" + S(n) + "(C^*)) = " + S(b.free_rank);
    v.trace.push_back(*par);
  }
  if (n >= 3) {
    const JumpLocusDescription locus = sigma1_components(cs, n);
    std::vector<std::int64_t> dims;
    for (const auto& c : locus.components) dims.push_back(c.dim);
    v.witnesses["sigma1_dims"] = dims;
    const std::int64_t d = locus.components.front().dim;
    v.trace.push_back(step("R6", "sigma1.cstar", "the jump locus contains T_12 of dimension " + S(d)));
    v.trace.push_back(step("R6", "beauville",
                           "the largest torus T containing T_12 has dimension >= 4, so T = f^*Char(C) for a fibration onto a curve of genus >= 2"));
    const SurjectionReport s = surjection_excluded(cs, n, 2);
    v.trace.push_back(step("R6", s.anchor_key, "the induced surjection P_" + S(n) + "(C^*) ->> Pi_g would pull back a torus containing T_12: " + s.reason));
  }
  return v;
}

Verdict torus_verdict(int n) {
  Verdict v = not_kahler();
  const SpaceSpec t = SpaceSpec::compact_genus(1);
  const JumpLocusDescription locus = sigma1_components(t, n);
  std::vector<std::int64_t> dims;
  for (const auto& c : locus.components) dims.push_back(c.dim);
  v.witnesses["sigma1_dims"] = dims;
  v.witnesses["b1"] = {b1_pure_braid(t, n).free_rank};
  const std::int64_t d = locus.components.front().dim;
  v.trace.push_back(step("R5", "R5", "T_12 has dimension 2n - 2 = " + S(d)));
  BeauvilleResult br = beauville_obstruction({TorusComponent{d, true}});
  for (auto& st : br.trace) v.trace.push_back(st);
  if (!br.obstructed) {
    const int h = br.forced_genera.front();
    const SurjectionReport s = surjection_excluded(t, n, h);
    v.trace.push_back(step("R5", s.anchor_key, "a surjection P_" + S(n) + "(X_1) ->> Pi_" + S(h) + " is impossible: " + s.reason));
  }
  return v;
}

Verdict genus_verdict(int g, int n) {
  Verdict v = not_kahler();
  const SpaceSpec sp = SpaceSpec::compact_genus(g);
  const BettiReport b = b1_pure_braid(sp, n);
  const JumpLocusDescription locus = sigma1_components(sp, n);
  std::vector<std::int64_t> dims;
  for (const auto& c : locus.components) dims.push_back(c.dim);
  v.witnesses["b1"] = {b.free_rank};
  v.witnesses["sigma1_dims"] = dims;
  const FactQuery pc = pullback_top_degree(g, n, 2);
  v.witnesses["pullback_h4_rank"] = {pc.value};
  v.trace.push_back(step("R4", "sigma1.genus",
                         "each projection P_n ->> Pi_" + S(g) + " has finitely generated kernel and is induced by a fibration f_i: M -> Y_i onto a genus " + S(g) + " curve"));
  v.trace.push_back(step("R4", "betti.genus", "f^*: H^1(Y) -> H^1(M) is an isomorphism, b1 = 2gn = " + S(b.free_rank)));
  v.trace.push_back(step("R4", pc.anchor_key, "f_12^*: H^4(Y_1 x Y_2) -> H^4(M) has rank " + S(pc.value) + ", so f_12 is not onto"));
  const SurjectionReport s = surjection_excluded(sp, n, g + 1);
  v.trace.push_back(step("R4", s.anchor_key,
                         "f_12(M) normalizes to a curve C of genus g' >= g, and P_n ->> Pi_g' forces g' <= g (" + s.reason + "), so g' = g"));
  v.trace.push_back(step("R4", "R4", "then dim f^*H^1(Y) <= 2(n-1)g = " + S(2 * (n - 1) * g) + " < 2ng = " + S(b.free_rank)));
  return v;
}

Verdict sphere_verdict(int n) {
  const BettiReport b = b1_pure_braid(SpaceSpec::sphere(), n);
  Verdict v;
  v.witnesses["b1"] = {b.free_rank};
  v.witnesses["coker_torsion"] = to_i64(b.torsion);
  if (n <= 3) {
    v.status = VerdictStatus::Kahler;
    v.trace.push_back(step("R3", "R3", n == 2 ? "P_2(S^2) is trivial" : "P_3(S^2) = Z/2 is finite"));
    return v;
  }
  v.status = VerdictStatus::NotKahler;
  v.trace.push_back(step("R2", "R2", "P_4(S^2) contains a free group of rank 2 with finite index; for n >= 4 the fibration P_n -> P_{n-1} gives a finite-index subgroup of type R1"));
  v.trace.push_back(step("R8", "R8", "a Kahler P_" + S(n) + "(S^2) would make that subgroup Kahler"));
  v.trace.push_back(step("R1", "R1", "the subgroup is an extension of a group with infinitely many ends by a finitely generated group"));
  return v;
}

Verdict pure_verdict(const SpaceSpec& space, int n) {
  switch (space.kind) {
    case Kind::Sphere: return sphere_verdict(n);
    case Kind::Plane: return plane_verdict(n, "C");
    case Kind::Disk: return plane_verdict(n, "D");
    case Kind::CStar: return cstar_verdict(n);
    case Kind::CompactGenus: return space.genus == 1 ? torus_verdict(n) : genus_verdict(space.genus, n);
    case Kind::NoncompactHyperbolic: {
      const int k = space.free_rank;
      if (k == 0) {
        Verdict v = plane_verdict(n, "D");
        v.trace.insert(v.trace.begin(), step("R1", "R1", "a simply connected noncompact surface is treated as the disk"));
        return v;
      }
      if (k == 1) {
        Verdict v = cstar_verdict(n);
        v.trace.insert(v.trace.begin(), step("R6", "R6", "a noncompact surface with pi_1 = Z is treated as C^*"));
        return v;
      }
      Verdict v = not_kahler();
      v.witnesses["free_rank"] = {k};
      v.trace.push_back(step("R1", "R1", "1 -> P_{n-1}(X - x_0) -> P_n(X) -> F_" + S(k) + " -> 1 with F_" + S(k) + " nonabelian free"));
      return v;
    }
    case Kind::HigherDim: break;
  }
  throw OutOfScope("not a surface");
}

}  // namespace

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Kahler: return "Kahler";
    case VerdictStatus::NotKahler: return "NotKahler";
    case VerdictStatus::OutOfScope: return "OutOfScope";
    case VerdictStatus::NotInClassP: return "NotInClassP";
  }
  return "?";
}

std::string to_string(BraidFlavor f) { return f == BraidFlavor::Pure ? "pure" : "full"; }

BraidFlavor parse_flavor(std::string_view text) {
  if (text == "pure") return BraidFlavor::Pure;
  if (text == "full") return BraidFlavor::Full;
  throw ParseError(0, "flavor must be `pure` or `full`");
}

bool is_obstruction_rule(const std::string& rule) {
  return rule == "R1" || rule == "R2" || rule == "R4" || rule == "R5" || rule == "R6" || rule == "R7" || rule == "R8" || rule == "R10";
}

std::optional<TraceStep> parity_obstruction(const AbelianProfile& h1) {
  if (h1.free_rank % 2 == 0) return std::nullopt;
  return step("R7", "R7", "first Betti number " + S(h1.free_rank) + " is odd");
}

BeauvilleResult beauville_obstruction(const std::vector<TorusComponent>& components) {
  BeauvilleResult r;
  for (const auto& c : components) {
    if (!c.untranslated || c.dim <= 0) continue;
    if (c.dim == 2 || c.dim % 2 == 1) {
      r.obstructed = true;
      r.trace.push_back(step("R5", "beauville", "untranslated torus component of dimension " + S(c.dim)));
    } else {
      const int g = static_cast<int>(c.dim / 2);
      r.forced_genera.push_back(g);
      r.trace.push_back(step("R5", "beauville", "component of dimension " + S(c.dim) + " forces a fibration onto a curve of genus " + S(g)));
    }
  }
  return r;
}

AbelianProfile sn_coinvariants(const AbelianProfile& factor, int n) {
  if (n < 1) throw RangeError("n must be at least 1");
  const std::size_t r = static_cast<std::size_t>(factor.free_rank), t = factor.torsion.size(), w = r + t;
  const std::size_t copies = static_cast<std::size_t>(n);
  IntMatrix rel(t * copies + w * (copies - 1), w * copies);
  std::size_t row = 0;
  for (std::size_t k = 0; k < copies; ++k)
    for (std::size_t q = 0; q < t; ++q) rel(row++, k * w + r + q) = factor.torsion[q];
  for (std::size_t k = 0; k + 1 < copies; ++k)
    for (std::size_t x = 0; x < w; ++x) {
      rel(row, k * w + x) = 1;
      rel(row, (k + 1) * w + x) = -1;
      ++row;
    }
  const DivisorProfile d = elementary_divisor_profile(rel);
  return AbelianProfile{static_cast<std::int64_t>(rel.cols() - d.rank), d.torsion};
}

WreathFacts wreath_facts(const SpaceSpec& space, int n) {
  if (space.kind != Kind::HigherDim) throw OutOfScope("wreath facts need real dimension >= 3");
  if (n < 1) throw RangeError("n must be at least 1");
  WreathFacts f;
  const std::string x = "pi_1(X)";
  f.pure_iso = "P_" + S(n) + "(X) = " + x + "^" + S(n);
  f.full_iso = "B_" + S(n) + "(X) = " + x + " wr S_" + S(n);
  std::vector<mpz_class> tors;
  for (int k = 0; k < n; ++k) tors.insert(tors.end(), space.base.torsion.begin(), space.base.torsion.end());
  f.pure_h1 = normalize(space.base.free_rank * n, tors);
  f.full_coinvariants = sn_coinvariants(space.base, n);
  std::vector<mpz_class> full_t = f.full_coinvariants.torsion;
  if (n >= 2) full_t.emplace_back(2);
  f.full_h1 = normalize(f.full_coinvariants.free_rank, full_t);
  f.full_is_finite = space.trivial_base;
  f.trace.push_back(step("R9", "R9", f.pure_iso + " and " + f.full_iso + " for real dimension " + S(space.real_dim)));
  if (space.trivial_base) {
    f.projective = true;
    f.trace.push_back(step("R9", "R3", "B_" + S(n) + "(X) = S_" + S(n) + " is finite"));
  } else if (space.projective && space.complex_dim >= 2) {
    f.projective = true;
    f.trace.push_back(step("R9", "R9", "X projective of complex dimension " + S(space.complex_dim) + ", so the wreath product is projective"));
  }
  return f;
}

Verdict kahler_verdict(const SpaceSpec& space, int n, BraidFlavor flavor) {
  Verdict v;
  if (n < 2) {
    v.status = VerdictStatus::OutOfScope;
    v.trace.push_back({"", "", "n = 1: the braid group is pi_1(X) itself"});
    return v;
  }
  if (space.kind == Kind::HigherDim) {
    WreathFacts f = wreath_facts(space, n);
    v.trace = f.trace;
    v.witnesses["pure_h1_rank"] = {f.pure_h1.free_rank};
    v.witnesses["full_h1_rank"] = {f.full_h1.free_rank};
    v.status = f.projective.value_or(false) ? VerdictStatus::Kahler : VerdictStatus::OutOfScope;
    return v;
  }
  v = pure_verdict(space, n);
  if (flavor == BraidFlavor::Full) {
    if (v.status == VerdictStatus::NotKahler) {
      v.trace.push_back(step("R8", "R8", "P_" + S(n) + " has index " + S(n) + "! in B_" + S(n) + "; a Kahler B_" + S(n) + " would make P_" + S(n) + " Kahler"));
    } else if (v.status == VerdictStatus::Kahler) {
      v.witnesses["order"] = {n == 2 ? 2 : 12};
      v.trace.push_back(step("R3", "R3", n == 2 ? "B_2(S^2) = Z/2" : "B_3(S^2) is finite of order 12"));
    }
  }
  return v;
}

CharPGroup CharPGroup::parse(std::string_view text) {
  auto num = [&](std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) throw ParseError(0, "bad integer in `" + std::string(text) + "`");
    return v;
  };
  CharPGroup g;
  const auto c1 = text.find(':');
  if (c1 == std::string_view::npos) throw ParseError(0, "malformed group `" + std::string(text) + "`");
  const std::string_view head = text.substr(0, c1), rest = text.substr(c1 + 1);
  if (head == "artin_pure") {
    g.kind = CharPGroup::Kind::ArtinPure;
    g.n = num(rest);
  } else if (head == "sphere_pure") {
    g.kind = CharPGroup::Kind::SpherePure;
    g.n = num(rest);
  } else if (head == "surface_pure") {
    const auto c2 = rest.find(':');
    if (c2 == std::string_view::npos) throw ParseError(0, "surface_pure needs <g>:<n>");
    g.kind = CharPGroup::Kind::SurfacePure;
    g.genus = num(rest.substr(0, c2));
    g.n = num(rest.substr(c2 + 1));
  } else {
    throw ParseError(0, "unknown group `" + std::string(head) + "`");
  }
  return g;
}

std::string CharPGroup::str() const {
  switch (kind) {
    case Kind::ArtinPure: return "artin_pure:" + S(n);
    case Kind::SpherePure: return "sphere_pure:" + S(n);
    case Kind::SurfacePure: return "surface_pure:" + S(genus) + ":" + S(n);
  }
  return "?";
}

Verdict charp_verdict(const CharPGroup& group, std::uint64_t p) {
  if (!is_prime_u64(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  Verdict v;
  v.status = VerdictStatus::OutOfScope;
  const bool covered = (group.kind == CharPGroup::Kind::ArtinPure && group.n >= 2) ||
                       (group.kind == CharPGroup::Kind::SpherePure && group.n >= 4);
  if (group.kind == CharPGroup::Kind::SurfacePure) {
    v.trace.push_back(step("R11", "R11", group.str() + " at p = " + std::to_string(p) + " is an open case"));
  } else if (p == 2) {
    v.trace.push_back(step("R10", "R10", "the rule needs p > 2"));
  } else if (covered) {
    v.status = VerdictStatus::NotInClassP;
    v.trace.push_back(step("R10", "R10", "the ends argument carries over to pro-(prime to " + std::to_string(p) + ") completions"));
  } else {
    v.trace.push_back(step("R10", "R10", group.str() + " is outside the range of the rule"));
  }
  return v;
}

}  // namespace braidcoh
