#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>

#include "braidcoh/anchors.hpp"
#include "braidcoh/errors.hpp"
#include "braidcoh/leray.hpp"
#include "braidcoh/verdict.hpp"

using namespace braidcoh;

namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream f(std::string(BRAIDCOH_FIXTURE_DIR) + "/" + name, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::set<std::string> fixture_statements() {
  std::set<std::string> out;
  std::istringstream in(read_fixture("anchors.txt"));
  std::string line;
  while (std::getline(in, line)) out.insert(line.substr(line.find('\t') + 1));
  return out;
}

const std::vector<SpaceSpec>& surfaces() {
  static const std::vector<SpaceSpec> s{SpaceSpec::sphere(),         SpaceSpec::plane(),
                                        SpaceSpec::disk(),           SpaceSpec::c_star(),
                                        SpaceSpec::compact_genus(1), SpaceSpec::compact_genus(2),
                                        SpaceSpec::compact_genus(3), SpaceSpec::hyperbolic(2)};
  return s;
}

// Expected status read directly off the classification: every surface
// gives a non-Kahler braid group except the sphere with n = 2, 3.
VerdictStatus expected(const SpaceSpec& s, int n) {
  return (s.kind == SpaceSpec::Kind::Sphere && n <= 3) ? VerdictStatus::Kahler : VerdictStatus::NotKahler;
}

}  // namespace

TEST_CASE("anchor table matches its fixture byte for byte") {
  CHECK(anchor_table_text() == read_fixture("anchors.txt"));
  std::set<std::string> keys;
  for (const auto& [k, v] : anchor_table()) {
    CHECK(keys.insert(k).second);
    CHECK(v.find('\t') == std::string::npos);
  }
}

TEST_CASE("verdict table") {
  const auto statements = fixture_statements();
  for (const auto& s : surfaces())
    for (int n = 2; n <= 6; ++n)
      for (BraidFlavor fl : {BraidFlavor::Pure, BraidFlavor::Full}) {
        CAPTURE(s.str());
        CAPTURE(n);
        Verdict v = kahler_verdict(s, n, fl);
        CHECK(v.status == expected(s, n));
        REQUIRE_FALSE(v.trace.empty());
        for (const auto& st : v.trace) CHECK(statements.count(st.anchor) == 1);
        bool obstruction = false, construction = false;
        for (const auto& st : v.trace) {
          obstruction = obstruction || is_obstruction_rule(st.rule);
          construction = construction || st.rule == "R3" || st.rule == "R9";
        }
        if (v.status == VerdictStatus::NotKahler) {
          CHECK(obstruction);
          CHECK(is_obstruction_rule(v.trace.back().rule));
        } else {
          CHECK(construction);
        }
        if (fl == BraidFlavor::Full && v.status == VerdictStatus::NotKahler) CHECK(v.trace.back().rule == "R8");
      }
}

TEST_CASE("verdict examples") {
  Verdict s3 = kahler_verdict(SpaceSpec::sphere(), 3, BraidFlavor::Pure);
  CHECK(s3.status == VerdictStatus::Kahler);
  CHECK(s3.trace.front().rule == "R3");

  Verdict g2 = kahler_verdict(SpaceSpec::compact_genus(2), 2, BraidFlavor::Pure);
  CHECK(g2.status == VerdictStatus::NotKahler);
  for (const auto& st : g2.trace) CHECK(st.rule == "R4");
  CHECK(g2.trace.size() >= 4);

  Verdict c2 = kahler_verdict(SpaceSpec::c_star(), 2, BraidFlavor::Pure);
  CHECK(c2.status == VerdictStatus::NotKahler);
  REQUIRE(c2.trace.size() == 1);
  CHECK(c2.trace[0].rule == "R7");
  CHECK(c2.witnesses.at("b1") == std::vector<std::int64_t>{3});

  CHECK(kahler_verdict(SpaceSpec::sphere(), 2, BraidFlavor::Full).status == VerdictStatus::Kahler);
  CHECK(kahler_verdict(SpaceSpec::compact_genus(2), 1, BraidFlavor::Pure).status == VerdictStatus::OutOfScope);
}

TEST_CASE("hyperbolic routing") {
  CHECK(kahler_verdict(SpaceSpec::hyperbolic(0), 3, BraidFlavor::Pure).witnesses.at("b1") == std::vector<std::int64_t>{3});
  CHECK(kahler_verdict(SpaceSpec::hyperbolic(1), 2, BraidFlavor::Pure).trace.back().rule == "R7");
  CHECK(kahler_verdict(SpaceSpec::hyperbolic(4), 2, BraidFlavor::Pure).trace.front().rule == "R1");
}

TEST_CASE("witnesses agree with computed values") {
  for (const auto& s : surfaces())
    for (int n = 2; n <= 6; ++n) {
      Verdict v = kahler_verdict(s, n, BraidFlavor::Pure);
      if (auto it = v.witnesses.find("b1"); it != v.witnesses.end()) {
        const std::int64_t b1 = (s.kind == SpaceSpec::Kind::Plane || s.kind == SpaceSpec::Kind::Disk)
                                    ? abelianization(artin_pure_braid(n)).free_rank
                                    : b1_pure_braid(s, n).free_rank;
        CHECK(it->second == std::vector<std::int64_t>{b1});
      }
      if (auto it = v.witnesses.find("sigma1_dims"); it != v.witnesses.end()) {
        std::vector<std::int64_t> dims;
        for (const auto& c : sigma1_components(s, n).components) dims.push_back(c.dim);
        CHECK(it->second == dims);
      }
    }
}

TEST_CASE("c-star parity fires exactly when b1 is odd") {
  for (int n = 2; n <= 6; ++n) {
    Verdict v = kahler_verdict(SpaceSpec::c_star(), n, BraidFlavor::Pure);
    bool parity = false;
    for (const auto& st : v.trace) parity = parity || st.rule == "R7";
    CHECK(parity == ((n + binom2(n)) % 2 == 1));
  }
}

TEST_CASE("parity obstruction") {
  CHECK(parity_obstruction({3, {}}).has_value());
  CHECK_FALSE(parity_obstruction({4, {}}).has_value());
  CHECK_FALSE(parity_obstruction({0, {}}).has_value());
}

TEST_CASE("beauville obstruction") {
  CHECK(beauville_obstruction({{2, true}}).obstructed);
  CHECK(beauville_obstruction({{3, true}}).obstructed);
  auto f4 = beauville_obstruction({{4, true}});
  CHECK_FALSE(f4.obstructed);
  CHECK(f4.forced_genera == std::vector<int>{2});
  CHECK(beauville_obstruction({{6, true}}).forced_genera == std::vector<int>{3});
  CHECK_FALSE(beauville_obstruction({{2, false}}).obstructed);
}

TEST_CASE("symmetric group coinvariants") {
  CHECK(sn_coinvariants({4, {}}, 3) == AbelianProfile{4, {}});
  CHECK(sn_coinvariants({2, {}}, 1) == AbelianProfile{2, {}});
  CHECK(sn_coinvariants({1, {2}}, 2) == AbelianProfile{1, {2}});
  CHECK(sn_coinvariants({0, {}}, 5) == AbelianProfile{0, {}});
  CHECK(sn_coinvariants({3, {2, 4}}, 4) == AbelianProfile{3, {2, 4}});
  CHECK_THROWS_AS(sn_coinvariants({1, {}}, 0), RangeError);
}

TEST_CASE("wreath facts") {
  auto a = wreath_facts(SpaceSpec::parse("higher:4:projective:b1=4"), 2);
  CHECK(a.pure_h1 == AbelianProfile{8, {}});
  CHECK(a.full_coinvariants == AbelianProfile{4, {}});
  CHECK(a.full_h1 == AbelianProfile{4, {2}});
  CHECK(a.projective == std::optional<bool>(true));

  auto t = wreath_facts(SpaceSpec::parse("higher:4:trivial"), 4);
  CHECK(t.full_is_finite);
  CHECK(t.full_h1 == AbelianProfile{0, {2}});
  CHECK(t.projective == std::optional<bool>(true));

  auto r3 = wreath_facts(SpaceSpec::parse("higher:3:b1=1"), 2);
  CHECK_FALSE(r3.projective.has_value());
  CHECK(r3.pure_iso == "P_2(X) = pi_1(X)^2");
  CHECK(r3.full_iso == "B_2(X) = pi_1(X) wr S_2");

  CHECK_THROWS_AS(wreath_facts(SpaceSpec::compact_genus(2), 2), OutOfScope);
  CHECK(kahler_verdict(SpaceSpec::parse("higher:4:projective:b1=4"), 3, BraidFlavor::Full).status == VerdictStatus::Kahler);
  CHECK(kahler_verdict(SpaceSpec::parse("higher:3"), 3, BraidFlavor::Full).status == VerdictStatus::OutOfScope);
}

TEST_CASE("characteristic p") {
  CHECK(charp_verdict(CharPGroup::parse("artin_pure:2"), 3).status == VerdictStatus::NotInClassP);
  CHECK(charp_verdict(CharPGroup::parse("sphere_pure:4"), 5).status == VerdictStatus::NotInClassP);
  Verdict open = charp_verdict(CharPGroup::parse("surface_pure:1:3"), 7);
  CHECK(open.status == VerdictStatus::OutOfScope);
  CHECK(open.trace.front().rule == "R11");
  CHECK(charp_verdict(CharPGroup::parse("artin_pure:3"), 2).status == VerdictStatus::OutOfScope);
  CHECK(charp_verdict(CharPGroup::parse("sphere_pure:3"), 5).status == VerdictStatus::OutOfScope);
  CHECK_THROWS_AS(charp_verdict(CharPGroup::parse("artin_pure:2"), 9), PreconditionError);
  CHECK_THROWS_AS(CharPGroup::parse("braid:2"), ParseError);
  CHECK(CharPGroup::parse("surface_pure:2:5").str() == "surface_pure:2:5");
}
