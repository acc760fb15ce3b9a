#include "doctest.h"

#include "braidcoh/errors.hpp"
#include "braidcoh/random.hpp"
#include "braidcoh/words.hpp"

using namespace braidcoh;

namespace {

Word random_word(Rng& rng, std::size_t alphabet, std::size_t max_len) {
  std::vector<Letter> raw;
  const std::size_t len = rng.below(max_len + 1);
  for (std::size_t i = 0; i < len; ++i)
    raw.push_back({static_cast<std::uint32_t>(rng.below(alphabet)), static_cast<std::int8_t>(rng.coin() ? 1 : -1)});
  return free_reduce(raw, alphabet);
}

GroupRingElement x_minus_one(std::uint32_t j) {
  return GroupRingElement(Word::generator(j)) - GroupRingElement::one();
}

}  // namespace

TEST_CASE("free_reduce examples") {
  const Alphabet ab({"x", "y"});
  CHECK(parse_word("x x^-1", ab).empty());
  CHECK(parse_word("x y y^-1 x", ab) == parse_word("x x", ab));
  Word c = parse_word("x y x^-1 y^-1", ab);
  CHECK(c.length() == 4);
  CHECK(format_word(c, ab) == "x y x^-1 y^-1");
}

TEST_CASE("free_reduce rejects foreign generators") {
  std::vector<Letter> raw{{0, 1}, {3, 1}};
  CHECK_THROWS_AS(free_reduce(raw, 2), AlphabetMismatch);
  CHECK_THROWS_AS(parse_word("x z", Alphabet({"x", "y"})), AlphabetMismatch);
  CHECK_THROWS_AS(parse_word("x^2", Alphabet({"x", "y"})), Error);
}

TEST_CASE("free_reduce is idempotent and length-nonincreasing") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Letter> raw;
    const std::size_t len = rng.below(40);
    for (std::size_t i = 0; i < len; ++i)
      raw.push_back({static_cast<std::uint32_t>(rng.below(3)), static_cast<std::int8_t>(rng.coin() ? 1 : -1)});
    Word w = free_reduce(raw, 3);
    CHECK(w.length() <= raw.size());
    CHECK(free_reduce(w.letters(), 3) == w);
    for (std::size_t i = 0; i + 1 < w.length(); ++i)
      CHECK_FALSE((w.letters()[i].gen == w.letters()[i + 1].gen && w.letters()[i].sign == -w.letters()[i + 1].sign));
  }
}

TEST_CASE("fox derivative examples") {
  const Alphabet ab({"x", "y"});
  const Generator x{0};
  CHECK(fox_derivative(parse_word("x y", ab), x) == GroupRingElement::one());
  CHECK(fox_derivative(parse_word("x^-1", ab), x) == -GroupRingElement(parse_word("x^-1", ab)));
  GroupRingElement d = fox_derivative(parse_word("x y x^-1 y^-1", ab), x);
  CHECK(d == GroupRingElement::one() - GroupRingElement(parse_word("x y x^-1", ab)));
  CHECK(augmentation(d) == 0);
  CHECK(format_element(d, ab) == "1 - (x y x^-1)");
}

TEST_CASE("augmentation") {
  const Alphabet ab({"x", "y"});
  CHECK(augmentation(GroupRingElement{}) == 0);
  CHECK(augmentation(GroupRingElement::one() - GroupRingElement(parse_word("x y x^-1", ab))) == 0);
  CHECK(augmentation(GroupRingElement(parse_word("x", ab), 3) + GroupRingElement::one()) == 4);
}

TEST_CASE("fundamental Fox identity on random words") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + rng.below(6);
    Word w = random_word(rng, k, 64);
    GroupRingElement lhs;
    for (std::uint32_t j = 0; j < k; ++j) lhs += fox_derivative(w, Generator{j}) * x_minus_one(j);
    CHECK(lhs == GroupRingElement(w) - GroupRingElement::one());
  }
}

TEST_CASE("Fox derivative of an inverse") {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = 1 + rng.below(4);
    Word w = random_word(rng, k, 30);
    for (std::uint32_t j = 0; j < k; ++j) {
      GroupRingElement expected = -(GroupRingElement(w.inverse()) * fox_derivative(w, Generator{j}));
      CHECK(fox_derivative(w.inverse(), Generator{j}) == expected);
    }
  }
}

TEST_CASE("product rule") {
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Word u = random_word(rng, 3, 20), v = random_word(rng, 3, 20);
    for (std::uint32_t j = 0; j < 3; ++j) {
      GroupRingElement expected = fox_derivative(u, Generator{j}) + GroupRingElement(u) * fox_derivative(v, Generator{j});
      CHECK(fox_derivative(u * v, Generator{j}) == expected);
    }
  }
}

TEST_CASE("alphabet validation") {
  CHECK_THROWS_AS(Alphabet({"a", "a"}), Error);
  CHECK_THROWS_AS(Alphabet({"a", ""}), Error);
  Alphabet ab({"a", "b"});
  CHECK(ab.find("b")->index == 1);
  CHECK_FALSE(ab.find("c").has_value());
}
