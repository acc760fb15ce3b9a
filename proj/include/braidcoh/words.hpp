#pragma once

// Free-group words, the integral group ring of a free group, and Fox
// derivatives.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

namespace braidcoh {

struct Generator {
  std::uint32_t index = 0;
  auto operator<=>(const Generator&) const = default;
};

struct Letter {
  std::uint32_t gen = 0;
  std::int8_t sign = 1;  // +1 or -1

  Letter inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }
  auto operator<=>(const Letter&) const = default;
};

/// Ordered list of distinct, nonempty generator names.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Generator> find(std::string_view name) const;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

/// A freely reduced word. Every constructor reduces.
class Word {
 public:
  Word() = default;
  static Word generator(std::uint32_t gen, int sign = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word operator*(const Word& rhs) const;
  /// Largest generator index used plus one (0 for the empty word).
  std::uint32_t span_size() const;

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  friend Word free_reduce(std::span<const Letter>, std::size_t);
  std::vector<Letter> letters_;
};

/// Unique reduced representative of the letter sequence. Throws
/// AlphabetMismatch if a letter's generator index is >= alphabet_size.
Word free_reduce(std::span<const Letter> letters, std::size_t alphabet_size);

Word commutator(const Word& u, const Word& v);

/// Finite Z-linear combination of reduced words, zero coefficients dropped.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(const Word& w, mpz_class coeff = 1);
  static GroupRingElement one() { return GroupRingElement(Word{}); }

  const std::map<Word, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coefficient(const Word& w) const;

  GroupRingElement& add(const Word& w, const mpz_class& coeff);
  GroupRingElement& operator+=(const GroupRingElement& rhs);
  GroupRingElement& operator-=(const GroupRingElement& rhs);
  GroupRingElement operator+(const GroupRingElement& rhs) const;
  GroupRingElement operator-(const GroupRingElement& rhs) const;
  GroupRingElement operator-() const;
  GroupRingElement operator*(const GroupRingElement& rhs) const;

  bool operator==(const GroupRingElement& rhs) const { return terms_ == rhs.terms_; }

 private:
  std::map<Word, mpz_class> terms_;
};

/// Left Fox derivative of w with respect to generator x.
GroupRingElement fox_derivative(const Word& w, Generator x);

/// Sum of coefficients (evaluation at the trivial representation).
mpz_class augmentation(const GroupRingElement& e);

/// Whitespace-separated tokens `name` or `name^-1`.
Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(const Word& w, const Alphabet& alphabet);
std::string format_element(const GroupRingElement& e, const Alphabet& alphabet);

}  // namespace braidcoh
