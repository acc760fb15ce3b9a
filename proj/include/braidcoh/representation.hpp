#pragma once

// Characters with exact root-of-unity values, matrix representations over
// Q, and their linear extension to the group ring.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "braidcoh/cyclotomic.hpp"
#include "braidcoh/exactlin.hpp"
#include "braidcoh/presentation.hpp"
#include "braidcoh/words.hpp"

namespace braidcoh {

/// Generator x_j maps to radial_j * zeta_N^(exponent_j). Without a radial
/// part every value is a root of unity.
class Character {
 public:
  Character(std::uint32_t n, std::vector<std::int64_t> exponents,
            std::optional<std::vector<mpq_class>> radial = std::nullopt);
  static Character trivial(std::size_t generators);

  std::uint32_t order() const { return n_; }
  std::size_t generator_count() const { return exp_.size(); }
  std::int64_t exponent(std::size_t j) const { return exp_.at(j); }
  const std::vector<std::int64_t>& exponents() const { return exp_; }
  const std::optional<std::vector<mpq_class>>& radial() const { return radial_; }
  mpq_class radial_at(std::size_t j) const { return radial_ ? (*radial_)[j] : mpq_class(1); }

  bool is_trivial() const;
  /// Same character written over Q(zeta_m); m must be a multiple of N.
  Character rescaled(std::uint32_t m) const;
  Character inverse() const;
  /// Pointwise product; both sides are lifted to the lcm of their orders.
  Character operator*(const Character& rhs) const;
  /// Exact equality of the underlying homomorphisms.
  bool operator==(const Character& rhs) const;

  /// chi(w) in Q(zeta_N). Throws AlphabetMismatch on foreign generators.
  Cyc evaluate(const Word& w) const;
  Cyc value(std::size_t j) const;

 private:
  std::uint32_t n_;
  std::vector<std::int64_t> exp_;  // reduced mod N
  std::optional<std::vector<mpq_class>> radial_;
};

/// Characters rho_1..rho_n of one factor group, on a common cyclotomy.
class CharacterTuple {
 public:
  explicit CharacterTuple(std::vector<Character> components);
  static CharacterTuple trivial(std::size_t n, std::size_t factor_generators);

  std::size_t size() const { return comps_.size(); }
  const Character& operator[](std::size_t i) const { return comps_.at(i); }
  const std::vector<Character>& components() const { return comps_; }
  std::uint32_t order() const { return comps_.empty() ? 1 : comps_.front().order(); }

  bool is_trivial() const;
  /// rho_i * rho_j == 1, decided exactly.
  bool pair_is_inverse(std::size_t i, std::size_t j) const;
  /// Character of the product group on the concatenated alphabet.
  Character product_character() const;

 private:
  std::vector<Character> comps_;
};

enum class MatrixFlavor { SL, GL };

/// Generator images in GL_r(Q). With `adjoint` set, cohomology uses the
/// conjugation action on sl_r (SL) or gl_r (GL) instead of Q^r.
struct MatrixRep {
  std::vector<FieldMatrix> images;
  MatrixFlavor flavor = MatrixFlavor::SL;
  bool adjoint = false;

  std::size_t degree() const { return images.empty() ? 0 : images.front().rows(); }
};

struct ValidationResult {
  bool ok = true;
  std::optional<std::size_t> failing_relator;
  std::string reason;
};

ValidationResult validate_character(const Presentation& p, const Character& chi);
ValidationResult validate_matrix_rep(const Presentation& p, const MatrixRep& rho);

/// A representation on Q(zeta_N)^d given by generator images and inverses.
class LinearRep {
 public:
  static LinearRep from_character(const Character& chi);
  /// Uses the adjoint action when rho.adjoint is set.
  static LinearRep from_matrix(const MatrixRep& rho);
  static LinearRep adjoint_of(const MatrixRep& rho, MatrixFlavor flavor);

  const CyclotomicField& field() const { return *field_; }
  std::size_t dim() const { return dim_; }
  std::size_t generator_count() const { return images_.size(); }
  const FieldMatrix& image(std::size_t j) const { return images_.at(j); }
  FieldMatrix word_image(const Word& w) const;

 private:
  LinearRep(const CyclotomicField& f, std::size_t d) : field_(&f), dim_(d) {}
  const CyclotomicField* field_;
  std::size_t dim_;
  std::vector<FieldMatrix> images_, inverses_;
};

/// Linear extension of a character to Z[F].
Cyc evaluate(const GroupRingElement& e, const Character& chi);
/// Linear extension of a representation to Z[F], as a dim x dim matrix.
FieldMatrix evaluate(const GroupRingElement& e, const LinearRep& rho);

/// `{"N": 3, "values": {"a": 1}, "radial": {"a": "2/3"}}`; unnamed generators
/// map to 1.
Character parse_character_json(std::string_view text, const Alphabet& alphabet);
std::string character_to_json(const Character& chi, const Alphabet& alphabet);

}  // namespace braidcoh
