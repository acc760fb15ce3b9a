#pragma once

// Exact linear algebra: Smith normal form over Z, rank and kernels over
// Q(zeta_N), and a modular rank used as a fast path and a cross-check.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "braidcoh/cyclotomic.hpp"

namespace braidcoh {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix transpose() const;
  bool operator==(const IntMatrix& rhs) const = default;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row_i += k * row_j
  void add_row(std::size_t i, std::size_t j, const mpz_class& k);
  /// col_i += k * col_j
  void add_col(std::size_t i, std::size_t j, const mpz_class& k);
  void negate_row(std::size_t i);

  /// One row per line, entries separated by spaces.
  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpz_class> a_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Exact determinant (fraction-free Bareiss elimination).
mpz_class determinant(const IntMatrix& m);

struct SNFResult {
  IntMatrix D, U, V;                 // U * A * V == D
  std::vector<mpz_class> divisors;   // nonzero diagonal of D, d1 | d2 | ...
};

SNFResult smith_normal_form(const IntMatrix& a);

/// Rank of A and its elementary divisors > 1. For a relation matrix
/// (rows = relators, cols = generators) the cokernel is
/// Z^(cols - rank) + sum Z/t.
struct DivisorProfile {
  std::size_t rank = 0;
  std::vector<mpz_class> torsion;
};

DivisorProfile elementary_divisor_profile(const IntMatrix& a);

/// Dense matrix over one cyclotomic field.
class FieldMatrix {
 public:
  FieldMatrix(const CyclotomicField& field, std::size_t rows, std::size_t cols);
  static FieldMatrix identity(const CyclotomicField& field, std::size_t n);
  static FieldMatrix from_rationals(std::size_t rows, std::size_t cols, const std::vector<mpq_class>& entries);

  const CyclotomicField& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Cyc& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  /// Throws ContextError when `v` belongs to another field.
  void set(std::size_t r, std::size_t c, Cyc v);
  void add_to(std::size_t r, std::size_t c, const Cyc& v);

  FieldMatrix operator*(const FieldMatrix& rhs) const;
  FieldMatrix operator+(const FieldMatrix& rhs) const;
  FieldMatrix operator-(const FieldMatrix& rhs) const;
  FieldMatrix scaled(const Cyc& s) const;
  /// Gauss-Jordan inverse; throws on singular input.
  FieldMatrix inverse() const;
  Cyc trace() const;
  Cyc determinant() const;
  bool is_identity() const;
  bool is_zero() const;
  bool operator==(const FieldMatrix& rhs) const;

 private:
  const CyclotomicField* field_;
  std::size_t rows_, cols_;
  std::vector<Cyc> a_;
};

struct RankKernel {
  std::size_t rank = 0;
  std::size_t nullity = 0;
  std::vector<std::vector<Cyc>> kernel;  // basis of {v : M v = 0}
};

RankKernel rank_kernel(const FieldMatrix& m);
std::size_t exact_rank(const FieldMatrix& m);

/// Ring map Z[zeta_N] -> F_q sending zeta_N to a primitive N-th root of
/// unity, with q prime and N | q - 1.
class PrimeFieldEmbedding {
 public:
  /// Picks a prime q < 2^62 deterministically from `seed`.
  PrimeFieldEmbedding(std::uint32_t n, std::uint64_t seed);

  std::uint64_t prime() const { return q_; }
  std::uint64_t root() const { return omega_; }
  std::uint32_t order() const { return n_; }
  /// Image of x; throws if a denominator vanishes mod q.
  std::uint64_t map(const Cyc& x) const;

 private:
  std::uint32_t n_;
  std::uint64_t q_, omega_;
};

bool is_prime_u64(std::uint64_t n);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Rank of the image of m in F_q. Never exceeds exact_rank(m).
std::size_t modular_rank(const FieldMatrix& m, const PrimeFieldEmbedding& emb);

}  // namespace braidcoh
