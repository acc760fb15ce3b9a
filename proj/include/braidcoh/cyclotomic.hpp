#pragma once

// Exact arithmetic in Q(zeta_N), represented as Q[x] / Phi_N(x).

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace braidcoh {

/// Integer coefficients of the N-th cyclotomic polynomial, lowest degree first.
std::vector<mpz_class> cyclotomic_polynomial(std::uint32_t n);
std::uint32_t euler_phi(std::uint32_t n);

/// Arithmetic context for Q(zeta_N). Instances are interned: one per N for
/// the lifetime of the process, so contexts compare by address.
class CyclotomicField {
 public:
  static const CyclotomicField& get(std::uint32_t n);

  std::uint32_t order() const { return n_; }
  std::uint32_t degree() const { return static_cast<std::uint32_t>(phi_.size()) - 1; }
  const std::vector<mpz_class>& modulus() const { return phi_; }

 private:
  explicit CyclotomicField(std::uint32_t n);
  std::uint32_t n_;
  std::vector<mpz_class> phi_;
};

/// Element of Q(zeta_N). N = 1 gives the rationals.
class Cyc {
 public:
  explicit Cyc(const CyclotomicField& field);
  Cyc(const CyclotomicField& field, const mpq_class& rational);

  static Cyc zeta_power(const CyclotomicField& field, std::int64_t k);

  const CyclotomicField& field() const { return *field_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the element lies in Q; then `rational()` returns it.
  bool is_rational() const;
  mpq_class rational() const;

  Cyc& operator+=(const Cyc& rhs);
  Cyc& operator-=(const Cyc& rhs);
  Cyc& operator*=(const Cyc& rhs);
  Cyc& operator*=(const mpq_class& s);
  Cyc operator+(const Cyc& rhs) const { Cyc t = *this; return t += rhs; }
  Cyc operator-(const Cyc& rhs) const { Cyc t = *this; return t -= rhs; }
  Cyc operator*(const Cyc& rhs) const { Cyc t = *this; return t *= rhs; }
  Cyc operator-() const;
  Cyc inverse() const;
  Cyc operator/(const Cyc& rhs) const { return *this * rhs.inverse(); }

  bool operator==(const Cyc& rhs) const;
  bool operator!=(const Cyc& rhs) const { return !(*this == rhs); }

  std::string str() const;

 private:
  void check_context(const Cyc& rhs) const;
  const CyclotomicField* field_;
  std::vector<mpq_class> c_;  // length == degree
};

}  // namespace braidcoh
