#include "braidcoh/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "braidcoh/errors.hpp"

namespace braidcoh {

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials, divisor monic.
std::vector<mpz_class> divide_monic(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<mpz_class> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    mpz_class c = num[i];
    q[i - dn] = c;
    for (std::size_t k = 0; k <= dn; ++k) num[i - dn + k] -= c * den[k];
  }
  return q;
}

// Remainder and quotient over Q.
void poly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
  const mpq_class& lead = b.back();
  while (r.size() >= b.size() && !r.empty()) {
    std::size_t shift = r.size() - b.size();
    mpq_class c = r.back() / lead;
    q[shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k) r[shift + k] -= c * b[k];
    trim(r);
  }
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<mpz_class> cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0) throw RangeError("cyclotomic order must be positive");
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<mpz_class> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  return p;
}

const CyclotomicField& CyclotomicField::get(std::uint32_t n) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::unique_ptr<CyclotomicField>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot.reset(new CyclotomicField(n));
  return *slot;
}

CyclotomicField::CyclotomicField(std::uint32_t n) : n_(n), phi_(cyclotomic_polynomial(n)) {}

Cyc::Cyc(const CyclotomicField& field) : field_(&field), c_(field.degree(), 0) {}

Cyc::Cyc(const CyclotomicField& field, const mpq_class& rational) : Cyc(field) {
  c_[0] = rational;
  c_[0].canonicalize();
}

Cyc Cyc::zeta_power(const CyclotomicField& field, std::int64_t k) {
  const std::int64_t n = field.order();
  std::int64_t e = ((k % n) + n) % n;
  const std::size_t deg = field.degree();
  const auto& phi = field.modulus();
  // x^e reduced mod Phi_N, by repeated multiplication by x.
  QPoly p(deg, 0);
  p[0] = 1;
  for (std::int64_t step = 0; step < e; ++step) {
    mpq_class top = p[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) p[i] = p[i - 1];
    p[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < deg; ++i) p[i] -= top * phi[i];
  }
  Cyc out(field);
  out.c_ = std::move(p);
  return out;
}

void Cyc::check_context(const Cyc& rhs) const {
  if (field_ != rhs.field_)
    throw ContextError("cannot combine elements of Q(zeta_" + std::to_string(field_->order()) +
                       ") and Q(zeta_" + std::to_string(rhs.field_->order()) + ")");
}

bool Cyc::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

mpq_class Cyc::rational() const {
  if (!is_rational()) throw Error("element is not rational");
  return c_[0];
}

bool Cyc::is_one() const { return is_rational() && c_[0] == 1; }

Cyc& Cyc::operator+=(const Cyc& rhs) {
  check_context(rhs);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& rhs) {
  check_context(rhs);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

Cyc& Cyc::operator*=(const mpq_class& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

Cyc& Cyc::operator*=(const Cyc& rhs) {
  check_context(rhs);
  const std::size_t deg = c_.size();
  if (deg == 1) {
    c_[0] *= rhs.c_[0];
    return *this;
  }
  QPoly prod(2 * deg - 1, 0);
  for (std::size_t i = 0; i < deg; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j)
      if (rhs.c_[j] != 0) prod[i + j] += c_[i] * rhs.c_[j];
  }
  const auto& phi = field_->modulus();
  for (std::size_t i = prod.size(); i-- > deg;) {
    if (prod[i] == 0) continue;
    mpq_class top = prod[i];
    for (std::size_t k = 0; k <= deg; ++k) prod[i - deg + k] -= top * phi[k];
  }
  prod.resize(deg);
  c_ = std::move(prod);
  return *this;
}

Cyc Cyc::operator-() const {
  Cyc out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw Error("division by zero in Q(zeta_N)");
  if (is_rational()) return Cyc(*field_, 1 / c_[0]);
  // Extended Euclid: s*a + t*Phi = gcd (a nonzero constant, Phi irreducible).
  QPoly modulus(field_->modulus().begin(), field_->modulus().end());
  QPoly r0 = modulus, r1 = c_;
  trim(r1);
  QPoly s0, s1 = {1};
  while (r1.size() > 1) {
    QPoly q, r;
    poly_divmod(r0, r1, q, r);
    QPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant; inverse = s1 / r1.
  QPoly q, rem;
  poly_divmod(s1, modulus, q, rem);
  Cyc out(*field_);
  for (std::size_t i = 0; i < rem.size(); ++i) out.c_[i] = rem[i] / r1[0];
  return out;
}

bool Cyc::operator==(const Cyc& rhs) const {
  check_context(rhs);
  return c_ == rhs.c_;
}

std::string Cyc::str() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += c_[i].get_str();
    if (i == 1) out += "*z";
    else if (i > 1) out += "*z^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace braidcoh
