#include "braidcoh/exactlin.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "braidcoh/errors.hpp"

namespace braidcoh {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) throw Error("IntMatrix: entry count does not match shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error("IntMatrix: shape mismatch in product");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const mpz_class& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    if ((*this)(j, c) != 0) (*this)(i, c) += k * (*this)(j, c);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const mpz_class& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    if ((*this)(r, j) != 0) (*this)(r, i) += k * (*this)(r, j);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
    os << '\n';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.str(); }

mpz_class determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

bool find_min_entry(const IntMatrix& d, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  mpz_class best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const mpz_class& v = d(i, j);
      if (v == 0) continue;
      if (!found || abs(v) < best) {
        best = abs(v);
        pr = i;
        pc = j;
        found = true;
        if (best == 1) return true;
      }
    }
  return found;
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SNFResult res{a, IntMatrix::identity(m), IntMatrix::identity(n), {}};
  IntMatrix& d = res.D;
  IntMatrix& u = res.U;
  IntMatrix& v = res.V;

  auto move_to_pivot = [&](std::size_t t, std::size_t pr, std::size_t pc) {
    d.swap_rows(t, pr);
    u.swap_rows(t, pr);
    d.swap_cols(t, pc);
    v.swap_cols(t, pc);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_min_entry(d, t, pr, pc)) break;
    move_to_pivot(t, pr, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        mpz_class q = d(i, t) / d(t, t);
        d.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        mpz_class q = d(t, j) / d(t, t);
        d.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survives; make it the pivot.
        std::size_t br = t, bc = t;
        mpz_class best = abs(d(t, t));
        for (std::size_t i = t + 1; i < m; ++i)
          if (d(i, t) != 0 && abs(d(i, t)) < best) best = abs(d(i, t)), br = i, bc = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(t, j) != 0 && abs(d(t, j)) < best) best = abs(d(t, j)), br = t, bc = j;
        move_to_pivot(t, br, bc);
        continue;
      }
      // Row and column are clear; enforce the divisibility chain.
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row(t, i, 1);
            u.add_row(t, i, 1);
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  for (std::size_t t = 0; t < std::min(m, n); ++t)
    if (d(t, t) != 0) res.divisors.push_back(d(t, t));
  return res;
}

DivisorProfile elementary_divisor_profile(const IntMatrix& a) {
  DivisorProfile p;
  for (const auto& dv : smith_normal_form(a).divisors) {
    ++p.rank;
    if (dv > 1) p.torsion.push_back(dv);
  }
  return p;
}

// ---------------------------------------------------------------------------

FieldMatrix::FieldMatrix(const CyclotomicField& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), a_(rows * cols, Cyc(field)) {}

FieldMatrix FieldMatrix::identity(const CyclotomicField& field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = Cyc(field, 1);
  return m;
}

FieldMatrix FieldMatrix::from_rationals(std::size_t rows, std::size_t cols,
                                        const std::vector<mpq_class>& entries) {
  if (entries.size() != rows * cols) throw Error("FieldMatrix: entry count does not match shape");
  const auto& q = CyclotomicField::get(1);
  FieldMatrix m(q, rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.a_[i] = Cyc(q, entries[i]);
  return m;
}

void FieldMatrix::set(std::size_t r, std::size_t c, Cyc v) {
  if (&v.field() != field_)
    throw ContextError("entry from Q(zeta_" + std::to_string(v.field().order()) +
                       ") placed in a matrix over Q(zeta_" + std::to_string(field_->order()) + ")");
  a_[r * cols_ + c] = std::move(v);
}

void FieldMatrix::add_to(std::size_t r, std::size_t c, const Cyc& v) { a_[r * cols_ + c] += v; }

FieldMatrix FieldMatrix::operator*(const FieldMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error("FieldMatrix: shape mismatch in product");
  if (field_ != rhs.field_) throw ContextError("FieldMatrix: product across fields");
  FieldMatrix out(*field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Cyc& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Cyc& y = rhs(k, j);
        if (!y.is_zero()) out.a_[i * rhs.cols_ + j] += x * y;
      }
    }
  return out;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("FieldMatrix: shape mismatch in sum");
  FieldMatrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += rhs.a_[i];
  return out;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("FieldMatrix: shape mismatch in difference");
  FieldMatrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] -= rhs.a_[i];
  return out;
}

FieldMatrix FieldMatrix::scaled(const Cyc& s) const {
  FieldMatrix out = *this;
  for (auto& x : out.a_) x *= s;
  return out;
}

FieldMatrix FieldMatrix::inverse() const {
  if (rows_ != cols_) throw Error("inverse of a non-square matrix");
  const std::size_t n = rows_;
  FieldMatrix a = *this;
  FieldMatrix inv = identity(*field_, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) throw Error("matrix is singular");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.a_[p * n + j], a.a_[c * n + j]);
        std::swap(inv.a_[p * n + j], inv.a_[c * n + j]);
      }
    Cyc pinv = a(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a.a_[c * n + j] *= pinv;
      inv.a_[c * n + j] *= pinv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      Cyc f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a.a_[i * n + j] -= f * a(c, j);
        inv.a_[i * n + j] -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Cyc FieldMatrix::trace() const {
  Cyc t(*field_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Cyc FieldMatrix::determinant() const {
  if (rows_ != cols_) throw Error("determinant of a non-square matrix");
  const std::size_t n = rows_;
  FieldMatrix a = *this;
  Cyc det(*field_, 1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Cyc(*field_);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.a_[p * n + j], a.a_[c * n + j]);
      det = -det;
    }
    det *= a(c, c);
    Cyc pinv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Cyc f = a(i, c) * pinv;
      for (std::size_t j = c; j < n; ++j) a.a_[i * n + j] -= f * a(c, j);
    }
  }
  return det;
}

bool FieldMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Cyc& x = (*this)(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

bool FieldMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Cyc& x) { return x.is_zero(); });
}

bool FieldMatrix::operator==(const FieldMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
  if (field_ != rhs.field_) throw ContextError("FieldMatrix: comparison across fields");
  return a_ == rhs.a_;
}

RankKernel rank_kernel(const FieldMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const CyclotomicField& f = m.field();
  std::vector<std::vector<Cyc>> a(rows, std::vector<Cyc>(cols, Cyc(f)));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Cyc pinv = a[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= pinv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Cyc factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= factor * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  RankKernel out;
  out.rank = r;
  out.nullity = cols - r;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Cyc> v(cols, Cyc(f));
    v[free] = Cyc(f, 1);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a[k][free];
    out.kernel.push_back(std::move(v));
  }
  return out;
}

std::size_t exact_rank(const FieldMatrix& m) { return rank_kernel(m).rank; }

// ---------------------------------------------------------------------------

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // These bases are deterministic for all 64-bit n.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t mpz_mod_u64(const mpz_class& z, std::uint64_t q) {
  mpz_class r;
  mpz_class qq;
  mpz_import(qq.get_mpz_t(), 1, 1, sizeof(q), 0, 0, &q);
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), qq.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

}  // namespace

PrimeFieldEmbedding::PrimeFieldEmbedding(std::uint32_t n, std::uint64_t seed) : n_(n) {
  if (n == 0) throw RangeError("root-of-unity order must be positive");
  std::uint64_t state = seed;
  const std::uint64_t base = (1ULL << 61) / n;
  std::uint64_t t = base + splitmix64(state) % (1ULL << 40);
  while (!is_prime_u64(n * t + 1)) ++t;
  q_ = n * t + 1;
  const auto factors = prime_factors(n);
  for (std::uint64_t x = 2;; ++x) {
    std::uint64_t w = powmod(x, (q_ - 1) / n, q_);
    bool primitive = true;
    for (auto p : factors)
      if (powmod(w, n / p, q_) == 1) primitive = false;
    if (primitive) {
      omega_ = w;
      break;
    }
  }
}

std::uint64_t PrimeFieldEmbedding::map(const Cyc& x) const {
  if (x.field().order() != n_)
    throw ContextError("embedding for order " + std::to_string(n_) + " applied to Q(zeta_" +
                       std::to_string(x.field().order()) + ")");
  std::uint64_t acc = 0, pw = 1;
  for (const auto& c : x.coeffs()) {
    if (c != 0) {
      std::uint64_t num = mpz_mod_u64(c.get_num(), q_);
      std::uint64_t den = mpz_mod_u64(c.get_den(), q_);
      if (den == 0) throw Error("denominator vanishes modulo the chosen prime");
      std::uint64_t v = mulmod(num, powmod(den, q_ - 2, q_), q_);
      acc = (acc + mulmod(v, pw, q_)) % q_;
    }
    pw = mulmod(pw, omega_, q_);
  }
  return acc;
}

std::size_t modular_rank(const FieldMatrix& m, const PrimeFieldEmbedding& emb) {
  const std::uint64_t q = emb.prime();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = emb.map(m(i, j));
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::uint64_t inv = powmod(a[r][c], q - 2, q);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      std::uint64_t f = mulmod(a[i][c], inv, q);
      for (std::size_t j = c; j < cols; ++j)
        a[i][j] = (a[i][j] + q - mulmod(f, a[r][j], q)) % q;
    }
    ++r;
  }
  return r;
}

}  // namespace braidcoh
