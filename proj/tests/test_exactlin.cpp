#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "braidcoh/errors.hpp"
#include "braidcoh/exactlin.hpp"
#include "braidcoh/random.hpp"

using namespace braidcoh;

namespace {

IntMatrix mat(std::size_t r, std::size_t c, std::vector<long> v) {
  std::vector<mpz_class> e(v.begin(), v.end());
  return IntMatrix(r, c, e);
}

IntMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long bound) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.between(-bound, bound);
  return m;
}

// Oracle: the k-th determinantal divisor is the gcd of all k x k minors;
// elementary divisors are successive quotients.
void choose(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out,
            std::vector<std::size_t>& cur, std::size_t start = 0) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, out, cur, i + 1);
    cur.pop_back();
  }
}

std::vector<mpz_class> divisors_by_minors(const IntMatrix& a) {
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    choose(a.rows(), k, rs, cur);
    choose(a.cols(), k, cs, cur);
    mpz_class g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(r[i], c[j]);
        mpz_class d = determinant(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

IntMatrix random_unimodular(Rng& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  for (int step = 0; step < 3 * static_cast<int>(n); ++step) {
    std::size_t i = rng.below(n), j = rng.below(n);
    if (i == j) continue;
    u.add_row(i, j, rng.between(-2, 2));
  }
  return u;
}

void check_snf(const IntMatrix& a) {
  SNFResult s = smith_normal_form(a);
  CHECK(s.U * a * s.V == s.D);
  CHECK(abs(determinant(s.U)) == 1);
  CHECK(abs(determinant(s.V)) == 1);
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) CHECK(s.D(i, j) == 0);
  for (std::size_t k = 0; k < s.divisors.size(); ++k) {
    CHECK(s.divisors[k] > 0);
    if (k + 1 < s.divisors.size()) CHECK(s.divisors[k + 1] % s.divisors[k] == 0);
  }
}

}  // namespace

TEST_CASE("SNF examples") {
  CHECK(smith_normal_form(IntMatrix::identity(3)).divisors == std::vector<mpz_class>{1, 1, 1});
  CHECK(smith_normal_form(IntMatrix::identity(3)).D == IntMatrix::identity(3));
  IntMatrix a = mat(2, 2, {2, 4, 6, 8});
  CHECK(divisors_by_minors(a) == std::vector<mpz_class>{2, 4});
  CHECK(smith_normal_form(a).divisors == std::vector<mpz_class>{2, 4});
  // Columns e_i + e_j for the pairs of three points.
  IntMatrix d2 = mat(3, 3, {1, 1, 0, 1, 0, 1, 0, 1, 1});
  CHECK(determinant(d2) == -2);
  CHECK(divisors_by_minors(d2) == std::vector<mpz_class>{1, 1, 2});
  CHECK(smith_normal_form(d2).divisors == std::vector<mpz_class>{1, 1, 2});
}

TEST_CASE("SNF of empty and zero matrices") {
  CHECK(smith_normal_form(IntMatrix(0, 0)).divisors.empty());
  CHECK(smith_normal_form(IntMatrix(0, 3)).V == IntMatrix::identity(3));
  SNFResult z = smith_normal_form(IntMatrix(2, 3));
  CHECK(z.divisors.empty());
  check_snf(IntMatrix(2, 3));
}

TEST_CASE("SNF agrees with the gcd-of-minors oracle") {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix a = random_matrix(rng, 1 + rng.below(4), 1 + rng.below(4), 9);
    if (rng.below(4) == 0)  // force rank deficiency
      for (std::size_t j = 0; j < a.cols(); ++j) a(0, j) = a(a.rows() - 1, j) * 2;
    check_snf(a);
    CHECK(smith_normal_form(a).divisors == divisors_by_minors(a));
  }
}

TEST_CASE("SNF invariance under unimodular multiplication and permutation") {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = 1 + rng.below(8), c = 1 + rng.below(8);
    IntMatrix a = random_matrix(rng, r, c, 20);
    auto base = smith_normal_form(a).divisors;
    IntMatrix b = random_unimodular(rng, r) * a * random_unimodular(rng, c);
    check_snf(b);
    CHECK(smith_normal_form(b).divisors == base);
    IntMatrix p = a;
    p.swap_rows(0, r - 1);
    p.swap_cols(0, c - 1);
    CHECK(smith_normal_form(p).divisors == base);
  }
}

TEST_CASE("elementary divisor profile") {
  IntMatrix surface2(1, 4);  // commutator relator abelianizes to zero
  auto p = elementary_divisor_profile(surface2);
  CHECK(p.rank == 0);
  CHECK(p.torsion.empty());
  IntMatrix d = mat(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 2});
  p = elementary_divisor_profile(d);
  CHECK(p.rank == 3);
  CHECK(p.torsion == std::vector<mpz_class>{2});
  p = elementary_divisor_profile(IntMatrix(0, 3));
  CHECK(p.rank == 0);
}

TEST_CASE("IntMatrix text form") {
  CHECK(mat(2, 2, {1, -2, 0, 3}).str() == "1 -2\n0 3\n");
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<mpz_class>{-1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<mpz_class>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<mpz_class>{1, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
  for (std::uint32_t n = 1; n <= 30; ++n) CHECK(cyclotomic_polynomial(n).size() - 1 == euler_phi(n));
}

TEST_CASE("cyclotomic field arithmetic") {
  const auto& f4 = CyclotomicField::get(4);
  Cyc i = Cyc::zeta_power(f4, 1);
  CHECK((i * i) == Cyc(f4, -1));
  CHECK((i + Cyc::zeta_power(f4, -1)).is_zero());
  const auto& f12 = CyclotomicField::get(12);
  for (std::int64_t k = 0; k < 12; ++k) {
    Cyc z = Cyc::zeta_power(f12, k);
    CHECK((z * Cyc::zeta_power(f12, -k)).is_one());
    CHECK(z.inverse() == Cyc::zeta_power(f12, 12 - k));
    CHECK(Cyc::zeta_power(f12, k) * Cyc::zeta_power(f12, 5) == Cyc::zeta_power(f12, k + 5));
  }
  Cyc a = Cyc(f12, 3) - Cyc::zeta_power(f12, 1) + Cyc::zeta_power(f12, 7);
  a *= mpq_class(2, 5);
  CHECK((a * a.inverse()).is_one());
  const auto& f3 = CyclotomicField::get(3);
  CHECK_THROWS_AS(Cyc(f3, 1) + Cyc(f4, 1), ContextError);
}

TEST_CASE("rank and kernel") {
  const auto& q = CyclotomicField::get(1);
  FieldMatrix z(q, 2, 3);
  auto rk = rank_kernel(z);
  CHECK(rk.rank == 0);
  CHECK(rk.nullity == 3);

  const auto& f3 = CyclotomicField::get(3);
  FieldMatrix row(f3, 1, 2);
  row.set(0, 0, Cyc(f3, 1) - Cyc::zeta_power(f3, 1));
  rk = rank_kernel(row);
  CHECK(rk.rank == 1);
  CHECK(rk.nullity == 1);
  CHECK_THROWS_AS(row.set(0, 1, Cyc(q, 1)), ContextError);
}

TEST_CASE("kernel vectors are annihilated and rank matches modular rank") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t n = static_cast<std::uint32_t>(1 + rng.below(12));
    const auto& f = CyclotomicField::get(n);
    const std::size_t rows = 1 + rng.below(6), cols = 1 + rng.below(6);
    FieldMatrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        Cyc v(f);
        for (int t = 0; t < 3; ++t) v += Cyc::zeta_power(f, static_cast<std::int64_t>(rng.below(n))) * Cyc(f, rng.between(-2, 2));
        m.set(i, j, v);
      }
    if (rows > 1 && rng.coin())  // dependent row
      for (std::size_t j = 0; j < cols; ++j) m.set(rows - 1, j, m(0, j) * Cyc::zeta_power(f, 1));
    auto rk = rank_kernel(m);
    CHECK(rk.rank + rk.nullity == cols);
    for (const auto& v : rk.kernel)
      for (std::size_t i = 0; i < rows; ++i) {
        Cyc s(f);
        for (std::size_t j = 0; j < cols; ++j) s += m(i, j) * v[j];
        CHECK(s.is_zero());
      }
    PrimeFieldEmbedding emb(n, 1234 + trial);
    CHECK((emb.prime() - 1) % n == 0);
    CHECK(powmod(emb.root(), n, emb.prime()) == 1);
    CHECK(modular_rank(m, emb) == rk.rank);
  }
}

TEST_CASE("field matrix inverse and determinant") {
  FieldMatrix a = FieldMatrix::from_rationals(2, 2, {2, 1, 1, 1});
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.determinant().is_one());
  CHECK(a.trace() == Cyc(CyclotomicField::get(1), 3));
}

TEST_CASE("Miller-Rabin") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(2305843009213693951ULL));  // 2^61 - 1
  CHECK_FALSE(is_prime_u64(2305843009213693953ULL));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(561));
}
