#include "pdm/combinat.hpp"

#include <mutex>
#include <vector>

namespace pdm {

namespace {

Int factorial(long m) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

std::mutex memo_mu;
std::vector<Int> catalan_memo;
std::vector<Int> motzkin_memo;

}  // namespace

Int binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return r;
}

Int catalan(long l) {
  if (l < 0) fail(errc::bad_parameters, "catalan index must be nonnegative");
  std::lock_guard<std::mutex> lock(memo_mu);
  if (catalan_memo.empty()) catalan_memo.push_back(1);
  while (static_cast<long>(catalan_memo.size()) <= l) {
    long m = static_cast<long>(catalan_memo.size());
    Int t = catalan_memo.back() * (2 * (2 * m - 1));
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(),
                    static_cast<unsigned long>(m + 1));
    catalan_memo.push_back(t);
  }
  return catalan_memo[l];
}

Int motzkin(long m) {
  if (m < 0) fail(errc::bad_parameters, "motzkin index must be nonnegative");
  std::lock_guard<std::mutex> lock(memo_mu);
  if (motzkin_memo.empty()) motzkin_memo = {1, 1};
  while (static_cast<long>(motzkin_memo.size()) <= m) {
    long i = static_cast<long>(motzkin_memo.size());
    Int t = motzkin_memo[i - 1] * (2 * i + 1) + motzkin_memo[i - 2] * (3 * (i - 1));
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(),
                    static_cast<unsigned long>(i + 2));
    motzkin_memo.push_back(t);
  }
  return motzkin_memo[m];
}

Int pochhammer(long x, long m) {
  if (m < 0) fail(errc::bad_parameters, "pochhammer length must be nonnegative");
  Int r = 1;
  for (long i = 0; i < m; ++i) r *= x + i;
  return r;
}

Rat hyp2f1_terminating(long m, long b, long c) {
  if (m < 0) fail(errc::bad_parameters, "hyp2f1 order must be nonnegative");
  Rat sum = 0;
  for (long r = 0; r <= m; ++r) {
    Int num = pochhammer(b, r);
    if (num == 0) continue;
    Int den = pochhammer(c, r);
    if (den == 0)
      fail(errc::pole_error,
           "term " + std::to_string(r) + " has a vanishing denominator");
    Rat term(binomial(m, r) * num, den);
    term.canonicalize();
    if (r & 1)
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

namespace {

// Products of consecutive integers vanish at most once; returns the product
// of the nonzero factors and whether a zero factor occurred.
std::pair<Int, bool> poch_split(long x, long m) {
  Int prod = 1;
  bool zero = false;
  for (long i = 0; i < m; ++i) {
    if (x + i == 0)
      zero = true;
    else
      prod *= x + i;
  }
  return {prod, zero};
}

}  // namespace

Rat chu_vandermonde(long m, long b, long c) {
  if (m < 0) fail(errc::bad_parameters, "order must be nonnegative");
  if (m + c - 1 == 0)
    fail(errc::hypothesis_violated, "m + c - 1 = 0");
  auto [num, zn] = poch_split(c - b, m);
  auto [den, zd] = poch_split(c, m);
  if (zd && !zn)
    fail(errc::pole_error, "(c)_m vanishes while (c-b)_m does not");
  if (zn && !zd) return 0;
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool wz_certificate(long m, long b, long c) {
  if (m < 1) fail(errc::bad_parameters, "certificate needs m >= 1");
  if (m + c - 1 == 0)
    fail(errc::hypothesis_violated, "m + c - 1 = 0");

  auto F = [&](long mm, long k) -> Rat {
    if (k > mm) return 0;
    Int num = pochhammer(-mm, k) * pochhammer(b, k) * pochhammer(c, mm);
    Int den = factorial(k) * pochhammer(c, k) * pochhammer(c - b, mm);
    if (den == 0)
      fail(errc::pole_error, "F(" + std::to_string(mm) + "," +
                                 std::to_string(k) + ") has a vanishing denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
  };
  auto H = [&](long k) -> Rat {
    if (k > m) return 0;
    Rat g(Int(k) * Int(1 - c - k), Int(m) * Int(m + c - 1));
    g.canonicalize();
    return F(m, k) * g;
  };

  Rat total = 0;
  for (long k = 0; k <= m; ++k) {
    if (F(m, k) - F(m - 1, k) != H(k + 1) - H(k)) return false;
    total += F(m, k);
  }
  return total == 1;
}

Int catalan_convolution(long kfold, long n) {
  if (kfold < 1) fail(errc::bad_parameters, "convolution order must be positive");
  if (n < 0) fail(errc::bad_parameters, "convolution length must be nonnegative");
  Int t = binomial(2 * n + kfold, n) * kfold;
  mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(),
                  static_cast<unsigned long>(2 * n + kfold));
  return t;
}

namespace {

// kfold = 0 extension used inside the inclusion-exclusion sums.
Int conv_ext(long kfold, long n) {
  if (kfold == 0) return n == 0 ? 1 : 0;
  return catalan_convolution(kfold, n);
}

Int gamma_fact(long arg) {  // Gamma at a positive integer
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(arg - 1));
  return r;
}

}  // namespace

Int rmo_cell_gamma(long n, long k, long j, Side side) {
  // Only this Gamma argument can reach a non-positive integer; its
  // reciprocal is then zero and so is the count.
  if (1 + j - k + n <= 0) return 0;
  Int num, den;
  if (side == Side::right) {
    num = (1 - j + 2 * k) * gamma_fact(1 + j + 2 * n);
    den = gamma_fact(1 + j - k + n) * gamma_fact(2 + k + n);
  } else {
    num = (2 - j + 2 * k) * gamma_fact(2 + j + 2 * n);
    den = gamma_fact(1 + j - k + n) * gamma_fact(3 + k + n);
  }
  Int q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Int rmo_cell_convolution(long n, long k, long j, Side side) {
  Int sum = 0;
  long terms = (side == Side::right) ? k - j : k - j + 1;
  long len = (side == Side::right) ? n : n + 1;
  for (long r = 0; r <= terms; ++r) {
    Int t = binomial(terms, r) * conv_ext(k - r + 1, len);
    if (r & 1)
      sum -= t;
    else
      sum += t;
  }
  return sum;
}

Int cell_count(FamilyTag family, long n, long k, long j, Side side) {
  if (n < 1) fail(errc::bad_parameters, "cell_count needs n >= 1");
  switch (family) {
    case FamilyTag::rTL: {
      if (k % 2 != 0 || k < 2 || k > 2 * n)
        fail(errc::bad_parameters,
             "rTL through count must be even with 2 <= k <= 2n");
      long half = (2 * n - k) / 2;
      return side == Side::right ? binomial(n - 1, half) : binomial(n, half);
    }
    case FamilyTag::rMo: {
      if (k < 0 || k > 2 * n || j < 0 || 2 * j > k)
        fail(errc::bad_parameters, "need 0 <= k <= 2n and 0 <= j <= k/2");
      Int g = rmo_cell_gamma(n, k, j, side);
      Int s = rmo_cell_convolution(n, k, j, side);
      if (g != s)
        fail(errc::formula_brute_mismatch,
             "closed form and convolution sum disagree at (n,k,j)=(" +
                 std::to_string(n) + "," + std::to_string(k) + "," +
                 std::to_string(j) + ")");
      return g;
    }
    case FamilyTag::rpRo: {
      if (k < 0 || k > 2 * n || j < 0 || 2 * j > k)
        fail(errc::bad_parameters, "need 0 <= k <= 2n and 0 <= j <= k/2");
      return binomial(n + j, k);
    }
    default:
      fail(errc::bad_parameters,
           "cell counts by (k,j) apply to the rigid families only");
  }
}

Int sequence_count(long k, long j) {
  if (k < 0 || j < 0 || 2 * j > k)
    fail(errc::bad_parameters, "need k >= 0 and 0 <= j <= k/2");
  return binomial(k + 1, 2 * j + 1);
}

Int monoid_size_formula(FamilyTag family, long n) {
  if (n < 0) fail(errc::bad_parameters, "n must be nonnegative");
  switch (family) {
    case FamilyTag::TL:
      return catalan(2 * n);
    case FamilyTag::Mo:
      return motzkin(4 * n);
    case FamilyTag::pRo: {
      Int sum = 0;
      for (long k = 0; k <= 2 * n; ++k) {
        Int b = binomial(2 * n, k);
        sum += b * b;
      }
      return sum;
    }
    case FamilyTag::rTL:
      if (n == 0) return 1;
      return binomial(2 * n - 1, n);
    case FamilyTag::rMo: {
      Int sum = 0;
      for (long k = 0; k <= 2 * n; ++k)
        for (long j = 0; 2 * j <= k; ++j)
          sum += sequence_count(k, j) * rmo_cell_gamma(n, k, j, Side::right) *
                 rmo_cell_gamma(n, k, j, Side::left);
      return sum;
    }
    case FamilyTag::rpRo: {
      Int sum = 0;
      for (long k = 0; k <= 2 * n; ++k)
        for (long j = 0; 2 * j <= k; ++j) {
          Int b = binomial(n + j, k);
          sum += sequence_count(k, j) * b * b;
        }
      return sum;
    }
  }
  fail(errc::bad_parameters, "unknown family");
}

}  // namespace pdm
