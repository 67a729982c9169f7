#include <doctest.h>

#include <functional>
#include <vector>

#include "pdm/combinat.hpp"
#include "pdm/error.hpp"

using namespace pdm;

namespace {

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const toolkit_error& e) {
    return e.code();
  }
  REQUIRE_MESSAGE(false, "expected toolkit_error");
  return errc::parse_error;
}

// direct k-fold convolution of the Catalan sequence by dynamic programming
Int direct_convolution(long kfold, long n) {
  std::vector<Int> cat(n + 1);
  for (long i = 0; i <= n; ++i) cat[i] = catalan(i);
  std::vector<Int> acc(n + 1, 0);
  acc[0] = 1;
  for (long f = 0; f < kfold; ++f) {
    std::vector<Int> next(n + 1, 0);
    for (long s = 0; s <= n; ++s)
      for (long c = 0; c + s <= n; ++c) next[s + c] += acc[s] * cat[c];
    acc = std::move(next);
  }
  return acc[n];
}

}  // namespace

TEST_CASE("base sequences") {
  long cat[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (long i = 0; i < 10; ++i) CHECK(catalan(i) == cat[i]);
  long mot[] = {1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511};
  for (long i = 0; i < 13; ++i) CHECK(motzkin(i) == mot[i]);

  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(-1, 0) == 0);

  CHECK(pochhammer(3, 4) == 3 * 4 * 5 * 6);
  CHECK(pochhammer(1, 0) == 1);
  CHECK(pochhammer(-3, 3) == -6);
  CHECK(pochhammer(-3, 4) == 0);  // range crosses zero
  CHECK(pochhammer(0, 2) == 0);
}

TEST_CASE("terminating sum equals the product ratio") {
  // small values checked by hand
  CHECK(chu_vandermonde(2, -3, 4) == Rat(14, 5));
  CHECK(hyp2f1_terminating(2, -3, 4) == Rat(14, 5));
  CHECK(chu_vandermonde(1, 2, 5) == Rat(3, 5));
  CHECK(hyp2f1_terminating(1, 2, 5) == Rat(3, 5));
  CHECK(chu_vandermonde(0, 7, -9) == 1);

  // matched vanishing products cancel instead of diverging
  CHECK(chu_vandermonde(5, -2, -2) == 6);
  CHECK(hyp2f1_terminating(5, -2, -2) == 6);

  // sweep of small admissible parameters
  for (long m = 0; m <= 6; ++m)
    for (long b = -6; b <= 6; ++b)
      for (long c = -6; c <= 6; ++c) {
        if (m + c - 1 == 0) continue;
        Rat lhs, rhs;
        bool lp = false, rp = false;
        try {
          lhs = hyp2f1_terminating(m, b, c);
        } catch (const toolkit_error& e) {
          REQUIRE(e.code() == errc::pole_error);
          lp = true;
        }
        try {
          rhs = chu_vandermonde(m, b, c);
        } catch (const toolkit_error& e) {
          REQUIRE(e.code() == errc::pole_error);
          rp = true;
        }
        // The sum form takes limits term by term, so it can pole where the
        // ratio form has matched vanishing products and stays finite; the
        // converse never happens.
        if (rp) CHECK(lp);
        if (!lp) CHECK(lhs == rhs);
        if (lp && !rp) {
          CHECK(pochhammer(c, m) == 0);
          CHECK(pochhammer(c - b, m) == 0);
        }
      }

  // unmatched vanishing denominator is a pole
  CHECK(code_of([] { chu_vandermonde(3, 2, -1); }) == errc::pole_error);
  CHECK(code_of([] { hyp2f1_terminating(3, 2, -1); }) == errc::pole_error);
  CHECK(code_of([] { chu_vandermonde(4, 7, -3); }) == errc::hypothesis_violated);
  CHECK(code_of([] { chu_vandermonde(-1, 2, 5); }) == errc::bad_parameters);
}

TEST_CASE("telescoping certificate") {
  CHECK(wz_certificate(2, -3, 4));
  CHECK(wz_certificate(4, 2, 7));
  CHECK(wz_certificate(6, -5, 11));
  CHECK(wz_certificate(3, 5, -9));

  // b == c makes the certificate 0/0; the evaluation routines still work
  CHECK(code_of([] { wz_certificate(5, -2, -2); }) == errc::pole_error);
  CHECK(code_of([] { wz_certificate(0, 2, 5); }) == errc::bad_parameters);
  CHECK(code_of([] { wz_certificate(2, 5, -1); }) == errc::hypothesis_violated);
}

TEST_CASE("convolution closed form") {
  for (long kfold = 1; kfold <= 6; ++kfold)
    for (long n = 0; n <= 12; ++n)
      CHECK(catalan_convolution(kfold, n) == direct_convolution(kfold, n));
  CHECK(catalan_convolution(1, 5) == catalan(5));
  CHECK(catalan_convolution(3, 2) == 9);  // 111 + 12 + 21 + 1C2*... by hand: 9
}

TEST_CASE("cell counts") {
  // undotted rigid family: one cell per even k
  CHECK(cell_count(FamilyTag::rTL, 3, 2, 1, Side::right) == 1);
  CHECK(cell_count(FamilyTag::rTL, 3, 2, 1, Side::left) == 3);
  CHECK(cell_count(FamilyTag::rTL, 3, 4, 2, Side::right) == 2);
  CHECK(cell_count(FamilyTag::rTL, 3, 4, 2, Side::left) == 3);
  CHECK(cell_count(FamilyTag::rTL, 3, 6, 3, Side::right) == 1);
  CHECK(cell_count(FamilyTag::rTL, 3, 6, 3, Side::left) == 1);
  CHECK(code_of([] { cell_count(FamilyTag::rTL, 3, 3, 1, Side::left); }) ==
        errc::bad_parameters);

  // hand-counted one-sided classes on four strands
  CHECK(cell_count(FamilyTag::rMo, 2, 2, 1, Side::right) == 4);
  CHECK(cell_count(FamilyTag::rMo, 2, 2, 1, Side::left) == 5);

  // the two closed forms agree on every feasible grading
  for (long n = 1; n <= 4; ++n)
    for (long k = 0; k <= 2 * n; ++k)
      for (long j = 0; 2 * j <= k; ++j)
        for (Side s : {Side::left, Side::right})
          CHECK(rmo_cell_gamma(n, k, j, s) == rmo_cell_convolution(n, k, j, s));

  // infeasible gradings count zero
  CHECK(cell_count(FamilyTag::rMo, 2, 4, 1, Side::right) == 0);
  CHECK(cell_count(FamilyTag::rpRo, 2, 4, 1, Side::right) == 0);
  CHECK(cell_count(FamilyTag::rpRo, 2, 3, 1, Side::right) == binomial(3, 3));

  // dotted rook cells are binomial squares
  for (long n = 1; n <= 4; ++n)
    for (long k = 0; k <= 2 * n; ++k)
      for (long j = 0; 2 * j <= k; ++j)
        CHECK(cell_count(FamilyTag::rpRo, n, k, j, Side::left) ==
              cell_count(FamilyTag::rpRo, n, k, j, Side::right));

  long seq[][3] = {{2, 1, 3}, {4, 2, 5}, {4, 0, 5}, {5, 2, 20}, {0, 0, 1}};
  for (auto& t : seq) CHECK(sequence_count(t[0], t[1]) == binomial(t[0] + 1, 2 * t[1] + 1));
  CHECK(sequence_count(2, 1) == 1);
  CHECK(code_of([] { sequence_count(3, 5); }) == errc::bad_parameters);
}

TEST_CASE("monoid orders") {
  long tl[] = {2, 14, 132, 1430};
  long pro[] = {6, 70, 924, 12870};
  long rtl[] = {1, 3, 10, 35, 126, 462};
  long rmo[] = {5, 62, 937};
  long rpro[] = {4, 26, 192, 1500, 12092};
  for (long n = 1; n <= 4; ++n) {
    CHECK(monoid_size_formula(FamilyTag::TL, n) == tl[n - 1]);
    CHECK(monoid_size_formula(FamilyTag::pRo, n) == pro[n - 1]);
    CHECK(monoid_size_formula(FamilyTag::Mo, n) == motzkin(4 * n));
  }
  for (long n = 1; n <= 6; ++n)
    CHECK(monoid_size_formula(FamilyTag::rTL, n) == rtl[n - 1]);
  for (long n = 1; n <= 3; ++n)
    CHECK(monoid_size_formula(FamilyTag::rMo, n) == rmo[n - 1]);
  for (long n = 1; n <= 5; ++n)
    CHECK(monoid_size_formula(FamilyTag::rpRo, n) == rpro[n - 1]);

  // the closed form is the cell-size double sum
  for (long n = 1; n <= 4; ++n) {
    for (FamilyTag f : {FamilyTag::rMo, FamilyTag::rpRo}) {
      Int total = 0;
      for (long k = 0; k <= 2 * n; ++k)
        for (long j = 0; 2 * j <= k; ++j)
          total += sequence_count(k, j) * cell_count(f, n, k, j, Side::left) *
                   cell_count(f, n, k, j, Side::right);
      CHECK(total == monoid_size_formula(f, n));
    }
    Int rtl_total = 0;
    for (long k = 2; k <= 2 * n; k += 2)
      rtl_total += cell_count(FamilyTag::rTL, n, k, k / 2, Side::left) *
                   cell_count(FamilyTag::rTL, n, k, k / 2, Side::right);
    CHECK(rtl_total == monoid_size_formula(FamilyTag::rTL, n));
  }

  CHECK(monoid_size(FamilyTag::rTL, 4, SizeMode::both) == 35);
  CHECK(monoid_size(FamilyTag::Mo, 1, SizeMode::brute) == 9);
}
