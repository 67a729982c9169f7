#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "pdm/error.hpp"
#include "pdm/repr.hpp"

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

}  // namespace

TEST_CASE("field parsing") {
  CHECK(parse_field("q").rational);
  CHECK(parse_field("Q").rational);
  CHECK(parse_field("rationals").rational);
  CHECK(parse_field("q").name() == "Q");

  Field f2 = parse_field("2");
  CHECK_FALSE(f2.rational);
  CHECK(f2.p == 2);
  CHECK(f2.name() == "F2");
  CHECK(parse_field("F5").p == 5);
  CHECK(parse_field("f101").p == 101);

  CHECK(code_of([] { parse_field("4"); }) == errc::not_prime);
  CHECK(code_of([] { parse_field("1"); }) == errc::not_prime);
  CHECK(code_of([] { parse_field("zzz"); }) == errc::bad_parameters);
  CHECK(code_of([] { Field::Fp(9); }) == errc::not_prime);
  CHECK(code_of([] { Field::Fp(1L << 40); }) == errc::bad_parameters);
}

TEST_CASE("ascent grading") {
  CHECK(ascent_count({}) == 0);
  CHECK(ascent_count({1}) == 0);
  CHECK(ascent_count({1, 2}) == 1);
  CHECK(ascent_count({2, 1}) == 0);
  CHECK(ascent_count({1, 2, 1, 2}) == 2);
  CHECK(ascent_count({2, 2, 1, 1}) == 0);
  CHECK(ascent_count({1, 1, 2, 2}) == 1);
}

TEST_CASE("middle-layer pairing matrix") {
  MonoidTable t = enumerate(FamilyTag::rTL, 3);
  GreenData g = green_structure(t);
  int cell = -1;
  for (int c = 0; c < g.n_j; ++c)
    if (g.j_k[c] == 4) cell = c;
  REQUIRE(cell >= 0);

  GramMatrix m = gram_matrix(t, g, cell);
  CHECK(m.rows == 3);
  CHECK(m.cols == 2);
  long ones = 0;
  for (const auto& row : m.entries)
    for (int v : row) {
      CHECK((v == 0 || v == 1));
      ones += v;
    }
  // each of the three top halves meets the two bottom halves in a
  // ladder-shaped incidence with four nonzero products
  CHECK(ones == 4);
  CHECK(gram_rank(m, Field::Q()) == 2);
  CHECK(gram_rank(m, Field::Fp(2)) == 2);
  CHECK(gram_rank(m, Field::Fp(3)) == 2);

  // top cell: the identity alone, pairing matrix (1)
  int top = -1;
  for (int c = 0; c < g.n_j; ++c)
    if (g.j_k[c] == 6) top = c;
  GramMatrix mt = gram_matrix(t, g, top);
  CHECK(mt.rows == 1);
  CHECK(mt.cols == 1);
  CHECK(mt.entries[0][0] == 1);
}

TEST_CASE("simple dimensions at four strands with dots") {
  MonoidTable t = enumerate(FamilyTag::rMo, 3);
  GreenData g = green_structure(t, 20000);
  std::vector<SimpleDim> dims = simple_dims(t, g, Field::Q());

  std::vector<long> ranks, ssdims;
  long min_rank = 1L << 30;
  Word min_alpha;
  for (const SimpleDim& d : dims) {
    if (d.k != 2) continue;
    ranks.push_back(d.dim);
    ssdims.push_back(d.ssdim);
    CHECK(d.j == ascent_count(d.alpha));
    if (d.dim < min_rank) {
      min_rank = d.dim;
      min_alpha = d.alpha;
    }
  }
  std::sort(ranks.begin(), ranks.end());
  std::sort(ssdims.begin(), ssdims.end());
  CHECK(ranks == std::vector<long>{4, 5, 5, 12});
  CHECK(ssdims == std::vector<long>{5, 5, 5, 14});
  CHECK(min_alpha == Word{2, 1});

  // the head dimension never exceeds the semisimple dimension
  for (const SimpleDim& d : dims) CHECK(d.dim <= d.ssdim);
}

TEST_CASE("square nondegenerate pairings for the dotted rigid rook family") {
  for (long n = 1; n <= 3; ++n) {
    MonoidTable t = enumerate(FamilyTag::rpRo, n);
    GreenData g = green_structure(t);
    Int sum_sq = 0;
    for (int c = 0; c < g.n_j; ++c) {
      GramMatrix m = gram_matrix(t, g, c);
      CHECK(m.rows == m.cols);
      for (const Field& f :
           {Field::Q(), Field::Fp(2), Field::Fp(3), Field::Fp(5)})
        CHECK(gram_rank(m, f) == m.cols);
      sum_sq += Int(m.cols) * Int(m.cols);
    }
    CHECK(sum_sq == t.size());
  }
}

TEST_CASE("action matrices") {
  MonoidTable t = enumerate(FamilyTag::rTL, 3);
  GreenData g = green_structure(t);
  int cell = -1;
  for (int c = 0; c < g.n_j; ++c)
    if (g.j_k[c] == 4) cell = c;
  REQUIRE(cell >= 0);

  for (Side s : {Side::left, Side::right}) {
    auto m = action_matrix(t, g, cell, t.identity_id, s);
    long dim = m.size();
    CHECK(dim > 0);
    for (long i = 0; i < dim; ++i)
      for (long j = 0; j < dim; ++j) CHECK(m[i][j] == (i == j ? 1 : 0));
  }

  // any element acts by a partial map: at most one image per basis vector
  for (long e = 0; e < t.size(); ++e) {
    auto m = action_matrix(t, g, cell, e, Side::left);
    size_t dim = m.size();
    for (size_t col = 0; col < dim; ++col) {
      int hits = 0;
      for (size_t row = 0; row < dim; ++row) {
        CHECK((m[row][col] == 0 || m[row][col] == 1));
        hits += m[row][col];
      }
      CHECK(hits <= 1);
    }
  }
}

TEST_CASE("retention windows") {
  TruncationWindow w = truncation_window(FamilyTag::rTL, 8);
  CHECK(w.lo == 6);
  CHECK(w.hi == 12);
  CHECK(w.ks == std::vector<long>{6, 8, 10, 12});

  TruncationWindow full = truncation_window(FamilyTag::rTL, 8, TruncMode::full);
  CHECK(full.ks == std::vector<long>{2, 4, 6, 8, 10, 12, 14, 16});

  TruncationWindow tl = truncation_window(FamilyTag::TL, 4);
  CHECK(tl.ks == std::vector<long>{0, 2, 4});

  TruncationWindow mo = truncation_window(FamilyTag::Mo, 2);
  CHECK(mo.ks == std::vector<long>{0, 1, 2, 3, 4});

  TruncationWindow pro = truncation_window(FamilyTag::pRo, 2);
  CHECK(pro.ks == std::vector<long>{0, 1, 2, 3, 4});

  TruncationWindow rp = truncation_window(FamilyTag::rpRo, 100);
  CHECK(rp.lo == 36);
  CHECK(rp.hi == 64);

  TruncationWindow rm = truncation_window(FamilyTag::rMo, 2);
  CHECK(rm.ks == std::vector<long>{0, 1, 2, 3, 4});
}

TEST_CASE("windowed semisimple gap") {
  GapReport r = repgap(FamilyTag::rTL, 8, GapMode::semisimple,
                       TruncMode::paper);
  CHECK(r.gap == 21);
  CHECK(r.window_lo == 6);
  CHECK(r.window_hi == 12);
  CHECK(r.witnesses == std::vector<std::string>{"k6", "k12"});
  CHECK(r.log10_gap == doctest::Approx(std::log10(21.0)).epsilon(1e-12));

  // dropping the window edges removes both witnesses
  GapReport inner = repgap(FamilyTag::rTL, 8, GapMode::semisimple,
                           TruncMode::paper, Field::Q(), RatioDen::full, true);
  CHECK(inner.gap == 35);
  CHECK(inner.window_lo == 8);
  CHECK(inner.window_hi == 10);
  CHECK(inner.witnesses == std::vector<std::string>{"k8", "k10"});
}

TEST_CASE("exact gaps on the full tower") {
  GapReport r = repgap(FamilyTag::rTL, 3);
  CHECK(r.gap == 2);
  CHECK(r.window_lo == 4);
  CHECK(r.window_hi == 4);
  CHECK(r.witnesses == std::vector<std::string>{"k4"});
  CHECK(r.denominator == 10);
  CHECK(r.log10_ratio ==
        doctest::Approx(std::log10(2.0) - 0.5 * std::log10(10.0))
            .epsilon(1e-12));

  GapReport m = repgap(FamilyTag::rMo, 1);
  CHECK(m.gap == 1);
  CHECK(m.witnesses == std::vector<std::string>{"a1", "a2"});
  CHECK(m.denominator == 5);

  // semisimple witnesses carry the full grading for the dotted families
  GapReport ms = repgap(FamilyTag::rMo, 1, GapMode::semisimple);
  CHECK(ms.gap == 1);
  for (const std::string& w : ms.witnesses)
    CHECK(w.find('j') != std::string::npos);
}

TEST_CASE("gap error paths") {
  // both trivial layers coincide at one strand pair: nothing is left
  CHECK(code_of([] { repgap(FamilyTag::rTL, 1); }) == errc::empty_window);
  CHECK(code_of([] { repgap(FamilyTag::rTL, 2); }) == errc::empty_window);
  CHECK(code_of([] {
          repgap(FamilyTag::Mo, 3, GapMode::exact, TruncMode::full,
                 Field::Q(), RatioDen::full, false, 1000);
        }) == errc::budget_exceeded);
}

TEST_CASE("exact equals semisimple where every pairing is nondegenerate") {
  for (long n = 3; n <= 4; ++n) {
    GapReport ex = repgap(FamilyTag::rTL, n);
    GapReport ss = repgap(FamilyTag::rTL, n, GapMode::semisimple);
    CHECK(ex.gap == ss.gap);
    CHECK(ex.witnesses == ss.witnesses);
  }
}
