#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "pdm/error.hpp"
#include "pdm/green.hpp"

using namespace pdm;

namespace {

struct CellView {
  long k, size, left_cells, right_cells;
  bool idempotent;
};

std::vector<CellView> cells_by_k(const GreenData& g) {
  std::vector<CellView> out;
  for (int c : g.display_order)
    out.push_back({g.j_k[c], static_cast<long>(g.j_members[c].size()),
                   g.j_left_cells[c], g.j_right_cells[c],
                   g.j_idempotent[c] != 0});
  return out;
}

}  // namespace

TEST_CASE("two-letter chain") {
  MonoidTable t = enumerate(FamilyTag::TL, 2);
  GreenData g = green_structure(t);
  check_structure(g);

  REQUIRE(g.n_j == 3);
  auto cells = cells_by_k(g);
  CHECK(cells[0].k == 0);
  CHECK(cells[0].size == 4);
  CHECK(cells[0].left_cells == 2);
  CHECK(cells[0].right_cells == 2);
  CHECK(cells[1].k == 2);
  CHECK(cells[1].size == 9);
  CHECK(cells[1].left_cells == 3);
  CHECK(cells[1].right_cells == 3);
  CHECK(cells[2].k == 4);
  CHECK(cells[2].size == 1);
  for (const CellView& c : cells) CHECK(c.idempotent);

  // identity generates everything, so its class is the unique minimum
  CHECK(g.bottom_cell == g.j_class[t.identity_id]);
  CHECK(g.j_k[g.bottom_cell] == 4);
  CHECK(g.j_k[g.top_cell] == 0);
  for (int x = 0; x < g.n_j; ++x) {
    CHECK(g.leq[g.bottom_cell][x]);
    CHECK(g.leq[x][g.top_cell]);
    CHECK(g.leq[x][x]);
  }
  CHECK_FALSE(g.leq[g.top_cell][g.bottom_cell]);

  // chain: exactly two covers
  long edges = 0;
  for (int x = 0; x < g.n_j; ++x) edges += g.covers[x].size();
  CHECK(edges == 2);
}

TEST_CASE("one-sided classes partition each two-sided class into a grid") {
  for (FamilyTag f : {FamilyTag::Mo, FamilyTag::pRo, FamilyTag::rMo,
                      FamilyTag::rpRo}) {
    MonoidTable t = enumerate(f, 2);
    GreenData g = green_structure(t);
    check_structure(g);
    long total = 0;
    for (int c = 0; c < g.n_j; ++c) {
      CHECK(static_cast<long>(g.j_members[c].size()) ==
            g.j_left_cells[c] * g.j_right_cells[c]);
      CHECK(g.j_idempotent[c]);
      total += g.j_members[c].size();
    }
    CHECK(total == t.size());
    // element partitions are consistent with the member lists
    for (int c = 0; c < g.n_j; ++c)
      for (int id : g.j_members[c]) CHECK(g.j_class[id] == c);
  }
}

TEST_CASE("three-strand-pair eggbox") {
  MonoidTable t = enumerate(FamilyTag::rTL, 3);
  GreenData g = green_structure(t);
  check_structure(g);

  REQUIRE(g.n_j == 3);
  auto cells = cells_by_k(g);
  // one cell per even k; rows (top halves) x cols (bottom halves)
  CHECK(cells[0].k == 2);
  CHECK(cells[0].right_cells == 3);
  CHECK(cells[0].left_cells == 1);
  CHECK(cells[0].size == 3);
  CHECK(cells[1].k == 4);
  CHECK(cells[1].right_cells == 3);
  CHECK(cells[1].left_cells == 2);
  CHECK(cells[1].size == 6);
  CHECK(cells[2].k == 6);
  CHECK(cells[2].size == 1);
  for (const CellView& c : cells) CHECK(c.idempotent);

  CHECK(g.j_alpha[g.display_order[0]] == Word{1, 2});
  CHECK(g.j_alpha[g.display_order[1]] == Word{1, 2, 1, 2});

  std::string ascii = eggbox_ascii(g);
  CHECK(ascii.find("family=rTL n=3 size=10 jcells=3") != std::string::npos);
  CHECK(ascii.find("k=2 alpha=12 3x1") != std::string::npos);
  CHECK(ascii.find("k=4 alpha=1212 3x2") != std::string::npos);
  CHECK(ascii.find("k=6 alpha=121212 1x1") != std::string::npos);

  std::string dot = eggbox_dot(g);
  CHECK(dot.find("digraph eggbox") != std::string::npos);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  // chain on three cells: two edges
  CHECK(std::count(dot.begin(), dot.end(), '>') == 2);
}

TEST_CASE("order agrees with middle-word subsequences") {
  MonoidTable t = enumerate(FamilyTag::rMo, 2);
  GreenData g = green_structure(t);
  check_structure(g);

  auto is_subseq = [](const Word& small, const Word& big) {
    size_t i = 0;
    for (int x : big)
      if (i < small.size() && small[i] == x) ++i;
    return i == small.size();
  };
  for (int x = 0; x < g.n_j; ++x)
    for (int y = 0; y < g.n_j; ++y)
      CHECK(static_cast<bool>(g.leq[x][y]) ==
            is_subseq(g.j_alpha[y], g.j_alpha[x]));

  // covers are the transitive reduction of leq
  for (int x = 0; x < g.n_j; ++x)
    for (int y : g.covers[x]) {
      CHECK(g.leq[x][y]);
      CHECK(x != y);
      for (int z = 0; z < g.n_j; ++z) {
        if (z == x || z == y) continue;
        bool through_z = g.leq[x][z] && g.leq[z][y];
        CHECK_FALSE(through_z);
      }
    }

  // display order: through strands ascending, then middle word
  for (size_t i = 0; i + 1 < g.display_order.size(); ++i) {
    int a = g.display_order[i], b = g.display_order[i + 1];
    CHECK(g.j_k[a] <= g.j_k[b]);
    if (g.j_k[a] == g.j_k[b]) CHECK(g.j_alpha[a] < g.j_alpha[b]);
  }
}

TEST_CASE("idempotent flags") {
  MonoidTable t = enumerate(FamilyTag::Mo, 1);
  GreenData g = green_structure(t);
  REQUIRE(t.size() == 9);
  long count = 0;
  for (long x = 0; x < t.size(); ++x) {
    bool idem = compose_id(t, x, x) == x;
    CHECK(static_cast<bool>(g.elem_idempotent[x]) == idem);
    if (idem) ++count;
  }
  // identity, the two one-strand projections with aligned halves, and all
  // four rank-zero elements (their middle components close up and drop)
  CHECK(count == 7);
  CHECK(g.n_j == 3);
}

TEST_CASE("guard rejects oversized tables") {
  MonoidTable t = enumerate(FamilyTag::TL, 3);
  try {
    green_structure(t, 100);
    REQUIRE(false);
  } catch (const toolkit_error& e) {
    CHECK(e.code() == errc::budget_exceeded);
  }
}
