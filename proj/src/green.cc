#include "pdm/green.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <sstream>
#include <unordered_map>

#include "pdm/parallel.hpp"

namespace pdm {

namespace {

struct BitMatrix {
  long rows = 0, words = 0;
  std::vector<uint64_t> bits;
  BitMatrix(long r, long n) : rows(r), words((n + 63) / 64), bits(r * ((n + 63) / 64), 0) {}
  uint64_t* row(long r) { return bits.data() + r * words; }
  const uint64_t* row(long r) const { return bits.data() + r * words; }
  void set(long r, long c) { row(r)[c >> 6] |= 1ull << (c & 63); }
  bool get(long r, long c) const { return (row(r)[c >> 6] >> (c & 63)) & 1; }
};

uint64_t row_hash(const uint64_t* row, long words) {
  uint64_t h = 1469598103934665603ull;
  for (long i = 0; i < words; ++i) {
    h ^= row[i];
    h *= 1099511628211ull;
  }
  return h;
}

// Groups equal rows; class ids follow first appearance in row order.
std::vector<int> classify_rows(const BitMatrix& M, int& n_cls) {
  std::vector<int> cls(M.rows, -1);
  std::unordered_map<uint64_t, std::vector<long>> buckets;
  n_cls = 0;
  for (long a = 0; a < M.rows; ++a) {
    uint64_t h = row_hash(M.row(a), M.words);
    auto& reps = buckets[h];
    for (long r : reps)
      if (std::memcmp(M.row(r), M.row(a), M.words * 8) == 0) {
        cls[a] = cls[r];
        break;
      }
    if (cls[a] < 0) {
      cls[a] = n_cls++;
      reps.push_back(a);
    }
  }
  return cls;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(long n) : parent(n) {
    for (long i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

bool is_subsequence(const Word& small, const Word& big) {
  size_t i = 0;
  for (size_t j = 0; j < big.size() && i < small.size(); ++j)
    if (big[j] == small[i]) ++i;
  return i == small.size();
}

std::string alpha_token(const Word& alpha) {
  if (alpha.empty()) return "-";
  std::string s;
  for (int c : alpha) s += std::to_string(c);
  return s;
}

}  // namespace

GreenData green_structure(const MonoidTable& table, long guard, int threads) {
  long N = table.size();
  if (N > guard)
    fail(errc::budget_exceeded, "green structure on " + std::to_string(N) +
                                    " elements exceeds guard " +
                                    std::to_string(guard));
  GreenData g;
  g.table = &table;

  BitMatrix L(N, N), R(N, N);
  int t = resolve_threads(threads);
  parallel_for(0, N, t, [&](long lo, long hi) {
    for (long a = lo; a < hi; ++a)
      for (long c = 0; c < N; ++c) {
        L.set(a, compose_id(table, a, c));  // c * a, principal left ideal
        R.set(a, compose_id(table, c, a));  // a * c, principal right ideal
      }
  });

  g.left_class = classify_rows(L, g.n_left);
  g.right_class = classify_rows(R, g.n_right);

  UnionFind uf(N);
  std::vector<int> first_left(g.n_left, -1), first_right(g.n_right, -1);
  for (long a = 0; a < N; ++a) {
    int& fl = first_left[g.left_class[a]];
    if (fl < 0)
      fl = static_cast<int>(a);
    else
      uf.unite(fl, static_cast<int>(a));
    int& fr = first_right[g.right_class[a]];
    if (fr < 0)
      fr = static_cast<int>(a);
    else
      uf.unite(fr, static_cast<int>(a));
  }
  g.j_class.assign(N, -1);
  std::vector<int> root_to_j;
  std::unordered_map<int, int> seen;
  for (long a = 0; a < N; ++a) {
    int root = uf.find(static_cast<int>(a));
    auto it = seen.find(root);
    if (it == seen.end()) {
      it = seen.emplace(root, g.n_j++).first;
      g.j_members.emplace_back();
    }
    g.j_class[a] = it->second;
    g.j_members[it->second].push_back(static_cast<int>(a));
  }

  g.elem_idempotent.assign(N, 0);
  for (long a = 0; a < N; ++a)
    g.elem_idempotent[a] = compose_id(table, a, a) == a;

  g.j_k.resize(g.n_j);
  g.j_alpha.resize(g.n_j);
  g.j_left_cells.assign(g.n_j, 0);
  g.j_right_cells.assign(g.n_j, 0);
  g.j_idempotent.assign(g.n_j, 0);
  for (int j = 0; j < g.n_j; ++j) {
    int rep = g.j_members[j][0];
    g.j_k[j] = through_count(table.elements[rep]);
    g.j_alpha[j] = alpha_of(table.elements[rep]);
    std::vector<int> ls, rs;
    for (int a : g.j_members[j]) {
      ls.push_back(g.left_class[a]);
      rs.push_back(g.right_class[a]);
      if (g.elem_idempotent[a]) g.j_idempotent[j] = 1;
    }
    std::sort(ls.begin(), ls.end());
    std::sort(rs.begin(), rs.end());
    g.j_left_cells[j] = std::unique(ls.begin(), ls.end()) - ls.begin();
    g.j_right_cells[j] = std::unique(rs.begin(), rs.end()) - rs.begin();
  }

  // Two-sided ideal of each class representative, as an element bitset.
  BitMatrix ideal(g.n_j, N);
  for (int j = 0; j < g.n_j; ++j) {
    int rep = g.j_members[j][0];
    uint64_t* T = ideal.row(j);
    const uint64_t* lrow = L.row(rep);
    for (long w = 0; w < L.words; ++w) {
      uint64_t bitsw = lrow[w];
      while (bitsw) {
        long u = w * 64 + __builtin_ctzll(bitsw);
        bitsw &= bitsw - 1;
        const uint64_t* rrow = R.row(u);
        for (long v = 0; v < L.words; ++v) T[v] |= rrow[v];
      }
    }
  }
  // x below-or-equal y: y's representative lies in the ideal generated by
  // x's, i.e. larger ideals sit lower and the identity class is the minimum.
  g.leq.assign(g.n_j, std::vector<uint8_t>(g.n_j, 0));
  for (int x = 0; x < g.n_j; ++x)
    for (int y = 0; y < g.n_j; ++y)
      g.leq[x][y] = ideal.get(x, g.j_members[y][0]);
  for (int x = 0; x < g.n_j; ++x)
    for (int y = x + 1; y < g.n_j; ++y)
      if (g.leq[x][y] && g.leq[y][x])
        fail(errc::structure_mismatch,
             "two-sided order not antisymmetric between classes " +
                 std::to_string(x) + " and " + std::to_string(y));

  g.covers.assign(g.n_j, {});
  for (int x = 0; x < g.n_j; ++x)
    for (int y = 0; y < g.n_j; ++y) {
      if (x == y || !g.leq[x][y]) continue;
      bool covered = true;
      for (int z = 0; z < g.n_j && covered; ++z)
        if (z != x && z != y && g.leq[x][z] && g.leq[z][y]) covered = false;
      if (covered) g.covers[x].push_back(y);
    }

  g.bottom_cell = g.j_class[table.identity_id];
  for (int y = 0; y < g.n_j; ++y)
    if (!g.leq[g.bottom_cell][y])
      fail(errc::structure_mismatch, "identity class is not the minimum");
  for (int x = 0; x < g.n_j; ++x) {
    bool maximal = true;
    for (int y = 0; y < g.n_j && maximal; ++y)
      if (y != x && g.leq[x][y]) maximal = false;
    if (maximal) {
      if (g.top_cell >= 0)
        fail(errc::structure_mismatch, "two-sided order has several maxima");
      g.top_cell = x;
    }
  }

  g.display_order.resize(g.n_j);
  for (int j = 0; j < g.n_j; ++j) g.display_order[j] = j;
  std::sort(g.display_order.begin(), g.display_order.end(), [&](int a, int b) {
    if (g.j_k[a] != g.j_k[b]) return g.j_k[a] < g.j_k[b];
    if (g.j_alpha[a] != g.j_alpha[b]) return g.j_alpha[a] < g.j_alpha[b];
    return a < b;
  });
  return g;
}

void check_structure(const GreenData& g) {
  const MonoidTable& t = *g.table;
  long N = t.size();

  // Class membership must match half-diagram fibers.
  std::unordered_map<std::string, int> top_fiber, bottom_fiber;
  for (long a = 0; a < N; ++a) {
    Sandwich s = sandwich_factor(t.elements[a]);
    std::string tk = serialize(s.T), bk = serialize(s.B);
    auto [it, fresh] = top_fiber.emplace(tk, g.right_class[a]);
    if (!fresh && it->second != g.right_class[a])
      fail(errc::structure_mismatch,
           "top half " + tk + " spans several right classes");
    auto [ib, fb] = bottom_fiber.emplace(bk, g.left_class[a]);
    if (!fb && ib->second != g.left_class[a])
      fail(errc::structure_mismatch,
           "bottom half " + bk + " spans several left classes");
  }
  if (static_cast<int>(top_fiber.size()) != g.n_right)
    fail(errc::structure_mismatch, "right class count != top half count");
  if (static_cast<int>(bottom_fiber.size()) != g.n_left)
    fail(errc::structure_mismatch, "left class count != bottom half count");

  // Every (left, right) intersection holds at most one element, and inside a
  // two-sided class the grid is full.
  std::map<std::pair<int, int>, int> cell_count;
  for (long a = 0; a < N; ++a) {
    int c = ++cell_count[{g.left_class[a], g.right_class[a]}];
    if (c > 1)
      fail(errc::structure_mismatch, "repeated (left,right) pair at element " +
                                         t.keys[a]);
  }
  for (int j = 0; j < g.n_j; ++j) {
    if (static_cast<long>(g.j_members[j].size()) !=
        g.j_left_cells[j] * g.j_right_cells[j])
      fail(errc::structure_mismatch,
           "two-sided class " + std::to_string(j) + " is not a full grid");
    if (!g.j_idempotent[j])
      fail(errc::structure_mismatch,
           "two-sided class " + std::to_string(j) + " has no idempotent");
  }

  // Apex data is constant on classes and distinguishes them.
  std::map<std::pair<int, Word>, int> apex_seen;
  for (int j = 0; j < g.n_j; ++j) {
    for (int a : g.j_members[j]) {
      if (through_count(t.elements[a]) != g.j_k[j] ||
          alpha_of(t.elements[a]) != g.j_alpha[j])
        fail(errc::structure_mismatch,
             "element " + t.keys[a] + " disagrees with its class apex");
    }
    auto [it, fresh] = apex_seen.emplace(std::pair{g.j_k[j], g.j_alpha[j]}, j);
    if (!fresh)
      fail(errc::structure_mismatch,
           "classes " + std::to_string(it->second) + " and " +
               std::to_string(j) + " share an apex");
  }

  // The order is subsequence containment of middle words.
  for (int x = 0; x < g.n_j; ++x)
    for (int y = 0; y < g.n_j; ++y) {
      bool expected = is_subsequence(g.j_alpha[y], g.j_alpha[x]);
      if (static_cast<bool>(g.leq[x][y]) != expected)
        fail(errc::structure_mismatch,
             "order between classes " + std::to_string(x) + " and " +
                 std::to_string(y) + " does not match word containment");
    }
}

namespace {

// Row and column layout of one two-sided class: right classes as rows and
// left classes as columns, each ordered by least member id.
struct Grid {
  std::vector<int> row_ids, col_ids;
  std::map<std::pair<int, int>, int> at;  // (right, left) -> element id
};

Grid grid_of(const GreenData& g, int j) {
  Grid grid;
  for (int a : g.j_members[j]) {
    int r = g.right_class[a], c = g.left_class[a];
    if (std::find(grid.row_ids.begin(), grid.row_ids.end(), r) ==
        grid.row_ids.end())
      grid.row_ids.push_back(r);
    if (std::find(grid.col_ids.begin(), grid.col_ids.end(), c) ==
        grid.col_ids.end())
      grid.col_ids.push_back(c);
    grid.at[{r, c}] = a;
  }
  return grid;
}

std::string grid_lines(const GreenData& g, const Grid& grid,
                       const char* line_sep) {
  std::string s;
  for (size_t r = 0; r < grid.row_ids.size(); ++r) {
    for (int c : grid.col_ids) {
      auto it = grid.at.find({grid.row_ids[r], c});
      bool star = it != grid.at.end() && g.elem_idempotent[it->second];
      s += star ? "[*]" : "[ ]";
    }
    if (r + 1 < grid.row_ids.size()) s += line_sep;
  }
  return s;
}

}  // namespace

std::string eggbox_ascii(const GreenData& g) {
  std::ostringstream os;
  os << "family=" << family_name(g.table->family) << " n=" << g.table->n
     << " size=" << g.table->size() << " jcells=" << g.n_j << "\n";
  for (size_t idx = 0; idx < g.display_order.size(); ++idx) {
    int j = g.display_order[idx];
    Grid grid = grid_of(g, j);
    os << "== J-cell " << idx << ": k=" << g.j_k[j]
       << " alpha=" << alpha_token(g.j_alpha[j]) << " "
       << grid.row_ids.size() << "x" << grid.col_ids.size() << " ==\n";
    os << grid_lines(g, grid, "\n") << "\n";
  }
  return os.str();
}

std::string eggbox_dot(const GreenData& g) {
  std::vector<int> disp(g.n_j);
  for (size_t idx = 0; idx < g.display_order.size(); ++idx)
    disp[g.display_order[idx]] = static_cast<int>(idx);
  std::ostringstream os;
  os << "digraph eggbox {\n  rankdir=BT;\n"
     << "  node [shape=box fontname=\"monospace\"];\n";
  for (size_t idx = 0; idx < g.display_order.size(); ++idx) {
    int j = g.display_order[idx];
    Grid grid = grid_of(g, j);
    os << "  j" << idx << " [label=\"k=" << g.j_k[j]
       << " alpha=" << alpha_token(g.j_alpha[j]) << " " << grid.row_ids.size()
       << "x" << grid.col_ids.size() << "\\n"
       << grid_lines(g, grid, "\\n") << "\"];\n";
  }
  for (int x = 0; x < g.n_j; ++x)
    for (int y : g.covers[x])
      os << "  j" << disp[x] << " -> j" << disp[y] << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace pdm
