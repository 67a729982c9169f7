#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pdm/monoids.hpp"

namespace pdm {

// Cell decomposition of a finite diagram monoid under the two-sided order
// a <= b iff a lies in the ideal generated by b.  Left classes collect
// elements sharing a bottom half, right classes a top half; joining the two
// partitions yields the two-sided classes, which this family of monoids
// orders into a lattice-free poset graded by through-strand data.
struct GreenData {
  const MonoidTable* table = nullptr;

  std::vector<int> left_class;   // element id -> left class id
  std::vector<int> right_class;  // element id -> right class id
  std::vector<int> j_class;      // element id -> two-sided class id
  int n_left = 0, n_right = 0, n_j = 0;

  std::vector<std::vector<int>> j_members;    // sorted element ids
  std::vector<int> j_k;                       // through-strand count
  std::vector<Word> j_alpha;                  // middle word
  std::vector<long> j_left_cells;             // # left classes inside
  std::vector<long> j_right_cells;            // # right classes inside
  std::vector<uint8_t> j_idempotent;          // contains an idempotent
  std::vector<std::vector<uint8_t>> leq;      // leq[x][y]: J_x below-or-equal J_y
  std::vector<std::vector<int>> covers;       // Hasse edges upward
  std::vector<int> display_order;             // by (k asc, alpha lex)
  int bottom_cell = -1, top_cell = -1;
  std::vector<uint8_t> elem_idempotent;
};

GreenData green_structure(const MonoidTable& table, long guard = 20000,
                          int threads = 0);

// Cross-checks the computed decomposition against the structure these
// monoids are known to carry: classes match half-diagram fibers, every
// two-sided class holds an idempotent, each (left, right) intersection is a
// single element, and the order is read off middle-word subsequences.
void check_structure(const GreenData& g);

std::string eggbox_ascii(const GreenData& g);
std::string eggbox_dot(const GreenData& g);

}  // namespace pdm
