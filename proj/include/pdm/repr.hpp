#pragma once

#include <string>
#include <vector>

#include "pdm/combinat.hpp"
#include "pdm/green.hpp"

namespace pdm {

struct Field {
  bool rational = true;
  long p = 0;
  static Field Q() { return Field{true, 0}; }
  static Field Fp(long p);  // rejects p < 2 and composites
  std::string name() const {
    return rational ? "Q" : "F" + std::to_string(p);
  }
};

Field parse_field(const std::string& text);

// Ascents of a middle word; grades the two-sided classes of the rigid
// families together with the through-strand count.
inline long ascent_count(const Word& w) {
  long a = 0;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) ++a;
  return a;
}

struct GramMatrix {
  long rows = 0, cols = 0;  // rows: top halves, cols: bottom halves
  std::vector<std::vector<int>> entries;
};

GramMatrix gram_matrix(const MonoidTable& table, const GreenData& g,
                       int jcell);
long gram_rank(const GramMatrix& m, const Field& field);

// 0/1 matrices of one element acting on a one-sided class of a two-sided
// cell; columns that fall out of the cell are zero.  Left multiplication
// fixes bottom halves (so acts on a left class), right multiplication fixes
// top halves.
std::vector<std::vector<int>> action_matrix(const MonoidTable& table,
                                            const GreenData& g, int jcell,
                                            long elem, Side side);

struct SimpleDim {
  long k = 0, j = 0;
  Word alpha;
  long dim = 0;    // Gram rank: dimension of the simple head
  long ssdim = 0;  // bottom-half count: dimension at semisimple parameters
};

// One row per two-sided cell, in display order.
std::vector<SimpleDim> simple_dims(const MonoidTable& table,
                                   const GreenData& g, const Field& field);

enum class GapMode { exact, semisimple };
enum class TruncMode { full, paper };
enum class RatioDen { full, truncated };

struct TruncationWindow {
  long lo = 0, hi = 0;      // smallest and largest retained k
  std::vector<long> ks;     // retained through-strand counts, ascending
};

TruncationWindow truncation_window(FamilyTag family, long n,
                                   TruncMode mode = TruncMode::paper);

struct ApexDim {
  long k = 0, j = 0;
  std::string alpha;  // digit string, "-" when empty
  Int dim;
};

struct GapReport {
  std::vector<ApexDim> dims;
  Int gap = 0;
  Int denominator = 0;
  double log10_gap = 0, log10_ratio = 0;
  long window_lo = 0, window_hi = 0;
  std::vector<std::string> witnesses;
};

double log10_int(const Int& v);

GapReport repgap(FamilyTag family, long n, GapMode mode = GapMode::exact,
                 TruncMode trunc = TruncMode::full,
                 Field field = Field::Q(), RatioDen den = RatioDen::full,
                 bool exclude_window_edges = false, long budget = 5000000,
                 long green_guard = 20000, int threads = 0);

}  // namespace pdm
