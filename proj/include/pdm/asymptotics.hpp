#pragma once

#include <string>
#include <vector>

#include "pdm/combinat.hpp"

namespace pdm {

enum class Quantity { gap, ssgap, ratio, ssratio };
enum class BoundSide { lower, upper };

const char* quantity_name(Quantity q);
const char* side_name(BoundSide s);
Quantity parse_quantity(const std::string& s);
BoundSide parse_side(const std::string& s);

// Closed-form envelope
//   2^c2 3^c3 5^c5 pi^cpi (2^e2 3^e3 5^e5)^n n^poly exp(-corr0 - corr1/n)
// for the dimension gap or gap ratio of one family.  known=false marks a
// bound stated only up to an undetermined slowly-varying prefactor.
struct BoundExpr {
  FamilyTag family = FamilyTag::TL;
  Quantity quantity = Quantity::gap;
  BoundSide side = BoundSide::lower;
  bool known = true;
  Rat c2, c3, c5, cpi;  // constant prefactor exponents
  Rat e2, e3, e5;       // per-n exponents
  Rat poly;             // power of n
  Rat corr0, corr1;     // exp(-corr0 - corr1/n)

  double exp_base() const;       // 2^e2 3^e3 5^e5
  double eval_log10(long n) const;  // UnknownPrefactor when !known
};

// Stated envelope for the triple; NotStated when the source gives none.
BoundExpr bound(FamilyTag family, Quantity q, BoundSide side);
bool bound_stated(FamilyTag family, Quantity q, BoundSide side);
const std::vector<BoundExpr>& stated_bounds();

double log10_factorial(long m);
double log10_binomial_f(long a, long b);
double log10_monoid_size_f(FamilyTag family, long n);

struct TieValue {
  double log10_value = 0;
  std::vector<std::string> witnesses;
};

// Smallest cell dimension over the retained window at semisimple
// parameters, in log10; rigid families only.
TieValue log10_ss_trunc_gap(FamilyTag family, long n);

struct FigurePoint {
  std::string figure_id, series;
  long x = 0;  // n for the overview figures, k for the per-layer ones
  double log10_value = 0;
};

const std::vector<std::string>& figure_ids();
std::vector<FigurePoint> figure_points(const std::string& figure_id);

}  // namespace pdm
