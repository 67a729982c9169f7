#pragma once

#include <gmpxx.h>

#include "pdm/family.hpp"

namespace pdm {

using Int = mpz_class;
using Rat = mpq_class;

enum class Side { left, right };
enum class SizeMode { formula, brute, both };

// C(a,b); zero when b < 0, b > a, or a < 0.
Int binomial(long a, long b);

Int catalan(long l);
Int motzkin(long m);

// Rising factorial x(x+1)...(x+m-1); zero when the range crosses zero.
Int pochhammer(long x, long m);

// 2F1(-m, b, c; 1) as the terminating sum
//   sum_{r=0}^m (-1)^r C(m,r) (b)_r / (c)_r
// under the limit convention: a term with (b)_r == 0 is zero even when
// (c)_r == 0; a vanishing (c)_r with nonvanishing numerator is a pole.
Rat hyp2f1_terminating(long m, long b, long c);

// (c-b)_m / (c)_m under the same limit convention (both consecutive-integer
// products vanish at most once; matched zeros cancel with coefficient one).
// Requires m + c - 1 != 0.
Rat chu_vandermonde(long m, long b, long c);

// Checks, in exact rational arithmetic with F,G,H as below, that
//   F(m,k) - F(m-1,k) = H(m,k+1) - H(m,k)   for k = 0..m, and
//   sum_{k=0}^m F(m,k) = 1,
// where F(m,k) = (-m)_k (b)_k (c)_m / (k! (c)_k (c-b)_m),
//       G(m,k) = k(1-c-k) / (m(m+c-1)),  H = F*G,
// and F(m-1,m) = F(m,m+1) = 0. Returns true when every identity holds.
bool wz_certificate(long m, long b, long c);

// kfold-fold Catalan convolution: kfold/(2n+kfold) * C(2n+kfold, n).
Int catalan_convolution(long kfold, long n);

// Size of one left/right cell of the (k,j) J-cells of a rigid family.
// rTL ignores j and requires k even with 2 <= k <= 2n; rMo and rpRo require
// 0 <= k <= 2n and 0 <= j <= k/2. A reciprocal Gamma factor at a
// non-positive integer makes the count zero (infeasible (k,j)).
Int cell_count(FamilyTag family, long n, long k, long j, Side side);

// The two independent closed forms for the rMo cell sizes; cell_count
// evaluates both and insists they agree.
Int rmo_cell_gamma(long n, long k, long j, Side side);
Int rmo_cell_convolution(long n, long k, long j, Side side);

// Number of (k,j) J-cells: binary sequences of length k with j ascents.
Int sequence_count(long k, long j);

// Closed-form monoid orders; pivotal families live on the word of length 2n.
Int monoid_size_formula(FamilyTag family, long n);

// mode brute enumerates, mode both asserts formula == brute.
Int monoid_size(FamilyTag family, long n, SizeMode mode = SizeMode::formula);

}  // namespace pdm
