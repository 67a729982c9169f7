#include "pdm/repr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace pdm {

Field Field::Fp(long p) {
  if (p < 2) fail(errc::not_prime, "modulus " + std::to_string(p));
  if (p > (1L << 31)) fail(errc::bad_parameters, "modulus too large");
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) fail(errc::not_prime, "modulus " + std::to_string(p));
  return Field{false, p};
}

Field parse_field(const std::string& text) {
  std::string s;
  for (char c : text) s += static_cast<char>(std::tolower(c));
  if (s == "q" || s == "rational" || s == "rationals") return Field::Q();
  if (!s.empty() && s[0] == 'f') s = s.substr(1);
  if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos)
    return Field::Fp(std::stol(s));
  fail(errc::bad_parameters, "unknown field " + text);
}

namespace {

std::string alpha_digits(const Word& alpha) {
  if (alpha.empty()) return "-";
  std::string s;
  for (int c : alpha) s += std::to_string(c);
  return s;
}

// One-sided class ids inside a cell, ordered by least member.
void cell_axes(const GreenData& g, int jcell, std::vector<int>& row_elems,
               std::vector<int>& col_elems) {
  std::vector<int> seen_r, seen_c;
  for (int a : g.j_members[jcell]) {
    if (std::find(seen_r.begin(), seen_r.end(), g.right_class[a]) ==
        seen_r.end()) {
      seen_r.push_back(g.right_class[a]);
      row_elems.push_back(a);
    }
    if (std::find(seen_c.begin(), seen_c.end(), g.left_class[a]) ==
        seen_c.end()) {
      seen_c.push_back(g.left_class[a]);
      col_elems.push_back(a);
    }
  }
}

long rank_rational(const GramMatrix& m) {
  std::vector<std::vector<Rat>> a(m.rows, std::vector<Rat>(m.cols));
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j) a[i][j] = m.entries[i][j];
  long r = 0;
  for (long c = 0; c < m.cols && r < m.rows; ++c) {
    long piv = -1;
    for (long i = r; i < m.rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    for (long i = r + 1; i < m.rows; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[r][c];
      for (long cc = c; cc < m.cols; ++cc) a[i][cc] -= f * a[r][cc];
    }
    ++r;
  }
  return r;
}

long rank_mod_p(const GramMatrix& m, long p) {
  std::vector<std::vector<long>> a(m.rows, std::vector<long>(m.cols));
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j)
      a[i][j] = ((m.entries[i][j] % p) + p) % p;
  long r = 0;
  for (long c = 0; c < m.cols && r < m.rows; ++c) {
    long piv = -1;
    for (long i = r; i < m.rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    for (long i = r + 1; i < m.rows; ++i) {
      if (a[i][c] == 0) continue;
      long lead = a[r][c], kill = a[i][c];
      for (long cc = c; cc < m.cols; ++cc)
        a[i][cc] = ((a[i][cc] * lead - a[r][cc] * kill) % p + p) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace

GramMatrix gram_matrix(const MonoidTable& table, const GreenData& g,
                       int jcell) {
  std::vector<int> row_elems, col_elems;
  cell_axes(g, jcell, row_elems, col_elems);
  Diagram id = identity(g.j_alpha[jcell]);
  GramMatrix m;
  m.rows = row_elems.size();
  m.cols = col_elems.size();
  m.entries.assign(m.rows, std::vector<int>(m.cols, 0));
  std::vector<Diagram> tops, bottoms;
  for (int a : row_elems) tops.push_back(sandwich_factor(table.elements[a]).T);
  for (int a : col_elems)
    bottoms.push_back(sandwich_factor(table.elements[a]).B);
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j)
      m.entries[i][j] = compose(tops[i], bottoms[j]) == id;
  return m;
}

long gram_rank(const GramMatrix& m, const Field& field) {
  return field.rational ? rank_rational(m) : rank_mod_p(m, field.p);
}

std::vector<std::vector<int>> action_matrix(const MonoidTable& table,
                                            const GreenData& g, int jcell,
                                            long elem, Side side) {
  int anchor = g.j_members[jcell][0];
  std::vector<int> basis;
  for (long a = 0; a < table.size(); ++a) {
    if (side == Side::left ? g.left_class[a] == g.left_class[anchor]
                           : g.right_class[a] == g.right_class[anchor])
      basis.push_back(static_cast<int>(a));
  }
  long d = basis.size();
  std::vector<std::vector<int>> m(d, std::vector<int>(d, 0));
  for (long jd = 0; jd < d; ++jd) {
    int image = side == Side::left ? compose_id(table, basis[jd], elem)
                                   : compose_id(table, elem, basis[jd]);
    for (long i = 0; i < d; ++i)
      if (basis[i] == image) m[i][jd] = 1;
  }
  return m;
}

std::vector<SimpleDim> simple_dims(const MonoidTable& table,
                                   const GreenData& g, const Field& field) {
  std::vector<SimpleDim> out;
  for (int j : g.display_order) {
    GramMatrix m = gram_matrix(table, g, j);
    SimpleDim sd;
    sd.k = g.j_k[j];
    sd.j = ascent_count(g.j_alpha[j]);
    sd.alpha = g.j_alpha[j];
    sd.dim = gram_rank(m, field);
    sd.ssdim = m.cols;
    out.push_back(std::move(sd));
  }
  return out;
}

namespace {

// Largest k in [base, limit] with k <= center + sqrt(2n), stepping down.
bool below_upper(long k, long center, long n) {
  long d = k - center;
  return d <= 0 || d * d <= 2 * n;
}
bool above_lower(long k, long center, long n) {
  long d = center - k;
  return d <= 0 || d * d <= 2 * n;
}
// Same with half-integer center n/2 (and 2*sqrt scale folded in):
// k >= n/2 - sqrt(2n)  iff  n - 2k <= 2 sqrt(2n)  iff (n-2k)^2 <= 8n.
bool rp_above(long k, long n) {
  long d = n - 2 * k;
  return d <= 0 || d * d <= 8 * n;
}
bool rp_below(long k, long n) {
  long d = 2 * k - n;
  return d <= 0 || d * d <= 8 * n;
}
// k <= 2 sqrt(2n) iff k^2 <= 8n.
bool small_below(long k, long n) { return k * k <= 8 * n; }

}  // namespace

TruncationWindow truncation_window(FamilyTag family, long n, TruncMode mode) {
  if (n < 1) fail(errc::bad_parameters, "window needs n >= 1");
  long kmin = family == FamilyTag::rTL ? 2 : 0;
  long step = (family == FamilyTag::TL || family == FamilyTag::rTL) ? 2 : 1;
  TruncationWindow w;
  for (long k = kmin; k <= 2 * n; k += step) {
    bool keep = true;
    if (mode == TruncMode::paper) {
      switch (family) {
        case FamilyTag::TL:
        case FamilyTag::Mo:
        case FamilyTag::rMo:
          keep = small_below(k, n);
          break;
        case FamilyTag::pRo:
          keep = above_lower(k, n, n) && below_upper(k, n, n);
          break;
        case FamilyTag::rTL:
          keep = above_lower(k, n + 1, n) && below_upper(k, n + 1, n);
          break;
        case FamilyTag::rpRo:
          keep = rp_above(k, n) && rp_below(k, n);
          break;
      }
    }
    if (keep) w.ks.push_back(k);
  }
  if (w.ks.empty()) fail(errc::empty_window, "no retained layers");
  w.lo = w.ks.front();
  w.hi = w.ks.back();
  return w;
}

double log10_int(const Int& v) {
  if (v <= 0) fail(errc::bad_parameters, "log of non-positive value");
  long exp2;
  double d = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log10(d) + exp2 * 0.30102999566398119521;
}

namespace {

Int layer_size(FamilyTag family, long n, long k) {
  if (family_traits(family).pivotal) {
    Int h = count_halves(family_word(family, n), Word(k, 0), family);
    return h * h;
  }
  if (family == FamilyTag::rTL)
    return cell_count(family, n, k, k / 2, Side::left) *
           cell_count(family, n, k, k / 2, Side::right);
  Int total = 0;
  for (long j = 0; 2 * j <= k; ++j) {
    Int cells = sequence_count(k, j);
    if (cells == 0) continue;
    total += cells * cell_count(family, n, k, j, Side::left) *
             cell_count(family, n, k, j, Side::right);
  }
  return total;
}

}  // namespace

GapReport repgap(FamilyTag family, long n, GapMode mode, TruncMode trunc,
                 Field field, RatioDen den, bool exclude_window_edges,
                 long budget, long green_guard, int threads) {
  TruncationWindow w = truncation_window(family, n, trunc);
  std::vector<long> ks = w.ks;
  if (exclude_window_edges && trunc == TruncMode::paper) {
    std::vector<long> kept;
    for (long k : ks)
      if (k != w.lo && k != w.hi) kept.push_back(k);
    ks = std::move(kept);
  }
  long kmin = family == FamilyTag::rTL ? 2 : 0;
  if (trunc == TruncMode::full) {
    std::vector<long> kept;
    for (long k : ks)
      if (k != kmin && k != 2 * n) kept.push_back(k);
    ks = std::move(kept);
  }
  if (ks.empty()) fail(errc::empty_window, "no layers left to minimise over");

  GapReport rep;
  rep.window_lo = ks.front();
  rep.window_hi = ks.back();
  bool pivotal = family_traits(family).pivotal;
  bool alpha_by_k = pivotal || family == FamilyTag::rTL;

  if (mode == GapMode::exact) {
    MonoidTable table = enumerate(family, n, budget);
    GreenData g = green_structure(table, green_guard, threads);
    std::vector<long> kset(ks.begin(), ks.end());
    for (int j : g.display_order) {
      if (!std::binary_search(kset.begin(), kset.end(), g.j_k[j])) continue;
      GramMatrix m = gram_matrix(table, g, j);
      ApexDim a;
      a.k = g.j_k[j];
      a.j = ascent_count(g.j_alpha[j]);
      a.alpha = alpha_digits(g.j_alpha[j]);
      a.dim = gram_rank(m, field);
      rep.dims.push_back(std::move(a));
    }
  } else {
    Word word = family_word(family, n);
    for (long k : ks) {
      if (pivotal) {
        ApexDim a;
        a.k = k;
        a.j = 0;
        a.alpha = k == 0 ? "-" : std::string(k, '0');
        a.dim = count_halves(word, Word(k, 0), family);
        rep.dims.push_back(std::move(a));
      } else {
        for (long j = 0; 2 * j <= k; ++j) {
          if (family == FamilyTag::rTL && j != k / 2)
            continue;  // only the alternating middle word occurs
          if (sequence_count(k, j) == 0) continue;
          Int d = cell_count(family, n, k, j, Side::right);
          if (d == 0) continue;
          ApexDim a;
          a.k = k;
          a.j = j;
          a.alpha = "-";
          a.dim = d;
          rep.dims.push_back(std::move(a));
        }
      }
    }
  }
  if (rep.dims.empty()) fail(errc::empty_window, "no cells retained");

  rep.gap = rep.dims[0].dim;
  for (const ApexDim& a : rep.dims)
    if (a.dim < rep.gap) rep.gap = a.dim;
  for (const ApexDim& a : rep.dims) {
    if (a.dim != rep.gap) continue;
    if (mode == GapMode::exact)
      rep.witnesses.push_back(alpha_by_k ? "k" + std::to_string(a.k)
                                         : "a" + a.alpha);
    else
      rep.witnesses.push_back(alpha_by_k
                                  ? "k" + std::to_string(a.k)
                                  : "k" + std::to_string(a.k) + "j" +
                                        std::to_string(a.j));
  }

  if (den == RatioDen::full) {
    rep.denominator = monoid_size_formula(family, n);
  } else {
    rep.denominator = 0;
    for (long k : ks) rep.denominator += layer_size(family, n, k);
  }
  rep.log10_gap = log10_int(rep.gap);
  rep.log10_ratio = rep.log10_gap - 0.5 * log10_int(rep.denominator);
  return rep;
}

}  // namespace pdm
