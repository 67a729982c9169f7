#include "pdm/asymptotics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "pdm/repr.hpp"

namespace pdm {

const char* quantity_name(Quantity q) {
  switch (q) {
    case Quantity::gap: return "gap";
    case Quantity::ssgap: return "ssgap";
    case Quantity::ratio: return "ratio";
    case Quantity::ssratio: return "ssratio";
  }
  return "?";
}

const char* side_name(BoundSide s) {
  return s == BoundSide::lower ? "lower" : "upper";
}

Quantity parse_quantity(const std::string& s) {
  if (s == "gap") return Quantity::gap;
  if (s == "ssgap") return Quantity::ssgap;
  if (s == "ratio") return Quantity::ratio;
  if (s == "ssratio") return Quantity::ssratio;
  fail(errc::bad_parameters, "unknown quantity '" + s + "'");
}

BoundSide parse_side(const std::string& s) {
  if (s == "lower") return BoundSide::lower;
  if (s == "upper") return BoundSide::upper;
  fail(errc::bad_parameters, "unknown side '" + s + "'");
}

namespace {

constexpr double kLn10 = 2.302585092994045684;
const double kL2 = std::log10(2.0);
const double kL3 = std::log10(3.0);
const double kL5 = std::log10(5.0);
const double kLpi = std::log10(3.14159265358979323846);

double rq(const Rat& r) { return mpq_get_d(r.get_mpq_t()); }

Rat fr(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

double BoundExpr::exp_base() const {
  return std::pow(2.0, rq(e2)) * std::pow(3.0, rq(e3)) * std::pow(5.0, rq(e5));
}

double BoundExpr::eval_log10(long n) const {
  if (!known)
    fail(errc::unknown_prefactor,
         std::string(family_name(family)) + " " + quantity_name(quantity) +
             " " + side_name(side));
  if (n < 1) fail(errc::bad_parameters, "bound evaluation needs n >= 1");
  double v = rq(c2) * kL2 + rq(c3) * kL3 + rq(c5) * kL5 + rq(cpi) * kLpi;
  v += n * (rq(e2) * kL2 + rq(e3) * kL3 + rq(e5) * kL5);
  v += rq(poly) * std::log10(static_cast<double>(n));
  v -= (rq(corr0) + rq(corr1) / n) / kLn10;
  return v;
}

const std::vector<BoundExpr>& stated_bounds() {
  static const std::vector<BoundExpr> table = [] {
    std::vector<BoundExpr> t;
    auto add = [&t](FamilyTag f, Quantity q, BoundSide s, bool known, Rat c2,
                    Rat c3, Rat c5, Rat cpi, Rat e2, Rat e3, Rat e5, Rat poly,
                    Rat corr0, Rat corr1) {
      BoundExpr b;
      b.family = f;
      b.quantity = q;
      b.side = s;
      b.known = known;
      b.c2 = c2;
      b.c3 = c3;
      b.c5 = c5;
      b.cpi = cpi;
      b.e2 = e2;
      b.e3 = e3;
      b.e5 = e5;
      b.poly = poly;
      b.corr0 = corr0;
      b.corr1 = corr1;
      t.push_back(b);
    };
    const Rat z = 0;
    using F = FamilyTag;
    using Q = Quantity;
    const BoundSide lo = BoundSide::lower, up = BoundSide::upper;

    add(F::TL, Q::gap, lo, true, fr(-5, 2), z, z, z, fr(2), z, z, fr(-5, 2), z, z);
    add(F::TL, Q::gap, up, true, fr(-5, 2), z, z, z, fr(2), z, z, fr(-3, 2), z, z);
    add(F::Mo, Q::gap, lo, false, z, z, z, z, z, fr(2), z, z, z, z);
    add(F::Mo, Q::gap, up, true, fr(-3, 2), z, z, z, fr(2), z, z, fr(-3, 2), z, z);
    add(F::pRo, Q::gap, lo, true, z, z, z, fr(-1, 2), fr(2), z, z, fr(-1, 2), fr(2), fr(1, 3));
    add(F::pRo, Q::gap, up, true, z, z, z, fr(-1, 2), fr(2), z, z, fr(-1, 2), z, z);

    add(F::TL, Q::ratio, lo, true, fr(-7, 4), z, z, fr(3, 4), z, z, z, fr(-7, 4), z, z);
    add(F::TL, Q::ratio, up, true, fr(-3, 4), z, z, fr(3, 4), z, z, z, fr(-3, 4), z, z);
    add(F::Mo, Q::ratio, lo, false, fr(-2), fr(-3, 4), z, fr(1, 4), z, z, z, fr(3, 4), z, z);
    add(F::Mo, Q::ratio, up, true, fr(1, 2), fr(-3, 4), z, fr(1, 4), z, z, z, fr(-3, 4), z, z);
    add(F::pRo, Q::ratio, lo, true, fr(1, 4), z, z, fr(-1, 4), z, z, z, fr(-1, 4), fr(2), fr(1, 3));
    add(F::pRo, Q::ratio, up, true, fr(1, 4), z, z, fr(-1, 4), z, z, z, fr(-1, 4), z, z);

    add(F::rTL, Q::gap, lo, true, fr(-1, 2), z, z, fr(-1, 2), fr(1), z, z, fr(-1, 2), fr(1), fr(1, 3));
    add(F::rTL, Q::gap, up, true, fr(-1, 2), z, z, fr(-1, 2), fr(1), z, z, fr(-1, 2), z, z);
    add(F::rMo, Q::ssgap, lo, true, z, z, z, fr(-1, 2), fr(2), z, z, fr(-3, 2), z, fr(1));
    add(F::rMo, Q::ssgap, up, true, fr(5, 2), z, z, fr(-1, 2), fr(2), z, z, fr(-1), z, fr(1));
    add(F::rpRo, Q::gap, lo, true, fr(1, 2), z, z, fr(-1, 2), fr(1), z, z, fr(-1, 2), fr(4), fr(16, 3));
    add(F::rpRo, Q::gap, up, true, fr(1, 2), z, z, fr(-1, 2), fr(1), z, z, fr(-1, 2), z, z);

    add(F::rTL, Q::ratio, lo, true, fr(1, 4), z, z, fr(-1, 4), z, z, z, fr(-1, 4), fr(1), fr(1, 3));
    add(F::rTL, Q::ratio, up, true, fr(1, 4), z, z, fr(-1, 4), z, z, z, fr(-1, 4), z, z);
    add(F::rMo, Q::ssratio, lo, true, z, z, z, fr(-1, 2), z, z, z, fr(-3, 2), z, fr(1));
    add(F::rMo, Q::ssratio, up, true, fr(5, 2), z, z, fr(-1, 2), z, z, z, fr(-1), z, z);
    add(F::rpRo, Q::ratio, up, true, z, z, z, z, fr(3, 2), fr(3, 4), fr(-5, 4), z, z, z);
    return t;
  }();
  return table;
}

BoundExpr bound(FamilyTag family, Quantity q, BoundSide side) {
  for (const BoundExpr& b : stated_bounds())
    if (b.family == family && b.quantity == q && b.side == side) return b;
  fail(errc::not_stated, std::string(family_name(family)) + " " +
                             quantity_name(q) + " " + side_name(side));
}

bool bound_stated(FamilyTag family, Quantity q, BoundSide side) {
  for (const BoundExpr& b : stated_bounds())
    if (b.family == family && b.quantity == q && b.side == side) return true;
  return false;
}

double log10_factorial(long m) {
  if (m < 0) fail(errc::bad_parameters, "factorial of negative argument");
  return std::lgamma(static_cast<double>(m) + 1.0) / kLn10;
}

double log10_binomial_f(long a, long b) {
  if (b < 0 || a < 0 || b > a)
    fail(errc::bad_parameters, "empty binomial coefficient");
  return log10_factorial(a) - log10_factorial(b) - log10_factorial(a - b);
}

namespace {

struct LogSum {
  std::vector<double> xs;
  void add(double x) { xs.push_back(x); }
  double value() const {
    double m = *std::max_element(xs.begin(), xs.end());
    double s = 0;
    for (double x : xs) s += std::pow(10.0, x - m);
    return m + std::log10(s);
  }
};

// log10 of the per-cell half-diagram counts of the dotted rigid families.
double log10_rmo_cell(long n, long k, long j, Side side) {
  if (side == Side::right)
    return std::log10(static_cast<double>(1 - j + 2 * k)) +
           log10_factorial(j + 2 * n) - log10_factorial(j - k + n) -
           log10_factorial(1 + k + n);
  return std::log10(static_cast<double>(2 - j + 2 * k)) +
         log10_factorial(1 + j + 2 * n) - log10_factorial(j - k + n) -
         log10_factorial(2 + k + n);
}

}  // namespace

double log10_monoid_size_f(FamilyTag family, long n) {
  if (n < 1) fail(errc::bad_parameters, "size needs n >= 1");
  switch (family) {
    case FamilyTag::TL:
      return log10_binomial_f(4 * n, 2 * n) -
             std::log10(static_cast<double>(2 * n + 1));
    case FamilyTag::Mo:
      return log10_int(motzkin(4 * n));
    case FamilyTag::pRo:
      return log10_binomial_f(4 * n, 2 * n);
    case FamilyTag::rTL:
      return log10_binomial_f(2 * n - 1, n);
    case FamilyTag::rMo: {
      LogSum s;
      for (long k = 0; k <= 2 * n; ++k)
        for (long j = std::max(0L, k - n); 2 * j <= k; ++j)
          s.add(log10_binomial_f(k + 1, 2 * j + 1) +
                log10_rmo_cell(n, k, j, Side::left) +
                log10_rmo_cell(n, k, j, Side::right));
      return s.value();
    }
    case FamilyTag::rpRo: {
      LogSum s;
      for (long k = 0; k <= 2 * n; ++k)
        for (long j = std::max(0L, k - n); 2 * j <= k; ++j)
          s.add(log10_binomial_f(k + 1, 2 * j + 1) +
                2 * log10_binomial_f(n + j, k));
      return s.value();
    }
  }
  fail(errc::bad_parameters, "unknown family");
}

TieValue log10_ss_trunc_gap(FamilyTag family, long n) {
  if (family_traits(family).pivotal)
    fail(errc::bad_parameters, "rigid families only");
  TruncationWindow w = truncation_window(family, n, TruncMode::paper);
  constexpr double kTieTol = 1e-9;
  TieValue best;
  best.log10_value = 1e300;
  auto consider = [&](double v, std::string token) {
    if (v < best.log10_value - kTieTol) {
      best.log10_value = v;
      best.witnesses.clear();
      best.witnesses.push_back(std::move(token));
    } else if (v <= best.log10_value + kTieTol) {
      best.witnesses.push_back(std::move(token));
    }
  };
  for (long k : w.ks) {
    if (family == FamilyTag::rTL) {
      consider(log10_binomial_f(n - 1, (2 * n - k) / 2),
               "k" + std::to_string(k));
      continue;
    }
    for (long j = std::max(0L, k - n); 2 * j <= k; ++j) {
      double v = family == FamilyTag::rMo
                     ? log10_rmo_cell(n, k, j, Side::right)
                     : log10_binomial_f(n + j, k);
      consider(v, "k" + std::to_string(k) + "j" + std::to_string(j));
    }
  }
  return best;
}

namespace {

std::string family_token(FamilyTag f) {
  std::string s;
  for (const char* p = family_name(f); *p; ++p)
    s += static_cast<char>(std::tolower(static_cast<unsigned char>(*p)));
  return s;
}

void intro_figure(bool ratio, std::vector<FigurePoint>& out) {
  const std::string id = ratio ? "intro_ratio" : "intro_gap";
  const FamilyTag fams[6] = {FamilyTag::TL,  FamilyTag::Mo,  FamilyTag::pRo,
                             FamilyTag::rTL, FamilyTag::rMo, FamilyTag::rpRo};
  for (long n = 10; n <= 1000; n += 10) {
    for (FamilyTag f : fams) {
      Quantity q = f == FamilyTag::rMo
                       ? (ratio ? Quantity::ssratio : Quantity::ssgap)
                       : (ratio ? Quantity::ratio : Quantity::gap);
      for (BoundSide s : {BoundSide::lower, BoundSide::upper}) {
        if (!bound_stated(f, q, s)) continue;
        BoundExpr b = bound(f, q, s);
        if (!b.known) continue;
        out.push_back(
            {id, family_token(f) + "_" + side_name(s), n, b.eval_log10(n)});
      }
      if (!family_traits(f).pivotal) {
        TieValue tv = log10_ss_trunc_gap(f, n);
        double v = tv.log10_value;
        if (ratio) v -= 0.5 * log10_monoid_size_f(f, n);
        out.push_back({id, family_token(f) + "_exact", n, v});
      }
    }
  }
}

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {
      "intro_gap", "intro_ratio", "rtl_trunc",  "rmo_trunc",
      "rmo_bulk",  "rpro_trunc",  "rpro_bulk"};
  return ids;
}

std::vector<FigurePoint> figure_points(const std::string& figure_id) {
  std::vector<FigurePoint> out;
  if (figure_id == "intro_gap" || figure_id == "intro_ratio") {
    intro_figure(figure_id == "intro_ratio", out);
  } else if (figure_id == "rtl_trunc") {
    const long n = 100;
    for (long k = 2; k <= 2 * n; k += 2)
      out.push_back({figure_id, "log10_dim", k,
                     log10_binomial_f(n - 1, (2 * n - k) / 2)});
  } else if (figure_id == "rmo_trunc") {
    const long n = 100;
    for (long k = 0; k <= 2 * n; ++k) {
      double m = 1e300;
      for (long j = std::max(0L, k - n); 2 * j <= k; ++j)
        m = std::min(m, log10_rmo_cell(n, k, j, Side::right));
      out.push_back({figure_id, "log10_min_dim", k, m});
    }
  } else if (figure_id == "rmo_bulk") {
    const long n = 100;
    for (long k = 0; k <= 2 * n; ++k) {
      LogSum s;
      for (long j = std::max(0L, k - n); 2 * j <= k; ++j)
        s.add(log10_binomial_f(k + 1, 2 * j + 1) +
              log10_rmo_cell(n, k, j, Side::left) +
              log10_rmo_cell(n, k, j, Side::right));
      out.push_back({figure_id, "log10_layer_size", k, s.value()});
    }
  } else if (figure_id == "rpro_trunc") {
    const long n = 200;
    for (long k = 0; k <= 2 * n; ++k) {
      long jmin = std::max(0L, k - n);
      out.push_back(
          {figure_id, "log10_min_dim", k, log10_binomial_f(n + jmin, k)});
    }
  } else if (figure_id == "rpro_bulk") {
    const long n = 200;
    for (long k = 0; k <= 2 * n; ++k) {
      LogSum s;
      for (long j = std::max(0L, k - n); 2 * j <= k; ++j)
        s.add(log10_binomial_f(k + 1, 2 * j + 1) +
              2 * log10_binomial_f(n + j, k));
      out.push_back({figure_id, "log10_layer_size", k, s.value()});
    }
  } else {
    fail(errc::bad_parameters, "unknown figure '" + figure_id + "'");
  }
  return out;
}

}  // namespace pdm
