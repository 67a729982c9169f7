#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "pdm/asymptotics.hpp"
#include "pdm/parallel.hpp"
#include "pdm/repr.hpp"

namespace fs = std::filesystem;
using namespace pdm;

namespace {

int exit_code(errc c) {
  switch (c) {
    case errc::bad_parameters:
    case errc::parse_error:
    case errc::not_prime:
      return 1;
    case errc::budget_exceeded:
    case errc::empty_window:
      return 2;
    case errc::io_error:
      return 4;
    default:
      return 3;
  }
}

std::string fmt6(double v) {
  char b[64];
  std::snprintf(b, sizeof b, "%.6f", v);
  return b;
}

std::string lower_name(FamilyTag f) {
  std::string s;
  for (const char* p = family_name(f); *p; ++p)
    s += static_cast<char>(std::tolower(static_cast<unsigned char>(*p)));
  return s;
}

void write_file(const fs::path& p, const std::string& content) {
  std::error_code ec;
  if (p.has_parent_path()) fs::create_directories(p.parent_path(), ec);
  std::ofstream f(p, std::ios::binary);
  if (!f) fail(errc::io_error, "cannot open " + p.string());
  f << content;
  f.flush();
  if (!f) fail(errc::io_error, "write failed for " + p.string());
}

fs::path family_dir(const std::string& out, FamilyTag f, long n) {
  return fs::path(out) / (lower_name(f) + "_" + std::to_string(n));
}

std::string alpha_digits(const Word& alpha) {
  if (alpha.empty()) return "-";
  std::string s;
  for (int c : alpha) s += std::to_string(c);
  return s;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i];
  }
  return s;
}

struct Options {
  std::string family = "tl";
  long n = 1;
  long k = -1;
  long j = -1;
  std::string mode = "exact";
  std::string truncate = "full";
  std::string field = "q";
  std::string denominator = "full";
  std::string source = "formula";
  std::string format = "ascii";
  std::string figure;
  std::string quantity;
  std::string side;
  std::string out;
  long budget = 5000000;
  long guard = 20000;
  int threads = 0;
  bool exclude_edges = false;
  bool quick = false;
};

GapMode parse_mode(const std::string& s) {
  if (s == "exact") return GapMode::exact;
  if (s == "semisimple" || s == "ss") return GapMode::semisimple;
  fail(errc::bad_parameters, "unknown mode '" + s + "'");
}

TruncMode parse_trunc(const std::string& s) {
  if (s == "full") return TruncMode::full;
  if (s == "paper" || s == "window") return TruncMode::paper;
  fail(errc::bad_parameters, "unknown truncation '" + s + "'");
}

RatioDen parse_den(const std::string& s) {
  if (s == "full") return RatioDen::full;
  if (s == "truncated") return RatioDen::truncated;
  fail(errc::bad_parameters, "unknown denominator mode '" + s + "'");
}

// ---- enumerate ----

int cmd_enumerate(const Options& o) {
  FamilyTag f = parse_family(o.family);
  MonoidTable t = enumerate(f, o.n, o.budget);
  std::ostringstream body;
  export_elements(t, body);
  if (o.out.empty()) {
    std::cout << body.str();
  } else {
    fs::path p = family_dir(o.out, f, o.n) / "elements.txt";
    write_file(p, body.str());
    std::cout << "family=" << family_name(f) << " n=" << o.n
              << " count=" << t.size() << " wrote " << p.string() << "\n";
  }
  return 0;
}

// ---- eggbox ----

std::string green_csv(const GreenData& g) {
  std::ostringstream os;
  os << "family,n,jcell_id,k,alpha,left_cells,right_cells,size,idempotent\n";
  for (size_t idx = 0; idx < g.display_order.size(); ++idx) {
    int j = g.display_order[idx];
    os << family_name(g.table->family) << "," << g.table->n << "," << idx
       << "," << g.j_k[j] << "," << alpha_digits(g.j_alpha[j]) << ","
       << g.j_left_cells[j] << "," << g.j_right_cells[j] << ","
       << g.j_members[j].size() << "," << (g.j_idempotent[j] ? 1 : 0) << "\n";
  }
  return os.str();
}

int cmd_eggbox(const Options& o) {
  FamilyTag f = parse_family(o.family);
  MonoidTable t = enumerate(f, o.n, o.budget);
  GreenData g = green_structure(t, o.guard, o.threads);
  check_structure(g);
  std::string ascii = eggbox_ascii(g), dot = eggbox_dot(g), csv = green_csv(g);
  if (o.out.empty()) {
    if (o.format == "ascii")
      std::cout << ascii;
    else if (o.format == "dot")
      std::cout << dot;
    else if (o.format == "csv")
      std::cout << csv;
    else
      fail(errc::bad_parameters, "unknown format '" + o.format + "'");
  } else {
    fs::path dir = family_dir(o.out, f, o.n);
    write_file(dir / "eggbox.txt", ascii);
    write_file(dir / "eggbox.dot", dot);
    write_file(dir / "green.csv", csv);
    std::cout << "family=" << family_name(f) << " n=" << o.n
              << " jcells=" << g.n_j << " wrote " << dir.string() << "\n";
  }
  return 0;
}

// ---- counts ----

struct CountRow {
  long k, j;
  Int right, left, size;
};

std::vector<CountRow> formula_counts(FamilyTag f, long n) {
  std::vector<CountRow> rows;
  if (f == FamilyTag::rTL) {
    for (long k = 2; k <= 2 * n; k += 2) {
      Int r = cell_count(f, n, k, k / 2, Side::right);
      Int l = cell_count(f, n, k, k / 2, Side::left);
      rows.push_back({k, k / 2, r, l, r * l});
    }
    return rows;
  }
  for (long k = 0; k <= 2 * n; ++k)
    for (long j = std::max(0L, k - n); 2 * j <= k; ++j) {
      Int r = cell_count(f, n, k, j, Side::right);
      Int l = cell_count(f, n, k, j, Side::left);
      if (r == 0 || l == 0) continue;
      rows.push_back({k, j, r, l, r * l});
    }
  return rows;
}

std::vector<CountRow> brute_counts(FamilyTag f, long n, long budget,
                                   long guard, int threads) {
  MonoidTable t = enumerate(f, n, budget);
  GreenData g = green_structure(t, guard, threads);
  std::map<std::pair<long, long>, CountRow> agg;
  for (int j = 0; j < g.n_j; ++j) {
    long k = g.j_k[j], asc = ascent_count(g.j_alpha[j]);
    CountRow row{k, asc, Int(g.j_left_cells[j]), Int(g.j_right_cells[j]),
                 Int(static_cast<long>(g.j_members[j].size()))};
    auto [it, fresh] = agg.emplace(std::pair{k, asc}, row);
    if (!fresh && (it->second.right != row.right ||
                   it->second.left != row.left || it->second.size != row.size))
      fail(errc::structure_mismatch,
           "cells with equal grading disagree at k=" + std::to_string(k) +
               " j=" + std::to_string(asc));
  }
  std::vector<CountRow> rows;
  for (auto& [kj, row] : agg) rows.push_back(row);
  return rows;
}

std::string counts_csv(FamilyTag f, long n,
                       const std::vector<std::pair<std::string,
                                                   std::vector<CountRow>>>& sets) {
  std::ostringstream os;
  os << "family,n,k,j,right_size,left_size,jcell_size,source\n";
  for (const auto& [label, rows] : sets)
    for (const CountRow& r : rows)
      os << family_name(f) << "," << n << "," << r.k << "," << r.j << ","
         << r.right.get_str() << "," << r.left.get_str() << ","
         << r.size.get_str() << "," << label << "\n";
  return os.str();
}

int cmd_counts(const Options& o) {
  FamilyTag f = parse_family(o.family);
  std::vector<std::pair<std::string, std::vector<CountRow>>> sets;
  if (o.source == "formula") {
    sets.emplace_back("formula", formula_counts(f, o.n));
  } else if (o.source == "brute") {
    sets.emplace_back("brute",
                      brute_counts(f, o.n, o.budget, o.guard, o.threads));
  } else if (o.source == "both") {
    auto fr = formula_counts(f, o.n);
    auto br = brute_counts(f, o.n, o.budget, o.guard, o.threads);
    if (fr.size() != br.size())
      fail(errc::formula_brute_mismatch,
           "grading sets differ: formula has " + std::to_string(fr.size()) +
               " rows, brute has " + std::to_string(br.size()));
    for (size_t i = 0; i < fr.size(); ++i)
      if (fr[i].k != br[i].k || fr[i].j != br[i].j ||
          fr[i].right != br[i].right || fr[i].left != br[i].left ||
          fr[i].size != br[i].size)
        fail(errc::formula_brute_mismatch,
             "row " + std::to_string(i) + " differs at k=" +
                 std::to_string(fr[i].k) + " j=" + std::to_string(fr[i].j));
    sets.emplace_back("formula", std::move(fr));
    sets.emplace_back("brute", std::move(br));
  } else {
    fail(errc::bad_parameters, "unknown source '" + o.source + "'");
  }
  std::string csv = counts_csv(f, o.n, sets);
  if (o.out.empty()) {
    std::cout << csv;
  } else {
    fs::path p = family_dir(o.out, f, o.n) / "counts.csv";
    write_file(p, csv);
    std::cout << "wrote " << p.string() << "\n";
  }
  return 0;
}

// ---- gram ----

int cmd_gram(const Options& o) {
  FamilyTag f = parse_family(o.family);
  Field field = parse_field(o.field);
  MonoidTable t = enumerate(f, o.n, o.budget);
  GreenData g = green_structure(t, o.guard, o.threads);
  std::ostringstream os;
  os << "family,n,k,alpha,rows,cols,field,rank,ssdim\n";
  bool any = false;
  for (int j : g.display_order) {
    if (o.k >= 0 && g.j_k[j] != o.k) continue;
    if (o.j >= 0 && ascent_count(g.j_alpha[j]) != o.j) continue;
    GramMatrix m = gram_matrix(t, g, j);
    long rank = gram_rank(m, field);
    os << family_name(f) << "," << o.n << "," << g.j_k[j] << ","
       << alpha_digits(g.j_alpha[j]) << "," << m.rows << "," << m.cols << ","
       << field.name() << "," << rank << "," << m.cols << "\n";
    any = true;
  }
  if (!any) fail(errc::bad_parameters, "no cells match the given grading");
  if (o.out.empty()) {
    std::cout << os.str();
  } else {
    fs::path p = family_dir(o.out, f, o.n) / "gram.csv";
    write_file(p, os.str());
    std::cout << "wrote " << p.string() << "\n";
  }
  return 0;
}

// ---- gap ----

int cmd_gap(const Options& o) {
  FamilyTag f = parse_family(o.family);
  GapMode mode = parse_mode(o.mode);
  TruncMode trunc = parse_trunc(o.truncate);
  Field field = parse_field(o.field);
  RatioDen den = parse_den(o.denominator);
  GapReport rep = repgap(f, o.n, mode, trunc, field, den, o.exclude_edges,
                         o.budget, o.guard, o.threads);
  std::ostringstream os;
  os << "family,n,mode,field,window_lo,window_hi,gap,log10_gap,"
        "denominator_mode,log10_ratio,witness_apexes\n";
  os << family_name(f) << "," << o.n << ","
     << (mode == GapMode::exact ? "exact" : "semisimple") << ","
     << field.name() << "," << rep.window_lo << "," << rep.window_hi << ","
     << rep.gap.get_str() << "," << fmt6(rep.log10_gap) << ","
     << (den == RatioDen::full ? "full" : "truncated") << ","
     << fmt6(rep.log10_ratio) << "," << join(rep.witnesses, "|") << "\n";
  std::cout << "family=" << family_name(f) << " n=" << o.n
            << " mode=" << (mode == GapMode::exact ? "exact" : "semisimple")
            << " truncate=" << (trunc == TruncMode::full ? "full" : "paper")
            << " field=" << field.name() << "\n"
            << "window=" << rep.window_lo << ".." << rep.window_hi << "\n"
            << "gap=" << rep.gap.get_str() << "\n"
            << "log10_gap=" << fmt6(rep.log10_gap) << "\n"
            << "log10_ratio=" << fmt6(rep.log10_ratio) << "\n"
            << "witnesses=" << join(rep.witnesses, "|") << "\n";
  if (!o.out.empty()) {
    fs::path p = family_dir(o.out, f, o.n) / "gap.csv";
    write_file(p, os.str());
    std::cout << "wrote " << p.string() << "\n";
  }
  return 0;
}

// ---- bounds ----

int cmd_bounds(const Options& o) {
  std::ostringstream os;
  os << "family,quantity,side,n,log10_value,known\n";
  std::vector<long> ns;
  if (o.n > 0)
    ns.push_back(o.n);
  else
    for (long n = 10; n <= 1000; n += 10) ns.push_back(n);
  bool any = false;
  for (const BoundExpr& b : stated_bounds()) {
    if (!o.family.empty() && o.family != "all" &&
        parse_family(o.family) != b.family)
      continue;
    if (!o.quantity.empty() && parse_quantity(o.quantity) != b.quantity)
      continue;
    if (!o.side.empty() && parse_side(o.side) != b.side) continue;
    any = true;
    for (long n : ns)
      os << family_name(b.family) << "," << quantity_name(b.quantity) << ","
         << side_name(b.side) << "," << n << ","
         << (b.known ? fmt6(b.eval_log10(n)) : std::string("nan")) << ","
         << (b.known ? "true" : "false") << "\n";
  }
  if (!any) fail(errc::not_stated, "no stated bound matches the filters");
  if (o.out.empty()) {
    std::cout << os.str();
  } else {
    fs::path p = fs::path(o.out) / "bounds.csv";
    write_file(p, os.str());
    std::cout << "wrote " << p.string() << "\n";
  }
  return 0;
}

// ---- figures ----

int cmd_figures(const Options& o) {
  std::ostringstream os;
  os << "figure_id,series,n_or_k,log10_value\n";
  std::vector<std::string> ids =
      o.figure.empty() ? figure_ids() : std::vector<std::string>{o.figure};
  for (const std::string& id : ids)
    for (const FigurePoint& p : figure_points(id))
      os << p.figure_id << "," << p.series << "," << p.x << ","
         << fmt6(p.log10_value) << "\n";
  if (o.out.empty()) {
    std::cout << os.str();
  } else {
    fs::path p = fs::path(o.out) / "figure.csv";
    write_file(p, os.str());
    std::cout << "wrote " << p.string() << "\n";
  }
  return 0;
}

// ---- selfcheck ----

void ok(const std::string& what) { std::cout << "ok: " << what << "\n"; }

template <typename Fn>
void expect_error(errc code, const std::string& what, Fn fn) {
  try {
    fn();
  } catch (const toolkit_error& e) {
    if (e.code() == code) {
      ok(what);
      return;
    }
    fail(errc::structure_mismatch,
         what + ": raised wrong error: " + e.what());
  }
  fail(errc::structure_mismatch, what + ": error not raised");
}

void check(bool cond, const std::string& what) {
  if (!cond) fail(errc::structure_mismatch, what);
  ok(what);
}

int cmd_selfcheck(const Options& o) {
  bool quick = o.quick;

  // Negative control: a same-letter bottom arc must be rejected in rTL.
  expect_error(errc::letter_mismatch, "negative control: bad arc letters",
               [] {
                 RawPairing raw;
                 raw.bottom_arcs = {{1, 2}};
                 raw.top_arcs = {{1, 2}};
                 validate({1, 2}, {1, 2}, raw, FamilyTag::rTL);
               });

  for (FamilyTag f : {FamilyTag::TL, FamilyTag::Mo, FamilyTag::pRo,
                      FamilyTag::rTL, FamilyTag::rMo, FamilyTag::rpRo}) {
    Diagram id = identity(family_word(f, 2));
    check(parse(serialize(id)) == id,
          std::string("round trip identity ") + family_name(f));
  }

  check(chu_vandermonde(2, 1, -5) == Rat(3, 2), "sum evaluation m=2");
  check(hyp2f1_terminating(2, 1, -5) == Rat(3, 2), "series evaluation m=2");
  check(chu_vandermonde(5, -2, -2) == 6, "matched-zero evaluation m=5");
  check(hyp2f1_terminating(5, -2, -2) == 6, "matched-zero series m=5");
  check(wz_certificate(2, 1, -5), "telescoping certificate m=2");
  check(wz_certificate(4, 2, 7), "telescoping certificate m=4");
  expect_error(errc::pole_error, "degenerate certificate detection",
               [] { wz_certificate(5, -2, -2); });
  expect_error(errc::pole_error, "pole detection",
               [] { hyp2f1_terminating(3, 1, -1); });
  expect_error(errc::hypothesis_violated, "degenerate parameter detection",
               [] { chu_vandermonde(2, 1, -1); });

  for (long K = 1; K <= 5; ++K)
    for (long m = 0; m <= 8; ++m) {
      Int direct = catalan_convolution(K, m);
      Int conv = 0;
      for (long b = 0; b <= m; ++b)
        conv += (K == 1 ? Int(b == 0 ? 1 : 0)
                        : catalan_convolution(K - 1, m - b)) *
                catalan(b);
      if (K == 1) conv = catalan(m);
      if (direct != conv)
        fail(errc::structure_mismatch,
             "convolution recurrence fails at K=" + std::to_string(K) +
                 " m=" + std::to_string(m));
    }
  ok("convolution recurrence K<=5 m<=8");

  for (long m = 1; m <= 9; ++m) {
    Int expected = catalan((m + 1) / 2);
    Int got = count_halves(Word(m, 0), Word(m % 2, 0), FamilyTag::TL);
    if (got != expected)
      fail(errc::structure_mismatch,
           "arc half count at m=" + std::to_string(m) + ": " + got.get_str());
  }
  ok("minimal-through arc half counts m<=9");

  for (long n = 1; n <= 4; ++n)
    for (long k = 0; k <= 2 * n; ++k) {
      Int got = count_halves(Word(2 * n, 0), Word(k, 0), FamilyTag::pRo);
      if (got != binomial(2 * n, k))
        fail(errc::structure_mismatch, "dotted half count at n=" +
                                           std::to_string(n) +
                                           " k=" + std::to_string(k));
    }
  ok("dotted pivotal half counts n<=4");

  struct SizeCase {
    FamilyTag f;
    long max_n;
  };
  std::vector<SizeCase> size_cases = {
      {FamilyTag::TL, quick ? 3 : 4},  {FamilyTag::Mo, quick ? 2 : 3},
      {FamilyTag::pRo, quick ? 2 : 3}, {FamilyTag::rTL, 5},
      {FamilyTag::rMo, quick ? 2 : 3}, {FamilyTag::rpRo, quick ? 3 : 4}};
  for (const SizeCase& c : size_cases)
    for (long n = 1; n <= c.max_n; ++n) monoid_size(c.f, n, SizeMode::both);
  ok("formula sizes match enumeration");

  for (FamilyTag f : {FamilyTag::TL, FamilyTag::Mo, FamilyTag::pRo,
                      FamilyTag::rTL, FamilyTag::rMo, FamilyTag::rpRo}) {
    long max_n = family_traits(f).pivotal ? (quick ? 1 : 2) : (quick ? 2 : 3);
    for (long n = 1; n <= max_n; ++n) {
      MonoidTable t = enumerate(f, n, o.budget);
      GreenData g = green_structure(t, o.guard, o.threads);
      check_structure(g);
      if (!family_traits(f).pivotal) {
        for (int j = 0; j < g.n_j; ++j) {
          long k = g.j_k[j];
          long asc = f == FamilyTag::rTL ? k / 2 : ascent_count(g.j_alpha[j]);
          if (Int(g.j_left_cells[j]) != cell_count(f, n, k, asc, Side::right) ||
              Int(g.j_right_cells[j]) != cell_count(f, n, k, asc, Side::left))
            fail(errc::formula_brute_mismatch,
                 std::string(family_name(f)) + " n=" + std::to_string(n) +
                     " cell counts differ at k=" + std::to_string(k));
        }
      }
    }
  }
  ok("cell structure checks");

  {
    MonoidTable t = enumerate(FamilyTag::rTL, 3);
    GreenData g = green_structure(t, o.guard, o.threads);
    bool found = false;
    for (int j : g.display_order) {
      if (g.j_k[j] != 4) continue;
      GramMatrix m = gram_matrix(t, g, j);
      check(m.rows == 3 && m.cols == 2 && gram_rank(m, Field::Q()) == 2,
            "middle-layer pairing matrix shape and rank");
      found = true;
    }
    if (!found) fail(errc::structure_mismatch, "middle layer missing");
  }

  if (!quick) {
    MonoidTable t = enumerate(FamilyTag::rMo, 3);
    GreenData g = green_structure(t, o.guard, o.threads);
    check(g.n_j == 33, "two-sided class count at n=3");
    std::vector<long> ranks, ssdims;
    for (int j : g.display_order) {
      if (g.j_k[j] != 2) continue;
      GramMatrix m = gram_matrix(t, g, j);
      ranks.push_back(gram_rank(m, Field::Q()));
      ssdims.push_back(m.cols);
    }
    std::sort(ranks.begin(), ranks.end());
    std::sort(ssdims.begin(), ssdims.end());
    check(ranks == std::vector<long>({4, 5, 5, 12}) &&
              ssdims == std::vector<long>({5, 5, 5, 14}),
          "dotted rigid pairing ranks at n=3 k=2");
  }

  check(truncation_window(FamilyTag::rTL, 8).ks ==
            std::vector<long>({6, 8, 10, 12}),
        "retained layers at n=8");
  check(truncation_window(FamilyTag::TL, 2).ks == std::vector<long>({0, 2, 4}),
        "retained layers at n=2");
  {
    TruncationWindow w = truncation_window(FamilyTag::rpRo, 100);
    check(w.lo == 36 && w.hi == 64, "retained window at n=100");
  }

  {
    GapReport r = repgap(FamilyTag::rTL, 8, GapMode::semisimple,
                         TruncMode::paper);
    check(r.gap == 21 && r.window_lo == 6 && r.window_hi == 12 &&
              r.witnesses == std::vector<std::string>({"k6", "k12"}),
          "windowed gap at n=8");
    TieValue tv = log10_ss_trunc_gap(FamilyTag::rTL, 8);
    check(std::abs(tv.log10_value - log10_int(Int(21))) < 1e-9 &&
              tv.witnesses == r.witnesses,
          "floating layer minimum matches exact one");
  }
  {
    GapReport r = repgap(FamilyTag::rTL, 3, GapMode::exact, TruncMode::full);
    check(r.gap == 2 && r.witnesses == std::vector<std::string>({"k4"}),
          "exact full gap at n=3");
  }
  {
    GapReport r = repgap(FamilyTag::rMo, 1, GapMode::exact, TruncMode::full);
    check(r.gap == 1 &&
              r.witnesses == std::vector<std::string>({"a1", "a2"}),
          "exact full gap for dotted rigid n=1");
  }

  check(std::abs(bound(FamilyTag::rTL, Quantity::gap, BoundSide::upper)
                     .eval_log10(100) -
                 28.7039096322) < 1e-6,
        "bound anchor at n=100");
  expect_error(errc::not_stated, "unstated bound detection", [] {
    bound(FamilyTag::rpRo, Quantity::ratio, BoundSide::lower);
  });
  expect_error(errc::unknown_prefactor, "unknown prefactor detection", [] {
    bound(FamilyTag::Mo, Quantity::gap, BoundSide::lower).eval_log10(10);
  });

  std::cout << "selfcheck passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cell structure and dimension-gap toolkit for planar "
               "diagram monoids"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd, bool with_family = true) {
    if (with_family) {
      cmd->add_option("--family", o.family, "tl, mo, pro, rtl, rmo, rpro");
      cmd->add_option("--n", o.n, "half the boundary length");
    }
    cmd->add_option("--budget", o.budget, "largest monoid to enumerate");
    cmd->add_option("--guard", o.guard,
                    "largest monoid for cell decomposition");
    cmd->add_option("--threads", o.threads,
                    "worker threads (0: REPGAP_THREADS or hardware)");
    cmd->add_option("--out", o.out, "output directory for artifacts");
  };

  CLI::App* c_enum = app.add_subcommand("enumerate", "list all elements");
  add_common(c_enum);

  CLI::App* c_egg =
      app.add_subcommand("eggbox", "cell decomposition and its rendering");
  add_common(c_egg);
  c_egg->add_option("--format", o.format, "ascii, dot or csv");

  CLI::App* c_counts =
      app.add_subcommand("counts", "one-sided class counts per grading");
  add_common(c_counts);
  c_counts->add_option("--source", o.source, "formula, brute or both");

  CLI::App* c_gram =
      app.add_subcommand("gram", "pairing matrix ranks per cell");
  add_common(c_gram);
  c_gram->add_option("--k", o.k, "restrict to one through-strand count");
  c_gram->add_option("--j", o.j, "restrict to one ascent count");
  c_gram->add_option("--field", o.field, "q or a prime p");

  CLI::App* c_gap = app.add_subcommand("gap", "smallest cell dimension");
  add_common(c_gap);
  c_gap->add_option("--mode", o.mode, "exact or semisimple");
  c_gap->add_option("--truncate", o.truncate, "full or paper");
  c_gap->add_option("--field", o.field, "q or a prime p");
  c_gap->add_option("--denominator", o.denominator, "full or truncated");
  c_gap->add_flag("--exclude-window-edges", o.exclude_edges,
                  "drop the first and last retained layer");

  CLI::App* c_bounds =
      app.add_subcommand("bounds", "closed-form envelope curves");
  c_bounds->add_option("--family", o.family, "filter by family");
  c_bounds->add_option("--n", o.n, "single point instead of the 10..1000 grid");
  c_bounds->add_option("--quantity", o.quantity,
                       "gap, ssgap, ratio or ssratio");
  c_bounds->add_option("--side", o.side, "lower or upper");
  c_bounds->add_option("--out", o.out, "output directory");

  CLI::App* c_fig = app.add_subcommand("figures", "figure data series");
  c_fig->add_option("--figure", o.figure, "one figure id; default: all");
  c_fig->add_option("--out", o.out, "output directory");

  CLI::App* c_self = app.add_subcommand("selfcheck", "built-in diagnostics");
  add_common(c_self, false);
  c_self->add_flag("--quick", o.quick, "smaller battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (c_enum->parsed()) return cmd_enumerate(o);
    if (c_egg->parsed()) return cmd_eggbox(o);
    if (c_counts->parsed()) return cmd_counts(o);
    if (c_gram->parsed()) return cmd_gram(o);
    if (c_gap->parsed()) return cmd_gap(o);
    if (c_bounds->parsed()) {
      if (!c_bounds->count("--family")) o.family.clear();
      if (!c_bounds->count("--n")) o.n = 0;
      return cmd_bounds(o);
    }
    if (c_fig->parsed()) return cmd_figures(o);
    if (c_self->parsed()) return cmd_selfcheck(o);
  } catch (const toolkit_error& e) {
    std::cerr << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error=Internal detail=" << e.what() << "\n";
    return 3;
  }
  return 1;
}
