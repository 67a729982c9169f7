#include "pdm/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cstdio>
#include <cstdlib>

namespace pdm {

namespace {

constexpr int kUnset = INT_MIN;

std::string pos_str(int p) { return std::to_string(p); }

void fill_slot(std::vector<int>& part, int pos, int code, const char* side,
               int limit) {
  if (pos < 1 || pos > limit)
    fail(errc::uncovered_position,
         std::string(side) + " position " + pos_str(pos) + " out of range 1.." +
             pos_str(limit));
  if (part[pos - 1] != kUnset)
    fail(errc::uncovered_position,
         std::string(side) + " position " + pos_str(pos) + " covered twice");
  part[pos - 1] = code;
}

// Places every raw pair/dot, checking ranges and disjointness only.
Diagram fill_arrays(const Word& bottom, const Word& top, const RawPairing& raw) {
  Diagram d;
  d.bottom = bottom;
  d.top = top;
  d.bpart.assign(bottom.size(), kUnset);
  d.tpart.assign(top.size(), kUnset);
  for (auto [p, q] : raw.through) {
    fill_slot(d.bpart, p, q, "bottom", d.nb());
    fill_slot(d.tpart, q, p, "top", d.nt());
  }
  for (auto [p, q] : raw.bottom_arcs) {
    if (p >= q)
      fail(errc::bad_parameters, "bottom arc (" + pos_str(p) + "," + pos_str(q) +
                                     ") endpoints not increasing");
    fill_slot(d.bpart, p, -q, "bottom", d.nb());
    fill_slot(d.bpart, q, -p, "bottom", d.nb());
  }
  for (auto [p, q] : raw.top_arcs) {
    if (p >= q)
      fail(errc::bad_parameters, "top arc (" + pos_str(p) + "," + pos_str(q) +
                                     ") endpoints not increasing");
    fill_slot(d.tpart, p, -q, "top", d.nt());
    fill_slot(d.tpart, q, -p, "top", d.nt());
  }
  for (int p : raw.bottom_dots) fill_slot(d.bpart, p, 0, "bottom", d.nb());
  for (int p : raw.top_dots) fill_slot(d.tpart, p, 0, "top", d.nt());
  return d;
}

void check_coverage(const Diagram& d) {
  for (int p = 1; p <= d.nb(); ++p)
    if (d.bpart[p - 1] == kUnset)
      fail(errc::uncovered_position, "bottom position " + pos_str(p) + " uncovered");
  for (int q = 1; q <= d.nt(); ++q)
    if (d.tpart[q - 1] == kUnset)
      fail(errc::uncovered_position, "top position " + pos_str(q) + " uncovered");
}

// Rectangle boundary walk: bottom left to right, then top right to left.
// A pairing is planar iff the walk closes pairs in stack order.
void check_planarity(const Diagram& d) {
  int nb = d.nb(), nt = d.nt(), total = nb + nt;
  auto partner = [&](int i) -> int {  // boundary index -> boundary index, 0 = dot
    if (i <= nb) {
      int code = d.bpart[i - 1];
      if (code == 0) return 0;
      return code > 0 ? total + 1 - code : -code;
    }
    int q = total + 1 - i;
    int code = d.tpart[q - 1];
    if (code == 0) return 0;
    return code > 0 ? code : total + 1 - (-code);
  };
  std::vector<int> stack;
  for (int i = 1; i <= total; ++i) {
    int j = partner(i);
    if (j == 0) continue;
    if (j > i) {
      stack.push_back(i);
    } else {
      if (stack.empty() || stack.back() != j)
        fail(errc::crossing_pairs,
             "pair closing at boundary index " + pos_str(i) +
                 " crosses an open pair");
      stack.pop_back();
    }
  }
}

std::string letter_str(int x) { return std::to_string(x); }

}  // namespace

std::vector<std::pair<int, int>> Diagram::through_pairs() const {
  std::vector<std::pair<int, int>> r;
  for (int p = 1; p <= nb(); ++p)
    if (bpart[p - 1] > 0) r.emplace_back(p, bpart[p - 1]);
  return r;
}

std::vector<std::pair<int, int>> Diagram::bottom_arcs() const {
  std::vector<std::pair<int, int>> r;
  for (int p = 1; p <= nb(); ++p)
    if (bpart[p - 1] < 0 && -bpart[p - 1] > p) r.emplace_back(p, -bpart[p - 1]);
  return r;
}

std::vector<std::pair<int, int>> Diagram::top_arcs() const {
  std::vector<std::pair<int, int>> r;
  for (int p = 1; p <= nt(); ++p)
    if (tpart[p - 1] < 0 && -tpart[p - 1] > p) r.emplace_back(p, -tpart[p - 1]);
  return r;
}

std::vector<int> Diagram::bottom_dots() const {
  std::vector<int> r;
  for (int p = 1; p <= nb(); ++p)
    if (bpart[p - 1] == 0) r.push_back(p);
  return r;
}

std::vector<int> Diagram::top_dots() const {
  std::vector<int> r;
  for (int p = 1; p <= nt(); ++p)
    if (tpart[p - 1] == 0) r.push_back(p);
  return r;
}

Diagram assemble(const Word& bottom, const Word& top, const RawPairing& raw) {
  Diagram d = fill_arrays(bottom, top, raw);
  check_coverage(d);
  check_planarity(d);
  return d;
}

Diagram validate(const Word& bottom, const Word& top, const RawPairing& raw,
                 FamilyTag family) {
  const FamilyTraits& tr = family_traits(family);
  Diagram d = fill_arrays(bottom, top, raw);

  if (!tr.allow_dots && (!raw.bottom_dots.empty() || !raw.top_dots.empty()))
    fail(errc::family_violation,
         std::string("dots are not allowed in family ") + tr.name);
  if (!tr.allow_arcs && (!raw.bottom_arcs.empty() || !raw.top_arcs.empty()))
    fail(errc::family_violation,
         std::string("arcs are not allowed in family ") + tr.name);

  for (auto [p, q] : raw.through)
    if (bottom[p - 1] != top[q - 1])
      fail(errc::letter_mismatch,
           "through (" + pos_str(p) + "," + pos_str(q) + ") joins letters " +
               letter_str(bottom[p - 1]) + " and " + letter_str(top[q - 1]));
  for (auto [p, q] : raw.bottom_arcs)
    if (bottom[p - 1] != bottom[q - 1] + tr.arc_shift)
      fail(errc::letter_mismatch,
           "bottom arc (" + pos_str(p) + "," + pos_str(q) + ") joins letters " +
               letter_str(bottom[p - 1]) + " and " + letter_str(bottom[q - 1]));
  for (auto [p, q] : raw.top_arcs)
    if (top[p - 1] + tr.arc_shift != top[q - 1])
      fail(errc::letter_mismatch,
           "top arc (" + pos_str(p) + "," + pos_str(q) + ") joins letters " +
               letter_str(top[p - 1]) + " and " + letter_str(top[q - 1]));

  check_coverage(d);
  check_planarity(d);
  return d;
}

Diagram compose(const Diagram& f, const Diagram& g) {
  if (f.top != g.bottom)
    fail(errc::boundary_mismatch,
         "top word of the lower factor differs from bottom word of the upper");
  Diagram r;
  r.bottom = f.bottom;
  r.top = g.top;
  r.bpart.assign(r.bottom.size(), kUnset);
  r.tpart.assign(r.top.size(), kUnset);

  // Walks a path through the middle boundary. Returns (kind, pos):
  // kind 0 = ends at a middle dot, 1 = exits at f's bottom, 2 = at g's top.
  auto trace = [&](int t, bool up) -> std::pair<int, int> {
    for (;;) {
      if (up) {
        int c = g.bpart[t - 1];
        if (c == 0) return {0, 0};
        if (c > 0) return {2, c};
        t = -c;
        up = false;
      } else {
        int c = f.tpart[t - 1];
        if (c == 0) return {0, 0};
        if (c > 0) return {1, c};
        t = -c;
        up = true;
      }
    }
  };

  for (int p = 1; p <= r.nb(); ++p) {
    if (r.bpart[p - 1] != kUnset) continue;
    int code = f.bpart[p - 1];
    if (code == 0) {
      r.bpart[p - 1] = 0;
    } else if (code < 0) {
      r.bpart[p - 1] = code;
      r.bpart[-code - 1] = -p;
    } else {
      auto [kind, pos] = trace(code, true);
      if (kind == 0) {
        r.bpart[p - 1] = 0;
      } else if (kind == 2) {
        r.bpart[p - 1] = pos;
        r.tpart[pos - 1] = p;
      } else {
        r.bpart[p - 1] = -pos;
        r.bpart[pos - 1] = -p;
      }
    }
  }
  for (int q = 1; q <= r.nt(); ++q) {
    if (r.tpart[q - 1] != kUnset) continue;
    int code = g.tpart[q - 1];
    if (code == 0) {
      r.tpart[q - 1] = 0;
    } else if (code < 0) {
      r.tpart[q - 1] = code;
      r.tpart[-code - 1] = -q;
    } else {
      auto [kind, pos] = trace(code, false);
      if (kind == 0) {
        r.tpart[q - 1] = 0;
      } else if (kind == 2) {
        r.tpart[q - 1] = -pos;
        r.tpart[pos - 1] = -q;
      } else {
        // Already handled from the bottom sweep; kept for completeness.
        r.tpart[q - 1] = pos;
        r.bpart[pos - 1] = q;
      }
    }
  }
  return r;
}

Diagram tensor(const Diagram& f, const Diagram& g) {
  Diagram r;
  r.bottom = f.bottom;
  r.bottom.insert(r.bottom.end(), g.bottom.begin(), g.bottom.end());
  r.top = f.top;
  r.top.insert(r.top.end(), g.top.begin(), g.top.end());
  r.bpart = f.bpart;
  r.tpart = f.tpart;
  int sb = f.nb(), st = f.nt();
  for (int code : g.bpart)
    r.bpart.push_back(code == 0 ? 0 : code > 0 ? code + st : code - sb);
  for (int code : g.tpart)
    r.tpart.push_back(code == 0 ? 0 : code > 0 ? code + sb : code - st);
  return r;
}

Diagram identity(const Word& w) {
  Diagram r;
  r.bottom = r.top = w;
  int n = static_cast<int>(w.size());
  r.bpart.resize(n);
  r.tpart.resize(n);
  for (int p = 1; p <= n; ++p) r.bpart[p - 1] = r.tpart[p - 1] = p;
  return r;
}

Diagram flip(const Diagram& f) {
  Diagram r;
  r.bottom = f.top;
  r.top = f.bottom;
  r.bpart = f.tpart;
  r.tpart = f.bpart;
  return r;
}

int through_count(const Diagram& f) {
  int k = 0;
  for (int code : f.bpart) k += code > 0;
  return k;
}

Word alpha_of(const Diagram& f) {
  Word a;
  for (int p = 1; p <= f.nb(); ++p)
    if (f.bpart[p - 1] > 0) a.push_back(f.bottom[p - 1]);
  return a;
}

Sandwich sandwich_factor(const Diagram& f) {
  if (f.bottom != f.top)
    fail(errc::not_endomorphism, "boundary words differ; no sandwich form");
  std::vector<std::pair<int, int>> th = f.through_pairs();  // p ascending
  int k = static_cast<int>(th.size());
  Sandwich s;
  for (auto [p, q] : th) {
    (void)q;
    s.alpha.push_back(f.bottom[p - 1]);
  }
  s.B.bottom = f.bottom;
  s.B.top = s.alpha;
  s.B.bpart = f.bpart;
  s.B.tpart.resize(k);
  for (int i = 0; i < k; ++i) {
    s.B.bpart[th[i].first - 1] = i + 1;
    s.B.tpart[i] = th[i].first;
  }
  s.T.bottom = s.alpha;
  s.T.top = f.top;
  s.T.tpart = f.tpart;
  s.T.bpart.resize(k);
  for (int i = 0; i < k; ++i) {
    s.T.bpart[i] = th[i].second;
    s.T.tpart[th[i].second - 1] = i + 1;
  }
  return s;
}

std::string serialize(const Diagram& f) {
  std::vector<std::string> tokens;
  char buf[48];
  for (int p = 1; p <= f.nb(); ++p) {
    int code = f.bpart[p - 1];
    if (code > 0)
      std::snprintf(buf, sizeof buf, "T(%d,%d)", p, code);
    else if (code < 0 && -code > p)
      std::snprintf(buf, sizeof buf, "B(%d,%d)", p, -code);
    else if (code == 0)
      std::snprintf(buf, sizeof buf, "Db(%d)", p);
    else
      continue;
    tokens.emplace_back(buf);
  }
  for (int q = 1; q <= f.nt(); ++q) {
    int code = f.tpart[q - 1];
    if (code < 0 && -code > q)
      std::snprintf(buf, sizeof buf, "U(%d,%d)", q, -code);
    else if (code == 0)
      std::snprintf(buf, sizeof buf, "Dt(%d)", q);
    else
      continue;
    tokens.emplace_back(buf);
  }
  std::sort(tokens.begin(), tokens.end());
  std::string out;
  for (size_t i = 0; i < f.bottom.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(f.bottom[i]);
  }
  out += ';';
  for (size_t i = 0; i < f.top.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(f.top[i]);
  }
  out += ';';
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

namespace {

struct Scanner {
  const std::string& s;
  size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }

  [[noreturn]] void err(const std::string& what) const {
    fail(errc::parse_error, what + " at byte " + std::to_string(pos), pos);
  }

  char next() {
    if (done()) err("unexpected end of input");
    return s[pos++];
  }

  void expect(char c) {
    if (peek() != c) err(std::string("expected '") + c + "'");
    ++pos;
  }

  int integer() {
    size_t start = pos;
    if (peek() == '-') ++pos;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) err("expected digit");
    long v = 0;
    bool neg = s[start] == '-';
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (next() - '0');
      if (v > INT_MAX) err("integer too large");
    }
    return static_cast<int>(neg ? -v : v);
  }
};

}  // namespace

Diagram parse(const std::string& input) {
  std::string line = input;
  if (!line.empty() && line.back() == '\n') line.pop_back();
  Scanner sc{line};

  auto word = [&]() {
    Word w;
    if (sc.peek() == ';') return w;
    w.push_back(sc.integer());
    while (sc.peek() == ',') {
      ++sc.pos;
      w.push_back(sc.integer());
    }
    return w;
  };

  Word bottom = word();
  sc.expect(';');
  Word top = word();
  sc.expect(';');

  RawPairing raw;
  bool first = true;
  while (!sc.done()) {
    if (!first) sc.expect(' ');
    first = false;
    char c = sc.next();
    if (c == 'T' || c == 'B' || c == 'U') {
      sc.expect('(');
      int p = sc.integer();
      sc.expect(',');
      int q = sc.integer();
      sc.expect(')');
      if (c == 'T')
        raw.through.emplace_back(p, q);
      else if (c == 'B')
        raw.bottom_arcs.emplace_back(p, q);
      else
        raw.top_arcs.emplace_back(p, q);
    } else if (c == 'D') {
      char side = sc.next();
      if (side != 'b' && side != 't') sc.err("expected 'Db' or 'Dt'");
      sc.expect('(');
      int p = sc.integer();
      sc.expect(')');
      if (side == 'b')
        raw.bottom_dots.push_back(p);
      else
        raw.top_dots.push_back(p);
    } else {
      --sc.pos;
      sc.err("unknown token");
    }
  }
  return assemble(bottom, top, raw);
}

}  // namespace pdm
