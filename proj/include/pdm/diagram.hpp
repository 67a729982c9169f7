#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pdm/family.hpp"

namespace pdm {

// Boundary word: the integer subscripts of the object, left to right.
using Word = std::vector<int>;

// A planar letter-constrained pairing between two boundary words.
// Partner encoding, 1-based positions:
//   bpart[p-1] == +q : through strand, bottom p to top q
//   bpart[p-1] == -q : bottom arc between bottom p and bottom q
//   bpart[p-1] ==  0 : dot at bottom p
// tpart mirrors this for top positions (-q is a top arc partner,
// +p points at a bottom position).
struct Diagram {
  Word bottom, top;
  std::vector<int> bpart, tpart;

  int nb() const { return static_cast<int>(bottom.size()); }
  int nt() const { return static_cast<int>(top.size()); }

  std::vector<std::pair<int, int>> through_pairs() const;  // (bottom, top)
  std::vector<std::pair<int, int>> bottom_arcs() const;    // p < q
  std::vector<std::pair<int, int>> top_arcs() const;       // p < q
  std::vector<int> bottom_dots() const;
  std::vector<int> top_dots() const;

  bool operator==(const Diagram& o) const = default;
};

// Raw pairing lists as accepted by validate().
struct RawPairing {
  std::vector<std::pair<int, int>> through;      // (bottom pos, top pos)
  std::vector<std::pair<int, int>> bottom_arcs;  // p < q
  std::vector<std::pair<int, int>> top_arcs;     // p < q
  std::vector<int> bottom_dots, top_dots;
};

// Checks, in order: position range/disjointness, family dot/arc flags,
// letter rules, coverage, planarity. Throws toolkit_error naming the first
// violated rule.
Diagram validate(const Word& bottom, const Word& top, const RawPairing& raw,
                 FamilyTag family);

// Family-agnostic structural subset of validate(): ranges, disjointness,
// coverage, planarity. Used by parse().
Diagram assemble(const Word& bottom, const Word& top, const RawPairing& raw);

// Vertical stacking f then g (f is the lower factor; requires
// f.top == g.bottom). Closed middle components drop with coefficient 1;
// a path that ends at a middle dot leaves a dot on its outer endpoint.
Diagram compose(const Diagram& f, const Diagram& g);

// Horizontal juxtaposition; g's positions shift past f's.
Diagram tensor(const Diagram& f, const Diagram& g);

Diagram identity(const Word& w);

// Vertical mirror on raw data: swaps words, arc sets, dot sets and through
// roles. Output is not revalidated (rigid arc rules are orientation
// sensitive); flip(flip(f)) == f always.
Diagram flip(const Diagram& f);

// f == T o 1_alpha o B with B : f.bottom -> alpha carrying f's bottom
// arcs/dots and T : alpha -> f.top carrying the top ones.
struct Sandwich {
  Diagram T;
  Word alpha;
  Diagram B;
};
Sandwich sandwich_factor(const Diagram& f);

int through_count(const Diagram& f);
Word alpha_of(const Diagram& f);  // through-strand letters, left to right

// Canonical text line (no trailing newline):
//   <bottom-csv>;<top-csv>;<tokens space separated>
// tokens T(p,q) B(p,q) U(p,q) Db(p) Dt(p), sorted ascending as strings.
std::string serialize(const Diagram& f);

// Inverse of serialize. Accepts any token order and one optional trailing
// newline; enforces the structural invariants (not the letter rules).
// ParseError carries the byte offset of the offending character.
Diagram parse(const std::string& line);

inline std::string canonical_key(const Diagram& f) { return serialize(f); }

}  // namespace pdm
