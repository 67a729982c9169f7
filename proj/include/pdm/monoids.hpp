#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "pdm/combinat.hpp"
#include "pdm/diagram.hpp"

namespace pdm {

// (1,2)^n for the rigid families, the constant word of length 2n otherwise.
Word family_word(FamilyTag family, long n);

// Every valid endomorphism diagram of one family at one size, sorted by
// canonical key, with a packed byte image per element for fast products.
struct MonoidTable {
  FamilyTag family = FamilyTag::TL;
  long n = 0;
  Word word;
  int m = 0;  // word length
  std::vector<Diagram> elements;
  std::vector<std::string> keys;
  int identity_id = -1;

  // Packed image: 2m int8 partner codes per element (bpart then tpart).
  std::vector<int8_t> packed;
  std::vector<int32_t> slots;  // open-addressing map packed -> id
  uint64_t slot_mask = 0;

  long size() const { return static_cast<long>(elements.size()); }
  const int8_t* rep(long id) const { return packed.data() + 2L * m * id; }
  int id_of_packed(const int8_t* r) const;
  int id_of(const Diagram& d) const;
};

// Direct recursive generation of all non-crossing letter-compatible
// pairings (not generator closure). Refuses families whose closed-form
// cardinality exceeds the budget.
MonoidTable enumerate(FamilyTag family, long n, long budget = 5000000);

// compose(elements[f], elements[g]) by id; f is the lower factor.
int compose_id(const MonoidTable& t, long f, long g);

// Monoid product a*b (b applied first, i.e. compose(b, a)).
inline int product_id(const MonoidTable& t, long a, long b) {
  return compose_id(t, b, a);
}

// Header line then one canonical diagram line per element. Returns the
// element count.
long export_elements(const MonoidTable& t, std::ostream& out);

// Planar bottom halves from `word` whose through strands spell `alpha`,
// with dots/arcs as the family permits; each result maps word -> alpha.
std::vector<Diagram> enumerate_halves(const Word& word, const Word& alpha,
                                      FamilyTag family);

// Count of the above without materializing the diagrams.
Int count_halves(const Word& word, const Word& alpha, FamilyTag family);

}  // namespace pdm
