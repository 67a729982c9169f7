#pragma once

#include <cctype>
#include <string>

#include "pdm/error.hpp"

namespace pdm {

// Six endomorphism families. Pivotal families live on a constant word of
// length 2n (letter 0); rigid families on the alternating word (1,2)^n.
enum class FamilyTag { TL, Mo, pRo, rTL, rMo, rpRo };

struct FamilyTraits {
  bool pivotal;     // constant word, equal-letter arcs
  bool allow_dots;  // parts of size 1 permitted
  bool allow_arcs;  // same-side pairs permitted
  int arc_shift;    // bottom arc closes letter x with a later x - arc_shift
  const char* name;
};

inline const FamilyTraits& family_traits(FamilyTag f) {
  static const FamilyTraits t[6] = {
      {true, false, true, 0, "TL"},   {true, true, true, 0, "Mo"},
      {true, true, false, 0, "pRo"},  {false, false, true, 1, "rTL"},
      {false, true, true, 1, "rMo"},  {false, true, false, 1, "rpRo"},
  };
  return t[static_cast<int>(f)];
}

inline const char* family_name(FamilyTag f) { return family_traits(f).name; }

inline FamilyTag parse_family(const std::string& s) {
  std::string low;
  for (char c : s) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (low == "tl") return FamilyTag::TL;
  if (low == "mo") return FamilyTag::Mo;
  if (low == "pro") return FamilyTag::pRo;
  if (low == "rtl") return FamilyTag::rTL;
  if (low == "rmo") return FamilyTag::rMo;
  if (low == "rpro") return FamilyTag::rpRo;
  fail(errc::bad_parameters, "unknown family '" + s + "'");
}

}  // namespace pdm
