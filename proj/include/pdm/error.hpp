#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdm {

enum class errc {
  letter_mismatch,
  crossing_pairs,
  uncovered_position,
  family_violation,
  boundary_mismatch,
  not_endomorphism,
  parse_error,
  budget_exceeded,
  structure_mismatch,
  bad_parameters,
  pole_error,
  hypothesis_violated,
  not_prime,
  empty_window,
  not_stated,
  unknown_prefactor,
  formula_brute_mismatch,
  io_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::letter_mismatch: return "LetterMismatch";
    case errc::crossing_pairs: return "CrossingPairs";
    case errc::uncovered_position: return "UncoveredPosition";
    case errc::family_violation: return "FamilyViolation";
    case errc::boundary_mismatch: return "BoundaryMismatch";
    case errc::not_endomorphism: return "NotEndomorphism";
    case errc::parse_error: return "ParseError";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::structure_mismatch: return "StructureMismatch";
    case errc::bad_parameters: return "BadParameters";
    case errc::pole_error: return "PoleError";
    case errc::hypothesis_violated: return "HypothesisViolated";
    case errc::not_prime: return "NotPrime";
    case errc::empty_window: return "EmptyWindow";
    case errc::not_stated: return "NotStated";
    case errc::unknown_prefactor: return "UnknownPrefactor";
    case errc::formula_brute_mismatch: return "FormulaBruteMismatch";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

// All module failures surface as toolkit_error. what() is a single
// machine-parsable line: "error=<Name> detail=<text>".
class toolkit_error : public std::runtime_error {
 public:
  toolkit_error(errc code, const std::string& detail, std::size_t offset = 0)
      : std::runtime_error(std::string("error=") + errc_name(code) +
                           " detail=" + detail),
        code_(code),
        detail_(detail),
        offset_(offset) {}

  errc code() const { return code_; }
  const std::string& detail() const { return detail_; }
  // byte offset for ParseError; 0 otherwise
  std::size_t offset() const { return offset_; }

 private:
  errc code_;
  std::string detail_;
  std::size_t offset_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail,
                              std::size_t offset = 0) {
  throw toolkit_error(code, detail, offset);
}

}  // namespace pdm
