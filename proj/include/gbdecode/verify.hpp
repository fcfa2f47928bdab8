#pragma once

// Property checks of a formula file against its code, reported as
// "PASS <check> ..." / "FAIL <check>: <first counterexample>" lines.

#include <cstdint>
#include <string>
#include <vector>

#include "gbdecode/codec.hpp"
#include "gbdecode/formulas.hpp"

namespace gbdecode {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::uint64_t cases = 0;
  /// The first counterexample when failed.
  std::string detail;
};

struct VerifyOptions {
  /// Also scan errors of weight w_max + 1, and decode on every codeword when
  /// the dimension allows it.
  bool exhaustive = false;
  unsigned random_codewords = 10;
  std::uint64_t seed = 1;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  std::string to_text() const;
};

/// Checks:
///  compatible       the formula file belongs to the code
///  criteria         detect_weight returns the true weight of every error
///                   of weight <= w_max (and agrees with the exhaustive
///                   decoder on weight w_max + 1 when exhaustive)
///  formulas         the formulas reproduce the locator coefficients of
///                   every error of weight 1..w_max
///  decode           decoding corrects every such error on the zero word
///                   and on sampled codewords
///  no-division      saturated decoding performed no field inversion
VerifyReport verify(const CyclicCode& code, const FormulaSet& formulas, const VerifyOptions& options = {});

/// All codewords when k <= max_dimension, otherwise `samples` random ones
/// (plus the zero word) drawn with `seed`.
std::vector<Word> sample_codewords(const CyclicCode& code, unsigned samples, std::uint64_t seed,
                                   unsigned max_dimension = 0);

}  // namespace gbdecode
