#pragma once

// Online decoding: syndromes, weight detection by the criteria T_w, the
// locator coefficients from the precomputed formulas, Chien search and
// correction.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gbdecode/codec.hpp"
#include "gbdecode/formulas.hpp"

namespace gbdecode {

enum class DecodeStatus {
  Ok,
  /// No weight criterion matched: more errors than the code corrects.
  Uncorrectable,
  /// A weight matched but the locator did not yield a valid correction.
  DecodeFailure,
};

std::string to_string(DecodeStatus s);

struct DecodeResult {
  DecodeStatus status = DecodeStatus::Uncorrectable;
  /// The corrected word on success, the received word otherwise.
  Word word;
  ErrorPattern error;
  /// The detected weight, when one matched.
  std::optional<unsigned> weight;
  Variant path = Variant::Saturated;
  /// Bit patterns of sigma_1..sigma_w as computed from the formulas.
  std::vector<std::uint32_t> sigma;
  /// FieldEq path: index into the relation set used for each sigma_i.
  std::vector<std::size_t> relations_used;
  std::string diagnostic;

  bool ok() const { return status == DecodeStatus::Ok; }
  friend bool operator==(const DecodeResult&, const DecodeResult&) = default;
};

/// Syndromes S_0..S_{n-1} as a table indexed like Universe::syndromes(n),
/// with only the entries for i in Q filled in.
std::vector<std::optional<FieldElement>> syndrome_table(std::span<const std::uint8_t> word, const CyclicCode& code);

/// Saturated: the unique w with every element of T_w vanishing; throws
/// ConsistencyError if several match. FieldEq: the smallest such w.
/// nullopt when none matches.
std::optional<unsigned> detect_weight(std::span<const std::optional<FieldElement>> syndromes,
                                      const FormulaSet& formulas, const Field& field);

/// Throws ArtifactMismatch unless the formulas were computed for `code`.
void check_compatible(const CyclicCode& code, const FormulaSet& formulas);

/// Division-free decoding with saturated formulas.
DecodeResult one_step_decode(std::span<const std::uint8_t> word, const CyclicCode& code, const FormulaSet& formulas);

/// Decoding with field-equation relations: sigma_i = q(S) / p(S) for the
/// first relation whose p does not vanish.
DecodeResult decode_with_division(std::span<const std::uint8_t> word, const CyclicCode& code,
                                  const FormulaSet& formulas);

/// Dispatches on formulas.variant.
DecodeResult decode(std::span<const std::uint8_t> word, const CyclicCode& code, const FormulaSet& formulas);

}  // namespace gbdecode
