#pragma once

// Offline phase: one Gröbner basis per weight w = 1..w_max, then extraction
// of the criteria and formulas into a FormulaSet.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gbdecode/codec.hpp"
#include "gbdecode/formulas.hpp"
#include "gbdecode/groebner.hpp"

namespace gbdecode {

struct PrecomputeOptions {
  Variant variant = Variant::Saturated;
  /// Defaults to the correcting radius t. Larger values are rejected.
  std::optional<unsigned> w_max;
  /// Pair budget per Gröbner basis.
  std::uint64_t max_pairs = 10'000'000;
  /// "lex", "block" or a MonomialOrder::describe() string.
  std::string order = "lex";
  /// Compute the weights concurrently.
  bool parallel = false;
  /// The field-equation route is refused above this extension degree.
  unsigned max_fieldeq_degree = 4;
  std::ostream* trace = nullptr;
  std::string stamp;
};

struct PrecomputeResult {
  FormulaSet formulas;
  /// The reduced basis for weight w at index w - 1.
  std::vector<GroebnerBasis> bases;
};

/// Throws InvalidArgument for w_max > t or a gated field degree, and
/// BudgetExhausted / FormulaMissing / ConsistencyError from the stages.
PrecomputeResult precompute(const CyclicCode& code, const PrecomputeOptions& options = {});

}  // namespace gbdecode
