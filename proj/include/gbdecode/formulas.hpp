#pragma once

// Precomputation artifacts extracted from reduced Gröbner bases: the weight
// criteria T_w, the one-step formulas sigma_i = q_{i,w}(S_Q), and for the
// field-equation route the relation sets {p sigma_i + q}. Text format in
// docs/formula-format.md.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gbdecode/error.hpp"
#include "gbdecode/groebner.hpp"
#include "gbdecode/polyring.hpp"

namespace gbdecode {

class FormulaMissing : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

enum class Variant { Saturated, FieldEq };

std::string to_string(Variant v);
/// "saturated" or "fieldeq"; throws InvalidArgument otherwise.
Variant parse_variant(std::string_view text);

/// p * sigma_i + q = 0, so sigma_i = q / p wherever p does not vanish.
struct Relation {
  Poly2 p;
  Poly2 q;
  friend bool operator==(const Relation&, const Relation&) = default;
};

struct WeightFormulas {
  unsigned w = 0;
  /// T_w over Universe::syndromes(n), S_Q variables only.
  std::vector<Poly2> criteria;
  /// Saturated: q_{i,w} at index i - 1.
  std::vector<Poly2> sigma;
  /// FieldEq: the relation set for sigma_i at index i - 1, fewest p terms first.
  std::vector<std::vector<Relation>> relations;
  std::optional<GroebnerStats> stats;
};

struct FormulaSet {
  static constexpr int kFormatVersion = 1;

  std::string code_hash;
  unsigned n = 0;
  std::vector<unsigned> defining_set;
  Variant variant = Variant::Saturated;
  /// MonomialOrder::describe() of the order the bases were computed in.
  std::string order;
  /// Optional free-form generation stamp; empty by default so that
  /// precomputation output is reproducible byte for byte.
  std::string stamp;
  /// weights[w] for w = 0..w_max.
  std::vector<WeightFormulas> weights;

  unsigned w_max() const { return weights.empty() ? 0 : static_cast<unsigned>(weights.size() - 1); }
  UniversePtr universe() const { return Universe::syndromes(n); }
  /// The decoding order restricted to S_0..S_{n-1}; used for printing.
  MonomialOrder print_order() const;
};

/// Basis elements in S_Q variables only, moved to Universe::syndromes(n).
std::vector<Poly2> weight_criteria(std::span<const Poly2> basis, std::span<const unsigned> defining_set);

/// T_0 = {S_i : i in Q}.
std::vector<Poly2> zero_weight_criteria(unsigned n, std::span<const unsigned> defining_set);

/// The tails q_{i,w}, i = 1..w, of the basis elements with leading monomial
/// sigma_i. Requires a reduced basis. Throws FormulaMissing if some sigma_i
/// leads no element and ConsistencyError if a tail leaves F2[S_Q].
std::vector<Poly2> sigma_formulas(const GroebnerBasis& basis, std::span<const unsigned> defining_set, unsigned w);

/// All elements p sigma_i + q with p, q in F2[S_Q], grouped by i and sorted
/// by the number of terms of p (stable). Throws FormulaMissing if some group
/// is empty.
std::vector<std::vector<Relation>> sigma_relations_general(const GroebnerBasis& basis,
                                                           std::span<const unsigned> defining_set, unsigned w);

std::string serialize(const FormulaSet& formulas);
/// Throws ParseError with the line and column of the offending token.
FormulaSet deserialize(std::string_view text);

}  // namespace gbdecode
