#include "gbdecode/decoder.hpp"

#include <algorithm>

#include "gbdecode/code_spec.hpp"
#include "gbdecode/error.hpp"

namespace gbdecode {

std::string to_string(DecodeStatus s) {
  switch (s) {
    case DecodeStatus::Ok:
      return "ok";
    case DecodeStatus::Uncorrectable:
      return "uncorrectable";
    case DecodeStatus::DecodeFailure:
      return "decode-failure";
  }
  return "?";
}

std::vector<std::optional<FieldElement>> syndrome_table(std::span<const std::uint8_t> word, const CyclicCode& code) {
  std::vector<std::optional<FieldElement>> table(code.length());
  for (const auto& [i, value] : syndromes(word, code)) table[i] = value;
  return table;
}

namespace {

bool vanishes(const std::vector<Poly2>& criteria, std::span<const std::optional<FieldElement>> syndromes,
              const Field& field) {
  return std::all_of(criteria.begin(), criteria.end(),
                     [&](const Poly2& t) { return evaluate(t, syndromes, field).is_zero(); });
}

}  // namespace

std::optional<unsigned> detect_weight(std::span<const std::optional<FieldElement>> syndromes,
                                      const FormulaSet& formulas, const Field& field) {
  std::optional<unsigned> found;
  for (const auto& wf : formulas.weights) {
    if (!vanishes(wf.criteria, syndromes, field)) continue;
    if (formulas.variant == Variant::FieldEq) return wf.w;
    if (found)
      throw ConsistencyError("criteria for weights " + std::to_string(*found) + " and " + std::to_string(wf.w) +
                             " both vanish");
    found = wf.w;
  }
  return found;
}

void check_compatible(const CyclicCode& code, const FormulaSet& formulas) {
  const std::string hash = code_hash(code);
  if (formulas.code_hash != hash)
    throw ArtifactMismatch("formula file was computed for code " + formulas.code_hash + ", this code is " + hash);
  if (formulas.n != code.length() || formulas.defining_set != code.defining_set())
    throw ArtifactMismatch("formula file length or defining set differs from the code");
}

namespace {

using SigmaSolver = std::function<bool(const WeightFormulas&, std::span<const std::optional<FieldElement>>,
                                       DecodeResult&, LocatorPoly&)>;

DecodeResult run(std::span<const std::uint8_t> word, const CyclicCode& code, const FormulaSet& formulas,
                 Variant expected, const SigmaSolver& solve) {
  if (formulas.variant != expected)
    throw InvalidArgument("this decoder needs " + to_string(expected) + " formulas, got " +
                          to_string(formulas.variant));
  check_compatible(code, formulas);
  if (word.size() != code.length())
    throw InvalidArgument("word has length " + std::to_string(word.size()) + ", the code has length " +
                          std::to_string(code.length()));

  DecodeResult result;
  result.path = expected;
  result.word.assign(word.begin(), word.end());
  const Field& field = code.field();
  const auto table = syndrome_table(word, code);

  result.weight = detect_weight(table, formulas, field);
  if (!result.weight) {
    result.status = DecodeStatus::Uncorrectable;
    result.diagnostic = "no weight criterion vanishes up to w = " + std::to_string(formulas.w_max());
    return result;
  }
  const unsigned w = *result.weight;
  if (w == 0) {
    result.status = DecodeStatus::Ok;
    return result;
  }

  LocatorPoly sigma{{field.one()}};
  if (!solve(formulas.weights[w], table, result, sigma)) {
    result.status = DecodeStatus::DecodeFailure;
    return result;
  }
  for (std::size_t i = 1; i < sigma.coeffs.size(); ++i) result.sigma.push_back(sigma.coeffs[i].bits());

  ErrorPattern error;
  try {
    error = chien_search(sigma, code);
  } catch (const ConsistencyError& e) {
    result.status = DecodeStatus::DecodeFailure;
    result.diagnostic = e.what();
    return result;
  }
  if (error.weight() != w) {
    result.status = DecodeStatus::DecodeFailure;
    result.diagnostic = "locator has " + std::to_string(error.weight()) + " roots, expected " + std::to_string(w);
    return result;
  }

  Word corrected = result.word;
  for (unsigned u : error.positions()) corrected[u] ^= 1;
  for (const auto& [i, s] : syndromes(corrected, code)) {
    if (!s.is_zero()) {
      result.status = DecodeStatus::DecodeFailure;
      result.diagnostic = "syndrome S" + std::to_string(i) + " of the corrected word is nonzero";
      return result;
    }
  }
  result.status = DecodeStatus::Ok;
  result.word = std::move(corrected);
  result.error = std::move(error);
  return result;
}

}  // namespace

DecodeResult one_step_decode(std::span<const std::uint8_t> word, const CyclicCode& code, const FormulaSet& formulas) {
  return run(word, code, formulas, Variant::Saturated,
             [&](const WeightFormulas& wf, std::span<const std::optional<FieldElement>> table, DecodeResult&,
                 LocatorPoly& sigma) {
               for (const auto& q : wf.sigma) sigma.coeffs.push_back(evaluate(q, table, code.field()));
               return true;
             });
}

DecodeResult decode_with_division(std::span<const std::uint8_t> word, const CyclicCode& code,
                                  const FormulaSet& formulas) {
  return run(word, code, formulas, Variant::FieldEq,
             [&](const WeightFormulas& wf, std::span<const std::optional<FieldElement>> table, DecodeResult& result,
                 LocatorPoly& sigma) {
               const Field& field = code.field();
               for (std::size_t i = 0; i < wf.relations.size(); ++i) {
                 const auto& group = wf.relations[i];
                 bool applied = false;
                 for (std::size_t k = 0; k < group.size() && !applied; ++k) {
                   const FieldElement p = evaluate(group[k].p, table, field);
                   if (p.is_zero()) continue;
                   sigma.coeffs.push_back(evaluate(group[k].q, table, field) / p);
                   result.relations_used.push_back(k);
                   applied = true;
                 }
                 if (!applied) {
                   result.diagnostic = "no applicable relation for " + Variable::sigma(i + 1).name() +
                                       ": every p vanishes at these syndromes";
                   return false;
                 }
               }
               return true;
             });
}

DecodeResult decode(std::span<const std::uint8_t> word, const CyclicCode& code, const FormulaSet& formulas) {
  return formulas.variant == Variant::Saturated ? one_step_decode(word, code, formulas)
                                                : decode_with_division(word, code, formulas);
}

}  // namespace gbdecode
