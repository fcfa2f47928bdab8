#include "gbdecode/precompute.hpp"

#include <future>
#include <ostream>
#include <sstream>

#include "gbdecode/code_spec.hpp"
#include "gbdecode/error.hpp"
#include "gbdecode/ideals.hpp"

namespace gbdecode {

namespace {

GroebnerBasis basis_for_weight(const CyclicCode& code, unsigned w, const PrecomputeOptions& options,
                               std::ostream* trace) {
  const unsigned n = code.length();
  const auto& q = code.defining_set();
  const auto universe = Universe::decoding(n, w);
  const MonomialOrder order = MonomialOrder::parse(options.order, universe, q);
  if (!order.eliminates(is_sigma_or_syndrome))
    throw InvalidArgument("order " + order.describe() + " does not eliminate r and Z");

  GroebnerOptions gb;
  gb.max_pairs = options.max_pairs;
  gb.trace = trace;
  const IdealVariant variant = options.variant == Variant::Saturated ? IdealVariant::Saturated : IdealVariant::FieldEq;
  const IdealSpec spec = build_ideal(n, w, q, variant, code.field_degree());
  if (trace) *trace << "w=" << w << ": " << spec.generators.size() << " generators, order " << order.describe() << "\n";
  return reduced_groebner_basis(spec.generators, order, gb);
}

WeightFormulas extract(const CyclicCode& code, unsigned w, const GroebnerBasis& basis, Variant variant) {
  WeightFormulas wf;
  wf.w = w;
  const auto& q = code.defining_set();
  wf.criteria = weight_criteria(basis.polys, q);
  if (variant == Variant::Saturated)
    wf.sigma = sigma_formulas(basis, q, w);
  else
    wf.relations = sigma_relations_general(basis, q, w);
  wf.stats = basis.stats;
  return wf;
}

}  // namespace

PrecomputeResult precompute(const CyclicCode& code, const PrecomputeOptions& options) {
  const unsigned t = code.radius();
  const unsigned w_max = options.w_max.value_or(t);
  if (w_max > t)
    throw InvalidArgument("w_max = " + std::to_string(w_max) + " exceeds the correcting radius t = " +
                          std::to_string(t));
  if (w_max >= code.length()) throw InvalidArgument("w_max must be below n");
  if (options.variant == Variant::FieldEq && code.field_degree() > options.max_fieldeq_degree)
    throw InvalidArgument("the field-equation route is limited to m <= " + std::to_string(options.max_fieldeq_degree) +
                          " (this code needs m = " + std::to_string(code.field_degree()) + ")");

  PrecomputeResult result;
  FormulaSet& fs = result.formulas;
  fs.code_hash = code_hash(code);
  fs.n = code.length();
  fs.defining_set = code.defining_set();
  fs.variant = options.variant;
  fs.stamp = options.stamp;
  fs.order = MonomialOrder::parse(options.order, Universe::decoding(code.length(), std::max(w_max, 1u)),
                                  code.defining_set())
                 .describe();

  WeightFormulas zero;
  zero.w = 0;
  zero.criteria = zero_weight_criteria(fs.n, fs.defining_set);
  fs.weights.push_back(std::move(zero));

  if (options.parallel && w_max > 1) {
    std::vector<std::ostringstream> traces(w_max);
    std::vector<std::future<GroebnerBasis>> jobs;
    for (unsigned w = 1; w <= w_max; ++w)
      jobs.push_back(std::async(std::launch::async, basis_for_weight, std::cref(code), w, std::cref(options),
                                options.trace ? &traces[w - 1] : nullptr));
    for (unsigned w = 1; w <= w_max; ++w) {
      result.bases.push_back(jobs[w - 1].get());
      if (options.trace) *options.trace << traces[w - 1].str();
    }
  } else {
    for (unsigned w = 1; w <= w_max; ++w) result.bases.push_back(basis_for_weight(code, w, options, options.trace));
  }
  for (unsigned w = 1; w <= w_max; ++w)
    fs.weights.push_back(extract(code, w, result.bases[w - 1], options.variant));
  return result;
}

}  // namespace gbdecode
