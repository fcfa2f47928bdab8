#include "gbdecode/ideals.hpp"

#include <ostream>

#include "gbdecode/error.hpp"

namespace gbdecode {

namespace {

void check_weight(unsigned n, unsigned w) {
  if (w == 0 || w >= n)
    throw InvalidArgument("weight must satisfy 1 <= w < n, got w = " + std::to_string(w) + ", n = " + std::to_string(n));
}

Poly2 var(const UniversePtr& u, Variable v, std::uint32_t e = 1) { return Poly2::variable(u, v, e); }

}  // namespace

bool is_sigma_or_syndrome(const Variable& v) { return v.kind == VarKind::Sigma || v.kind == VarKind::S; }

std::vector<Poly2> newton_generators(unsigned n, unsigned w) {
  check_weight(n, w);
  const auto u = Universe::decoding(n, w);
  auto S = [&](unsigned i) { return var(u, Variable::syndrome(i % n)); };
  auto sigma = [&](unsigned j) { return var(u, Variable::sigma(j)); };
  std::vector<Poly2> out;
  out.reserve(n + w);
  for (unsigned i = 1; i <= w; ++i) {
    Poly2 g = S(i);
    for (unsigned j = 1; j < i; ++j) g += sigma(j) * S(i - j);
    if (i % 2 == 1) g += sigma(i);
    out.push_back(std::move(g));
  }
  for (unsigned i = w + 1; i <= n + w; ++i) {
    Poly2 g = S(i);
    for (unsigned j = 1; j <= w; ++j) g += sigma(j) * S(i - j);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Poly2> field_equations(unsigned n, unsigned w, unsigned m, std::ostream* warnings) {
  if (m == 0 || m > 31) throw InvalidArgument("field degree must be in 1..31");
  const auto u = Universe::decoding(n, w);
  const std::uint64_t q = std::uint64_t{1} << m;
  if (q > kFieldEquationWarnDegree && warnings)
    *warnings << "warning: field equations of degree " << q << " for n = " << n
              << "; the Groebner basis computation is unlikely to finish\n";
  std::vector<Poly2> out;
  for (unsigned i = 0; i < n; ++i)
    out.push_back(var(u, Variable::syndrome(i), static_cast<std::uint32_t>(q)) + var(u, Variable::syndrome(i)));
  for (unsigned i = 1; i <= w; ++i)
    out.push_back(var(u, Variable::sigma(i), static_cast<std::uint32_t>(q)) + var(u, Variable::sigma(i)));
  return out;
}

std::vector<Poly2> sigma_ideal(unsigned n, unsigned w) {
  check_weight(n, w);
  const auto u = Universe::decoding(n, w);
  // Elementary symmetric polynomials via prod_j (1 + Z_j T): e[i] after step j
  // is e_i(Z_1..Z_j).
  std::vector<Poly2> e(w + 1, Poly2(u));
  e[0] = Poly2::one(u);
  for (unsigned j = 1; j <= w; ++j) {
    const Poly2 z = var(u, Variable::locator(j));
    for (unsigned i = j; i >= 1; --i) e[i] += e[i - 1] * z;
  }
  std::vector<Poly2> out;
  for (unsigned i = 1; i <= w; ++i) out.push_back(var(u, Variable::sigma(i)) + e[i]);
  return out;
}

std::vector<Poly2> power_sum_ideal(unsigned n, unsigned w) {
  check_weight(n, w);
  const auto u = Universe::decoding(n, w);
  std::vector<Poly2> out;
  for (unsigned i = 1; i <= n + w; ++i) {
    Poly2 g = var(u, Variable::syndrome(i % n));
    for (unsigned j = 1; j <= w; ++j) g += var(u, Variable::locator(j), i);
    out.push_back(std::move(g));
  }
  return out;
}

Poly2 delta_poly(unsigned n, unsigned w) {
  check_weight(n, w);
  const auto u = Universe::decoding(n, w);
  Poly2 d = Poly2::one(u);
  for (unsigned i = 1; i <= w; ++i) d *= var(u, Variable::locator(i));
  for (unsigned i = 1; i <= w; ++i)
    for (unsigned j = i + 1; j <= w; ++j) d *= var(u, Variable::locator(i)) + var(u, Variable::locator(j));
  return d;
}

IdealSpec build_ideal(unsigned n, unsigned w, std::span<const unsigned> defining_set, IdealVariant variant,
                      unsigned field_degree) {
  IdealSpec spec;
  spec.n = n;
  spec.w = w;
  spec.defining_set.assign(defining_set.begin(), defining_set.end());
  spec.variant = variant;
  spec.universe = Universe::decoding(n, w);
  switch (variant) {
    case IdealVariant::Newton:
      spec.generators = newton_generators(n, w);
      break;
    case IdealVariant::FieldEq: {
      spec.field_degree = field_degree;
      spec.generators = newton_generators(n, w);
      auto extra = field_equations(n, w, field_degree, nullptr);
      spec.generators.insert(spec.generators.end(), extra.begin(), extra.end());
      break;
    }
    case IdealVariant::Saturated: {
      spec.generators = sigma_ideal(n, w);
      auto sums = power_sum_ideal(n, w);
      spec.generators.insert(spec.generators.end(), sums.begin(), sums.end());
      spec.generators.push_back(Poly2::one(spec.universe) + var(spec.universe, Variable::aux()) * delta_poly(n, w));
      break;
    }
  }
  return spec;
}

SaturatedIdeal saturated_newton_ideal(unsigned n, unsigned w, std::span<const unsigned> defining_set,
                                      const SaturationOptions& options) {
  const IdealSpec spec = build_ideal(n, w, defining_set, IdealVariant::Saturated);
  const MonomialOrder order = options.block_order ? MonomialOrder::decoding_blocks(spec.universe, defining_set)
                                                  : MonomialOrder::decoding(spec.universe, defining_set);
  SaturatedIdeal out{{}, reduced_groebner_basis(spec.generators, order, options.groebner)};
  out.basis = eliminate(out.full, is_sigma_or_syndrome);
  return out;
}

GroebnerBasis field_equation_basis(unsigned n, unsigned w, std::span<const unsigned> defining_set, unsigned m,
                                   const GroebnerOptions& options) {
  const IdealSpec spec = build_ideal(n, w, defining_set, IdealVariant::FieldEq, m);
  return reduced_groebner_basis(spec.generators, MonomialOrder::decoding(spec.universe, defining_set), options);
}

}  // namespace gbdecode
