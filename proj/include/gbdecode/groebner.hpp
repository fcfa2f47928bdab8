#pragma once

// Buchberger's algorithm over GF(2) with the normal selection strategy and
// the coprime and chain criteria, full normal forms, reduced bases and
// elimination by subring filtering.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gbdecode/polyring.hpp"

namespace gbdecode {

struct GroebnerOptions {
  /// Maximum number of critical pairs taken from the queue.
  std::uint64_t max_pairs = 10'000'000;
  /// Receives one line per basis extension and a final summary.
  std::ostream* trace = nullptr;
};

struct GroebnerStats {
  std::uint64_t pairs_created = 0;
  std::uint64_t pairs_processed = 0;
  std::uint64_t coprime_skips = 0;
  std::uint64_t chain_skips = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t reduction_steps = 0;
  std::size_t peak_basis_size = 0;
  std::size_t final_basis_size = 0;
};

struct GroebnerBasis {
  std::vector<Poly2> polys;
  MonomialOrder order;
  bool reduced = false;
  GroebnerStats stats;
};

/// Remainder of f on multivariate division by `basis`: no monomial of the
/// result is divisible by a leading monomial of the basis.
Poly2 normal_form(const Poly2& f, std::span<const Poly2> basis, const MonomialOrder& order);
Poly2 normal_form(const Poly2& f, const GroebnerBasis& basis);

Poly2 s_polynomial(const Poly2& f, const Poly2& g, const MonomialOrder& order);

/// A Gröbner basis of the ideal generated by `generators`. Deterministic and
/// independent of the generator order: generators enter by increasing
/// leading monomial, pairs are processed by increasing lcm, ties broken by
/// basis indices.
/// Throws BudgetExhausted when more than options.max_pairs pairs are taken.
GroebnerBasis buchberger(std::span<const Poly2> generators, const MonomialOrder& order,
                         const GroebnerOptions& options = {});

/// Minimal, fully inter-reduced basis sorted by increasing leading monomial;
/// unique for the ideal and the order.
GroebnerBasis reduce_basis(const GroebnerBasis& basis);

/// buchberger() followed by reduce_basis().
GroebnerBasis reduced_groebner_basis(std::span<const Poly2> generators, const MonomialOrder& order,
                                     const GroebnerOptions& options = {});

/// Basis elements involving only kept variables: a Gröbner basis of the
/// elimination ideal. Throws InvalidArgument if the basis order does not
/// rank every eliminated variable above every kept one.
std::vector<Poly2> eliminate(const GroebnerBasis& basis, const std::function<bool(const Variable&)>& keep);

/// Checks that every S-polynomial reduces to zero. On failure, reports the
/// offending pair of indices.
bool satisfies_buchberger_criterion(const GroebnerBasis& basis,
                                    std::optional<std::pair<std::size_t, std::size_t>>* failing_pair = nullptr);

/// Leading monomials pairwise non-divisible and no tail monomial divisible by
/// a leading monomial.
bool is_reduced(std::span<const Poly2> basis, const MonomialOrder& order);

}  // namespace gbdecode
