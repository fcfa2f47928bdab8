#pragma once

// Generators of the Newton-identity ideal I_{N,w}, its field-equation
// extension I0_{N,w}, and the saturated ideal
//   Iinf_{N,w} = ((I_sigma + I_S) : Delta^inf) ∩ F2[sigma, S]
// computed with the Rabinowitsch variable r. All polynomials live in
// Universe::decoding(n, w).

#include <iosfwd>
#include <span>
#include <vector>

#include "gbdecode/groebner.hpp"
#include "gbdecode/polyring.hpp"

namespace gbdecode {

enum class IdealVariant { Newton, FieldEq, Saturated };

struct IdealSpec {
  unsigned n = 0;
  unsigned w = 0;
  std::vector<unsigned> defining_set;
  IdealVariant variant = IdealVariant::Newton;
  /// Extension degree of the field equations (FieldEq only).
  unsigned field_degree = 0;
  std::vector<Poly2> generators;
  UniversePtr universe;
};

/// Field equations of degree above this trigger a warning.
inline constexpr std::uint64_t kFieldEquationWarnDegree = std::uint64_t{1} << 16;

/// The n + w Newton identities. For i <= w:
///   S_i + sum_{j<i} s_j S_{i-j} + [i odd] s_i,
/// for w < i <= n + w:
///   S_{i mod n} + sum_{j<=w} s_j S_{(i-j) mod n}.
/// Requires 1 <= w < n.
std::vector<Poly2> newton_generators(unsigned n, unsigned w);

/// S_i^(2^m) + S_i for i < n, then s_i^(2^m) + s_i for i = 1..w. Writes a
/// warning to `warnings` (if non-null) when 2^m exceeds
/// kFieldEquationWarnDegree.
std::vector<Poly2> field_equations(unsigned n, unsigned w, unsigned m, std::ostream* warnings);

/// s_i + e_i(Z_1..Z_w), i = 1..w.
std::vector<Poly2> sigma_ideal(unsigned n, unsigned w);

/// S_{i mod n} + sum_j Z_j^i, i = 1..n+w. Identifying S_{i+n} with S_i by
/// index reduction makes the generators S_{i+n} - S_i unnecessary.
std::vector<Poly2> power_sum_ideal(unsigned n, unsigned w);

/// Z_1...Z_w * prod_{i<j} (Z_i + Z_j).
Poly2 delta_poly(unsigned n, unsigned w);

/// Generators of the requested ideal. Saturated yields I_sigma + I_S +
/// <1 + r Delta>; the elimination of r and Z happens in
/// saturated_newton_ideal().
IdealSpec build_ideal(unsigned n, unsigned w, std::span<const unsigned> defining_set, IdealVariant variant,
                      unsigned field_degree = 0);

struct SaturationOptions {
  /// Use the grevlex block variant of the decoding order.
  bool block_order = false;
  GroebnerOptions groebner;
};

struct SaturatedIdeal {
  /// Reduced Gröbner basis of Iinf_{N,w} (elements free of r and Z).
  std::vector<Poly2> basis;
  /// Reduced Gröbner basis of I_sigma + I_S + <1 + r Delta>.
  GroebnerBasis full;
};

/// Requires 1 <= w < n.
SaturatedIdeal saturated_newton_ideal(unsigned n, unsigned w, std::span<const unsigned> defining_set,
                                      const SaturationOptions& options = {});

/// Reduced Gröbner basis of I0_{N,w} under the decoding order.
GroebnerBasis field_equation_basis(unsigned n, unsigned w, std::span<const unsigned> defining_set, unsigned m,
                                   const GroebnerOptions& options = {});

bool is_sigma_or_syndrome(const Variable& v);

}  // namespace gbdecode
