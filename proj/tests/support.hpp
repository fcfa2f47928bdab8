#pragma once

// Shared fixtures: catalog codes and their precomputed formulas, cached per
// process, plus brute-force helpers over GF(2^m).

#include <string>
#include <vector>

#include "gbdecode/codec.hpp"
#include "gbdecode/precompute.hpp"

namespace gbdecode::fixture {

const CyclicCode& code(const std::string& name);

/// Saturated or field-equation precomputation at w_max = t, computed once.
const PrecomputeResult& artifacts(const std::string& name, Variant variant = Variant::Saturated);

/// Every element of the field, zero first.
std::vector<FieldElement> all_elements(const Field& field);

/// Univariate polynomials over GF(2^m), constant term first.
using UPoly = std::vector<FieldElement>;

void trim(UPoly& p);
UPoly mul(const UPoly& a, const UPoly& b);
/// Quotient and remainder of a by b (b nonzero).
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

}  // namespace gbdecode::fixture
