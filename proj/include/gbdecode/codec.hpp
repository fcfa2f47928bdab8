#pragma once

// Binary cyclic codes given by a defining set: encoding, syndromes, Chien
// search and exhaustive reference decoders.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gbdecode/finite_field.hpp"

namespace gbdecode {

/// A binary word, one entry (0 or 1) per coordinate.
using Word = std::vector<std::uint8_t>;

/// Positions u_1 < ... < u_w of the nonzero coordinates of an error.
/// Position u corresponds to the locator alpha^u.
class ErrorPattern {
 public:
  ErrorPattern() = default;
  /// Throws InvalidArgument on duplicates.
  explicit ErrorPattern(std::vector<unsigned> positions);
  static ErrorPattern from_word(std::span<const std::uint8_t> word);

  const std::vector<unsigned>& positions() const { return positions_; }
  std::size_t weight() const { return positions_.size(); }
  /// Throws if a position is >= n.
  Word to_word(unsigned n) const;
  std::string to_string() const;

  friend bool operator==(const ErrorPattern&, const ErrorPattern&) = default;

 private:
  std::vector<unsigned> positions_;
};

/// sigma(Z) = prod (1 - alpha^{u_i} Z) = sum sigma_i Z^i, coefficient i at index i.
struct LocatorPoly {
  std::vector<FieldElement> coeffs;

  /// Index of the highest nonzero coefficient.
  std::size_t degree() const;
  FieldElement evaluate(const FieldElement& z) const;
};

struct CodeOptions {
  /// Defaults to the built-in primitive polynomial for the splitting field.
  std::optional<std::uint64_t> modulus;
  /// alpha = generator^exponent; defaults to (2^m - 1) / n.
  std::optional<std::uint64_t> alpha_exponent;
  /// Required when the dimension is too large for brute force.
  std::optional<unsigned> declared_distance;
};

class CyclicCode {
 public:
  static constexpr unsigned kMaxBruteForceDimension = 16;

  /// Throws InvalidArgument if n is even, Q leaves 0..n-1, or Q is not a
  /// union of 2-cyclotomic cosets.
  static CyclicCode create(unsigned n, std::vector<unsigned> defining_set, const CodeOptions& options = {});

  unsigned length() const { return n_; }
  unsigned dimension() const { return n_ - static_cast<unsigned>(defining_set_.size()); }
  /// Q, sorted ascending.
  const std::vector<unsigned>& defining_set() const { return defining_set_; }
  /// {0..n-1} \ Q, sorted ascending.
  const std::vector<unsigned>& unknown_set() const { return unknown_set_; }
  bool in_defining_set(unsigned i) const { return membership_[i % n_]; }

  unsigned field_degree() const { return field_->degree(); }
  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }
  const RootOfUnity& alpha() const { return *alpha_; }
  std::uint64_t alpha_exponent() const { return alpha_exponent_; }

  unsigned min_distance() const { return distance_; }
  /// floor((d - 1) / 2).
  unsigned radius() const { return (distance_ - 1) / 2; }
  /// Coefficients of the generator polynomial, constant term first.
  const Word& generator_poly() const { return generator_; }

 private:
  CyclicCode() = default;

  unsigned n_ = 0;
  std::vector<unsigned> defining_set_;
  std::vector<unsigned> unknown_set_;
  std::vector<bool> membership_;
  std::shared_ptr<const Field> field_;
  std::shared_ptr<const RootOfUnity> alpha_;
  std::uint64_t alpha_exponent_ = 0;
  unsigned distance_ = 0;
  Word generator_;
};

/// The 2-cyclotomic coset {i, 2i, 4i, ...} mod n, sorted.
std::vector<unsigned> cyclotomic_coset(unsigned i, unsigned n);

/// Syndromes S_i = y(alpha^i) for i in Q.
std::map<unsigned, FieldElement> syndromes(std::span<const std::uint8_t> word, const CyclicCode& code);

/// The locator polynomial of an error pattern.
LocatorPoly locator_from_pattern(const ErrorPattern& pattern, const CyclicCode& code);

/// Positions u with sigma(alpha^-u) = 0. Throws ConsistencyError if the
/// number of such roots differs from deg sigma (the locator does not split
/// over the n-th roots of unity), which signals a decoding failure.
ErrorPattern chien_search(const LocatorPoly& sigma, const CyclicCode& code);

/// Exhaustive decoder over all patterns of weight <= t. Returns nullopt when
/// no such pattern has the syndromes of `word`.
std::optional<ErrorPattern> oracle_decode(std::span<const std::uint8_t> word, const CyclicCode& code);

/// Minimum weight of a nonzero codeword by enumerating all 2^k codewords.
/// Throws InvalidArgument when k > 16.
unsigned min_distance_bruteforce(unsigned n, const Word& generator_poly);
unsigned min_distance_bruteforce(const CyclicCode& code);

/// Non-systematic encoding: message(X) * g(X).
Word encode(std::span<const std::uint8_t> message, const CyclicCode& code);

/// Visits every pattern of exactly `weight` positions in 0..n-1 in
/// lexicographic order. Stops early when the visitor returns false.
template <typename Visitor>
bool for_each_pattern(unsigned n, unsigned weight, Visitor&& visit) {
  if (weight > n) return true;
  std::vector<unsigned> pos(weight);
  for (unsigned k = 0; k < weight; ++k) pos[k] = k;
  while (true) {
    if (!visit(ErrorPattern(pos))) return false;
    int k = static_cast<int>(weight) - 1;
    while (k >= 0 && pos[k] == n - weight + static_cast<unsigned>(k)) --k;
    if (k < 0) return true;
    ++pos[k];
    for (unsigned j = static_cast<unsigned>(k) + 1; j < weight; ++j) pos[j] = pos[j - 1] + 1;
  }
}

}  // namespace gbdecode
