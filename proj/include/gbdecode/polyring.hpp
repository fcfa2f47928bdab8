#pragma once

// Multivariate polynomials over GF(2) in the variables sigma_i, S_i, Z_i
// and the saturation variable r, with monomial orders and evaluation into
// GF(2^m).
//
// Text syntax: monomials joined by '+', factors joined by '*', optional
// '^exponent'; variables are s<i> (sigma_i), S<i>, Z<i> and r. "0" and "1"
// denote the constants.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gbdecode/finite_field.hpp"

namespace gbdecode {

enum class VarKind : std::uint8_t { Sigma, S, Z, Aux };

struct Variable {
  VarKind kind = VarKind::S;
  unsigned index = 0;

  static Variable sigma(unsigned i) { return {VarKind::Sigma, i}; }
  static Variable syndrome(unsigned i) { return {VarKind::S, i}; }
  static Variable locator(unsigned i) { return {VarKind::Z, i}; }
  /// The Rabinowitsch variable r used for saturation.
  static Variable aux() { return {VarKind::Aux, 0}; }

  std::string name() const;
  auto operator<=>(const Variable&) const = default;
};

/// Parses "s3", "S12", "Z1" or "r".
std::optional<Variable> parse_variable(std::string_view token);

/// An interned, ordered table of variables. Exponent vectors index into it.
class Universe {
 public:
  /// Throws InvalidArgument on duplicate variables.
  static std::shared_ptr<const Universe> create(std::vector<Variable> variables);
  /// s_1..s_w, S_0..S_{n-1}, Z_1..Z_w, r (r only when w > 0). Instances are
  /// shared per (n, w).
  static std::shared_ptr<const Universe> decoding(unsigned n, unsigned w);
  /// S_0..S_{n-1} only.
  static std::shared_ptr<const Universe> syndromes(unsigned n);

  std::size_t size() const { return variables_.size(); }
  const Variable& operator[](std::size_t i) const { return variables_[i]; }
  const std::vector<Variable>& variables() const { return variables_; }
  std::optional<std::size_t> find(Variable v) const;
  /// Throws InvalidArgument naming the variable if absent.
  std::size_t index_of(Variable v) const;

  friend bool operator==(const Universe& a, const Universe& b) { return a.variables_ == b.variables_; }

 private:
  explicit Universe(std::vector<Variable> variables);

  std::vector<Variable> variables_;
  std::map<Variable, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

/// Dense exponent vector over a universe. The built-in comparison is the
/// canonical storage order (lexicographic by universe index), not a
/// monomial order.
class Monomial {
 public:
  explicit Monomial(std::size_t nvars = 0) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, std::uint32_t e) { exps_[i] = e; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<std::uint32_t> exps_;
};

enum class BlockScheme { Lex, GRevLex };

struct OrderBlock {
  std::vector<Variable> variables;  // highest priority first
  BlockScheme scheme = BlockScheme::Lex;
};

/// A monomial order on one universe: pure lex with an explicit variable
/// priority, or a block order whose blocks are compared in sequence, each
/// with an inner lex or graded-reverse-lex order.
class MonomialOrder {
 public:
  static MonomialOrder lex(UniversePtr universe, std::vector<Variable> priority);
  static MonomialOrder block(UniversePtr universe, std::vector<OrderBlock> blocks);
  /// Lex with r > Z_w > ... > Z_1 > S_N (descending index) > s_w > ... > s_1
  /// > S_Q (descending index). Variables absent from the universe are skipped.
  static MonomialOrder decoding(UniversePtr universe, std::span<const unsigned> defining_set);
  /// Same grouping as decoding() but as four grevlex blocks
  /// {r, Z} > {S_N} > {sigma} > {S_Q}.
  static MonomialOrder decoding_blocks(UniversePtr universe, std::span<const unsigned> defining_set);
  /// Accepts "lex" and "block" (the two decoding orders) or a describe()
  /// string.
  static MonomialOrder parse(std::string_view text, UniversePtr universe, std::span<const unsigned> defining_set);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<OrderBlock>& blocks() const { return blocks_; }
  bool is_pure_lex() const { return blocks_.size() == 1 && blocks_[0].scheme == BlockScheme::Lex; }
  /// Universe indices of each block, in priority order.
  const std::vector<std::vector<std::size_t>>& block_indices() const { return block_indices_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// True if every monomial containing a non-kept variable exceeds every
  /// monomial in kept variables only.
  bool eliminates(const std::function<bool(const Variable&)>& keep) const;

  /// "lex:r>Z2>..." or "block:grevlex(r,Z2,Z1);lex(...)". No whitespace.
  std::string describe() const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) { return a.describe() == b.describe(); }

 private:
  MonomialOrder(UniversePtr universe, std::vector<OrderBlock> blocks);

  UniversePtr universe_;
  std::vector<OrderBlock> blocks_;
  std::vector<std::vector<std::size_t>> block_indices_;
};

/// A polynomial with GF(2) coefficients: a set of monomials, kept sorted in
/// canonical order with no duplicates. Addition is symmetric difference.
class Poly2 {
 public:
  explicit Poly2(UniversePtr universe) : universe_(std::move(universe)) {}

  static Poly2 one(UniversePtr universe);
  static Poly2 variable(UniversePtr universe, Variable v, std::uint32_t exponent = 1);
  static Poly2 monomial(UniversePtr universe, Monomial m);
  /// Duplicated monomials cancel in pairs.
  static Poly2 from_monomials(UniversePtr universe, std::vector<Monomial> monomials);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t term_count() const { return monomials_.size(); }
  bool is_zero() const { return monomials_.empty(); }
  bool is_one() const { return monomials_.size() == 1 && monomials_[0].is_one(); }
  bool contains(const Monomial& m) const;

  /// Variables with a positive exponent somewhere, in universe order.
  std::vector<Variable> variables() const;
  bool uses_only(const std::function<bool(const Variable&)>& allowed) const;
  /// Highest exponent of v over all monomials.
  std::uint32_t degree_in(Variable v) const;

  Poly2 operator+(const Poly2& rhs) const;
  Poly2 operator*(const Poly2& rhs) const;
  Poly2 operator*(const Monomial& rhs) const;
  Poly2& operator+=(const Poly2& rhs) { return *this = *this + rhs; }
  Poly2& operator*=(const Poly2& rhs) { return *this = *this * rhs; }
  Poly2 pow(unsigned e) const;

  /// The same polynomial over another universe containing its variables.
  Poly2 rebase(UniversePtr target) const;

  friend bool operator==(const Poly2& a, const Poly2& b);

 private:
  void check_universe(const Poly2& rhs) const;

  UniversePtr universe_;
  std::vector<Monomial> monomials_;
};

/// Throws InvalidArgument on the zero polynomial.
Monomial leading_monomial(const Poly2& f, const MonomialOrder& order);

using Assignment = std::map<Variable, FieldElement>;

/// Throws InvalidArgument naming the first variable of f missing from the
/// assignment.
FieldElement evaluate(const Poly2& f, const Assignment& assignment, const Field& field);

/// Evaluation against a dense table indexed like the universe; faster for
/// repeated evaluation. Entries for variables f does not use may be empty.
FieldElement evaluate(const Poly2& f, std::span<const std::optional<FieldElement>> values, const Field& field);

/// Canonical text: monomials in decreasing order, factors in priority order.
std::string to_string(const Poly2& f, const MonomialOrder& order);
/// Uses the universe order as a lex priority (first variable highest).
std::string to_string(const Poly2& f);
std::string to_string(const Monomial& m, const MonomialOrder& order);

/// Throws ParseError (line 1, 1-based column) on malformed text or
/// variables outside the universe.
Poly2 parse_poly(std::string_view text, UniversePtr universe);

}  // namespace gbdecode
