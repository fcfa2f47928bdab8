#pragma once

// Arithmetic in GF(2^m) in polynomial basis, n-th roots of unity and the
// finite-field Fourier transform of binary words.

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace gbdecode {

class Field;

/// An element of GF(2^m): polynomial-basis coordinates packed into an
/// integer (bit k is the coefficient of x^k) plus the owning field.
/// The field must outlive the element.
class FieldElement {
 public:
  FieldElement(const Field& field, std::uint32_t bits);

  std::uint32_t bits() const { return bits_; }
  const Field& field() const { return *field_; }
  bool is_zero() const { return bits_ == 0; }
  bool is_one() const { return bits_ == 1; }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const { return *this + rhs; }
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
  FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

  FieldElement pow(std::uint64_t exponent) const;
  FieldElement inverse() const;
  /// Smallest k > 0 with x^k = 1. Zero has no order and throws.
  std::uint64_t order() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.bits_ == b.bits_;
  }

 private:
  const Field* field_;
  std::uint32_t bits_;
};

/// GF(2^m) for 1 <= m <= 31 with a verified-irreducible modulus.
///
/// Multiplication uses log/antilog tables when m <= 16 and carry-less
/// multiplication with reduction otherwise. Instances are immutable apart
/// from the inversion counter, which exists so callers can prove that a code
/// path performs no divisions.
class Field {
 public:
  static constexpr unsigned kMaxDegree = 31;
  static constexpr unsigned kMaxTableDegree = 16;

  /// Throws InvalidArgument naming a factor if `modulus` is reducible.
  static std::shared_ptr<const Field> create(unsigned m, std::uint64_t modulus);
  /// Uses the built-in primitive polynomial for degree m (m <= 20).
  static std::shared_ptr<const Field> create(unsigned m);

  /// Lexicographically smallest primitive polynomial of degree m, m in 1..20.
  static std::uint64_t default_modulus(unsigned m);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  unsigned degree() const { return m_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t size() const { return std::uint64_t{1} << m_; }
  std::uint64_t group_order() const { return size() - 1; }

  FieldElement zero() const { return FieldElement(*this, 0); }
  FieldElement one() const { return FieldElement(*this, 1); }
  /// Smallest element (as an integer) of multiplicative order 2^m - 1.
  FieldElement generator() const { return FieldElement(*this, generator_); }
  /// Throws InvalidArgument if `bits` has bits at or above m.
  FieldElement element(std::uint32_t bits) const;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  /// Counted; throws InvalidArgument on zero.
  std::uint32_t inv(std::uint32_t a) const;

  std::uint64_t inversion_count() const { return inversions_.load(std::memory_order_relaxed); }
  void reset_inversion_count() const { inversions_.store(0, std::memory_order_relaxed); }

 private:
  Field(unsigned m, std::uint64_t modulus);
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow_slow(std::uint32_t a, std::uint64_t e) const;

  unsigned m_;
  std::uint64_t modulus_;
  std::uint32_t generator_ = 1;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
  mutable std::atomic<std::uint64_t> inversions_{0};
};

/// Multiplicative order of 2 modulo n: the degree of the smallest binary
/// field containing primitive n-th roots of unity. n must be odd and > 1.
unsigned splitting_field_degree(unsigned n);

/// A primitive n-th root of unity with its powers cached.
class RootOfUnity {
 public:
  /// Throws InvalidArgument unless `alpha` has order exactly n.
  RootOfUnity(FieldElement alpha, unsigned n);

  const FieldElement& alpha() const { return powers_[1 % n_]; }
  unsigned n() const { return n_; }
  const Field& field() const { return powers_.front().field(); }
  /// alpha^k with k taken modulo n; negative k allowed.
  const FieldElement& power(long long k) const;

 private:
  unsigned n_;
  std::vector<FieldElement> powers_;
};

/// generator^((2^m - 1) / n). Throws if n does not divide 2^m - 1.
RootOfUnity nth_root(const Field& field, unsigned n);
/// generator^exponent, which must have order exactly n.
RootOfUnity nth_root(const Field& field, unsigned n, std::uint64_t exponent);

/// S_i = c(alpha^i), i = 0..n-1, for a 0/1 vector c of length n.
std::vector<FieldElement> fourier_transform(std::span<const std::uint8_t> word, const RootOfUnity& alpha);
/// e_j = sum_i S_i alpha^(-ij). The 1/n factor is 1 because n is odd.
std::vector<FieldElement> inverse_fourier(std::span<const FieldElement> spectrum, const RootOfUnity& alpha);

}  // namespace gbdecode
