#include "gbdecode/finite_field.hpp"

#include <array>
#include <bit>
#include <sstream>

#include "gbdecode/error.hpp"

namespace gbdecode {

namespace {

constexpr std::array<std::uint64_t, 21> kDefaultModuli = {
    0,       0x3,     0x7,     0xb,     0x13,    0x25,     0x43,     0x83,     0x11d,    0x211,   0x409,
    0x805,   0x1053,  0x201b,  0x402b,  0x8003,  0x1002d,  0x20009,  0x40027,  0x80027,  0x100009,
};

int degree_of(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

// Remainder of a by b over GF(2).
std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t b) {
  const int db = degree_of(b);
  for (int da = degree_of(a); da >= db; da = degree_of(a)) a ^= b << (da - db);
  return a;
}

std::string poly_string(std::uint64_t p) {
  std::ostringstream out;
  bool first = true;
  for (int k = degree_of(p); k >= 0; --k) {
    if (!((p >> k) & 1)) continue;
    if (!first) out << " + ";
    first = false;
    if (k == 0)
      out << "1";
    else if (k == 1)
      out << "x";
    else
      out << "x^" << k;
  }
  return first ? "0" : out.str();
}

std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d != 0) continue;
    out.push_back(d);
    while (x % d == 0) x /= d;
  }
  if (x > 1) out.push_back(x);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(const Field& field, std::uint32_t bits) : field_(&field), bits_(bits) {}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  if (field_ != rhs.field_) throw InvalidArgument("adding elements of different fields");
  return FieldElement(*field_, bits_ ^ rhs.bits_);
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  if (field_ != rhs.field_) throw InvalidArgument("multiplying elements of different fields");
  return FieldElement(*field_, field_->mul(bits_, rhs.bits_));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const { return *this * rhs.inverse(); }

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  return FieldElement(*field_, field_->pow(bits_, exponent));
}

FieldElement FieldElement::inverse() const { return FieldElement(*field_, field_->inv(bits_)); }

std::uint64_t FieldElement::order() const {
  if (is_zero()) throw InvalidArgument("zero has no multiplicative order");
  std::uint64_t order = field_->group_order();
  for (std::uint64_t p : prime_factors(order)) {
    while (order % p == 0 && field_->pow(bits_, order / p) == 1) order /= p;
  }
  return order;
}

// ---------------------------------------------------------------------------
// Field

std::uint64_t Field::default_modulus(unsigned m) {
  if (m == 0 || m >= kDefaultModuli.size())
    throw InvalidArgument("no built-in modulus for degree " + std::to_string(m));
  return kDefaultModuli[m];
}

std::shared_ptr<const Field> Field::create(unsigned m) { return create(m, default_modulus(m)); }

std::shared_ptr<const Field> Field::create(unsigned m, std::uint64_t modulus) {
  return std::shared_ptr<const Field>(new Field(m, modulus));
}

Field::Field(unsigned m, std::uint64_t modulus) : m_(m), modulus_(modulus) {
  if (m == 0 || m > kMaxDegree) throw InvalidArgument("field degree must be in 1..31, got " + std::to_string(m));
  if (degree_of(modulus) != static_cast<int>(m))
    throw InvalidArgument("modulus " + poly_string(modulus) + " does not have degree " + std::to_string(m));
  // Trial division by every polynomial of degree 1..m/2.
  for (unsigned d = 1; 2 * d <= m; ++d) {
    for (std::uint64_t q = std::uint64_t{1} << d; q < (std::uint64_t{1} << (d + 1)); ++q) {
      if (gf2_mod(modulus, q) == 0)
        throw InvalidArgument("modulus " + poly_string(modulus) + " is reducible: divisible by " + poly_string(q));
    }
  }

  const std::uint64_t order = group_order();
  const auto factors = prime_factors(order);
  generator_ = 0;
  for (std::uint64_t g = 1; g < size(); ++g) {
    const auto candidate = static_cast<std::uint32_t>(g);
    if (pow_slow(candidate, order) != 1) continue;
    bool primitive = true;
    for (std::uint64_t p : factors) {
      if (pow_slow(candidate, order / p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = candidate;
      break;
    }
  }
  if (generator_ == 0) throw ConsistencyError("no primitive element found in GF(2^" + std::to_string(m) + ")");

  if (m_ <= kMaxTableDegree) {
    exp_.resize(2 * order);
    log_.assign(size(), 0);
    std::uint32_t x = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
      exp_[i] = x;
      exp_[i + order] = x;
      log_[x] = static_cast<std::uint32_t>(i);
      x = mul_slow(x, generator_);
    }
  }
}

FieldElement Field::element(std::uint32_t bits) const {
  if (m_ < 32 && (bits >> m_) != 0)
    throw InvalidArgument("value " + std::to_string(bits) + " outside GF(2^" + std::to_string(m_) + ")");
  return FieldElement(*this, bits);
}

std::uint32_t Field::mul_slow(std::uint32_t a, std::uint32_t b) const {
  std::uint64_t product = 0;
  std::uint64_t shifted = a;
  for (std::uint32_t rest = b; rest != 0; rest >>= 1) {
    if (rest & 1) product ^= shifted;
    shifted <<= 1;
  }
  return static_cast<std::uint32_t>(gf2_mod(product, modulus_));
}

std::uint32_t Field::pow_slow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1;
  std::uint32_t base = a;
  while (e != 0) {
    if (e & 1) result = mul_slow(result, base);
    base = mul_slow(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[log_[a] + log_[b]];
  return mul_slow(a, b);
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!exp_.empty()) return exp_[(static_cast<unsigned __int128>(log_[a]) * e) % group_order()];
  return pow_slow(a, e % group_order());
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw InvalidArgument("division by zero in GF(2^" + std::to_string(m_) + ")");
  inversions_.fetch_add(1, std::memory_order_relaxed);
  if (!exp_.empty()) return exp_[(group_order() - log_[a]) % group_order()];
  return pow_slow(a, group_order() - 1);
}

// ---------------------------------------------------------------------------
// Roots of unity and the Fourier transform

unsigned splitting_field_degree(unsigned n) {
  if (n <= 1 || n % 2 == 0) throw InvalidArgument("length must be odd and greater than 1, got " + std::to_string(n));
  unsigned m = 1;
  std::uint64_t power = 2 % n;
  while (power != 1) {
    power = (power * 2) % n;
    ++m;
  }
  return m;
}

RootOfUnity::RootOfUnity(FieldElement alpha, unsigned n) : n_(n) {
  if (n == 0) throw InvalidArgument("root of unity order must be positive");
  if (alpha.is_zero() || alpha.order() != n)
    throw InvalidArgument("element is not a primitive " + std::to_string(n) + "-th root of unity");
  powers_.reserve(n);
  FieldElement x = alpha.field().one();
  for (unsigned k = 0; k < n; ++k) {
    powers_.push_back(x);
    x *= alpha;
  }
}

const FieldElement& RootOfUnity::power(long long k) const {
  long long r = k % static_cast<long long>(n_);
  if (r < 0) r += n_;
  return powers_[static_cast<std::size_t>(r)];
}

RootOfUnity nth_root(const Field& field, unsigned n) {
  if (n == 0 || field.group_order() % n != 0)
    throw InvalidArgument(std::to_string(n) + " does not divide 2^" + std::to_string(field.degree()) + " - 1");
  return RootOfUnity(field.generator().pow(field.group_order() / n), n);
}

RootOfUnity nth_root(const Field& field, unsigned n, std::uint64_t exponent) {
  return RootOfUnity(field.generator().pow(exponent), n);
}

std::vector<FieldElement> fourier_transform(std::span<const std::uint8_t> word, const RootOfUnity& alpha) {
  const unsigned n = alpha.n();
  if (word.size() != n)
    throw InvalidArgument("word length " + std::to_string(word.size()) + " differs from n = " + std::to_string(n));
  const Field& field = alpha.field();
  std::vector<FieldElement> spectrum;
  spectrum.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    // Horner evaluation of c at alpha^i.
    const FieldElement& x = alpha.power(i);
    FieldElement acc = field.zero();
    for (std::size_t k = n; k-- > 0;) {
      acc = acc * x;
      if (word[k]) acc += field.one();
    }
    spectrum.push_back(acc);
  }
  return spectrum;
}

std::vector<FieldElement> inverse_fourier(std::span<const FieldElement> spectrum, const RootOfUnity& alpha) {
  const unsigned n = alpha.n();
  if (spectrum.size() != n)
    throw InvalidArgument("spectrum length " + std::to_string(spectrum.size()) + " differs from n = " +
                          std::to_string(n));
  std::vector<FieldElement> out;
  out.reserve(n);
  for (unsigned j = 0; j < n; ++j) {
    FieldElement acc = alpha.field().zero();
    for (unsigned i = 0; i < n; ++i)
      acc += spectrum[i] * alpha.power(-static_cast<long long>(i) * j);
    out.push_back(acc);
  }
  return out;
}

}  // namespace gbdecode
