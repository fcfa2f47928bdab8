#include "gbdecode/codec.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gbdecode/error.hpp"

namespace gbdecode {

// ---------------------------------------------------------------------------
// ErrorPattern / LocatorPoly

ErrorPattern::ErrorPattern(std::vector<unsigned> positions) : positions_(std::move(positions)) {
  std::sort(positions_.begin(), positions_.end());
  if (std::adjacent_find(positions_.begin(), positions_.end()) != positions_.end())
    throw InvalidArgument("error positions must be distinct");
}

ErrorPattern ErrorPattern::from_word(std::span<const std::uint8_t> word) {
  std::vector<unsigned> positions;
  for (std::size_t u = 0; u < word.size(); ++u)
    if (word[u]) positions.push_back(static_cast<unsigned>(u));
  return ErrorPattern(std::move(positions));
}

Word ErrorPattern::to_word(unsigned n) const {
  Word word(n, 0);
  for (unsigned u : positions_) {
    if (u >= n) throw InvalidArgument("error position " + std::to_string(u) + " outside length " + std::to_string(n));
    word[u] = 1;
  }
  return word;
}

std::string ErrorPattern::to_string() const {
  std::ostringstream out;
  out << "{";
  for (std::size_t k = 0; k < positions_.size(); ++k) out << (k ? "," : "") << positions_[k];
  out << "}";
  return out.str();
}

std::size_t LocatorPoly::degree() const {
  for (std::size_t k = coeffs.size(); k-- > 0;)
    if (!coeffs[k].is_zero()) return k;
  return 0;
}

FieldElement LocatorPoly::evaluate(const FieldElement& z) const {
  FieldElement acc = z.field().zero();
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
  return acc;
}

// ---------------------------------------------------------------------------
// CyclicCode

std::vector<unsigned> cyclotomic_coset(unsigned i, unsigned n) {
  std::set<unsigned> coset;
  for (unsigned x = i % n; coset.insert(x).second; x = (2 * x) % n) {
  }
  return {coset.begin(), coset.end()};
}

CyclicCode CyclicCode::create(unsigned n, std::vector<unsigned> defining_set, const CodeOptions& options) {
  if (n <= 1 || n % 2 == 0) throw InvalidArgument("code length must be odd and > 1, got " + std::to_string(n));
  std::sort(defining_set.begin(), defining_set.end());
  defining_set.erase(std::unique(defining_set.begin(), defining_set.end()), defining_set.end());

  CyclicCode code;
  code.n_ = n;
  code.membership_.assign(n, false);
  for (unsigned i : defining_set) {
    if (i >= n) throw InvalidArgument("defining set element " + std::to_string(i) + " outside 0.." + std::to_string(n - 1));
    code.membership_[i] = true;
  }
  for (unsigned i : defining_set) {
    auto coset = cyclotomic_coset(i, n);
    for (unsigned j : coset) {
      if (code.membership_[j]) continue;
      std::ostringstream msg;
      msg << "defining set is not closed under doubling mod " << n << ": coset of " << i << " is {";
      for (std::size_t k = 0; k < coset.size(); ++k) msg << (k ? "," : "") << coset[k];
      msg << "} but " << j << " is missing";
      throw InvalidArgument(msg.str());
    }
  }
  if (defining_set.size() == n) throw InvalidArgument("defining set covers every exponent: the code is {0}");
  code.defining_set_ = defining_set;
  for (unsigned i = 0; i < n; ++i)
    if (!code.membership_[i]) code.unknown_set_.push_back(i);

  const unsigned m = splitting_field_degree(n);
  code.field_ = options.modulus ? Field::create(m, *options.modulus) : Field::create(m);
  code.alpha_exponent_ = options.alpha_exponent.value_or(code.field_->group_order() / n);
  code.alpha_ = std::make_shared<RootOfUnity>(nth_root(*code.field_, n, code.alpha_exponent_));

  // g(X) = prod_{i in Q} (X - alpha^i); binary because Q is coset-closed.
  const Field& field = *code.field_;
  std::vector<FieldElement> g{field.one()};
  for (unsigned i : defining_set) {
    const FieldElement& root = code.alpha_->power(i);
    std::vector<FieldElement> next(g.size() + 1, field.zero());
    for (std::size_t k = 0; k < g.size(); ++k) {
      next[k + 1] += g[k];
      next[k] += g[k] * root;
    }
    g = std::move(next);
  }
  code.generator_.reserve(g.size());
  for (const auto& c : g) {
    if (c.bits() > 1) throw ConsistencyError("generator polynomial has a non-binary coefficient");
    code.generator_.push_back(static_cast<std::uint8_t>(c.bits()));
  }

  if (code.dimension() <= kMaxBruteForceDimension) {
    code.distance_ = min_distance_bruteforce(n, code.generator_);
    if (options.declared_distance && *options.declared_distance != code.distance_)
      throw InvalidArgument("declared minimum distance " + std::to_string(*options.declared_distance) +
                            " differs from the computed value " + std::to_string(code.distance_));
  } else {
    if (!options.declared_distance)
      throw InvalidArgument("dimension " + std::to_string(code.dimension()) +
                            " is too large for brute force; declare d in the code spec");
    code.distance_ = *options.declared_distance;
  }
  if (code.distance_ == 0) throw InvalidArgument("minimum distance must be positive");
  return code;
}

// ---------------------------------------------------------------------------
// Operations

std::map<unsigned, FieldElement> syndromes(std::span<const std::uint8_t> word, const CyclicCode& code) {
  const unsigned n = code.length();
  if (word.size() != n)
    throw InvalidArgument("word length " + std::to_string(word.size()) + " differs from n = " + std::to_string(n));
  std::map<unsigned, FieldElement> out;
  for (unsigned i : code.defining_set()) {
    FieldElement s = code.field().zero();
    for (unsigned u = 0; u < n; ++u)
      if (word[u]) s += code.alpha().power(static_cast<long long>(u) * i);
    out.emplace(i, s);
  }
  return out;
}

LocatorPoly locator_from_pattern(const ErrorPattern& pattern, const CyclicCode& code) {
  const Field& field = code.field();
  LocatorPoly sigma{{field.one()}};
  for (unsigned u : pattern.positions()) {
    const FieldElement& z = code.alpha().power(u);
    sigma.coeffs.push_back(field.zero());
    for (std::size_t k = sigma.coeffs.size() - 1; k > 0; --k) sigma.coeffs[k] += sigma.coeffs[k - 1] * z;
  }
  return sigma;
}

ErrorPattern chien_search(const LocatorPoly& sigma, const CyclicCode& code) {
  if (sigma.coeffs.empty() || !sigma.coeffs[0].is_one()) throw InvalidArgument("locator must have constant term 1");
  std::vector<unsigned> positions;
  for (unsigned u = 0; u < code.length(); ++u)
    if (sigma.evaluate(code.alpha().power(-static_cast<long long>(u))).is_zero()) positions.push_back(u);
  if (positions.size() != sigma.degree())
    throw ConsistencyError("locator does not split over the group of n-th roots: " + std::to_string(positions.size()) +
                           " roots for degree " + std::to_string(sigma.degree()));
  return ErrorPattern(std::move(positions));
}

std::optional<ErrorPattern> oracle_decode(std::span<const std::uint8_t> word, const CyclicCode& code) {
  const auto target = syndromes(word, code);
  const auto& q = code.defining_set();
  std::optional<ErrorPattern> found;
  for (unsigned w = 0; w <= code.radius() && !found; ++w) {
    for_each_pattern(code.length(), w, [&](const ErrorPattern& e) {
      for (unsigned i : q) {
        FieldElement s = code.field().zero();
        for (unsigned u : e.positions()) s += code.alpha().power(static_cast<long long>(u) * i);
        if (!(s == target.at(i))) return true;
      }
      found = e;
      return false;
    });
  }
  return found;
}

unsigned min_distance_bruteforce(unsigned n, const Word& generator_poly) {
  const std::size_t degree = generator_poly.size() - 1;
  const std::size_t k = n - degree;
  if (k > CyclicCode::kMaxBruteForceDimension)
    throw InvalidArgument("dimension " + std::to_string(k) + " too large for brute-force minimum distance");
  unsigned best = n + 1;
  std::vector<std::uint8_t> word(n);
  for (std::uint64_t msg = 1; msg < (std::uint64_t{1} << k); ++msg) {
    std::fill(word.begin(), word.end(), 0);
    for (std::size_t a = 0; a < k; ++a) {
      if (!((msg >> a) & 1)) continue;
      for (std::size_t b = 0; b <= degree; ++b) word[a + b] ^= generator_poly[b];
    }
    unsigned weight = static_cast<unsigned>(std::count(word.begin(), word.end(), 1));
    best = std::min(best, weight);
  }
  return best;
}

unsigned min_distance_bruteforce(const CyclicCode& code) {
  return min_distance_bruteforce(code.length(), code.generator_poly());
}

Word encode(std::span<const std::uint8_t> message, const CyclicCode& code) {
  if (message.size() != code.dimension())
    throw InvalidArgument("message length " + std::to_string(message.size()) + " differs from dimension " +
                          std::to_string(code.dimension()));
  const Word& g = code.generator_poly();
  Word word(code.length(), 0);
  for (std::size_t a = 0; a < message.size(); ++a) {
    if (!message[a]) continue;
    for (std::size_t b = 0; b < g.size(); ++b) word[a + b] ^= g[b];
  }
  return word;
}

}  // namespace gbdecode
