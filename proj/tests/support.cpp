#include "support.hpp"

#include <map>
#include <mutex>

#include "gbdecode/code_spec.hpp"

namespace gbdecode::fixture {

const CyclicCode& code(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, CyclicCode> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, build_code(*builtin_spec(name))).first;
  return it->second;
}

const PrecomputeResult& artifacts(const std::string& name, Variant variant) {
  static std::mutex mu;
  static std::map<std::pair<std::string, Variant>, PrecomputeResult> cache;
  const CyclicCode& c = code(name);
  std::lock_guard lock(mu);
  auto key = std::make_pair(name, variant);
  auto it = cache.find(key);
  if (it == cache.end()) {
    PrecomputeOptions options;
    options.variant = variant;
    it = cache.emplace(key, precompute(c, options)).first;
  }
  return it->second;
}

std::vector<FieldElement> all_elements(const Field& field) {
  std::vector<FieldElement> out;
  for (std::uint64_t b = 0; b < field.size(); ++b) out.push_back(field.element(static_cast<std::uint32_t>(b)));
  return out;
}

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1, a.front().field().zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  UPoly r = a, d = b;
  trim(r);
  trim(d);
  const Field& f = d.back().field();
  if (r.size() < d.size()) return {{}, r};
  UPoly q(r.size() - d.size() + 1, f.zero());
  const FieldElement lead_inv = d.back().inverse();
  while (r.size() >= d.size()) {
    const std::size_t shift = r.size() - d.size();
    const FieldElement c = r.back() * lead_inv;
    q[shift] = c;
    for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] += c * d[i];
    trim(r);
  }
  trim(q);
  return {q, r};
}

}  // namespace gbdecode::fixture
