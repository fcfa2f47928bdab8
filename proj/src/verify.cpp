#include "gbdecode/verify.hpp"

#include <random>
#include <sstream>

#include "gbdecode/decoder.hpp"
#include "gbdecode/error.hpp"

namespace gbdecode {

bool VerifyReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    if (c.passed)
      out << "PASS " << c.name << " (" << c.cases << " cases)\n";
    else
      out << "FAIL " << c.name << ": " << c.detail << "\n";
  }
  return out.str();
}

std::vector<Word> sample_codewords(const CyclicCode& code, unsigned samples, std::uint64_t seed,
                                   unsigned max_dimension) {
  const unsigned k = code.dimension();
  std::vector<Word> out;
  if (k <= max_dimension) {
    for (std::uint64_t msg = 0; msg < (std::uint64_t{1} << k); ++msg) {
      Word m(k);
      for (unsigned b = 0; b < k; ++b) m[b] = (msg >> b) & 1;
      out.push_back(encode(m, code));
    }
    return out;
  }
  out.push_back(Word(code.length(), 0));
  std::mt19937_64 rng(seed);
  for (unsigned s = 0; s < samples; ++s) {
    Word m(k);
    for (auto& b : m) b = rng() & 1;
    out.push_back(encode(m, code));
  }
  return out;
}

namespace {

std::string hex(std::uint32_t v) {
  std::ostringstream s;
  s << "0x" << std::hex << v;
  return s.str();
}

// Runs `body` on every error of weight lo..hi until it reports a failure.
template <typename Body>
CheckResult scan(std::string name, unsigned n, unsigned lo, unsigned hi, Body&& body) {
  CheckResult r{std::move(name), true, 0, {}};
  for (unsigned w = lo; w <= hi && r.passed; ++w)
    for_each_pattern(n, w, [&](const ErrorPattern& e) {
      ++r.cases;
      if (auto failure = body(e)) {
        r.passed = false;
        r.detail = "e=" + e.to_string() + " " + *failure;
        return false;
      }
      return true;
    });
  return r;
}

CheckResult check_criteria(const CyclicCode& code, const FormulaSet& fs, bool exhaustive) {
  const unsigned n = code.length();
  const unsigned top = fs.w_max() + (exhaustive ? 1 : 0);
  return scan("criteria", n, 0, top, [&](const ErrorPattern& e) -> std::optional<std::string> {
    const Word word = e.to_word(n);
    std::optional<unsigned> expected;
    if (e.weight() <= fs.w_max()) {
      expected = static_cast<unsigned>(e.weight());
    } else if (auto other = oracle_decode(word, code); other && other->weight() <= fs.w_max()) {
      expected = static_cast<unsigned>(other->weight());
    }
    std::optional<unsigned> got;
    try {
      got = detect_weight(syndrome_table(word, code), fs, code.field());
    } catch (const ConsistencyError& err) {
      return std::string(err.what());
    }
    if (got == expected) return std::nullopt;
    auto show = [](std::optional<unsigned> v) { return v ? std::to_string(*v) : std::string("none"); };
    return "detected weight " + show(got) + ", expected " + show(expected);
  });
}

CheckResult check_formulas(const CyclicCode& code, const FormulaSet& fs) {
  const unsigned n = code.length();
  const Field& field = code.field();
  return scan("formulas", n, 1, fs.w_max(), [&](const ErrorPattern& e) -> std::optional<std::string> {
    const auto table = syndrome_table(e.to_word(n), code);
    const LocatorPoly sigma = locator_from_pattern(e, code);
    const auto& wf = fs.weights[e.weight()];
    for (unsigned i = 1; i <= e.weight(); ++i) {
      const FieldElement want = sigma.coeffs[i];
      if (fs.variant == Variant::Saturated) {
        const FieldElement got = evaluate(wf.sigma[i - 1], table, field);
        if (got != want)
          return "s" + std::to_string(i) + " expected " + hex(want.bits()) + ", formula gives " + hex(got.bits());
      } else {
        bool usable = false;
        for (const auto& rel : wf.relations[i - 1]) {
          const FieldElement p = evaluate(rel.p, table, field);
          const FieldElement q = evaluate(rel.q, table, field);
          if (!(p * want + q).is_zero())
            return "relation " + to_string(rel.p) + " , " + to_string(rel.q) + " fails for s" + std::to_string(i);
          usable = usable || !p.is_zero();
        }
        if (!usable) return "every relation for s" + std::to_string(i) + " has p = 0";
      }
    }
    return std::nullopt;
  });
}

}  // namespace

VerifyReport verify(const CyclicCode& code, const FormulaSet& formulas, const VerifyOptions& options) {
  VerifyReport report;
  try {
    check_compatible(code, formulas);
    report.checks.push_back({"compatible", true, 1, {}});
  } catch (const ArtifactMismatch& e) {
    report.checks.push_back({"compatible", false, 1, e.what()});
    return report;
  }

  report.checks.push_back(check_criteria(code, formulas, options.exhaustive));
  report.checks.push_back(check_formulas(code, formulas));

  const unsigned n = code.length();
  const auto codewords = sample_codewords(code, options.random_codewords, options.seed, options.exhaustive ? 8 : 0);
  const Field& field = code.field();
  const std::uint64_t inversions_before = field.inversion_count();
  CheckResult decoding{"decode", true, 0, {}};
  for (const auto& c : codewords) {
    auto r = scan("decode", n, 0, formulas.w_max(), [&](const ErrorPattern& e) -> std::optional<std::string> {
      Word y = c;
      for (unsigned u : e.positions()) y[u] ^= 1;
      DecodeResult d;
      try {
        d = decode(y, code, formulas);
      } catch (const ConsistencyError& err) {
        return std::string(err.what());
      }
      if (d.ok() && d.word == c && d.error == e) return std::nullopt;
      std::string c_text;
      for (auto b : c) c_text += static_cast<char>('0' + b);
      return "on codeword " + c_text + ": " + to_string(d.status) + " " + d.error.to_string() +
             (d.diagnostic.empty() ? "" : " (" + d.diagnostic + ")");
    });
    decoding.cases += r.cases;
    if (!r.passed) {
      decoding.passed = false;
      decoding.detail = r.detail;
      break;
    }
  }
  report.checks.push_back(decoding);

  if (formulas.variant == Variant::Saturated) {
    const std::uint64_t inversions = field.inversion_count() - inversions_before;
    report.checks.push_back({"no-division", inversions == 0, decoding.cases,
                             std::to_string(inversions) + " field inversions during decoding"});
  }
  return report;
}

}  // namespace gbdecode
