// Acceptance suite: one line per criterion, exit status 1 if any hard
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "gbdecode/code_spec.hpp"
#include "gbdecode/decoder.hpp"
#include "gbdecode/error.hpp"
#include "gbdecode/ideals.hpp"
#include "gbdecode/verify.hpp"
#include "support.hpp"

using namespace gbdecode;
using gbdecode::fixture::UPoly;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

struct Outcome {
  bool passed = true;
  bool soft = false;
  std::string detail;
};

std::string fmt(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", seconds);
  return buf;
}

Word add(Word a, const Word& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
  return a;
}

// Inversions performed by saturated decoding in criteria 1-3.
std::uint64_t g_decode_inversions = 0;
std::uint64_t g_decode_calls = 0;

struct OracleRun {
  unsigned cases = 0, mismatches = 0;
  std::string first;
  double precompute = 0, decode = 0;
};

OracleRun oracle_equivalence(const std::string& name, const std::vector<Word>& codewords) {
  OracleRun run;
  auto start = Clock::now();
  const auto& c = fixture::code(name);
  const auto& fs = fixture::artifacts(name).formulas;
  run.precompute = since(start);

  start = Clock::now();
  c.field().reset_inversion_count();
  for (const auto& cw : codewords)
    for (unsigned w = 0; w <= c.radius(); ++w)
      for_each_pattern(c.length(), w, [&](const ErrorPattern& e) {
        ++run.cases;
        ++g_decode_calls;
        const Word y = add(cw, e.to_word(c.length()));
        const DecodeResult r = one_step_decode(y, c, fs);
        const auto oracle = oracle_decode(y, c);
        if (!r.ok() || !oracle || r.error != *oracle || r.word != cw) {
          if (!run.mismatches++) run.first = "e=" + e.to_string() + " status=" + to_string(r.status);
        }
        return true;
      });
  g_decode_inversions += c.field().inversion_count();
  // The oracle runs inside the loop; its cost is not the decoder's.
  run.decode = since(start);
  return run;
}

Outcome from_run(const OracleRun& run, unsigned expected_cases, double precompute_limit, double decode_limit) {
  Outcome o;
  std::ostringstream d;
  d << run.cases << " cases, " << run.mismatches << " mismatches, precompute " << fmt(run.precompute)
    << ", decode+oracle " << fmt(run.decode);
  if (run.mismatches) d << ", first " << run.first;
  o.passed = run.mismatches == 0 && run.cases == expected_cases && run.decode < decode_limit;
  if (run.precompute > precompute_limit) {
    o.passed = false;
    d << " (precompute over " << fmt(precompute_limit) << ")";
  }
  o.detail = d.str();
  return o;
}

Outcome criterion1() {
  const auto& c = fixture::code("hamming7");
  return from_run(oracle_equivalence("hamming7", sample_codewords(c, 0, 0, 8)), 128, 10, 1);
}

Outcome criterion2() {
  const auto& c = fixture::code("bch15");
  return from_run(oracle_equivalence("bch15", sample_codewords(c, 10, 2024)), 11 * 121, 600, 5);
}

Outcome criterion3() {
  const auto& c = fixture::code("qr17");
  Outcome o;
  try {
    o = from_run(oracle_equivalence("qr17", {Word(c.length(), 0)}), 154, 1800, 60);
  } catch (const BudgetExhausted& e) {
    o.passed = false;
    o.detail = std::string("precompute budget exhausted: ") + e.what();
  }
  o.soft = true;
  return o;
}

Outcome criterion4() {
  Outcome o;
  unsigned checked = 0;
  for (const char* name : {"hamming7", "bch15", "qr17"}) {
    const auto& c = fixture::code(name);
    const auto& result = fixture::artifacts(name);
    for (std::size_t k = 0; k < result.bases.size(); ++k) {
      const unsigned w = static_cast<unsigned>(k + 1);
      const GroebnerBasis& g = result.bases[k];
      const auto& u = g.order.universe();
      for (unsigned i = 1; i <= w; ++i) {
        Monomial sigma_i(u->size());
        sigma_i.set(u->index_of(Variable::sigma(i)), 1);
        unsigned count = 0;
        for (const auto& f : g.polys) {
          if (leading_monomial(f, g.order) != sigma_i) continue;
          ++count;
          const Poly2 tail = f + Poly2::monomial(u, sigma_i);
          const bool in_sq = tail.uses_only(
              [&](const Variable& v) { return v.kind == VarKind::S && c.in_defining_set(v.index); });
          if (!in_sq && o.passed) {
            o.passed = false;
            o.detail = std::string(name) + " w=" + std::to_string(w) + " tail of s" + std::to_string(i) +
                       " leaves F2[S_Q]";
          }
        }
        ++checked;
        if (count != 1 && o.passed) {
          o.passed = false;
          o.detail = std::string(name) + " w=" + std::to_string(w) + ": " + std::to_string(count) +
                     " elements lead with s" + std::to_string(i);
        }
      }
    }
  }
  if (o.passed) o.detail = std::to_string(checked) + " (code, w, i) triples, one sigma_i + q_i each";
  return o;
}

Outcome criterion5() {
  Outcome o;
  o.passed = g_decode_calls > 0 && g_decode_inversions == 0;
  o.detail = std::to_string(g_decode_inversions) + " inversions over " + std::to_string(g_decode_calls) +
             " saturated decodes";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::ostringstream d;
  for (const char* name : {"hamming7", "bch15"}) {
    const auto& c = fixture::code(name);
    const auto& fs = fixture::artifacts(name).formulas;
    const unsigned t = c.radius();
    unsigned scanned = 0, false_within = 0, wrong_beyond = 0;
    for (unsigned v = 0; v <= t + 1; ++v)
      for_each_pattern(c.length(), v, [&](const ErrorPattern& e) {
        ++scanned;
        const Word y = e.to_word(c.length());
        const auto table = syndrome_table(y, c);
        // Weight of the lightest error with these syndromes, if within t.
        std::optional<unsigned> truth;
        if (v <= t) {
          truth = v;
        } else if (const auto leader = oracle_decode(y, c)) {
          truth = static_cast<unsigned>(leader->weight());
        }
        for (const auto& wf : fs.weights) {
          bool zero = true;
          for (const auto& p : wf.criteria) zero = zero && evaluate(p, table, c.field()).is_zero();
          if (zero != (truth == wf.w)) {
            if (v <= t)
              ++false_within;
            else
              ++wrong_beyond;
            if (o.passed) d << "first: " << name << " e=" << e.to_string() << " T_" << wf.w << "; ";
            o.passed = false;
          }
        }
        return true;
      });
    d << name << " " << scanned << " errors of weight <= " << t + 1 << ", " << false_within
      << " false accepts/rejects within t, " << wrong_beyond << " beyond; ";
  }
  o.detail = d.str();
  return o;
}

// Z tuples in ({0} u mu_n)^w with their sigma and power sums S_0..S_{n-1}.
std::vector<Assignment> locator_points(const RootOfUnity& alpha, unsigned w) {
  const Field& f = alpha.field();
  const unsigned n = alpha.n();
  std::vector<FieldElement> values{f.zero()};
  for (unsigned k = 0; k < n; ++k) values.push_back(alpha.power(k));
  std::vector<Assignment> out;
  std::vector<std::size_t> idx(w, 0);
  while (true) {
    std::vector<FieldElement> z;
    for (auto i : idx) z.push_back(values[i]);
    Assignment at;
    std::vector<FieldElement> e(w + 1, f.zero());
    e[0] = f.one();
    for (unsigned j = 0; j < w; ++j)
      for (unsigned i = j + 1; i >= 1; --i) e[i] += e[i - 1] * z[j];
    for (unsigned i = 1; i <= w; ++i) at.emplace(Variable::sigma(i), e[i]);
    for (unsigned i = 1; i <= n; ++i) {
      FieldElement s = f.zero();
      for (const auto& x : z) s += x.pow(i);
      at.emplace(Variable::syndrome(i % n), s);
    }
    for (unsigned j = 0; j < w; ++j) at.emplace(Variable::locator(j + 1), z[j]);
    out.push_back(std::move(at));
    std::size_t k = 0;
    while (k < w && ++idx[k] == values.size()) idx[k++] = 0;
    if (k == w) return out;
  }
}

Outcome criterion7() {
  Outcome o;
  std::ostringstream d;
  const std::vector<unsigned> q = {1, 2, 4};
  auto field = Field::create(3);
  const RootOfUnity alpha = nth_root(*field, 7);
  for (unsigned w = 1; w <= 2; ++w) {
    const auto u = Universe::decoding(7, w);
    std::vector<Poly2> gens = sigma_ideal(7, w);
    for (auto& p : power_sum_ideal(7, w)) gens.push_back(p);
    const GroebnerBasis g = reduced_groebner_basis(gens, MonomialOrder::decoding(u, q));
    const auto elim = eliminate(g, is_sigma_or_syndrome);

    unsigned not_contained = 0;
    for (const auto& p : newton_generators(7, w))
      if (!normal_form(p, g).is_zero()) ++not_contained;
    unsigned nonvanishing = 0, points = 0;
    for (const auto& at : locator_points(alpha, w)) {
      ++points;
      for (const auto& p : elim)
        if (!evaluate(p, at, *field).is_zero()) ++nonvanishing;
    }
    if (not_contained || nonvanishing) o.passed = false;
    d << "w=" << w << ": " << not_contained << " Newton generators outside, " << elim.size()
      << " eliminated elements, " << nonvanishing << " nonzero values over " << points << " points; ";
  }
  o.detail = d.str();
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::ostringstream d;
  const auto sat = saturated_newton_ideal(7, 2, std::vector<unsigned>{1, 2, 4});
  const auto& g = sat.full;
  const auto u = g.order.universe();
  unsigned field_eq_out = 0;
  for (unsigned i = 1; i <= 2; ++i) {
    const Poly2 s = Poly2::variable(u, Variable::sigma(i));
    if (!normal_form(s.pow(8) + s, g).is_zero()) ++field_eq_out;
  }
  for (unsigned i = 0; i < 7; ++i) {
    const Poly2 s = Poly2::variable(u, Variable::syndrome(i));
    if (!normal_form(s.pow(8) + s, g).is_zero()) ++field_eq_out;
  }
  bool z7_plus_z = true, z7_plus_1 = true;
  for (unsigned i = 1; i <= 2; ++i) {
    const Poly2 z = Poly2::variable(u, Variable::locator(i));
    z7_plus_z = z7_plus_z && normal_form(z.pow(7) + z, g).is_zero();
    z7_plus_1 = z7_plus_1 && normal_form(z.pow(7) + Poly2::one(u), g).is_zero();
  }
  o.passed = field_eq_out == 0 && z7_plus_1;
  d << field_eq_out << " of 9 sigma/S field equations outside; Z_i^7 + Z_i "
    << (z7_plus_z ? "member" : "not a member") << "; Z_i^7 + 1 " << (z7_plus_1 ? "member" : "not a member");
  o.detail = d.str();
  return o;
}

// Points of V(I_{N,2}) at n = 7 with sigma in F^2; S follows from sigma.
Outcome variety_over(const Field& field, std::set<Word>& words, unsigned& points) {
  Outcome o;
  const unsigned n = 7, w = 2;
  const RootOfUnity alpha = nth_root(field, n);
  const auto gens = newton_generators(n, w);
  const auto elements = fixture::all_elements(field);
  for (const auto& s1 : elements)
    for (const auto& s2 : elements) {
      std::vector<FieldElement> S(n, field.zero());
      S[1] = s1;
      S[2] = s1 * S[1];
      for (unsigned i = 3; i <= n; ++i) S[i % n] = s1 * S[(i - 1) % n] + s2 * S[(i - 2) % n];
      Assignment at{{Variable::sigma(1), s1}, {Variable::sigma(2), s2}};
      for (unsigned i = 0; i < n; ++i) at.emplace(Variable::syndrome(i), S[i]);
      bool on_variety = true;
      for (const auto& g : gens) on_variety = on_variety && evaluate(g, at, field).is_zero();
      if (!on_variety) continue;
      ++points;

      const auto e = inverse_fourier(S, alpha);
      Word word(n, 0);
      bool binary = true;
      for (unsigned j = 0; j < n; ++j) {
        binary = binary && (e[j].is_zero() || e[j].is_one());
        word[j] = e[j].is_one();
      }
      if (!binary) {
        o.passed = false;
        o.detail = "non-binary inverse transform at s1=" + std::to_string(s1.bits()) + " s2=" + std::to_string(s2.bits());
        return o;
      }
      words.insert(word);

      UPoly sigma_e{field.one()};
      for (unsigned j = 0; j < n; ++j)
        if (word[j]) sigma_e = fixture::mul(sigma_e, UPoly{field.one(), alpha.power(j)});
      UPoly sigma{field.one(), s1, s2};
      fixture::trim(sigma);
      const auto [quotient, remainder] = fixture::divmod(sigma, sigma_e);
      bool square = remainder.empty();
      for (std::size_t k = 1; k < quotient.size(); k += 2) square = square && quotient[k].is_zero();
      const std::size_t l = w + 1 - sigma.size();
      const std::size_t sigma_deg = sigma_e.size() - 1;
      if (!square || sigma_deg + (quotient.size() - 1) + l != w) {
        o.passed = false;
        o.detail = "sigma is not sigma_e G^2 Z^l at s1=" + std::to_string(s1.bits()) +
                   " s2=" + std::to_string(s2.bits());
        return o;
      }
    }
  return o;
}

Outcome criterion9() {
  std::set<Word> words;
  std::ostringstream d;
  for (unsigned m : {3u, 6u}) {
    auto field = Field::create(m);
    unsigned points = 0;
    Outcome o = variety_over(*field, words, points);
    if (!o.passed) return o;
    d << points << " points over GF(" << field->size() << "), ";
  }
  // Explicit embeddings of every word of weight <= 2, including repeated and
  // zero locators for the weight-deficient ones.
  const auto& c = fixture::code("hamming7");
  const Field& f = c.field();
  unsigned embeddings = 0;
  bool embeddings_ok = true;
  for (const auto& at : locator_points(c.alpha(), 2)) {
    std::vector<FieldElement> S(7, f.zero());
    for (unsigned i = 0; i < 7; ++i) S[i] = at.at(Variable::syndrome(i));
    const auto e = inverse_fourier(S, c.alpha());
    const FieldElement z1 = at.at(Variable::locator(1)), z2 = at.at(Variable::locator(2));
    Word expected(7, 0);
    for (const auto& z : {z1, z2})
      if (!z.is_zero() && !(z1 == z2))
        for (unsigned j = 0; j < 7; ++j)
          if (c.alpha().power(j) == z) expected[j] ^= 1;
    for (unsigned j = 0; j < 7; ++j) embeddings_ok = embeddings_ok && e[j].is_one() == (expected[j] == 1);
    for (const auto& g : newton_generators(7, 2)) embeddings_ok = embeddings_ok && evaluate(g, at, f).is_zero();
    ++embeddings;
  }
  Outcome o;
  unsigned heavy = 0;
  for (const auto& w : words)
    if (std::count(w.begin(), w.end(), 1) > 2) ++heavy;
  o.passed = words.size() == 29 && heavy == 0 && embeddings_ok;
  d << words.size() << " distinct binary words (expected 29), " << heavy << " of weight > 2, " << embeddings
    << " locator embeddings " << (embeddings_ok ? "consistent" : "INCONSISTENT");
  o.detail = d.str();
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::ostringstream d;
  std::mt19937 rng(10);
  unsigned bases = 0, permutations = 0;
  for (const char* name : {"hamming7", "bch15", "qr17"}) {
    const auto& c = fixture::code(name);
    const auto& result = fixture::artifacts(name);
    for (std::size_t k = 0; k < result.bases.size(); ++k) {
      const GroebnerBasis& g = result.bases[k];
      ++bases;
      std::optional<std::pair<std::size_t, std::size_t>> pair;
      if (!satisfies_buchberger_criterion(g, &pair)) {
        o.passed = false;
        d << name << " w=" << k + 1 << " S-polynomial of " << pair->first << "," << pair->second
          << " does not reduce to 0; ";
      }
      auto gens = build_ideal(c.length(), static_cast<unsigned>(k + 1), c.defining_set(), IdealVariant::Saturated)
                      .generators;
      for (int p = 0; p < 3; ++p) {
        std::shuffle(gens.begin(), gens.end(), rng);
        ++permutations;
        if (reduced_groebner_basis(gens, g.order).polys != g.polys) {
          o.passed = false;
          d << name << " w=" << k + 1 << " reduced basis differs under permutation " << p << "; ";
        }
        // Generator order is canonicalised inside the engine, so also feed a
        // different generating set of the same ideal.
        auto mixed = gens;
        mixed.insert(mixed.end(), g.polys.begin(), g.polys.end());
        std::shuffle(mixed.begin(), mixed.end(), rng);
        mixed.erase(mixed.begin() + static_cast<std::ptrdiff_t>(gens.size() + g.polys.size() / 2), mixed.end());
        mixed.insert(mixed.end(), gens.begin(), gens.end());
        if (reduced_groebner_basis(mixed, g.order).polys != g.polys) {
          o.passed = false;
          d << name << " w=" << k + 1 << " reduced basis differs for an enlarged generating set " << p << "; ";
        }
      }
    }
  }
  d << bases << " bases pass the Buchberger criterion, " << permutations
    << " permutations (each also with an enlarged generating set) give the same reduced basis";
  o.detail = d.str();
  return o;
}

Outcome criterion11() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "gbdecode-acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  };
  Outcome o;
  std::ostringstream d;
  for (const char* name : {"hamming7", "bch15", "qr17"}) {
    std::string texts[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path out = dir / (std::string(name) + std::to_string(run) + ".gbf");
      std::ostringstream sink;
      const int rc = cli::run({"gbdecode", "precompute", "--code", std::string("builtin:") + name, "--out",
                               out.string()},
                              sink, sink);
      if (rc != 0) {
        o.passed = false;
        d << name << " precompute exit " << rc << "; ";
      }
      texts[run] = slurp(out);
    }
    const bool same = !texts[0].empty() && texts[0] == texts[1];
    o.passed = o.passed && same;
    d << name << " " << (same ? "identical" : "DIFFERENT") << " (" << texts[0].size() << " bytes); ";
  }
  fs::remove_all(dir);
  o.detail = d.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria = {
      criterion1, criterion2, criterion3, criterion4, criterion5, criterion6,
      criterion7, criterion8, criterion9, criterion10, criterion11,
  };
  int hard_failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[k]();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const char* verdict = o.passed ? "PASS" : o.soft ? "SOFT-FAIL" : "FAIL";
    std::cout << "criterion " << k + 1 << " " << verdict << " [" << fmt(since(start)) << "] " << o.detail
              << std::endl;
    if (!o.passed && !o.soft) ++hard_failures;
  }

  // QR(23) is attempted under a small pair budget; its outcome is reported
  // but never fails the run.
  const auto start = Clock::now();
  std::string verdict, detail;
  try {
    PrecomputeOptions options;
    options.max_pairs = 20'000;
    const auto result = precompute(fixture::code("qr23"), options);
    verdict = "PASS";
    detail = "w_max=" + std::to_string(result.formulas.w_max());
  } catch (const BudgetExhausted& e) {
    verdict = "SOFT-FAIL";
    const std::string trace = e.trace();
    detail = std::string(e.what()) + " (" + trace.substr(0, trace.find('\n')) + ")";
  }
  std::cout << "stretch qr23 " << verdict << " [" << fmt(since(start)) << "] " << detail << std::endl;
  return hard_failures ? 1 : 0;
}
