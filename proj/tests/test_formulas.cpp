#include <gtest/gtest.h>

#include "gbdecode/codec.hpp"
#include "gbdecode/error.hpp"
#include "gbdecode/formulas.hpp"
#include "gbdecode/ideals.hpp"
#include "support.hpp"

using namespace gbdecode;
using gbdecode::fixture::artifacts;
using gbdecode::fixture::code;

namespace {

bool vanishes(const std::vector<Poly2>& ts, const Word& word, const CyclicCode& c) {
  std::vector<std::optional<FieldElement>> table(c.length());
  for (const auto& [i, s] : syndromes(word, c)) table[i] = s;
  for (const auto& t : ts)
    if (!evaluate(t, table, c.field()).is_zero()) return false;
  return true;
}

}  // namespace

TEST(WeightCriteria, HammingExactOnAllWords) {
  const auto& c = code("hamming7");
  const auto& fs = artifacts("hamming7").formulas;
  ASSERT_EQ(fs.weights.size(), 2u);
  const auto& t1 = fs.weights[1].criteria;
  ASSERT_FALSE(t1.empty());
  unsigned accepted = 0;
  for (unsigned bits = 0; bits < 128; ++bits) {
    Word y(7);
    for (unsigned j = 0; j < 7; ++j) y[j] = (bits >> j) & 1;
    const auto e = oracle_decode(y, c);
    ASSERT_TRUE(e.has_value());
    EXPECT_EQ(vanishes(t1, y, c), e->weight() == 1) << bits;
    if (vanishes(t1, y, c)) ++accepted;
  }
  EXPECT_EQ(accepted, 7u * 16u);
}

TEST(WeightCriteria, ZeroWeight) {
  const auto t0 = zero_weight_criteria(7, std::vector<unsigned>{1, 2, 4});
  EXPECT_EQ(t0.size(), 3u);
  EXPECT_EQ(to_string(t0[0]), "S1");
  EXPECT_EQ(artifacts("hamming7").formulas.weights[0].criteria, t0);
}

TEST(WeightCriteria, BchWeightTwo) {
  const auto& c = code("bch15");
  const auto& t2 = artifacts("bch15").formulas.weights[2].criteria;
  for_each_pattern(15, 2, [&](const ErrorPattern& e) {
    EXPECT_TRUE(vanishes(t2, e.to_word(15), c)) << e.to_string();
    return true;
  });
  for_each_pattern(15, 1, [&](const ErrorPattern& e) {
    EXPECT_FALSE(vanishes(t2, e.to_word(15), c)) << e.to_string();
    return true;
  });
}

TEST(SigmaFormulas, Examples) {
  EXPECT_EQ(to_string(artifacts("hamming7").formulas.weights[1].sigma[0]), "S1");
  const auto& bch = artifacts("bch15").formulas.weights[2];
  EXPECT_EQ(to_string(bch.sigma[0]), "S1");
  const auto& c = code("bch15");
  unsigned count = 0;
  for_each_pattern(15, 2, [&](const ErrorPattern& e) {
    ++count;
    std::vector<std::optional<FieldElement>> table(15);
    for (const auto& [i, s] : syndromes(e.to_word(15), c)) table[i] = s;
    EXPECT_EQ(evaluate(bch.sigma[1], table, c.field()), locator_from_pattern(e, c).coeffs[2]) << e.to_string();
    return true;
  });
  EXPECT_EQ(count, 105u);
}

TEST(SigmaFormulas, StructuralShape) {
  for (const char* name : {"hamming7", "bch15", "qr17"}) {
    const auto& result = artifacts(name);
    const auto& q = code(name).defining_set();
    for (std::size_t k = 0; k < result.bases.size(); ++k) {
      const unsigned w = static_cast<unsigned>(k + 1);
      const auto& g = result.bases[k];
      for (unsigned i = 1; i <= w; ++i) {
        Monomial lead(g.order.universe()->size());
        lead.set(g.order.universe()->index_of(Variable::sigma(i)), 1);
        unsigned led = 0;
        for (const auto& f : g.polys)
          if (leading_monomial(f, g.order) == lead) ++led;
        EXPECT_EQ(led, 1u) << name << " w=" << w << " i=" << i;
      }
      EXPECT_NO_THROW(sigma_formulas(g, q, w));
    }
  }
}

TEST(SigmaFormulas, RejectsNonReducedAndMissing) {
  const auto& g = artifacts("hamming7").bases[0];
  GroebnerBasis copy = g;
  copy.reduced = false;
  EXPECT_THROW(sigma_formulas(copy, code("hamming7").defining_set(), 1), InvalidArgument);
  // Hamming at w = 2 has no sigma_2 + q relation (beyond the radius).
  const auto sat = saturated_newton_ideal(7, 2, code("hamming7").defining_set());
  EXPECT_THROW(sigma_formulas(sat.full, code("hamming7").defining_set(), 2), FormulaMissing);
}

TEST(SigmaRelations, FieldEquationRoute) {
  const auto& ham = artifacts("hamming7", Variant::FieldEq).formulas;
  ASSERT_EQ(ham.weights[1].relations.size(), 1u);
  bool found = false;
  for (const auto& r : ham.weights[1].relations[0]) found = found || (r.p.is_one() && to_string(r.q) == "S1");
  EXPECT_TRUE(found);

  const auto& bch = artifacts("bch15", Variant::FieldEq);
  for (const auto& wf : bch.formulas.weights)
    for (const auto& group : wf.relations)
      for (std::size_t k = 1; k < group.size(); ++k) EXPECT_LE(group[k - 1].p.term_count(), group[k].p.term_count());
  const auto& c = code("bch15");
  const auto& sigma2 = bch.formulas.weights[2].relations[1];
  for_each_pattern(15, 2, [&](const ErrorPattern& e) {
    std::vector<std::optional<FieldElement>> table(15);
    for (const auto& [i, s] : syndromes(e.to_word(15), c)) table[i] = s;
    bool usable = false;
    for (const auto& r : sigma2) usable = usable || !evaluate(r.p, table, c.field()).is_zero();
    EXPECT_TRUE(usable) << e.to_string();
    return true;
  });
}

TEST(Serialization, RoundTrip) {
  for (auto variant : {Variant::Saturated, Variant::FieldEq}) {
    const auto& fs = artifacts("hamming7", variant).formulas;
    const std::string text = serialize(fs);
    const FormulaSet back = deserialize(text);
    EXPECT_EQ(serialize(back), text);
    EXPECT_EQ(back.code_hash, fs.code_hash);
    EXPECT_EQ(back.weights.size(), fs.weights.size());
    for (std::size_t w = 0; w < fs.weights.size(); ++w) {
      EXPECT_EQ(back.weights[w].criteria, fs.weights[w].criteria);
      EXPECT_EQ(back.weights[w].sigma, fs.weights[w].sigma);
      EXPECT_EQ(back.weights[w].relations, fs.weights[w].relations);
    }
  }
  const auto& bch = artifacts("bch15").formulas;
  EXPECT_EQ(serialize(deserialize(serialize(bch))), serialize(bch));
}

TEST(Serialization, EmptyCriteriaAndStamp) {
  FormulaSet fs = artifacts("hamming7").formulas;
  fs.weights[1].criteria.clear();
  fs.stamp = "2026-01-01";
  const FormulaSet back = deserialize(serialize(fs));
  EXPECT_TRUE(back.weights[1].criteria.empty());
  EXPECT_EQ(back.stamp, "2026-01-01");
}

TEST(Serialization, Errors) {
  const std::string good = serialize(artifacts("hamming7").formulas);
  auto corrupt = [&](const std::string& from, const std::string& to) {
    std::string text = good;
    const auto at = text.find(from);
    EXPECT_NE(at, std::string::npos) << from;
    text.replace(at, from.size(), to);
    return text;
  };
  try {
    deserialize(corrupt("Q: i=1: S1", "Q: i=1: S99"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_GT(e.line(), 1u);
    EXPECT_EQ(e.column(), 9u);
  }
  EXPECT_THROW(deserialize(corrupt("Q: i=1: S1", "Q: i=1: S3")), ParseError);  // S3 is not in Q
  EXPECT_THROW(deserialize(corrupt("version=1", "version=2")), ParseError);
  EXPECT_THROW(deserialize(corrupt("Q: i=1: S1", "Q: i=2: S1")), ParseError);
  EXPECT_THROW(deserialize(corrupt("[w=1]", "[w=2]")), ParseError);
  EXPECT_THROW(deserialize(corrupt("w_max=1", "w_max=2")), ParseError);
  EXPECT_THROW(deserialize(""), ParseError);
}
