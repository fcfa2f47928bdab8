#include <gtest/gtest.h>

#include <sstream>

#include "gbdecode/codec.hpp"
#include "gbdecode/error.hpp"
#include "gbdecode/ideals.hpp"
#include "support.hpp"

using namespace gbdecode;

namespace {

const std::vector<unsigned> kHammingQ = {1, 2, 4};

std::vector<std::string> texts(const std::vector<Poly2>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

Poly2 P(const std::string& text, unsigned n, unsigned w) { return parse_poly(text, Universe::decoding(n, w)); }

// (sigma, S) of a binary error as an assignment over Universe::decoding(n, w).
Assignment point(const ErrorPattern& e, const CyclicCode& code, unsigned w) {
  Assignment at;
  const auto s = fourier_transform(e.to_word(code.length()), code.alpha());
  for (unsigned i = 0; i < code.length(); ++i) at.emplace(Variable::syndrome(i), s[i]);
  const LocatorPoly sigma = locator_from_pattern(e, code);
  for (unsigned i = 1; i <= w; ++i)
    at.emplace(Variable::sigma(i), i < sigma.coeffs.size() ? sigma.coeffs[i] : code.field().zero());
  return at;
}

}  // namespace

TEST(NewtonGenerators, Examples) {
  const auto g = newton_generators(7, 1);
  ASSERT_EQ(g.size(), 8u);
  EXPECT_EQ(g[0], P("S1 + s1", 7, 1));
  for (unsigned i = 2; i <= 8; ++i)
    EXPECT_EQ(g[i - 1], P("S" + std::to_string(i % 7) + " + s1*S" + std::to_string((i - 1) % 7), 7, 1)) << i;
  EXPECT_EQ(newton_generators(7, 2)[1], P("S2 + s1*S1", 7, 2));
  EXPECT_EQ(newton_generators(15, 2).size(), 17u);
  EXPECT_THROW(newton_generators(7, 7), InvalidArgument);
  EXPECT_THROW(newton_generators(7, 0), InvalidArgument);
}

TEST(NewtonGenerators, AffineInEachSigma) {
  for (unsigned w = 1; w <= 3; ++w)
    for (const auto& g : newton_generators(7, w)) {
      EXPECT_FALSE(g.is_zero());
      for (unsigned i = 1; i <= w; ++i) EXPECT_LE(g.degree_in(Variable::sigma(i)), 1u);
    }
}

TEST(NewtonGenerators, VanishOnErrorsOfWeightW) {
  const auto& code = fixture::code("hamming7");
  for (unsigned w = 1; w <= 3; ++w) {
    const auto gens = newton_generators(7, w);
    for_each_pattern(7, w, [&](const ErrorPattern& e) {
      const Assignment at = point(e, code, w);
      for (const auto& g : gens) EXPECT_TRUE(evaluate(g, at, code.field()).is_zero()) << e.to_string();
      return true;
    });
  }
}

TEST(FieldEquations, Shapes) {
  std::ostringstream warn;
  const auto f7 = field_equations(7, 2, 3, &warn);
  ASSERT_EQ(f7.size(), 9u);
  EXPECT_EQ(f7[0], P("S0^8 + S0", 7, 2));
  EXPECT_EQ(f7[8], P("s2^8 + s2", 7, 2));
  EXPECT_TRUE(warn.str().empty());
  const auto f15 = field_equations(15, 2, 4, &warn);
  EXPECT_EQ(f15[3].degree_in(Variable::syndrome(3)), 16u);
  EXPECT_TRUE(warn.str().empty());
  field_equations(41, 1, splitting_field_degree(41), &warn);
  EXPECT_NE(warn.str().find("1048576"), std::string::npos) << warn.str();
}

TEST(SigmaIdeal, ElementarySymmetric) {
  EXPECT_EQ(texts(sigma_ideal(7, 1)), (std::vector<std::string>{"s1 + Z1"}));
  EXPECT_EQ(sigma_ideal(7, 2)[0], P("s1 + Z1 + Z2", 7, 2));
  EXPECT_EQ(sigma_ideal(7, 2)[1], P("s2 + Z1*Z2", 7, 2));
  EXPECT_EQ(sigma_ideal(7, 3)[1], P("s2 + Z1*Z2 + Z1*Z3 + Z2*Z3", 7, 3));
}

TEST(PowerSumIdeal, Examples) {
  EXPECT_EQ(power_sum_ideal(7, 1)[0], P("S1 + Z1", 7, 1));
  EXPECT_EQ(power_sum_ideal(7, 2)[2], P("S3 + Z1^3 + Z2^3", 7, 2));
  EXPECT_EQ(power_sum_ideal(7, 1)[7], P("S1 + Z1^8", 7, 1));
  EXPECT_EQ(power_sum_ideal(7, 1).size(), 8u);
}

TEST(Delta, Examples) {
  EXPECT_EQ(delta_poly(7, 1), P("Z1", 7, 1));
  EXPECT_EQ(delta_poly(7, 2), P("Z1^2*Z2 + Z1*Z2^2", 7, 2));
  auto f = Field::create(3);
  for (const auto& a : fixture::all_elements(*f))
    EXPECT_TRUE(evaluate(delta_poly(7, 2), Assignment{{Variable::locator(1), a}, {Variable::locator(2), a}}, *f).is_zero());
}

TEST(SaturatedIdeal, HammingWeightOne) {
  const auto sat = saturated_newton_ideal(7, 1, kHammingQ);
  const auto u = Universe::decoding(7, 1);
  const GroebnerBasis elim{sat.basis, sat.full.order, true, {}};
  EXPECT_TRUE(normal_form(P("s1 + S1", 7, 1), elim).is_zero());
  EXPECT_TRUE(normal_form(P("S1^8 + S1", 7, 1), elim).is_zero());
  for (const auto& f : sat.basis) EXPECT_TRUE(f.uses_only(is_sigma_or_syndrome));

  // S = 0 (the zero word) is excluded: some basis element is nonzero there.
  auto field = Field::create(3);
  Assignment zero;
  for (const auto& v : u->variables())
    if (is_sigma_or_syndrome(v)) zero.emplace(v, field->zero());
  bool excluded = false;
  for (const auto& f : sat.basis) excluded = excluded || !evaluate(f, zero, *field).is_zero();
  EXPECT_TRUE(excluded);
}

TEST(SaturatedIdeal, VanishesOnWeightTwoWords) {
  const auto& code = fixture::code("hamming7");
  const auto sat = saturated_newton_ideal(7, 2, kHammingQ);
  unsigned count = 0;
  for_each_pattern(7, 2, [&](const ErrorPattern& e) {
    ++count;
    const Assignment at = point(e, code, 2);
    for (const auto& f : sat.basis) EXPECT_TRUE(evaluate(f, at, code.field()).is_zero()) << e.to_string();
    return true;
  });
  EXPECT_EQ(count, 21u);
}

TEST(SaturatedIdeal, BlockOrderGivesSameEliminationIdeal) {
  const std::vector<unsigned> q = {1, 2, 3, 4, 6, 8, 9, 12};
  const auto lex = saturated_newton_ideal(15, 2, q);
  SaturationOptions options;
  options.block_order = true;
  const auto block = saturated_newton_ideal(15, 2, q, options);
  const GroebnerBasis a{lex.basis, lex.full.order, true, {}};
  const GroebnerBasis b{block.basis, block.full.order, true, {}};
  for (const auto& f : block.basis) EXPECT_TRUE(normal_form(f.rebase(a.order.universe()), a).is_zero());
  for (const auto& f : lex.basis) EXPECT_TRUE(normal_form(f, b).is_zero());
}
