#include <clopen/function_algebra.hpp>

#include <gtest/gtest.h>

#include <vector>

using namespace clopen;

namespace {

FiniteSpace sierpinski() {
  return FiniteSpace({"a", "b"}, {0b00, 0b10, 0b11});
}

BoundedFunction dyadic_example() {
  FiniteSpace d = FiniteSpace::discrete({"a", "b", "c"});
  ValuedField q2 = ValuedField::padic(2);
  return BoundedFunction(d, q2,
                         {Scalar::from_int(q2, 1), Scalar::from_int(q2, 2),
                          Scalar::from_int(q2, 4)});
}

}  // namespace

TEST(BoundedFunction, MustBeConstantOnComponents) {
  ValuedField q2 = ValuedField::padic(2);
  FiniteSpace s = sierpinski();
  EXPECT_THROW(
      BoundedFunction(s, q2, {Scalar::from_int(q2, 1), Scalar::from_int(q2, 2)}),
      Error);
  BoundedFunction ok(s, q2, {Scalar::from_int(q2, 5), Scalar::from_int(q2, 5)});
  EXPECT_EQ(ok.at("a"), ok.at("b"));
  EXPECT_THROW(BoundedFunction(s, q2, {Scalar::from_int(q2, 1)}), Error);
}

TEST(BoundedFunction, IndicatorNeedsAClopenSupport) {
  ValuedField q2 = ValuedField::padic(2);
  FiniteSpace s = sierpinski();
  EXPECT_THROW(BoundedFunction::indicator(s, 0b10, q2), Error);
  BoundedFunction whole = BoundedFunction::indicator(s, 0b11, q2);
  EXPECT_EQ(whole, BoundedFunction::constant(s, Scalar::one(q2)));
}

TEST(BoundedFunction, ZeroSetAndArithmetic) {
  ValuedField q = ValuedField::trivial_q();
  FiniteSpace d = FiniteSpace::discrete({"a", "b"});
  BoundedFunction f(d, q, {Scalar::from_int(q, 3), Scalar::zero(q)});
  BoundedFunction g(d, q, {Scalar::from_int(q, 1), Scalar::from_int(q, 2)});
  EXPECT_EQ(f.zero_set(), Mask{0b10});
  EXPECT_EQ((f + g).at("a"), Scalar::from_int(q, 4));
  EXPECT_EQ((f - g).at("b"), Scalar::from_int(q, -2));
  EXPECT_EQ((f * g).at("b"), Scalar::zero(q));
  EXPECT_EQ((Scalar::from_int(q, 2) * g).at("b"), Scalar::from_int(q, 4));
  BoundedFunction h(FiniteSpace::discrete({"z"}), q, {Scalar::one(q)});
  EXPECT_THROW(f + h, Error);
}

TEST(Norms, SupNormOverAllPoints) {
  BoundedFunction f = dyadic_example();
  EXPECT_EQ(sup_norm(f), AbsValue::one());
  BoundedFunction empty(FiniteSpace::discrete({}), f.field, {});
  EXPECT_EQ(sup_norm(empty), AbsValue::zero());
  EXPECT_EQ(algebraic_norm(f), sup_norm(f));
}

TEST(Norms, UltrafilterSeminormIsAttainedOnTheMinimum) {
  BoundedFunction f = dyadic_example();
  const FiniteSpace& d = f.space;
  EXPECT_EQ(uf_seminorm(f, principal(d, "a")), AbsValue::one());
  EXPECT_EQ(uf_seminorm(f, principal(d, "b")), AbsValue::power(2, -1));
  EXPECT_EQ(uf_seminorm(f, principal(d, "c")), AbsValue::power(2, -2));
}

TEST(Norms, SeminormIsMultiplicativeAndBounded) {
  BoundedFunction f = dyadic_example();
  const FiniteSpace& d = f.space;
  BoundedFunction g = f * f;
  for (const char* name : {"a", "b", "c"}) {
    Ultrafilter uf = principal(d, name);
    EXPECT_EQ(uf_seminorm(g, uf), uf_seminorm(f, uf) * uf_seminorm(f, uf));
    EXPECT_LE(uf_seminorm(f, uf), sup_norm(f));
  }
}

TEST(Ideal, MembershipIsVanishingOnTheZeroSet) {
  BoundedFunction f = dyadic_example();
  const FiniteSpace& d = f.space;
  const ValuedField& q2 = f.field;
  Ideal m_b = ideal_from_uf(d, q2, principal(d, "b"));
  EXPECT_TRUE(m_b.is_maximal());
  EXPECT_TRUE(m_b.is_prime());
  EXPECT_EQ(m_b.zero_mask, Mask{0b010});
  EXPECT_FALSE(m_b.contains(f));
  EXPECT_TRUE(m_b.contains(BoundedFunction::zero(d, q2)));
  EXPECT_TRUE(m_b.contains(BoundedFunction::indicator(d, 0b101, q2)));
}

TEST(Ideal, NonPrimeWhenTheZeroSetSplits) {
  FiniteSpace d = FiniteSpace::discrete({"a", "b", "c"});
  ValuedField q2 = ValuedField::padic(2);
  Ideal m(d, q2, {BoundedFunction::indicator(d, 0b100, q2)});
  EXPECT_EQ(m.zero_mask, Mask{0b011});
  EXPECT_FALSE(m.is_prime());
  BoundedFunction f = BoundedFunction::indicator(d, 0b001, q2);
  BoundedFunction g = BoundedFunction::indicator(d, 0b010, q2);
  EXPECT_TRUE(m.contains(f * g));
  EXPECT_FALSE(m.contains(f));
  EXPECT_FALSE(m.contains(g));
  EXPECT_THROW(uf_from_ideal(m), Error);
}

TEST(Ideal, RoundtripsWithUltrafilters) {
  FiniteSpace x({"a", "b", "c", "d"}, {0b0000, 0b0011, 0b1100, 0b1111});
  ValuedField f2 = ValuedField::trivial_fq(2);
  for (const char* name : {"a", "c"}) {
    Ultrafilter uf = principal(x, name);
    Ideal m = ideal_from_uf(x, f2, uf);
    Ultrafilter back = uf_from_ideal(m);
    EXPECT_EQ(back.filter, uf.filter);
    EXPECT_EQ(ideal_from_uf(x, f2, back).zero_mask, m.zero_mask);
  }
}

TEST(Ideal, ClopensOutsideArePreciselyTheUltrafilterMembers) {
  FiniteSpace d = FiniteSpace::discrete({"a", "b", "c"});
  ValuedField q2 = ValuedField::padic(2);
  Ultrafilter uf = principal(d, "b");
  Ideal m = ideal_from_uf(d, q2, uf);
  EXPECT_EQ(clopens_outside(m), uf.filter.elements);
}

TEST(Ideal, OnePerComponentInOrder) {
  FiniteSpace x({"a", "b", "c", "d"}, {0b0000, 0b0011, 0b1100, 0b1111});
  std::vector<Ideal> ideals = enumerate_max_ideals(x, ValuedField::trivial_q());
  ASSERT_EQ(ideals.size(), 2u);
  EXPECT_EQ(ideals[0].zero_mask, Mask{0b0011});
  EXPECT_EQ(ideals[1].zero_mask, Mask{0b1100});
  EXPECT_TRUE(
      enumerate_max_ideals(FiniteSpace::discrete({}), ValuedField::trivial_q())
          .empty());
}

TEST(Ideal, EmptySpaceHasNoMaximalIdeals) {
  FiniteSpace empty = FiniteSpace::discrete({});
  FiniteSpace one = FiniteSpace::discrete({"a"});
  ValuedField f2 = ValuedField::trivial_fq(2);
  Ultrafilter uf = principal(one, "a");
  EXPECT_THROW(ideal_from_uf(empty, f2, uf), Error);
}

TEST(QuotientNorm, EqualsTheSeminormOfTheCorrespondingUltrafilter) {
  BoundedFunction f = dyadic_example();
  const FiniteSpace& d = f.space;
  Ideal m_b = ideal_from_uf(d, f.field, principal(d, "b"));
  EXPECT_EQ(quotient_norm(f, m_b), AbsValue::power(2, -1));
  EXPECT_EQ(quotient_norm(f, m_b), uf_seminorm(f, uf_from_ideal(m_b)));
  Ideal split(d, f.field, {BoundedFunction::indicator(d, 0b100, f.field)});
  EXPECT_THROW(quotient_norm(f, split), Error);
}

TEST(Orthogonality, ConstantsSplitOffEveryMaximalIdeal) {
  FiniteSpace d = FiniteSpace::discrete({"a", "b"});
  ValuedField q2 = ValuedField::padic(2);
  Ideal m_a = ideal_from_uf(d, q2, principal(d, "a"));
  BoundedFunction g(d, q2, {Scalar::zero(q2), Scalar::from_int(q2, 2)});
  EXPECT_TRUE(orthogonal_decomposition_check(Scalar::one(q2), g, m_a));
  EXPECT_TRUE(orthogonal_decomposition_check(Scalar::from_int(q2, 4), g, m_a));
  EXPECT_TRUE(orthogonal_decomposition_check(Scalar::zero(q2), g, m_a));
  BoundedFunction outside = BoundedFunction::constant(d, Scalar::one(q2));
  EXPECT_THROW(orthogonal_decomposition_check(Scalar::one(q2), outside, m_a),
               Error);
}

TEST(Spectrum, PointsAreTheUltrafilterSeminorms) {
  BoundedFunction f = dyadic_example();
  const FiniteSpace& d = f.space;
  std::vector<BerkovichPoint> pts = spectrum(d, f.field);
  ASSERT_EQ(pts.size(), 3u);
  UltrafilterSpace u = build_uf(d);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EXPECT_EQ(pts[i].uf.filter, u.ultrafilters[i].filter);
    EXPECT_EQ(pts[i].evaluate(f), uf_seminorm(f, u.ultrafilters[i]));
  }
  EXPECT_EQ(pts[1].evaluate(f), AbsValue::power(2, -1));
  EXPECT_TRUE(spectrum(FiniteSpace::discrete({}), f.field).empty());
}
