#include <clopen/compactification.hpp>
#include <clopen/enumeration.hpp>

#include <gtest/gtest.h>

#include <vector>

using namespace clopen;

namespace {

FiniteSpace sierpinski() {
  return FiniteSpace({"a", "b"}, {0b00, 0b10, 0b11});
}

FiniteSpace two_blobs() {
  return FiniteSpace({"a", "b", "c", "d"}, {0b0000, 0b0011, 0b1100, 0b1111});
}

}  // namespace

TEST(Embedding, DiscreteSpacesEmbedHomeomorphically) {
  EvaluationEmbedding e =
      sc_embed(FiniteSpace::discrete({"a", "b"}), ValuedField::trivial_fq(2));
  EXPECT_TRUE(e.injective);
  EXPECT_TRUE(e.continuous);
  EXPECT_TRUE(e.open_onto_image);
  EXPECT_TRUE(e.homeomorphism);
  EXPECT_EQ(e.coordinates.size(), 4u);
  EXPECT_TRUE(check_continuous(e.map));
}

TEST(Embedding, ConnectedSpacesCollapse) {
  EvaluationEmbedding e = sc_embed(sierpinski(), ValuedField::padic(2));
  EXPECT_FALSE(e.injective);
  EXPECT_FALSE(e.homeomorphism);
  EXPECT_TRUE(e.continuous);
  EXPECT_TRUE(e.open_onto_image);
  EXPECT_EQ(e.coordinates.size(), 2u);
  EXPECT_EQ(e.image_space.size(), 1u);
  EXPECT_EQ(e.fingerprints[0], e.fingerprints[1]);
}

TEST(Extension, RestrictsToTheOriginalFunction) {
  FiniteSpace d = FiniteSpace::discrete({"a", "b", "c"});
  ValuedField q2 = ValuedField::padic(2);
  BoundedFunction f(d, q2,
                    {Scalar::from_int(q2, 1), Scalar::from_int(q2, 2),
                     Scalar::from_int(q2, 4)});
  UltrafilterSpace u = build_uf(d);
  BoundedFunction ext = extend_function(u, f);
  for (std::size_t i = 0; i < d.size(); ++i)
    EXPECT_EQ(ext.values[u.principal_assignment[i]], f.values[i]);
  EXPECT_EQ(sup_norm(ext), sup_norm(f));
}

TEST(Extension, CollapsedComponentsCarryTheirConstant) {
  FiniteSpace s = sierpinski();
  ValuedField q = ValuedField::trivial_q();
  BoundedFunction f = BoundedFunction::constant(s, Scalar::from_int(q, 5));
  UltrafilterSpace u = build_uf(s);
  BoundedFunction ext = extend_function(u, f);
  ASSERT_EQ(ext.values.size(), 1u);
  EXPECT_EQ(ext.values[0], Scalar::from_int(q, 5));
}

TEST(Extension, EmptySpaceExtendsToTheEmptyFunction) {
  FiniteSpace empty = FiniteSpace::discrete({});
  ValuedField q2 = ValuedField::padic(2);
  BoundedFunction f(empty, q2, {});
  BoundedFunction ext = extend_function(build_uf(empty), f);
  EXPECT_TRUE(ext.values.empty());
}

TEST(Extension, WorksOverEveryCatalogueKind) {
  FiniteSpace d = FiniteSpace::discrete({"a", "b"});
  for (const ValuedField& k :
       {ValuedField::trivial_fq(2), ValuedField::trivial_fq(4),
        ValuedField::trivial_q(), ValuedField::trivial_qi(),
        ValuedField::padic(3)}) {
    BoundedFunction f(d, k, {Scalar::one(k), Scalar::zero(k)});
    BoundedFunction ext = extend_function(build_uf(d), f);
    EXPECT_EQ(sup_norm(ext), sup_norm(f)) << k.describe();
  }
}

TEST(Separation, IndicatorsSeparateTheComponents) {
  FiniteSpace x = two_blobs();
  ValuedField f2 = ValuedField::trivial_fq(2);
  SeparationResult sep =
      separation_quotient(x, {BoundedFunction::indicator(x, 0b0011, f2)});
  std::vector<Mask> expected{0b0011, 0b1100};
  EXPECT_EQ(sep.partition.blocks, expected);
  EXPECT_TRUE(check_continuous(sep.projection));
}

TEST(Separation, NoGeneratorsMeansNoSeparation) {
  FiniteSpace x = two_blobs();
  SeparationResult sep = separation_quotient(x, {});
  ASSERT_EQ(sep.partition.blocks.size(), 1u);
  EXPECT_EQ(sep.space.size(), 1u);
}

TEST(Separation, ClosureIsConsistent) {
  FiniteSpace x = two_blobs();
  ValuedField q2 = ValuedField::padic(2);
  EXPECT_TRUE(separation_closure_consistent(
      x, {BoundedFunction::indicator(x, 0b1100, q2)}, q2));
  EXPECT_TRUE(separation_closure_consistent(x, {}, q2));
}

TEST(Gelfand, RoundtripsEveryPartitionOfASmallDiscreteSpace) {
  FiniteSpace d = FiniteSpace::discrete({"a", "b", "c"});
  ValuedField f2 = ValuedField::trivial_fq(2);
  std::vector<Partition> parts = all_partitions(3);
  ASSERT_EQ(parts.size(), 5u);
  for (const Partition& p : parts) {
    GelfandRoundtrip r = gelfand_roundtrip(d, p, f2);
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.recovered, p);
    EXPECT_EQ(r.generators.size(), p.blocks.size());
  }
}

TEST(Gelfand, RequiresADiscreteSpace) {
  ValuedField f2 = ValuedField::trivial_fq(2);
  EXPECT_THROW(gelfand_roundtrip(sierpinski(), Partition(2, {0b11}), f2),
               Error);
}

TEST(Approximation, WorkedDyadicExample) {
  FiniteSpace d = FiniteSpace::discrete({"a", "b", "c", "d"});
  ValuedField q2 = ValuedField::padic(2);
  BoundedFunction f(d, q2,
                    {Scalar::from_int(q2, 1), Scalar::from_int(q2, 3),
                     Scalar::from_int(q2, 4), Scalar::from_int(q2, 12)});
  ApproxResult res = locally_constant_approx(f, AbsValue::one());
  std::vector<Mask> expected{0b0011, 0b1100};
  EXPECT_EQ(res.blocks.blocks, expected);
  EXPECT_EQ(res.g.values[0], Scalar::from_int(q2, 1));
  EXPECT_EQ(res.g.values[1], Scalar::from_int(q2, 1));
  EXPECT_EQ(res.g.values[2], Scalar::from_int(q2, 4));
  EXPECT_EQ(res.g.values[3], Scalar::from_int(q2, 4));
  EXPECT_EQ(sup_norm(f - res.g), AbsValue::power(2, -1));
  EXPECT_LE(sup_norm(res.g), sup_norm(f));
}

TEST(Approximation, TinyRadiusReproducesTheFunction) {
  FiniteSpace d = FiniteSpace::discrete({"a", "b"});
  ValuedField q2 = ValuedField::padic(2);
  BoundedFunction f(d, q2, {Scalar::from_int(q2, 1), Scalar::from_int(q2, 2)});
  ApproxResult res = locally_constant_approx(f, AbsValue::power(2, -5));
  EXPECT_EQ(res.g, f);
  EXPECT_EQ(res.blocks.blocks.size(), 2u);
  EXPECT_THROW(locally_constant_approx(f, AbsValue::zero()), Error);
}

TEST(Approximation, HugeRadiusCollapsesEverything) {
  FiniteSpace d = FiniteSpace::discrete({"a", "b"});
  ValuedField q2 = ValuedField::padic(2);
  BoundedFunction f(d, q2, {Scalar::from_int(q2, 1), Scalar::from_int(q2, 2)});
  ApproxResult res = locally_constant_approx(f, AbsValue::power(2, 4));
  EXPECT_EQ(res.blocks.blocks.size(), 1u);
  EXPECT_LE(sup_norm(f - res.g), AbsValue::power(2, 4));
}

TEST(Idempotents, LevelSetsRebuildTheFunction) {
  FiniteSpace d = FiniteSpace::discrete({"a", "b", "c"});
  ValuedField q2 = ValuedField::padic(2);
  BoundedFunction f(d, q2,
                    {Scalar::from_int(q2, 1), Scalar::from_int(q2, 2),
                     Scalar::from_int(q2, 4)});
  IdempotentWitness w = idempotent_decomposition(f);
  ASSERT_EQ(w.terms.size(), 3u);
  EXPECT_EQ(w.terms[0].coefficient, Scalar::from_int(q2, 1));
  EXPECT_EQ(w.terms[0].support, Mask{0b001});
  EXPECT_EQ(w.terms[2].support, Mask{0b100});
}

TEST(Idempotents, ConstantsAndZero) {
  FiniteSpace d = FiniteSpace::discrete({"a", "b"});
  ValuedField q = ValuedField::trivial_q();
  BoundedFunction c = BoundedFunction::constant(d, Scalar::from_int(q, 5));
  IdempotentWitness w = idempotent_decomposition(c);
  ASSERT_EQ(w.terms.size(), 1u);
  EXPECT_EQ(w.terms[0].support, d.full());
  EXPECT_TRUE(idempotent_decomposition(BoundedFunction::zero(d, q)).terms.empty());
}

TEST(Tensor, CatalogueExtensionsOnly) {
  EXPECT_EQ(TensorExtension::named("F4/F2").name, "F4/F2");
  EXPECT_EQ(TensorExtension::named("Qi/Q").name, "Qi/Q");
  EXPECT_THROW(TensorExtension::named("F8/F2"), Error);
}

TEST(Tensor, EmbedAndDecomposeRoundtrip) {
  TensorExtension ext = TensorExtension::f4_over_f2();
  Scalar w2 = Scalar::from_poly(ext.field, {1, 1});
  auto coords = ext.decompose(w2);
  EXPECT_EQ(coords[0], Scalar::one(ext.base));
  EXPECT_EQ(coords[1], Scalar::one(ext.base));
  EXPECT_EQ(ext.embed(Scalar::one(ext.base)), Scalar::one(ext.field));
  TensorExtension qi = TensorExtension::qi_over_q();
  auto g = qi.decompose(Scalar::from_gaussian(qi.field, Rational(1, 2), 3));
  EXPECT_EQ(g[0], Scalar::from_rational(qi.base, Rational(1, 2)));
  EXPECT_EQ(g[1], Scalar::from_int(qi.base, 3));
}

TEST(Tensor, WorkedIsometryExample) {
  TensorExtension ext = TensorExtension::f4_over_f2();
  FiniteSpace d = FiniteSpace::discrete({"a", "b"});
  BoundedFunction g1(d, ext.base, {Scalar::one(ext.base), Scalar::zero(ext.base)});
  BoundedFunction g2(d, ext.base, {Scalar::zero(ext.base), Scalar::one(ext.base)});
  Scalar w = Scalar::from_poly(ext.field, {0, 1});
  TensorElement t(ext, d, {{Scalar::one(ext.field), g1}, {w, g2}});
  EXPECT_EQ(tensor_norm(t), AbsValue::one());
  EXPECT_EQ(sup_norm(apply_extension(t)), AbsValue::one());
  EXPECT_TRUE(tensor_isometry_check(t));
  EXPECT_EQ(apply_extension(t).values[1], w);
}

TEST(Tensor, CancellationBeatsTheNaiveBound) {
  TensorExtension ext = TensorExtension::f4_over_f2();
  FiniteSpace d = FiniteSpace::discrete({"a"});
  BoundedFunction g(d, ext.base, {Scalar::one(ext.base)});
  TensorElement t(ext, d, {{Scalar::one(ext.field), g}, {Scalar::one(ext.field), g}});
  EXPECT_EQ(tensor_norm(t), AbsValue::zero());
  EXPECT_EQ(tensor_naive_bound(t), AbsValue::one());
  EXPECT_TRUE(tensor_isometry_check(t));
}

TEST(Tensor, ConstantTimesOneKeepsItsMagnitude) {
  TensorExtension qi = TensorExtension::qi_over_q();
  FiniteSpace d = FiniteSpace::discrete({"a", "b"});
  BoundedFunction one = BoundedFunction::constant(d, Scalar::one(qi.base));
  Scalar c = Scalar::from_gaussian(qi.field, 1, 2);
  TensorElement t(qi, d, {{c, one}});
  EXPECT_EQ(tensor_norm(t), abs(c));
  EXPECT_EQ(sup_norm(apply_extension(t)), abs(c));
}

TEST(Tensor, RejectsMismatchedFields) {
  TensorExtension ext = TensorExtension::f4_over_f2();
  FiniteSpace d = FiniteSpace::discrete({"a"});
  BoundedFunction over_extension(d, ext.field, {Scalar::one(ext.field)});
  EXPECT_THROW(
      TensorElement(ext, d, {{Scalar::one(ext.field), over_extension}}), Error);
  BoundedFunction base_fn(d, ext.base, {Scalar::one(ext.base)});
  EXPECT_THROW(TensorElement(ext, d, {{Scalar::one(ext.base), base_fn}}), Error);
}
