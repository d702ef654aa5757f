#include <clopen/ultrafilter_space.hpp>

#include <gtest/gtest.h>

#include <string>
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

TEST(ClopenAlgebra, AtomsAreTheComponents) {
  ClopenAlgebra co = ClopenAlgebra::of(two_blobs());
  EXPECT_EQ(co.algebra.atom_count(), 2u);
  EXPECT_EQ(co.algebra.atoms[0], "a+b");
  EXPECT_EQ(co.algebra.atoms[1], "c+d");
  ClopenAlgebra conn = ClopenAlgebra::of(sierpinski());
  EXPECT_EQ(conn.algebra.atom_count(), 1u);
  ClopenAlgebra disc = ClopenAlgebra::of(FiniteSpace::discrete({"a", "b", "c"}));
  EXPECT_EQ(disc.algebra.atom_count(), 3u);
}

TEST(ClopenAlgebra, ElementPointTranslation) {
  ClopenAlgebra co = ClopenAlgebra::of(two_blobs());
  for (Element a : co.algebra.carrier())
    EXPECT_EQ(co.to_element(co.to_points(a)), a);
  EXPECT_EQ(co.to_points(co.algebra.atom(1)), Mask{0b1100});
  EXPECT_THROW(co.to_element(0b0001), Error);
  EXPECT_EQ(co.component_of(2), 1u);
  EXPECT_EQ(co.carrier_point_masks().size(), 4u);
}

TEST(Principal, CollectsTheClopenNeighbourhoods) {
  FiniteSpace x = two_blobs();
  ClopenAlgebra co = ClopenAlgebra::of(x);
  Ultrafilter at_c = principal(x, "c");
  EXPECT_TRUE(is_ultrafilter(at_c.filter));
  EXPECT_EQ(co.to_points(at_c.minimum), Mask{0b1100});
  EXPECT_TRUE(at_c.filter.contains(co.to_element(0b1100)));
  EXPECT_FALSE(at_c.filter.contains(co.to_element(0b0011)));
  EXPECT_EQ(principal(x, "c").filter, principal(x, "d").filter);
  EXPECT_THROW(principal(co, 9), Error);
}

TEST(UltrafilterSpace, OnePointPerComponent) {
  UltrafilterSpace u = build_uf(two_blobs());
  EXPECT_EQ(u.ultrafilters.size(), 2u);
  EXPECT_TRUE(u.realized.is_discrete());
  EXPECT_EQ(build_uf(sierpinski()).ultrafilters.size(), 1u);
  EXPECT_EQ(build_uf(FiniteSpace::discrete({})).ultrafilters.size(), 0u);
}

TEST(UltrafilterSpace, BasicOpensAreUltrafilterMemberships) {
  UltrafilterSpace u = build_uf(two_blobs());
  for (Element a : u.co.algebra.carrier()) {
    Mask expected = 0;
    for (std::size_t i = 0; i < u.ultrafilters.size(); ++i)
      if (u.ultrafilters[i].filter.contains(a)) expected |= Mask{1} << i;
    EXPECT_EQ(u.basic_open(a), expected);
  }
}

TEST(UltrafilterSpace, ClusterPointsOfPrincipalFilters) {
  FiniteSpace x = sierpinski();
  ClopenAlgebra co = ClopenAlgebra::of(x);
  EXPECT_EQ(cluster_points(co, principal(x, "a")), Mask{0b11});
  FiniteSpace d = FiniteSpace::discrete({"a", "b"});
  ClopenAlgebra dco = ClopenAlgebra::of(d);
  EXPECT_EQ(cluster_points(dco, principal(d, "a")), Mask{0b01});
}

TEST(UltrafilterSpace, PushforwardAlongAQuotient) {
  FiniteSpace d = FiniteSpace::discrete({"a", "b", "c"});
  FiniteSpace two = FiniteSpace::discrete({"x", "y"});
  ContinuousMap f = ContinuousMap::from_names(
      d, two, {{"a", "x"}, {"b", "x"}, {"c", "y"}});
  Ultrafilter image = pushforward(f, principal(d, "b"));
  EXPECT_EQ(image.filter, principal(two, "x").filter);
}

TEST(UfMap, FactorsThroughThePrincipalMap) {
  FiniteSpace s = sierpinski();
  FiniteSpace two = FiniteSpace::discrete({"x", "y"});
  ContinuousMap f = ContinuousMap::from_names(s, two, {{"a", "x"}, {"b", "x"}});
  UfExtension ext = uf_map(f);
  EXPECT_TRUE(check_continuous(ext.map));
  for (std::size_t i = 0; i < s.size(); ++i)
    EXPECT_EQ(ext.map.apply(ext.source.principal_assignment[i]), f.apply(i));
}

TEST(UfMap, RejectsNonContinuousAndNonDiscreteTargets) {
  FiniteSpace s = sierpinski();
  FiniteSpace two = FiniteSpace::discrete({"x", "y"});
  ContinuousMap broken = ContinuousMap::from_names(s, two, {{"a", "x"}, {"b", "y"}});
  EXPECT_THROW(uf_map(broken), Error);
  ContinuousMap into_sierpinski = ContinuousMap::identity(s);
  EXPECT_THROW(uf_map(into_sierpinski), Error);
}

TEST(Criterion, DiscreteSpacesPassEverything) {
  CriterionReport r = criterion_report(FiniteSpace::discrete({"a", "b", "c"}));
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.compact);
  EXPECT_TRUE(r.hausdorff);
  EXPECT_TRUE(r.td_compact_hausdorff);
  EXPECT_TRUE(r.principal_homeomorphism);
  std::vector<std::size_t> ones{1, 1, 1};
  EXPECT_EQ(r.cluster_counts, ones);
}

TEST(Criterion, SierpinskiFailsSeparation) {
  CriterionReport r = criterion_report(sierpinski());
  EXPECT_FALSE(r.applicable);
  EXPECT_TRUE(r.compact);
  EXPECT_FALSE(r.hausdorff);
  EXPECT_FALSE(r.principal_injective);
  EXPECT_TRUE(r.principal_surjective);
  EXPECT_FALSE(r.principal_homeomorphism);
  std::vector<std::size_t> counts{2};
  EXPECT_EQ(r.cluster_counts, counts);
}

TEST(Criterion, IndiscreteSpacePassesTheBasisPrecondition) {
  CriterionReport r = criterion_report(FiniteSpace::indiscrete({"a", "b"}));
  EXPECT_TRUE(r.applicable);
  EXPECT_FALSE(r.td_compact_hausdorff);
}

TEST(Criterion, BuildingTwiceChangesNothing) {
  EXPECT_TRUE(check_idempotent(sierpinski()));
  EXPECT_TRUE(check_idempotent(two_blobs()));
  EXPECT_TRUE(check_idempotent(FiniteSpace::indiscrete({"a", "b", "c"})));
  EXPECT_TRUE(check_idempotent(FiniteSpace::discrete({})));
}
