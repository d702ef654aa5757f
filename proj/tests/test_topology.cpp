#include <clopen/enumeration.hpp>
#include <clopen/topology.hpp>

#include <gtest/gtest.h>

#include <random>
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

TEST(FiniteSpace, ValidationNamesTheOffendingPair) {
  try {
    FiniteSpace({"a", "b", "c"}, {0b000, 0b001, 0b010, 0b111});
    FAIL() << "union violation accepted";
  } catch (const Error& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("union"), std::string::npos) << msg;
    EXPECT_NE(msg.find("{a}"), std::string::npos) << msg;
    EXPECT_NE(msg.find("{b}"), std::string::npos) << msg;
  }
  try {
    FiniteSpace({"a", "b", "c"}, {0b000, 0b011, 0b110, 0b111});
    FAIL() << "intersection violation accepted";
  } catch (const Error& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("intersection"), std::string::npos) << msg;
  }
  EXPECT_THROW(FiniteSpace({"a"}, {0b1}), Error);
  EXPECT_THROW(FiniteSpace({"a"}, {0b0}), Error);
  EXPECT_THROW(FiniteSpace({"a", "a"}, {0b00, 0b11}), Error);
}

TEST(FiniteSpace, DiscreteAndIndiscrete) {
  FiniteSpace d = FiniteSpace::discrete({"a", "b", "c"});
  EXPECT_TRUE(d.is_discrete());
  EXPECT_EQ(d.opens.size(), 8u);
  FiniteSpace ind = FiniteSpace::indiscrete({"a", "b", "c"});
  EXPECT_FALSE(ind.is_discrete());
  EXPECT_EQ(ind.opens.size(), 2u);
  FiniteSpace empty = FiniteSpace::discrete({});
  EXPECT_TRUE(empty.is_discrete());
  EXPECT_EQ(empty.opens.size(), 1u);
}

TEST(FiniteSpace, FromPointSets) {
  FiniteSpace s = FiniteSpace::from_point_sets(
      {"a", "b"}, {{}, {"b"}, {"a", "b"}});
  EXPECT_EQ(s, sierpinski());
}

TEST(FiniteSpace, OpenAndClopenMembership) {
  FiniteSpace s = sierpinski();
  EXPECT_TRUE(s.is_open(0b10));
  EXPECT_FALSE(s.is_open(0b01));
  EXPECT_FALSE(s.is_clopen(0b10));
  EXPECT_TRUE(s.is_clopen(0b00));
  EXPECT_TRUE(s.is_clopen(0b11));
}

TEST(FiniteSpace, PointLookup) {
  FiniteSpace s = sierpinski();
  EXPECT_EQ(s.point_index("b"), 1u);
  EXPECT_THROW(s.point_index("z"), Error);
  EXPECT_EQ(s.point_set({"a", "b"}), Mask{0b11});
  EXPECT_EQ(s.set_name(0b10), "{b}");
}

TEST(FiniteSpace, ComponentsOfConnectedAndSplitSpaces) {
  EXPECT_EQ(sierpinski().component_masks(), std::vector<Mask>{0b11});
  std::vector<Mask> blobs{0b0011, 0b1100};
  EXPECT_EQ(two_blobs().component_masks(), blobs);
  std::vector<Mask> singletons{0b001, 0b010, 0b100};
  EXPECT_EQ(FiniteSpace::discrete({"a", "b", "c"}).component_masks(),
            singletons);
}

TEST(FiniteSpace, ClopensArePowerSetOfComponents) {
  std::vector<Mask> clopens = two_blobs().clopen_masks();
  std::vector<Mask> expected{0b0000, 0b0011, 0b1100, 0b1111};
  EXPECT_EQ(clopens, expected);
  EXPECT_EQ(sierpinski().clopen_masks().size(), 2u);
  EXPECT_EQ(FiniteSpace::discrete({"a", "b", "c"}).clopen_masks().size(), 8u);
}

TEST(FiniteSpace, GeneratedTopologyClosesTheBasis) {
  FiniteSpace s = generate_topology({"a", "b"}, {0b10});
  EXPECT_EQ(s, sierpinski());
  FiniteSpace d = generate_topology({"a", "b"}, {0b01, 0b10});
  EXPECT_TRUE(d.is_discrete());
}

TEST(ContinuousMap, ChecksAgainstTheTargetTopology) {
  FiniteSpace s = sierpinski();
  FiniteSpace two = FiniteSpace::discrete({"0", "1"});
  ContinuousMap nonconstant = ContinuousMap::from_names(
      s, two, {{"a", "0"}, {"b", "1"}});
  EXPECT_FALSE(check_continuous(nonconstant));
  ContinuousMap constant = ContinuousMap::from_names(
      s, two, {{"a", "0"}, {"b", "0"}});
  EXPECT_TRUE(check_continuous(constant));
  EXPECT_TRUE(check_continuous(ContinuousMap::identity(s)));
}

TEST(ContinuousMap, ImagesAndPreimages) {
  FiniteSpace s = sierpinski();
  FiniteSpace two = FiniteSpace::discrete({"0", "1"});
  ContinuousMap f = ContinuousMap::from_names(s, two, {{"a", "0"}, {"b", "1"}});
  EXPECT_EQ(f.apply(0), 0u);
  EXPECT_EQ(f.preimage(0b10), Mask{0b10});
  EXPECT_EQ(f.image(0b11), Mask{0b11});
}

TEST(Partition, ValidatesAndCanonicalizes) {
  Partition p(3, {0b100, 0b011});
  std::vector<Mask> expected{0b011, 0b100};
  EXPECT_EQ(p.blocks, expected);
  EXPECT_EQ(p.block_of(2), 1u);
  EXPECT_THROW(Partition(3, {0b011}), Error);
  EXPECT_THROW(Partition(3, {0b011, 0b110}), Error);
  EXPECT_THROW(Partition(3, {0b011, 0b100, 0b000}), Error);
  EXPECT_THROW(Partition(2, {0b11, 0b100}), Error);
}

TEST(Partition, ComponentsFormAPartition) {
  Partition p = components(two_blobs());
  std::vector<Mask> expected{0b0011, 0b1100};
  EXPECT_EQ(p.blocks, expected);
}

TEST(Quotient, CollapsesBlocksToPoints) {
  FiniteSpace d = FiniteSpace::discrete({"a", "b", "c"});
  QuotientResult q = quotient(d, Partition(3, {0b011, 0b100}));
  EXPECT_EQ(q.space.size(), 2u);
  EXPECT_TRUE(q.space.is_discrete());
  std::vector<std::string> names{"a+b", "c"};
  EXPECT_EQ(q.space.points, names);
  EXPECT_TRUE(check_continuous(q.projection));
  EXPECT_EQ(q.projection.apply(0), q.projection.apply(1));
  EXPECT_NE(q.projection.apply(0), q.projection.apply(2));
}

TEST(Quotient, OfSierpinskiByOneBlockIsAPoint) {
  QuotientResult q = quotient(sierpinski(), Partition(2, {0b11}));
  EXPECT_EQ(q.space.size(), 1u);
  EXPECT_TRUE(check_continuous(q.projection));
}

TEST(Enumeration, TopologyCountsMatchTheLiterature) {
  EXPECT_EQ(all_topologies(0).size(), 1u);
  EXPECT_EQ(all_topologies(1).size(), 1u);
  EXPECT_EQ(all_topologies(2).size(), 4u);
  EXPECT_EQ(all_topologies(3).size(), 29u);
  EXPECT_EQ(all_topologies(4).size(), 355u);
}

TEST(Enumeration, PartitionCountsMatchTheBellNumbers) {
  EXPECT_EQ(all_partitions(0).size(), 1u);
  EXPECT_EQ(all_partitions(3).size(), 5u);
  EXPECT_EQ(all_partitions(6).size(), 203u);
}

TEST(Enumeration, RandomSpacesAreValidAndSeedStable) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    FiniteSpace x = random_space(rng, 5);
    EXPECT_EQ(x.size(), 5u);
    EXPECT_NO_THROW(FiniteSpace(x.points, x.opens));
  }
  std::mt19937_64 r1(7), r2(7);
  EXPECT_EQ(random_space(r1, 6), random_space(r2, 6));
}
