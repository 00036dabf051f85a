#include <gtest/gtest.h>

#include "genome/biset.hpp"
#include "genome/catalog.hpp"
#include "genome/constructors.hpp"
#include "genome/error.hpp"
#include "genome/serialize.hpp"
#include "genome/spec.hpp"
#include "genome/transfer.hpp"

using namespace genome;

TEST(Serialize, GroupRoundTrip) {
  for (const auto& entry : catalog(3, 81)) {
    Json j = to_json(entry.group);
    EXPECT_EQ(j["order"], entry.group.order());
    Group back = group_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back, entry.group) << entry.spec;
  }
}

TEST(Serialize, GroupRejectsBadInput) {
  EXPECT_THROW(group_from_json(Json::parse(R"({"order": 2})")), Error);
  EXPECT_THROW(group_from_json(Json::parse(R"({"order": 2, "table": [[0,1],[1]]})")), Error);
  EXPECT_THROW(group_from_json(Json::parse(R"({"order": 2, "table": [[0,1],[1,1]]})")), Error);
  EXPECT_THROW(group_from_json(Json::parse(R"({"order": -2, "table": []})")), Error);
  EXPECT_THROW(group_from_json(Json::parse(R"([1, 2])")), Error);
  try {
    group_from_json(Json::parse(R"({"table": []})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(Serialize, BisetRoundTrip) {
  for (const char* spec : {"id(C9)", "inf(C9,[3])", "def(C9,[3]) * inf(C9,[3])", "pair(C3,C9,[(1,3)])",
                           "res(ES+(3),[9,1])"}) {
    Biset u = biset_from_spec(spec).biset;
    Json j = to_json(u);
    EXPECT_EQ(j["size"], u.size());
    ASSERT_EQ(j["left_action"].size(), u.left().order());
    ASSERT_EQ(j["right_action"].size(), u.size());
    Biset back = biset_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.left(), u.left());
    EXPECT_EQ(back.right(), u.right());
    EXPECT_EQ(back.left_table(), u.left_table());
    EXPECT_EQ(back.right_table(), u.right_table());
  }
}

TEST(Serialize, BisetRejectsBrokenAction) {
  Json j = to_json(identity_biset(make_cyclic(3)));
  j["right_action"][1][1] = 1;
  EXPECT_THROW(biset_from_json(j), Error);
}

TEST(Serialize, DescriptorRoundTrip) {
  for (const auto& entry : catalog(3, 81)) {
    GenomeDescriptor d = genome_of(entry.group, 3);
    d.group_spec = entry.spec;
    Json j = to_json(d);
    EXPECT_EQ(j["factors"].size(), d.size());
    GenomeDescriptor back = descriptor_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back, d);
    EXPECT_EQ(back.group_spec, entry.spec);
  }
}

TEST(Serialize, DescriptorIsRevalidated) {
  GenomeDescriptor d = genome_of(make_cyclic(9), 3);
  Json good = to_json(d);

  Json wrong_order = good;
  wrong_order["factors"][0]["quotient_order"] = 27;
  EXPECT_THROW(descriptor_from_json(wrong_order), Error);

  Json missing = good;
  missing["factors"].erase(0);
  EXPECT_THROW(descriptor_from_json(missing), Error);

  Json bad_prime = good;
  bad_prime["prime"] = 2;
  EXPECT_THROW(descriptor_from_json(bad_prime), Error);

  Json bad_generator = good;
  bad_generator["factors"][0]["generator"] = 0;
  if (d.factors[0].quotient_order > 1) EXPECT_THROW(descriptor_from_json(bad_generator), Error);
}

TEST(Serialize, GenomeMapRoundTrip) {
  EvaluatedBiset e = biset_from_spec("inf(ES+(3),[1])");
  GenomeDescriptor src = genome_of(e.biset.right(), 3);
  GenomeDescriptor tgt = genome_of(e.biset.left(), 3);
  src.group_spec = e.right_spec;
  tgt.group_spec = e.left_spec;
  GenomeMap m = genome_map(e.biset, src, tgt);
  GenomeMap back = genome_map_from_json(Json::parse(to_json(m).dump()));
  EXPECT_TRUE(back.same_entries(m));
  EXPECT_EQ(back.source(), m.source());
  EXPECT_EQ(back.target(), m.target());

  Json j = to_json(m);
  j["entries"][0].push_back(0);
  EXPECT_THROW(genome_map_from_json(j), Error);
}

TEST(Serialize, GenomeMapChecksHomomorphismCondition) {
  // C3 -> C9 sending the order-3 generator to an element of order 9
  GenomeDescriptor d3 = genome_of(make_cyclic(3), 3);
  GenomeDescriptor d9 = genome_of(make_cyclic(9), 3);
  Json j{{"source", to_json(d3)}, {"target", to_json(d9)}};
  Json entries = Json::array();
  for (std::size_t t = 0; t < d9.size(); ++t) {
    Json row = Json::array();
    for (std::size_t s = 0; s < d3.size(); ++s)
      row.push_back(d9.factors[t].quotient_order == 9 && d3.factors[s].quotient_order == 3 ? 1 : 0);
    entries.push_back(row);
  }
  j["entries"] = entries;
  EXPECT_THROW(genome_map_from_json(j), Error);
}
