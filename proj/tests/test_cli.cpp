#include <gtest/gtest.h>

#include <sstream>

#include "genome/cli.hpp"
#include "genome/serialize.hpp"

using namespace genome;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  Result r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  return j;
}

}  // namespace

TEST(Cli, BasisCounts) {
  Json c9 = run_json({"basis", "C9", "-p", "3"});
  std::vector<std::size_t> orders;
  for (const auto& f : c9["descriptor"]["factors"]) orders.push_back(f["quotient_order"]);
  EXPECT_EQ(orders, (std::vector<std::size_t>{9, 3, 1}));
  EXPECT_EQ(run_json({"basis", "C3 x C3", "-p", "3"})["descriptor"]["factors"].size(), 5u);
  Json es = run_json({"basis", "ES+(3)", "-p", "3"});
  EXPECT_EQ(es["descriptor"]["factors"].size(), 6u);
  EXPECT_EQ(es["class_sizes"].size(), 6u);

  Result text = run({"basis", "C9", "-p", "3"});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("3 genetic subgroups in 3 linkage classes"), std::string::npos);
}

TEST(Cli, GenomeOfC27) {
  Json j = run_json({"genome", "C27", "-p", "3"});
  std::vector<std::size_t> orders = j["factor_orders"];
  std::sort(orders.begin(), orders.end());
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 3, 9, 27}));
  Result text = run({"genome", "C27", "-p", "3"});
  EXPECT_EQ(text.out.rfind("Gamma(C27) = ", 0), 0u);
}

TEST(Cli, MapOfInflation) {
  Json j = run_json({"map", "inf(C9,[3])", "-p", "3"});
  const Json& m = j["map"];
  ASSERT_EQ(m["entries"].size(), 3u);
  ASSERT_EQ(m["entries"][0].size(), 2u);
  int ones = 0;
  for (std::size_t t = 0; t < 3; ++t)
    for (std::size_t s = 0; s < 2; ++s) {
      const int e = m["entries"][t][s];
      if (e == 0) continue;
      EXPECT_EQ(e, 1);
      ++ones;
      EXPECT_EQ(m["target"]["factors"][t]["subgroup_elements"], Json::parse("[0,3,6]"));
      EXPECT_EQ(m["source"]["factors"][s]["subgroup_elements"].size(), 1u);
    }
  EXPECT_EQ(ones, 1);
}

TEST(Cli, JsonReparsesUnderSchema) {
  Json basis = run_json({"basis", "ES-(3)", "-p", "3"});
  EXPECT_EQ(descriptor_from_json(basis["descriptor"]).size(), basis["descriptor"]["factors"].size());
  Json genome = run_json({"genome", "C3 x C9", "-p", "3"});
  EXPECT_EQ(descriptor_from_json(genome["descriptor"]).group_spec, "C3 x C9");
  Json map = run_json({"map", "def(ES+(3),[1]) * ind(ES+(3),[1,3])", "-p", "3"});
  GenomeMap m = genome_map_from_json(map["map"]);
  Biset u = biset_from_json(map["biset"]);
  EXPECT_EQ(u.left(), m.target().group);
  EXPECT_EQ(u.right(), m.source().group);
  Json verify = run_json({"verify", "--suite", "faithful", "-p", "3", "--max-order", "27", "--seed", "1"});
  EXPECT_TRUE(verify["passed"].get<bool>());
  for (const auto& r : verify["reports"])
    for (const auto& id : r["identities"]) EXPECT_GT(id["checked"].get<std::size_t>(), 0u);
}

TEST(Cli, OutputIsDeterministic) {
  for (std::vector<std::string> args : {std::vector<std::string>{"basis", "ES+(3)", "-p", "3"},
                                        {"map", "inf(C9,[3])", "-p", "3", "--json"},
                                        {"verify", "--suite", "functoriality", "--max-order", "27", "--seed", "4"}}) {
    Result a = run(args), b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, InputErrorsExitWithTwo) {
  Result even = run({"genome", "C8", "-p", "2"});
  EXPECT_EQ(even.code, cli::kExitInputError);
  EXPECT_NE(even.err.find("odd_primes_only"), std::string::npos);

  Result mixed = run({"basis", "C6", "-p", "3"});
  EXPECT_EQ(mixed.code, cli::kExitInputError);
  EXPECT_NE(mixed.err.find("not_p_group"), std::string::npos);

  Result wrong_prime = run({"genome", "C9", "-p", "5"});
  EXPECT_EQ(wrong_prime.code, cli::kExitInputError);

  Result syntax = run({"genome", "C9 x", "-p", "3"});
  EXPECT_EQ(syntax.code, cli::kExitInputError);
  EXPECT_NE(syntax.err.find("offset 4"), std::string::npos);

  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, cli::kExitInputError);
  EXPECT_EQ(run({"genome", "C9"}).code, cli::kExitInputError);
  EXPECT_EQ(run({}).code, cli::kExitInputError);
  EXPECT_EQ(run({"map", "inf(ES+(3),[9])", "-p", "3"}).code, cli::kExitInputError);
}

TEST(Cli, HelpExitsZero) {
  Result help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("verify"), std::string::npos);
}

TEST(Cli, VerifySummaryListsIdentities) {
  Result r = run({"verify", "--suite", "rationality", "-p", "3", "--max-order", "27", "--seed", "2"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("rationality: PASS"), std::string::npos);
  EXPECT_NE(r.out.find(" checked, 0 failed"), std::string::npos);
  EXPECT_NE(r.out.find("all suites passed"), std::string::npos);
}
