#include <gtest/gtest.h>

#include "support.hpp"

using namespace moorecat;
using mc_test::pl;
using mc_test::q;

TEST(Json, PLMapRoundTrip) {
  const PLMap f = pl({{0, 0}, {1, q(3, 2)}, {2, 2}});
  const json j = to_json(f);
  EXPECT_EQ(j.dump(), R"({"breaks":[["0","0"],["1","3/2"],["2","2"]],"cod":"2","dom":"2"})");
  EXPECT_EQ(plmap_from_json(j), f);
  EXPECT_EQ(plmap_from_json(json::parse(R"({"breaks":[[0,0],[1,"1/2"]]})")), pl({{0, 0}, {1, q(1, 2)}}));
}

TEST(Json, PLMapInvariantsNamed) {
  try {
    plmap_from_json(json::parse(R"({"breaks":[[0,0],[1,2],[2,1]]})"));
    FAIL() << "expected a validation error";
  } catch (const validation_error& e) {
    EXPECT_NE(std::string(e.what()).find("increasing"), std::string::npos) << e.what();
  }
  EXPECT_THROW(plmap_from_json(json::parse(R"({"breaks":[[0,0],[1,1]],"dom":"2"})")), validation_error);
  EXPECT_THROW(plmap_from_json(json::parse(R"({"brakes":[]})")), validation_error);
}

TEST(Json, SpaceAndElementRoundTrip) {
  const PSpacePtr d = make_space({Cell::free("c", Length(3, 2), {"a", "b"}), Cell::constant("k", {"z"})});
  EXPECT_EQ(*space_from_json(to_json(*d)), *d);
  const Element x = Element::free("c", pl({{0, 0}, {1, q(3, 2)}}), "a");
  EXPECT_EQ(element_from_json(to_json(x)), x);
  const Element z = Element::constant("k", Length(5), "z");
  EXPECT_EQ(element_from_json(to_json(z)), z);
  EXPECT_THROW(space_from_json(json::parse(R"({"cells":[{"id":"c","kind":"free","arity":"0","labels":["a"]}]})")),
               validation_error);
}

TEST(Json, ClassAndTripleRoundTrip) {
  Rng rng(9);
  const RandomProfile p;
  for (int i = 0; i < 50; ++i) {
    const auto fs = random_factors(rng, 2 + static_cast<std::size_t>(i % 2), p);
    const RawTriple r = random_raw_triple(rng, fs, p);
    const TensorClass c = canonicalize(r);
    EXPECT_EQ(class_from_json(to_json(c), fs), c);
    const RawTriple back = raw_triple_from_json(to_json(r));
    EXPECT_EQ(canonicalize(back).slots, c.slots);
  }
}

TEST(Report, SameSeedIsByteIdentical) {
  const auto a = lawcheck::to_json(lawcheck::run("all", 99, 5)).dump();
  const auto b = lawcheck::to_json(lawcheck::run("all", 99, 5)).dump();
  EXPECT_EQ(a, b);
  EXPECT_NE(a, lawcheck::to_json(lawcheck::run("all", 100, 5)).dump());
}

TEST(Report, SchemaAndTotals) {
  const json j = lawcheck::to_json(lawcheck::run("associator-pentagon", 42, 20));
  EXPECT_EQ(j["schema"], "moorecat-report/1");
  EXPECT_EQ(j["totals"]["suites"], 1);
  EXPECT_TRUE(j["passed"].get<bool>());
}

TEST(Report, UnknownSuite) { EXPECT_THROW(lawcheck::run_suite("nope", 1), usage_error); }

TEST(Registry, EveryCoveredPropositionAppearsOnce) {
  std::map<std::string, int> seen;
  for (const auto& s : lawcheck::registry())
    for (const auto& c : s.covers) ++seen[c];
  EXPECT_GE(seen.size(), 18u);
  for (const auto& [name, n] : seen) EXPECT_EQ(n, 1) << name;
}

TEST(Registry, FailureCarriesReplayableCounterexample) {
  const lawcheck::CheckSpec bad{"always-fails", [](Rng& rng) -> std::optional<json> {
                                  return to_json(random_map(rng, Length(1), Length(2)));
                                }};
  const auto res = lawcheck::run_check(bad, 1, 10);
  EXPECT_FALSE(res.passed);
  EXPECT_EQ(res.cases, 1u);
  ASSERT_TRUE(res.counterexample.has_value());
  EXPECT_NO_THROW(plmap_from_json(*res.counterexample));
}
