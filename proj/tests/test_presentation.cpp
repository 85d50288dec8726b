#include <filesystem>
#include <fstream>
#include <sstream>

#include "artin/presentation.hpp"
#include "doctest.h"

using namespace artin;

#ifndef ARTIN_PRESETS_DIR
#error "ARTIN_PRESETS_DIR must be defined"
#endif

TEST_CASE("classification of the presets") {
  auto c = preset("tri345").classify();
  CHECK(c.large);
  CHECK_FALSE(c.extra_large);
  CHECK(c.satisfies_33m);
  CHECK_FALSE(c.dihedral);

  auto x = preset("tri444").classify();
  CHECK(x.extra_large);
  CHECK(x.satisfies_33m);

  auto bad = preset("tri433").classify();
  CHECK(bad.large);
  CHECK_FALSE(bad.satisfies_33m);
  CHECK_THROWS_AS(require_33m(preset("tri433"), "test"), Error);
  CHECK_NOTHROW(require_33m(preset("tri555"), "test"));

  auto d = preset("DA3").classify();
  CHECK(d.dihedral);
  CHECK(d.satisfies_33m);
  CHECK(preset("DAinf").classify().free);
  CHECK(preset("DAinf").max_finite_label() == 0);
  CHECK(preset("DA5").max_finite_label() == 5);
}

TEST_CASE("the (3,3,m) triangle needs all three edges finite") {
  // Two edges labelled 3 with the third infinite is no triangle.
  auto open = CoxeterPresentation::triangle(3, 3, kInfinity);
  CHECK(open.classify_33m());
  CHECK_FALSE(CoxeterPresentation::triangle(3, 3, 7).classify_33m());
  CHECK(CoxeterPresentation::triangle(3, 4, 4).classify_33m());
}

TEST_CASE("malformed matrices") {
  CHECK_THROWS_AS(CoxeterPresentation(2, {{1, 3}, {4, 1}}), Error);
  CHECK_THROWS_AS(CoxeterPresentation(2, {{1, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(CoxeterPresentation(2, {{2, 3}, {3, 1}}), Error);
  CHECK_THROWS_AS(CoxeterPresentation(3, {{1, 3}, {3, 1}}), Error);
  // Labels below 3 are outside large type.
  CHECK_FALSE(validate_presentation(CoxeterPresentation::dihedral(2)).large);
  CHECK_THROWS_AS(preset("nope"), Error);
}

TEST_CASE("JSON round trip") {
  for (const auto& name : preset_names()) {
    auto p = preset(name);
    auto q = presentation_from_json(presentation_to_json(p));
    CHECK(p == q);
    CHECK(q.name() == p.name());
    CHECK(p.hash() == q.hash());
  }
  auto p = presentation_from_json(R"({"n":2,"matrix":[[1,"inf"],["inf",1]]})");
  CHECK(p.label(1, 2) == kInfinity);
  CHECK_THROWS_AS(presentation_from_json("{"), Error);
  CHECK_THROWS_AS(presentation_from_json(R"({"n":2})"), Error);
}

TEST_CASE("preset files agree with the built-in presets") {
  namespace fs = std::filesystem;
  int seen = 0;
  for (const auto& name : preset_names()) {
    fs::path path = fs::path(ARTIN_PRESETS_DIR) / (name + ".json");
    REQUIRE(fs::exists(path));
    auto loaded = load_presentation(path.string());
    CHECK(loaded == preset(name));
    ++seen;
  }
  CHECK(seen == 8);
  CHECK_THROWS_AS(load_presentation("/nonexistent/p.json"), Error);
}

TEST_CASE("pairs and hashes") {
  auto p = preset("tri345");
  CHECK(p.pairs() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(p.label(1, 2) == 3);
  CHECK(p.label(1, 3) == 4);
  CHECK(p.label(2, 3) == 5);
  CHECK(p.hash() != preset("tri444").hash());
}
