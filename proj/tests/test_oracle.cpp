#include <cstdlib>
#include <filesystem>
#include <set>

#include "artin/large_type.hpp"
#include "artin/oracle.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace artin;
using testing_support::for_each_word;
using testing_support::GarsideKey;
using testing_support::WordGen;

TEST_CASE("closure oracle against relator substitution") {
  for (const auto& name : {"tri345", "DA3", "DA4"}) {
    auto pres = preset(name);
    oracle::Oracle O(pres);
    for_each_word(pres.generators(), 4, [&](const Word& w) {
      CHECK(O.canonical(w) == oracle::relator_canonical(pres, pres.standard_order(), w, 4));
    });
  }
}

TEST_CASE("closure oracle against the Garside structure") {
  for (int m : {3, 4, 5}) {
    auto pres = CoxeterPresentation::dihedral(m);
    oracle::Oracle O(pres);
    GarsideKey K(m);
    WordGen gen(2, static_cast<std::uint64_t>(m));
    for (int t = 0; t < 300; ++t) {
      Word u = gen.word(0, 8), v = gen.word(0, 8);
      CHECK(O.equal(u, v) == K.equal(u, v));
      CHECK(K.equal(O.canonical(u), u));
    }
  }
}

TEST_CASE("geodesic enumeration by the oracle") {
  auto pres = preset("DA3");
  oracle::Oracle O(pres);
  auto g = O.geodesics(pres.parse("bab"));
  CHECK(g == std::vector<Word>{pres.parse("aba"), pres.parse("bab")});
}

TEST_CASE("closure budget") {
  oracle::Oracle O(preset("tri444"), 3);
  CHECK_THROWS_AS(O.canonical(preset("tri444").parse("abababab")), Error);
}

TEST_CASE("balls") {
  // DA(inf) is free of rank 2: |C_k| = 4 3^(k-1).
  large::ArtinGroup F(preset("DAinf"));
  auto B = oracle::Ball::from_engine(F, 6);
  std::size_t expect = 4;
  for (int k = 1; k <= 6; ++k, expect *= 3) CHECK(B.sphere(k).size() == expect);
  CHECK(B.element(0).empty());

  auto pres = preset("tri345");
  large::ArtinGroup G(pres);
  oracle::Oracle O(pres);
  auto E = oracle::Ball::from_engine(G, 4);
  auto R = oracle::Ball::from_oracle(O, 4);
  CHECK(E == R);
  for (int idx = 0; idx < static_cast<int>(E.size()); ++idx) {
    CHECK(E.walk(E.element(idx)) == idx);
    CHECK(E.index_of(E.element(idx)) == idx);
    auto geos = E.geodesics(idx);
    const auto& eng = G.geodesics(E.element(idx));
    CHECK(std::set<Word>(geos.begin(), geos.end()) == std::set<Word>(eng.begin(), eng.end()));
  }
  CHECK(E.index_of(pres.parse("aaaaa")) == -1);
  for (int idx : E.sphere(4))
    for (int k = 0; k <= 4; ++k) {
      std::set<int> listed;
      for (int h : E.interval(idx, k)) listed.insert(h);
      for (int h : E.sphere(k)) {
        bool on_geodesic = G.length(G.multiply(G.inverse(E.element(h)), E.element(idx))) == 4 - k;
        CHECK(listed.count(h) == (on_geodesic ? 1u : 0u));
      }
    }
}

TEST_CASE("ball serialization and cache") {
  auto pres = preset("tri444");
  large::ArtinGroup G(pres);
  auto B = oracle::Ball::from_engine(G, 3);
  auto text = B.serialize(42, G.order());
  auto back = oracle::Ball::deserialize(text, 42, G.order(), 3);
  REQUIRE(back);
  CHECK(*back == B);
  CHECK_FALSE(oracle::Ball::deserialize(text, 43, G.order(), 3));
  CHECK_FALSE(oracle::Ball::deserialize("garbage", 42, G.order(), 3));

  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "artin-ball-cache-test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  setenv("ARTIN_RD_CACHE_DIR", dir.c_str(), 1);
  auto step = [&](const Word& w, Letter a) { return G.nf(w.pushed(a)); };
  auto first = oracle::Ball::cached(pres, G.order(), 3, step, "test");
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}) == 1);
  auto second = oracle::Ball::cached(pres, G.order(), 3, step, "test");
  CHECK(first == second);
  CHECK(first == B);
  unsetenv("ARTIN_RD_CACHE_DIR");
  fs::remove_all(dir);
}
