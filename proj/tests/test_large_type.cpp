#include <algorithm>
#include <set>

#include "artin/large_type.hpp"
#include "artin/oracle.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace artin;
using artin::large::ArtinGroup;
using testing_support::all_letters;
using testing_support::for_each_word;
using testing_support::WordGen;

namespace {

const std::vector<std::string> kLarge{"tri345", "tri444", "tri555", "DA3", "DA4"};

std::set<Letter> final_letters_from_ball(const oracle::Ball& B, int idx) {
  std::set<Letter> out;
  for (Letter a : all_letters(B.generators())) {
    int nb = B.neighbor(idx, a.inverse());
    if (nb >= 0 && B.level(nb) == B.level(idx) - 1) out.insert(a);
  }
  return out;
}

}  // namespace

TEST_CASE("the (3,4,5) rightward length reducing sequence") {
  auto pres = preset("tri345");
  ArtinGroup G(pres);
  Word w = pres.parse("a B^2 A c b^2 C B a c a^2 c A");
  REQUIRE(w.size() == 15);
  Word target = pres.parse("B A^2 C B c^2 b a c^2 a c");
  auto seq = large::rightward_length_reducing(w, pres);
  REQUIRE(seq);
  REQUIRE(seq->moves.size() == 3);
  CHECK(to_string(seq->moves[0].before) == "aBBA");
  CHECK(to_string(seq->moves[0].after) == "BAAb");
  CHECK(to_string(seq->moves[2].after) == "accaca");
  CHECK(seq->free_cancellation);
  CHECK(seq->after == target);
  auto red = G.shortlex_reduce(w);
  CHECK(red.word.size() == 13);
  CHECK(G.equal(red.word, target));
  CHECK(oracle::Oracle(pres).equal(red.word, target));
  // A normal form is a fixed point.
  CHECK(G.nf(red.word) == red.word);
  CHECK(G.shortlex_reduce(red.word).log.size() == red.word.size());
}

TEST_CASE("length axioms and associativity") {
  for (const auto& name : kLarge) {
    auto pres = preset(name);
    ArtinGroup G(pres);
    WordGen gen(pres.generators(), 2024);
    CHECK(G.length(Word{}) == 0);
    for (int t = 0; t < 150; ++t) {
      Word g = G.nf(gen.word(0, 8)), h = G.nf(gen.word(0, 8)), k = G.nf(gen.word(0, 6));
      CHECK(G.multiply(g, G.inverse(g)).empty());
      CHECK(G.length(G.inverse(g)) == G.length(g));
      CHECK(G.length(G.multiply(g, h)) <= G.length(g) + G.length(h));
      CHECK(G.multiply(G.multiply(g, h), k) == G.multiply(g, G.multiply(h, k)));
      CHECK((G.length(g) == 0) == g.empty());
      CHECK(G.nf(g) == g);
      CHECK(G.is_geodesic(g));
    }
  }
}

TEST_CASE("engine against oracle on random words") {
  for (const auto& name : {"tri345", "tri444", "tri555"}) {
    auto pres = preset(name);
    ArtinGroup G(pres);
    oracle::Oracle O(pres);
    WordGen gen(3, 99);
    for (int t = 0; t < 200; ++t) {
      Word w = gen.word(0, 8);
      CHECK(G.nf(w) == O.canonical(w));
    }
    CHECK(G.is_geodesic(pres.parse("aca")) == (O.geodesic_length(pres.parse("aca")) == 3));
  }
}

TEST_CASE("custom letter orders give shortlex-least geodesics for that order") {
  auto pres = preset("tri444");
  auto order = LetterOrder::from_sequence({Letter(3, false), Letter(2, true), Letter(1, false), Letter(3, true),
                                           Letter(1, true), Letter(2, false)});
  ArtinGroup G(pres, order);
  oracle::Oracle O(pres, order);
  WordGen gen(3, 3);
  for (int t = 0; t < 100; ++t) {
    Word w = gen.word(0, 7);
    Word nf = G.nf(w);
    CHECK(nf == O.canonical(w));
    for (const auto& geo : G.geodesics(nf)) CHECK_FALSE(order.shortlex_less(geo, nf));
  }
}

TEST_CASE("final letters: at most two, with different names") {
  auto pres = preset("tri345");
  ArtinGroup G(pres);
  auto fl = G.final_letters(pres.parse("aba"));
  CHECK(std::set<Letter>(fl.begin(), fl.end()) == std::set<Letter>{Letter(1, true), Letter(2, true)});
  CHECK(G.final_letters(pres.parse("aa")) == std::vector<Letter>{Letter(1, true)});
  CHECK_THROWS_AS(G.final_letters(Word{}), Error);

  for (const auto& name : {"tri345", "tri444"}) {
    ArtinGroup H(preset(name));
    auto B = oracle::Ball::from_engine(H, 4);
    for (int idx = 1; idx < static_cast<int>(B.size()); ++idx) {
      const Word& g = B.element(idx);
      auto f = H.final_letters(g), i = H.initial_letters(g);
      REQUIRE(f.size() <= 2);
      REQUIRE(i.size() <= 2);
      if (f.size() == 2) CHECK(f[0].gen() != f[1].gen());
      if (i.size() == 2) CHECK(i[0].gen() != i[1].gen());
      CHECK(std::set<Letter>(f.begin(), f.end()) == final_letters_from_ball(B, idx));
    }
  }
}

TEST_CASE("wa geodesic implies wa^k geodesic") {
  for (const auto& name : {"tri345", "tri444"}) {
    auto pres = preset(name);
    ArtinGroup G(pres);
    for_each_word(3, 4, [&](const Word& w) {
      if (!G.is_geodesic(w)) return;
      for (Letter a : all_letters(3)) {
        Word wa = w.pushed(a);
        if (!wa.freely_reduced() || !G.is_geodesic(wa)) continue;
        CHECK(G.is_geodesic(wa.pushed(a)));
        CHECK(G.is_geodesic(wa.pushed(a).pushed(a)));
      }
    });
  }
}

TEST_CASE("same-element geodesics: one rightward sequence changes the last letter") {
  auto pres = preset("tri345");
  ArtinGroup G(pres);
  auto B = oracle::Ball::from_engine(G, 4);
  for (int idx = 1; idx < static_cast<int>(B.size()); ++idx) {
    const Word& g = B.element(idx);
    auto fl = G.final_letters(g);
    if (fl.size() < 2) continue;
    for (const auto& v : G.geodesics(g))
      for (Letter y : fl) {
        if (v.back() == y) continue;
        auto seq = large::rightward_length_reducing(v.pushed(y.inverse()), pres);
        REQUIRE(seq);
        CHECK(seq->free_cancellation);
        CHECK(G.equal(seq->after, v.pushed(y.inverse())));
        CHECK(seq->after.size() + 1 == v.size());
      }
  }
}

TEST_CASE("tau neighbours preserve the element") {
  auto pres = preset("tri444");
  ArtinGroup G(pres);
  WordGen gen(3, 8);
  for (int t = 0; t < 100; ++t) {
    Word w = G.nf(gen.word(3, 9));
    for (const auto& v : large::tau_neighbors(w, pres)) {
      CHECK(v.size() == w.size());
      CHECK(G.equal(v, w));
    }
  }
}

TEST_CASE("longest divisors in two-generator subgroups") {
  auto p433 = preset("tri433");
  ArtinGroup C(p433);
  CHECK(C.equal(C.ld(p433.parse("babacabab"), 1, 2), p433.parse("baba")));

  auto pres = preset("tri345");
  ArtinGroup G(pres);
  CHECK(G.ld(pres.parse("abab"), 1, 2) == G.nf(pres.parse("abab")));
  CHECK(G.rd(pres.parse("cab"), 1, 2) == G.nf(pres.parse("ab")));
  CHECK_THROWS_AS(G.ld(pres.parse("a"), 1, 1), Error);

  for (const auto& name : {"tri345", "tri444"}) {
    ArtinGroup H(preset(name));
    auto B = oracle::Ball::from_engine(H, 4);
    for (int idx = 0; idx < static_cast<int>(B.size()); ++idx) {
      const Word& g = B.element(idx);
      for (auto [i, j] : H.presentation().pairs()) {
        Word ld = H.ld(g, i, j);
        CHECK(ld.involves_only(i, j));
        CHECK(H.is_left_divisor(ld, g));
        // Every G(i,j) left divisor found by enumeration divides LD.
        std::vector<Word> longest;
        for (int k = 0; k <= B.level(idx); ++k)
          for (int h : B.interval(idx, k)) {
            const Word& d = B.element(h);
            if (!d.involves_only(i, j)) continue;
            CHECK(H.is_left_divisor(d, ld));
            if (d.size() == ld.size()) longest.push_back(d);
          }
        CHECK(longest == std::vector<Word>{ld});
        Word rd = H.rd(g, i, j);
        CHECK(rd.involves_only(i, j));
        CHECK(H.is_right_divisor(rd, g));
      }
    }
  }
}

TEST_CASE("LD prime") {
  auto pres = preset("tri345");
  ArtinGroup G(pres);
  auto lp = G.ld_prime(pres.parse("abab"), 1, 2);
  CHECK(lp.which == 1);
  CHECK(lp.ld_prime == G.nf(pres.parse("abab")));
  WordGen gen(3, 17);
  for (int t = 0; t < 100; ++t) {
    Word g = G.nf(gen.word(1, 8));
    auto r = G.ld_prime(g, 1, 2);
    CHECK(r.ld == G.ld(g, 1, 2));
    CHECK(G.is_left_divisor(r.ld_prime, g));
    CHECK(r.tails.size() <= 1);
    if (r.which == 2) {
      REQUIRE(r.letter);
      // LD = LD' a^t for some t > 0.
      Word tail = G.multiply(G.inverse(r.ld_prime), r.ld);
      CHECK_FALSE(tail.empty());
      for (Letter x : tail) CHECK(x == *r.letter);
    }
  }

  auto p433 = preset("tri433");
  ArtinGroup C(p433);
  Word g = p433.parse("babacabab");
  CHECK_THROWS_AS(C.ld_prime(g, 1, 2), Error);
  auto cx = C.ld_prime(g, 1, 2, true);
  CHECK(cx.tails.size() == 2);
  const auto& geos = C.geodesics(g);
  CHECK(std::find(geos.begin(), geos.end(), p433.parse("babcacbab")) != geos.end());
  CHECK(std::find(geos.begin(), geos.end(), p433.parse("abacbcaba")) != geos.end());
}

TEST_CASE("permissible pairs") {
  auto pres = preset("tri345");
  ArtinGroup G(pres);
  WordGen gen(3, 5);
  for (int t = 0; t < 50; ++t) {
    Word g = G.nf(gen.word(0, 7));
    CHECK(G.permissible(g, Word{}));
    CHECK(G.permissible(Word{}, g));
  }
  CHECK_FALSE(G.permissible(pres.parse("ab"), pres.parse("Ba")));
  // The dihedral filter applies to the facing G(1,2) divisors.
  CHECK_FALSE(G.permissible(pres.parse("abaab"), pres.parse("babba")));
  CHECK(G.permissible(pres.parse("abaab"), pres.parse("bbc")));
}

TEST_CASE("merging") {
  auto pres = preset("tri345");
  ArtinGroup G(pres);
  WordGen gen(3, 77);
  for (int t = 0; t < 50; ++t) {
    Word g = G.nf(gen.word(1, 7));
    auto m = G.merge(g, G.inverse(g));
    CHECK(m.f1.empty());
    CHECK(m.r == 0);
    CHECK(m.f2.empty());
  }

  // Inside one G(i,j) the merger is the dihedral one.
  const auto& D = G.pair_group(1, 2);
  std::vector<Word> elems;
  for_each_word(2, 4, [&](const Word& w) {
    if (D.nf(w) == w) elems.push_back(w);
  });
  for (const auto& g1 : elems)
    for (const auto& g2 : elems) {
      auto a = G.merge(g1, g2);
      auto b = D.merge(g1, g2);
      CHECK(a.f1 == b.f1);
      CHECK(a.r == b.r);
      CHECK(a.f2 == b.f2);
    }

  CHECK_THROWS_AS(ArtinGroup(preset("tri433")).merge(pres.parse("ab"), pres.parse("ba")), Error);
}

TEST_CASE("merger invariants over a ball") {
  for (const auto& name : {"tri345", "tri444"}) {
    ArtinGroup G(preset(name));
    int K = G.merge_constant();
    auto B = oracle::Ball::from_engine(G, 3);
    for (int x = 0; x < static_cast<int>(B.size()); ++x)
      for (int y = 0; y < static_cast<int>(B.size()); ++y) {
        const Word& g1 = B.element(x);
        const Word& g2 = B.element(y);
        int k = B.level(x), l = B.level(y);
        auto t = G.merge(g1, g2);
        CHECK(G.equal(t.f1 + G.garside(t.i, t.j, t.r) + t.f2, g1 + g2));
        CHECK(std::abs(t.r) <= std::min(k, l));
        CHECK(static_cast<int>(t.h1.size()) <= K * std::min(k, l));
        CHECK(static_cast<int>(t.h2.size()) <= K * std::min(k, l));
        CHECK(G.permissible(t.f1, t.h1));
        CHECK(G.permissible(t.h2, t.f2));
        CHECK(G.equal(t.h1 + t.h2, G.garside(t.i, t.j, t.r)));
        auto [f1, r, f2] = G.replay(g1, g2, t.trace);
        CHECK(f1 == t.f1);
        CHECK(r == t.r);
        CHECK(f2 == t.f2);
      }
  }
}

TEST_CASE("trivial products in G(i,j)") {
  // g1 g2 in G(i,j), with no G(i,j) left divisor of g1 and no G(i,j) right
  // divisor of g2, forces g1 g2 = 1.
  auto pres = preset("tri345");
  ArtinGroup G(pres);
  auto B = oracle::Ball::from_engine(G, 3);
  for (int x = 0; x < static_cast<int>(B.size()); ++x)
    for (int y = 0; y < static_cast<int>(B.size()); ++y) {
      const Word& g1 = B.element(x);
      const Word& g2 = B.element(y);
      Word p = G.multiply(g1, g2);
      for (auto [i, j] : pres.pairs()) {
        if (!p.involves_only(i, j)) continue;
        if (!G.ld(g1, i, j).empty() || !G.rd(g2, i, j).empty()) continue;
        CHECK(p.empty());
      }
    }
}

TEST_CASE("S and T") {
  auto pres = preset("tri444");
  ArtinGroup G(pres);
  auto B = oracle::Ball::from_engine(G, 4);
  for (int k = 1; k <= 2; ++k) {
    auto Ck = B.sphere_words(k);
    for (int l = 1; l <= 2; ++l)
      for (int idx : B.sphere(k + l)) {
        const Word& g = B.element(idx);
        auto st = G.build_S_T(g, k, l, Ck);
        for (const auto& e : st.S) {
          CHECK(e.r == 0);
          CHECK(e.h1.empty());
          CHECK(e.h2.empty());
        }
      }
    for (int l = 1; l <= 2; ++l)
      for (int len = std::abs(k - l); len < k + l; ++len)
        for (int idx : B.sphere(len)) {
          const Word& g = B.element(idx);
          auto st = G.build_S_T(g, k, l, Ck);
          std::set<int> rs;
          for (const auto& [i, j, r] : st.T) rs.insert(r);
          CHECK(static_cast<int>(rs.size()) <= 2 * std::min(k, l) + 1);
          CHECK(st.max_abs_r <= std::min(k, l));
          auto sd = G.split_S(st, g, k, l);
          CHECK(sd.failures == 0);
          CHECK(sd.s0 + sd.s1 + sd.s2 == st.S.size());
        }
  }
  // No factorisation at all.
  auto none = G.build_S_T(pres.parse("a"), 3, 3, B.sphere_words(3));
  CHECK(none.S.empty());
  CHECK(none.T.empty());
}
