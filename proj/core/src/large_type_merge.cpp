#include <algorithm>
#include <map>
#include <set>

#include "artin/large_type.hpp"

namespace artin::large {

namespace {

using StepKind = dihedral::MergeStep::Kind;

bool is_signed(const Word& w) {
  SignClass s = w.sign_class();
  return s == SignClass::Positive || s == SignClass::Negative;
}

// 0 for the identity, the single name of a power, -1 otherwise.
int cyclic_name(const Word& w) {
  auto names = w.names();
  if (names.empty()) return 0;
  return names.size() == 1 ? names[0] : -1;
}

bool same_cyclic(const Word& a, const Word& b) {
  int x = cyclic_name(a), y = cyclic_name(b);
  if (x < 0 || y < 0) return false;
  return x == 0 || y == 0 || x == y;
}

Word power(Letter a, int k) { return Word(std::vector<Letter>(static_cast<std::size_t>(k), a)); }

}  // namespace

MergerTriple ArtinGroup::merge(const Word& g1_in, const Word& g2_in, bool allow_counterexample) const {
  if (!allow_counterexample) require_33m(pres_, "merging");
  MergerTriple t;
  t.g1 = nf(g1_in);
  t.g2 = nf(g2_in);
  Word a = t.g1, b = t.g2;
  int r = 0, pi = 0, pj = 0;

  auto admissible = [&](const Word& na, const Word& nb) {
    return permissible(na, multiply(na.inverse(), t.g1)) && permissible(multiply(t.g2, nb.inverse()), nb);
  };
  auto step = [&](StepKind kind, int i, int j, const Word& h, const Word& hp, int eps, int dr) {
    a = multiply(a, h.inverse());
    b = multiply(hp.inverse(), b);
    r += dr;
    if (dr != 0) {
      pi = i;
      pj = j;
    }
    t.trace.push_back({kind, i, j, h, hp, eps, r});
    if (r == 0) pi = pj = 0;
  };
  auto delta_pairs = [&]() {
    std::vector<std::pair<int, int>> out;
    if (r != 0) {
      out.emplace_back(pi, pj);
      return out;
    }
    for (auto [i, j] : pres_.pairs())
      if (pres_.finite(i, j)) out.emplace_back(i, j);
    return out;
  };

  if (length(a + b) < static_cast<int>(a.size() + b.size())) {
    while (true) {
      bool moved = false;

      if (r == 0) {
        for (const Word& h : right_divisors(a)) {
          if (h.empty()) continue;
          Word hp = inverse(h);
          if (!is_left_divisor(hp, b)) continue;
          Word na = multiply(a, h.inverse()), nb = multiply(h, b);
          if (!admissible(na, nb)) continue;
          step(StepKind::Cancellation, 0, 0, h, hp, 0, 0);
          moved = true;
          break;
        }
      } else {
        const auto& G2 = pair_group(pi, pj);
        for (const Word& h : G2.right_divisors(rd(a, pi, pj))) {
          if (h.empty()) continue;
          Word hp = nf(G2.context().delta_power(G2.inverse(h), r));
          if (!is_left_divisor(hp, b)) continue;
          Word na = multiply(a, h.inverse()), nb = multiply(hp.inverse(), b);
          if (!admissible(na, nb)) continue;
          step(StepKind::Cancellation, pi, pj, h, hp, 0, 0);
          moved = true;
          break;
        }
      }
      if (moved) continue;

      if (is_signed(a) && is_signed(b)) {
        for (auto [i, j] : delta_pairs()) {
          for (int eps : {1, -1}) {
            Word d = garside(i, j, eps);
            if (!is_right_divisor(d, a) || !is_left_divisor(d, b)) continue;
            Word na = multiply(a, d.inverse()), nb = multiply(d.inverse(), b);
            if (!admissible(na, nb)) continue;
            step(StepKind::DoubleDelta, i, j, d, d, eps, 2 * eps);
            moved = true;
            break;
          }
          if (moved) break;
        }
      }
      if (moved) continue;

      for (auto [i, j] : delta_pairs()) {
        const auto& G2 = pair_group(i, j);
        const auto& ctx = G2.context();
        for (const Word& h : G2.right_divisors(rd(a, i, j))) {
          if (h.empty()) continue;
          for (int eps : {1, -1}) {
            Word hp = nf(ctx.delta_power(G2.nf(h.inverse() + ctx.garside(eps)), r));
            if (hp.empty() || !is_left_divisor(hp, b)) continue;
            Word na = multiply(a, h.inverse()), nb = multiply(hp.inverse(), b);
            if (!admissible(na, nb)) continue;
            step(StepKind::DeltaExtraction, i, j, h, hp, eps, eps);
            moved = true;
            break;
          }
          if (moved) break;
        }
        if (moved) break;
      }
      if (!moved) break;
    }
  }
  t.f1 = a;
  t.f2 = b;
  t.r = r;
  t.i = pi;
  t.j = pj;
  t.h1 = nf(a.inverse() + t.g1);
  t.h2 = nf(t.g2 + b.inverse());
  return t;
}

std::tuple<Word, int, Word> ArtinGroup::replay(const Word& g1, const Word& g2,
                                               const std::vector<MergeStep>& trace) const {
  Word a = nf(g1), b = nf(g2);
  int r = 0;
  for (const auto& s : trace) {
    a = multiply(a, s.h.inverse());
    b = multiply(s.h_prime.inverse(), b);
    if (s.kind == StepKind::DoubleDelta) r += 2 * s.epsilon;
    if (s.kind == StepKind::DeltaExtraction) r += s.epsilon;
    if (r != s.r_after) throw Error(ErrorKind::InvalidArgument, "merge trace is inconsistent with its exponents");
  }
  return {a, r, b};
}

bool STReport::add(const MergerTriple& m) {
  ++pairs;
  max_p1 = std::max(max_p1, static_cast<int>(m.h1.size()));
  max_p2 = std::max(max_p2, static_cast<int>(m.h2.size()));
  max_abs_r = std::max(max_abs_r, std::abs(m.r));
  auto t = std::make_tuple(m.i, m.j, m.r);
  auto pos = std::lower_bound(T.begin(), T.end(), t);
  if (pos == T.end() || *pos != t) T.insert(pos, t);
  for (const auto& e : S)
    if (e.f1 == m.f1 && e.i == m.i && e.j == m.j && e.r == m.r && e.f2 == m.f2) return false;
  S.push_back({m.f1, m.i, m.j, m.r, m.f2, m.g1, m.g2, m.h1, m.h2});
  return true;
}

STReport ArtinGroup::build_S_T(const Word& g_in, int k, int l, std::span<const Word> sphere_k) const {
  STReport st;
  Word g = nf(g_in);
  if (k + l < static_cast<int>(g.size()))
    throw Error(ErrorKind::InvalidArgument, "S(g,k,l) needs k + l >= |g|");
  for (const Word& g1 : sphere_k) {
    if (static_cast<int>(g1.size()) != k) continue;
    Word g2 = nf(g1.inverse() + g);
    if (static_cast<int>(g2.size()) != l) continue;
    st.add(merge(g1, g2));
  }
  return st;
}

SDecomposition ArtinGroup::split_S(const STReport& st, const Word& g_in, int k, int l) const {
  SDecomposition out;
  Word g = nf(g_in);
  for (const auto& e : st.S) {
    SClass c;
    auto fail = [&](const std::string& why) {
      if (c.checks_ok) c.failure = why;
      c.checks_ok = false;
    };
    if (e.r == 0 && same_cyclic(e.f1, e.f2)) {
      c.part = SClass::Part::S0;
      out.items.push_back(c);
      ++out.s0;
      continue;
    }
    // Pair of the triple; for r = 0 the least pair, finite labels first.
    int i = e.i, j = e.j;
    if (e.r == 0) {
      i = j = 0;
      for (int pass = 0; pass < 2 && i == 0; ++pass)
        for (auto [x, y] : pres_.pairs()) {
          if (pres_.finite(x, y) != (pass == 0)) continue;
          if (same_cyclic(rd(e.f1, x, y), ld(e.f2, x, y))) continue;
          i = x;
          j = y;
          break;
        }
      if (i == 0) {
        fail("no generator pair separates f1 and f2");
        out.items.push_back(c);
        ++out.failures;
        continue;
      }
    }
    c.i = i;
    c.j = j;
    c.f1p = rd(e.f1, i, j);
    c.f2p = ld(e.f2, i, j);
    c.h1p = ld(e.h1, i, j);
    c.h2p = rd(e.h2, i, j);
    c.fhat = nf(c.f1p + c.h1p + c.h2p + c.f2p);
    c.f1pp = nf(e.f1 + c.f1p.inverse());
    c.f2pp = nf(c.f2p.inverse() + e.f2);

    if (!rd(c.f1pp, i, j).empty()) fail("f1'' has a right divisor in G(i,j)");
    if (!ld(c.f2pp, i, j).empty()) fail("f2'' has a left divisor in G(i,j)");
    if (nf(c.f1pp + c.fhat + c.f2pp) != g) fail("g != f1'' fhat f2''");
    if (nf(c.h1p + c.h2p) != garside(i, j, e.r)) fail("h1' h2' != Delta^r");
    Word left = nf(c.f1p + c.h1p), right = nf(c.h2p + c.f2p);
    if (static_cast<int>(left.size()) > k || static_cast<int>(right.size()) > l) fail("inner lengths exceed k, l");
    if (cyclic_name(c.fhat) >= 0) fail("fhat lies in a cyclic subgroup");
    if (pres_.finite(i, j)) {
      auto inner = pair_group(i, j).merge(left, right);
      c.inner_merge_agrees = inner.f1 == c.f1p && inner.f2 == c.f2p && inner.r == e.r;
    }

    int total = static_cast<int>(c.f1pp.size() + c.fhat.size() + c.f2pp.size());
    if (total == static_cast<int>(g.size())) {
      c.part = SClass::Part::S1;
    } else {
      c.part = SClass::Part::S2;
      const Word* two = nullptr;
      for (const Word& w : geodesics(c.fhat))
        if (w.syllable_count() == 2) {
          two = &w;
          break;
        }
      if (!two) {
        fail("fhat has no two-syllable geodesic");
      } else {
        auto syl = two->syllables();
        c.a = Letter(syl[0].gen, syl[0].exponent > 0);
        c.b = Letter(syl[1].gen, syl[1].exponent > 0);
        c.s = static_cast<int>(syl[0].length());
        c.t = static_cast<int>(syl[1].length());
        if (!pres_.finite(i, j)) fail("S2 triple over an infinite label");
        Word X = nf(c.f1pp + power(*c.a, c.s)), Y = nf(power(*c.b, c.t) + c.f2pp);
        for (int idx = 0; idx < 2 * generators() && !c.c; ++idx) {
          Letter x = Letter::from_index(idx);
          if (x.gen() == i || x.gen() == j) continue;
          int q = 0;
          while (q < static_cast<int>(X.size()) && is_right_divisor(power(x, q + 1), X) &&
                 is_left_divisor(power(x.inverse(), q + 1), Y))
            ++q;
          if (q == 0) continue;
          c.c = x;
          c.q = q;
        }
        if (!c.c) {
          fail("no letter c with f1'' a^s = e1 c^q");
        } else {
          c.e1 = nf(X + power(c.c->inverse(), c.q));
          c.e2 = nf(power(*c.c, c.q) + Y);
          if (static_cast<int>(c.e1.size()) + c.q != static_cast<int>(X.size())) fail("e1 c^q is not geodesic");
          if (static_cast<int>(c.e2.size()) + c.q != static_cast<int>(Y.size())) fail("c^-q e2 is not geodesic");
          Word prod = nf(c.e1 + c.e2);
          if (prod != g || prod.size() != c.e1.size() + c.e2.size()) fail("e1 e2 is not a geodesic factorisation of g");
          if (c.q > k) fail("q > k");
        }
      }
    }
    if (c.part == SClass::Part::S1) ++out.s1;
    else ++out.s2;
    if (!c.checks_ok) ++out.failures;
    out.items.push_back(c);
  }
  return out;
}

}  // namespace artin::large
