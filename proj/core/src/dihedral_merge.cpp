#include <algorithm>
#include <optional>

#include "artin/dihedral.hpp"

namespace artin::dihedral {

namespace {

struct Side {
  const Group& G;
  const Word& g1;
  const Word& g2;

  // a is the left remainder of g1, b the right remainder of g2.
  bool admissible(const Word& a, const Word& b) const {
    return G.permissible(a, G.multiply(G.inverse(a), g1)).permissible &&
           G.permissible(G.multiply(g2, G.inverse(b)), b).permissible;
  }
};

}  // namespace

MergerTripleD Group::merge(const Word& g1_in, const Word& g2_in) const {
  MergerTripleD t;
  t.g1 = nf(g1_in);
  t.g2 = nf(g2_in);
  Word a = t.g1, b = t.g2;
  int r = 0;
  const bool finite = ctx_.finite();
  Side side{*this, t.g1, t.g2};

  if (length(a + b) < static_cast<int>(a.size() + b.size())) {
    while (true) {
      bool moved = false;
      std::vector<Word> divs = right_divisors(a);

      for (const Word& h : divs) {
        if (h.empty()) continue;
        Word hp = nf(ctx_.delta_power(inverse(h), r));
        if (hp.empty() || !is_left_divisor(hp, b)) continue;
        Word na = multiply(a, inverse(h)), nb = multiply(inverse(hp), b);
        if (!side.admissible(na, nb)) continue;
        t.trace.push_back({MergeStep::Kind::Cancellation, h, hp, 0, r});
        a = na;
        b = nb;
        moved = true;
        break;
      }
      if (moved) continue;
      if (!finite) break;

      if (a.sign_class() != SignClass::Unsigned && b.sign_class() != SignClass::Unsigned &&
          !a.empty() && !b.empty()) {
        for (int eps : {1, -1}) {
          Word d = nf(ctx_.garside(eps));
          if (!is_right_divisor(d, a) || !is_left_divisor(d, b)) continue;
          Word na = multiply(a, inverse(d)), nb = multiply(inverse(d), b);
          if (!side.admissible(na, nb)) continue;
          r += 2 * eps;
          t.trace.push_back({MergeStep::Kind::DoubleDelta, d, d, eps, r});
          a = na;
          b = nb;
          moved = true;
          break;
        }
      }
      if (moved) continue;

      for (const Word& h : divs) {
        if (h.empty()) continue;
        for (int eps : {1, -1}) {
          Word hp = nf(ctx_.delta_power(nf(inverse(h) + ctx_.garside(eps)), r));
          if (hp.empty() || !is_left_divisor(hp, b)) continue;
          Word na = multiply(a, inverse(h)), nb = multiply(inverse(hp), b);
          if (!side.admissible(na, nb)) continue;
          r += eps;
          t.trace.push_back({MergeStep::Kind::DeltaExtraction, h, hp, eps, r});
          a = na;
          b = nb;
          moved = true;
          break;
        }
        if (moved) break;
      }
      if (!moved) break;
    }
  }
  t.f1 = a;
  t.f2 = b;
  t.r = r;
  t.h1 = nf(a.inverse() + t.g1);
  t.h2 = nf(t.g2 + b.inverse());
  return t;
}

std::tuple<Word, int, Word> Group::replay(const Word& g1, const Word& g2,
                                          const std::vector<MergeStep>& trace) const {
  Word a = nf(g1), b = nf(g2);
  int r = 0;
  for (const auto& step : trace) {
    a = multiply(a, inverse(step.h));
    b = multiply(inverse(step.h_prime), b);
    switch (step.kind) {
      case MergeStep::Kind::Cancellation: break;
      case MergeStep::Kind::DoubleDelta: r += 2 * step.epsilon; break;
      case MergeStep::Kind::DeltaExtraction: r += step.epsilon; break;
    }
    if (r != step.r_after)
      throw Error(ErrorKind::InvalidArgument, "merge trace is inconsistent with its recorded exponents");
  }
  return {a, r, b};
}

namespace {

int sgn(int x) { return (x > 0) - (x < 0); }

// Index one past the maximal alternating run containing position pos.
std::size_t run_end(const Word& w, std::size_t pos) {
  std::size_t e = pos + 1;
  while (e < w.size() && w[e].positive() == w[pos].positive() && w[e].gen() != w[e - 1].gen()) ++e;
  return e;
}

// Absorbs Delta^{sign(r)} factors into w: each step rewrites an
// opposite-signed maximal alternating block N with tail xi as N xi Delta =
// R delta(xi), R the positive (negative) block of length m - |N|. Blocks are
// tried rightmost first; the first geodesic result wins. Returns the
// remaining r.
int absorb(Word& w, int r, const Context& ctx, std::vector<CompressionStage>& log, const char* stage,
           bool& fallback) {
  const int m = ctx.m();
  while (r != 0) {
    bool want_positive = r > 0;  // letters produced by the move
    std::vector<std::pair<std::size_t, std::size_t>> blocks;  // (start, end), rightmost first
    for (std::size_t k = w.size(); k-- > 0;) {
      if (w[k].positive() == want_positive) continue;
      std::size_t bs = k;
      while (bs > 0 && w[bs - 1].positive() == w[k].positive() && w[bs - 1].gen() != w[bs].gen()) --bs;
      blocks.emplace_back(bs, k + 1);
      k = bs;
    }
    if (blocks.empty()) break;
    auto rewrite = [&](std::size_t bs, std::size_t be) {
      int n = std::min(m, static_cast<int>(be - bs));
      Letter x = w[bs];
      Letter y(x.gen() == ctx.i() ? ctx.j() : ctx.i(), want_positive);
      Letter xp(x.gen(), want_positive);
      std::vector<Letter> out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(bs));
      for (int k = 0; k < m - n; ++k) out.push_back(k % 2 == 0 ? y : xp);
      Word tail = ctx.delta_word(w.subword(bs + static_cast<std::size_t>(n), w.size() - bs - static_cast<std::size_t>(n)));
      out.insert(out.end(), tail.begin(), tail.end());
      return Word(std::move(out));
    };
    std::optional<Word> pick;
    for (auto [bs, be] : blocks) {
      Word cand = rewrite(bs, be);
      if (cand.freely_reduced() && is_geodesic_dihedral(cand, ctx).geodesic) {
        pick = cand;
        break;
      }
    }
    if (!pick) {
      fallback = true;
      auto longest = *std::max_element(blocks.begin(), blocks.end(), [](auto a, auto b) {
        return a.second - a.first < b.second - b.first;
      });
      pick = reduce_dihedral(rewrite(longest.first, longest.second), ctx).word;
    }
    Word before = w;
    w = *pick;
    r -= sgn(r);
    log.push_back({stage, before, w});
  }
  return r;
}

}  // namespace

Compression Group::compress(const MergerTripleD& t) const {
  if (!ctx_.finite()) throw Error(ErrorKind::InvalidArgument, "compression needs a finite label");
  Compression c;
  const int m = ctx_.m();
  Word f1 = nf(t.f1), f2 = nf(t.f2);
  auto signed_power = [&](const Word& f) {
    SignClass s = f.sign_class();
    if (s == SignClass::Positive) return garside_power(f);
    if (s == SignClass::Negative) return -garside_power(f);
    return 0;
  };
  int d1 = signed_power(f1), d2 = signed_power(f2);
  if (d1 != 0 && d2 != 0 && (d1 > 0) != (d2 > 0))
    throw Error(ErrorKind::InvalidArgument, "compression precondition: merger sides carry opposite powers of Delta");
  Word u = f1, v = f2;
  if (d1 != 0 && d2 != 0) {
    // Only for a trivial triple with f1 f2 geodesic: both powers join the middle.
    c.r0 = d1 + d2;
    c.shape = "u.D^r0.v";
    u = nf(f1 + ctx_.garside(-d1));
    v = nf(ctx_.garside(-d2) + f2);
  } else if (d1 != 0) {
    c.r0 = d1;
    c.shape = "u.D^r0,v";
    u = nf(f1 + ctx_.garside(-d1));
  } else if (d2 != 0) {
    c.r0 = d2;
    c.shape = "u,D^r0.v";
    v = nf(ctx_.garside(-d2) + f2);
  } else {
    c.shape = "plain";
  }
  int r1 = t.r + c.r0;
  Word w0 = u + ctx_.delta_power(v, r1);
  if (!w0.freely_reduced()) {
    c.fallback_used = true;
    w0 = reduce_dihedral(w0, ctx_).word;
  }

  // Split after the maximal alternating run holding the last letter of u.
  std::size_t cut = u.empty() ? 0 : run_end(w0, std::min(u.size(), w0.size()) - 1);
  Word u1 = w0.prefix(cut), v1 = w0.suffix(w0.size() - cut);
  c.log.push_back({"split", w0, u1 + v1});

  Word u2 = u1;
  if (!is_geodesic(u1)) {
    auto occ = critical::over_critical_in(u1.letters(), ctx_.i(), ctx_.j(), m);
    bool done = false;
    for (const auto& o : occ) {
      if (o.front >= m || o.end >= m) continue;
      Word cand(critical::apply(u1.letters(), o));
      if (is_geodesic(cand)) {
        u2 = cand;
        done = true;
        break;
      }
    }
    if (!done) {
      c.fallback_used = true;
      u2 = reduce_dihedral(u1, ctx_).word;
    }
    c.log.push_back({"u2", u1, u2});
  }

  // Paired unsigned moves straddling the u/v boundary.
  Word cur = u2 + v1;
  std::size_t boundary = u2.size();
  while (!is_geodesic(cur)) {
    auto occ = critical::over_critical_in(cur.letters(), ctx_.i(), ctx_.j(), m);
    const critical::Occurrence* pick = nullptr;
    for (const auto& o : occ) {
      if (o.front >= m || o.end >= m) continue;
      if (o.start + static_cast<std::size_t>(o.front) > boundary) continue;
      if (o.start + o.length - static_cast<std::size_t>(o.end) < boundary) continue;
      if (!pick || o.start > pick->start || (o.start == pick->start && o.length < pick->length)) pick = &o;
    }
    if (!pick) {
      c.fallback_used = true;
      Word red = reduce_dihedral(cur, ctx_).word;
      c.log.push_back({"pair", cur, red});
      boundary = std::min(boundary, red.size());
      cur = red;
      break;
    }
    Word next(critical::apply(cur.letters(), *pick));
    c.log.push_back({"pair", cur, next});
    boundary = pick->start + static_cast<std::size_t>(m - pick->front) + (boundary - pick->start - static_cast<std::size_t>(pick->front));
    cur = next;
  }
  Word u3 = cur.prefix(boundary), v3 = cur.suffix(cur.size() - boundary);

  Word v4 = v3;
  int rp = absorb(v4, r1, ctx_, c.log, "v-absorb", c.fallback_used);
  Word u4 = u3;
  int s = absorb(u4, rp, ctx_, c.log, "u-absorb", c.fallback_used);
  c.r_prime = rp;
  c.s = s;
  c.unsigned_part = u4 + ctx_.delta_power(v4, rp - s);
  c.word = c.unsigned_part + ctx_.garside(s);
  if (!is_geodesic(c.word)) {
    // A Delta absorbed into v3 alone can leave an over-critical word across
    // the u/v boundary, e.g. (a, Delta^-1, bb) in DA(4) gives abABA.
    c.fallback_used = true;
    Word before = c.word;
    c.unsigned_part = reduce_dihedral(c.unsigned_part, ctx_).word;
    c.word = c.unsigned_part + ctx_.garside(s);
    if (!is_geodesic(c.word)) c.word = reduce_dihedral(c.word, ctx_).word;
    c.log.push_back({"repair", before, c.word});
  }
  c.kappa = nf(u4);
  return c;
}

}  // namespace artin::dihedral
