#include "artin/dihedral.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <unordered_set>

namespace artin::critical {

namespace {

bool continues(Letter prev2, bool has_prev2, Letter prev, Letter cur, bool positive) {
  if (cur.positive() != positive || prev.positive() != positive) return false;
  if (cur.gen() == prev.gen()) return false;
  return !has_prev2 || cur.gen() == prev2.gen();
}

Letter other_letter(Letter a, int gen_a, int gen_b, bool positive) {
  int other = a.gen() == gen_a ? gen_b : gen_a;
  return Letter(other, positive);
}

}  // namespace

int prefix_run(std::span<const Letter> v, bool positive) {
  if (v.empty() || v[0].positive() != positive) return 0;
  std::size_t k = 1;
  while (k < v.size() && continues(k >= 2 ? v[k - 2] : Letter(), k >= 2, v[k - 1], v[k], positive))
    ++k;
  return static_cast<int>(k);
}

int suffix_run(std::span<const Letter> v, bool positive) {
  if (v.empty() || v.back().positive() != positive) return 0;
  std::size_t n = v.size();
  std::size_t k = 1;
  // Walk leftwards; the alternation test is symmetric.
  while (k < n && continues(k >= 2 ? v[n - k + 1] : Letter(), k >= 2, v[n - k], v[n - k - 1], positive))
    ++k;
  return static_cast<int>(k);
}

int longest_run(std::span<const Letter> v, bool positive) {
  int best = 0, cur = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].positive() != positive) {
      cur = 0;
      continue;
    }
    if (cur > 0 && continues(cur >= 2 ? v[k - 2] : Letter(), cur >= 2, v[k - 1], v[k], positive)) {
      ++cur;
    } else {
      cur = 1;
    }
    best = std::max(best, cur);
  }
  return best;
}

namespace {

bool two_names(std::span<const Letter> v, int& a, int& b) {
  a = 0;
  b = 0;
  for (Letter l : v) {
    int g = l.gen();
    if (a == 0 || g == a) {
      a = g;
    } else if (b == 0 || g == b) {
      b = g;
    } else {
      return false;
    }
  }
  return a != 0 && b != 0;
}

bool freely_reduced(std::span<const Letter> v) {
  for (std::size_t k = 1; k < v.size(); ++k)
    if (v[k] == v[k - 1].inverse()) return false;
  return true;
}

// Counts windows of length m inside maximal runs of the given sign and
// reports the span of the unique run reaching length m.
int long_windows(std::span<const Letter> v, bool positive, int m, std::size_t& run_start,
                 std::size_t& run_end) {
  int windows = 0;
  std::size_t start = 0;
  int cur = 0;
  auto close = [&](std::size_t end) {
    if (cur >= m) {
      windows += cur - m + 1;
      run_start = start;
      run_end = end;
    }
  };
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].positive() != positive) {
      close(k);
      cur = 0;
      continue;
    }
    if (cur > 0 && continues(cur >= 2 ? v[k - 2] : Letter(), cur >= 2, v[k - 1], v[k], positive)) {
      ++cur;
    } else {
      close(k);
      cur = 1;
      start = k;
    }
  }
  close(v.size());
  return windows;
}

}  // namespace

std::optional<Shape> classify(std::span<const Letter> v, int m) {
  if (m == kInfinity || v.size() < 2) return std::nullopt;
  int ga, gb;
  if (!two_names(v, ga, gb) || !freely_reduced(v)) return std::nullopt;
  int p = std::min(m, longest_run(v, true));
  int n = std::min(m, longest_run(v, false));
  if (p + n != m) return std::nullopt;
  if (p > 0 && n > 0) {
    if (v[0].positive()) {
      if (prefix_run(v, true) == p && suffix_run(v, false) == n)
        return Shape{Kind::UnsignedPositiveFirst, p, n};
    } else {
      if (prefix_run(v, false) == n && suffix_run(v, true) == p)
        return Shape{Kind::UnsignedNegativeFirst, p, n};
    }
    return std::nullopt;
  }
  bool positive = n == 0;
  std::size_t rs = 0, re = 0;
  if (long_windows(v, positive, m, rs, re) != 1) return std::nullopt;
  bool at_start = rs == 0, at_end = re == v.size();
  Kind kind;
  if (at_start && at_end) {
    kind = positive ? Kind::PositiveWhole : Kind::NegativeWhole;
  } else if (at_start) {
    kind = positive ? Kind::PositivePrefix : Kind::NegativePrefix;
  } else if (at_end) {
    kind = positive ? Kind::PositiveSuffix : Kind::NegativeSuffix;
  } else {
    return std::nullopt;
  }
  return Shape{kind, p, n};
}

Letter delta(Letter l, int gen_a, int gen_b, int m) {
  if (m % 2 == 0) return l;
  if (l.gen() == gen_a) return Letter(gen_b, l.positive());
  if (l.gen() == gen_b) return Letter(gen_a, l.positive());
  return l;
}

std::vector<Letter> tau_unsigned(std::span<const Letter> v, int front, int end, int m, int gen_a,
                                 int gen_b) {
  bool front_positive = v[0].positive();
  std::vector<Letter> out;
  out.reserve(v.size());
  // Front block: the other name of the first letter, opposite sign.
  int new_front = m - front;
  if (new_front > 0) {
    Letter first = other_letter(v[0], gen_a, gen_b, !front_positive);
    Letter second(v[0].gen(), !front_positive);
    for (int k = 0; k < new_front; ++k) out.push_back(k % 2 == 0 ? first : second);
  }
  for (std::size_t k = static_cast<std::size_t>(front); k + static_cast<std::size_t>(end) < v.size(); ++k)
    out.push_back(delta(v[k], gen_a, gen_b, m));
  int new_end = m - end;
  if (new_end > 0) {
    Letter last_gen = v.back();
    bool sign = !last_gen.positive();
    Letter final_letter = other_letter(last_gen, gen_a, gen_b, sign);
    Letter before(last_gen.gen(), sign);
    std::size_t base = out.size();
    out.resize(base + static_cast<std::size_t>(new_end));
    for (int k = 0; k < new_end; ++k)
      out[base + static_cast<std::size_t>(new_end - 1 - k)] = (k % 2 == 0) ? final_letter : before;
  }
  return out;
}

std::vector<Letter> tau_unsigned(std::span<const Letter> v, bool positive_first, int p, int n, int m) {
  int ga, gb;
  if (!two_names(v, ga, gb)) {
    // A word with one name only arises for degenerate blocks; pick any partner.
    ga = v[0].gen();
    gb = ga == 1 ? 2 : 1;
  }
  return positive_first ? tau_unsigned(v, p, n, m, ga, gb) : tau_unsigned(v, n, p, m, ga, gb);
}

std::vector<Letter> tau(std::span<const Letter> v, const Shape& shape, int m) {
  int ga, gb;
  two_names(v, ga, gb);
  std::vector<Letter> out;
  out.reserve(v.size());
  auto block = [&](Letter first, int len) {
    Letter second = other_letter(first, ga, gb, first.positive());
    for (int k = 0; k < len; ++k) out.push_back(k % 2 == 0 ? first : second);
  };
  switch (shape.kind) {
    case Kind::UnsignedPositiveFirst:
      return tau_unsigned(v, shape.p, shape.n, m, ga, gb);
    case Kind::UnsignedNegativeFirst:
      return tau_unsigned(v, shape.n, shape.p, m, ga, gb);
    case Kind::PositiveWhole:
    case Kind::NegativeWhole:
      block(v[1], m);
      return out;
    case Kind::PositivePrefix:
    case Kind::NegativePrefix: {
      for (std::size_t k = static_cast<std::size_t>(m); k < v.size(); ++k)
        out.push_back(delta(v[k], ga, gb, m));
      Letter last = out.back();
      Letter first(last.gen(), v[0].positive());
      block(first, m);
      return out;
    }
    case Kind::PositiveSuffix:
    case Kind::NegativeSuffix: {
      std::size_t xi_len = v.size() - static_cast<std::size_t>(m);
      Letter first_xi = delta(v[0], ga, gb, m);
      Letter end_letter(first_xi.gen(), v.back().positive());
      Letter other = other_letter(end_letter, ga, gb, end_letter.positive());
      for (int k = 0; k < m; ++k) out.push_back(((m - 1 - k) % 2 == 0) ? end_letter : other);
      for (std::size_t k = 0; k < xi_len; ++k) out.push_back(delta(v[k], ga, gb, m));
      return out;
    }
  }
  return out;
}

std::vector<Occurrence> over_critical_in(std::span<const Letter> host, int gen_a, int gen_b, int m) {
  std::vector<Occurrence> out;
  if (m == kInfinity) return out;
  auto in_pair = [&](Letter l) { return l.gen() == gen_a || l.gen() == gen_b; };
  auto alternates = [&](std::size_t a, std::size_t b) {
    // host[a], host[b] adjacent letters continuing one alternating run
    return host[a].positive() == host[b].positive() && host[a].gen() != host[b].gen() &&
           in_pair(host[a]) && in_pair(host[b]);
  };
  const std::size_t L = host.size();
  for (std::size_t s = 0; s < L; ++s) {
    if (!in_pair(host[s])) continue;
    bool sigma = host[s].positive();
    for (std::size_t e = s + 2; e <= L; ++e) {
      Letter last = host[e - 1];
      if (!in_pair(last) || last == host[e - 2].inverse()) break;
      if (last.positive() == sigma) continue;
      auto u = host.subspan(s, e - s);
      int l1 = prefix_run(u, sigma);
      int l2 = suffix_run(u, !sigma);
      int front = std::min(m, l1), end = std::min(m, l2);
      if (front + end <= m) continue;
      if (front < m && s > 0 && alternates(s - 1, s)) continue;
      if (end < m && e < L && alternates(e - 1, e)) continue;
      Occurrence o;
      o.start = s;
      o.length = e - s;
      o.front = front;
      o.end = end;
      o.positive_first = sigma;
      o.gen_a = gen_a;
      o.gen_b = gen_b;
      o.m = m;
      out.push_back(o);
    }
  }
  return out;
}

std::vector<Letter> apply(std::span<const Letter> host, const Occurrence& o) {
  std::vector<Letter> out(host.begin(), host.begin() + static_cast<std::ptrdiff_t>(o.start));
  auto mid = tau_unsigned(host.subspan(o.start, o.length), o.front, o.end, o.m, o.gen_a, o.gen_b);
  out.insert(out.end(), mid.begin(), mid.end());
  out.insert(out.end(), host.begin() + static_cast<std::ptrdiff_t>(o.start + o.length), host.end());
  return out;
}

}  // namespace artin::critical

namespace artin::dihedral {

using critical::Kind;

Context::Context(int i, int j, int m, LetterOrder order) : i_(i), j_(j), m_(m), order_(std::move(order)) {
  if (i == j) throw Error(ErrorKind::InvalidArgument, "dihedral context needs two distinct generators");
  if (m != kInfinity && m < 2) throw Error(ErrorKind::InvalidArgument, "dihedral label must be >= 2");
  if (order_.generator_count() < std::max(i, j))
    throw Error(ErrorKind::InvalidArgument, "letter order does not cover the generator pair");
}

Context Context::of(const CoxeterPresentation& pres, int i, int j) {
  return of(pres, i, j, pres.standard_order());
}

Context Context::of(const CoxeterPresentation& pres, int i, int j, LetterOrder order) {
  if (i < 1 || j < 1 || i > pres.generators() || j > pres.generators())
    throw Error(ErrorKind::InvalidArgument, "generator pair out of range");
  return Context(std::min(i, j), std::max(i, j), pres.label(i, j), std::move(order));
}

Context Context::standard(int m) { return Context(1, 2, m, LetterOrder::standard(2)); }

void Context::check_word(const Word& w) const {
  if (!owns(w))
    throw Error(ErrorKind::InvalidArgument,
                "word " + to_string(w) + " involves a generator outside the pair");
}

Letter Context::delta(Letter a) const {
  if (!finite()) throw Error(ErrorKind::InvalidArgument, "delta is undefined for an infinite label");
  if (!owns(a)) throw Error(ErrorKind::InvalidArgument, "letter outside the generator pair");
  return critical::delta(a, i_, j_, m_);
}

Word Context::delta_word(const Word& w) const {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter a : w) out.push_back(delta(a));
  return Word(std::move(out));
}

Word Context::delta_power(const Word& w, int r) const {
  if (r % 2 == 0 || (finite() && m_ % 2 == 0)) return w;
  return delta_word(w);
}

Word Context::garside(int r) const {
  if (!finite()) throw Error(ErrorKind::InvalidArgument, "no Garside element for an infinite label");
  bool positive = r >= 0;
  Letter a(i_, positive), b(j_, positive);
  std::vector<Letter> out;
  int count = r < 0 ? -r : r;
  for (int k = 0; k < count; ++k) {
    // Delta^{-1} spelled a^-1 b^-1 ..., each factor starting afresh keeps the word reduced.
    Word d = alternating(a, b, m_, AlternatingSide::LeftStart);
    out.insert(out.end(), d.begin(), d.end());
  }
  return Word(std::move(out));
}

PN pn_values(const Word& w, const Context& ctx) {
  ctx.check_word(w);
  if (!w.freely_reduced()) throw Error(ErrorKind::InvalidArgument, "pn_values needs a freely reduced word");
  PN out;
  int cap = ctx.finite() ? ctx.m() : 1 << 30;
  out.p = std::min(cap, critical::longest_run(w.letters(), true));
  out.n = std::min(cap, critical::longest_run(w.letters(), false));
  return out;
}

GeodesicVerdict is_geodesic_dihedral(const Word& w, const Context& ctx) {
  GeodesicVerdict v;
  ctx.check_word(w);
  if (!w.freely_reduced()) return v;
  v.pn = pn_values(w, ctx);
  if (!ctx.finite()) {
    v.geodesic = true;
    v.unique = true;
    return v;
  }
  v.geodesic = v.pn.p + v.pn.n <= ctx.m();
  v.unique = v.pn.p + v.pn.n < ctx.m();
  return v;
}

std::optional<CriticalWord> classify_critical(const Word& w, const Context& ctx) {
  if (!ctx.finite() || !ctx.owns(w)) return std::nullopt;
  auto shape = critical::classify(w.letters(), ctx.m());
  if (!shape) return std::nullopt;
  CriticalWord c;
  c.host = w;
  c.shape = *shape;
  c.p = shape->p;
  c.n = shape->n;
  const int m = ctx.m();
  auto other = [&](Letter a) { return Letter(a.gen() == ctx.i() ? ctx.j() : ctx.i(), a.positive()); };
  switch (shape->kind) {
    case Kind::UnsignedPositiveFirst:
    case Kind::UnsignedNegativeFirst: {
      c.form = CriticalForm::Unsigned;
      c.x = w.front();
      c.y = other(c.x);
      c.t = w.back();
      c.z = other(c.t);
      std::size_t front = static_cast<std::size_t>(shape->kind == Kind::UnsignedPositiveFirst ? c.p : c.n);
      std::size_t back = static_cast<std::size_t>(shape->kind == Kind::UnsignedPositiveFirst ? c.n : c.p);
      c.xi = w.subword(front, w.size() - front - back);
      break;
    }
    case Kind::PositiveWhole:
    case Kind::NegativeWhole:
      c.form = shape->kind == Kind::PositiveWhole ? CriticalForm::Positive : CriticalForm::Negative;
      c.x = w[0];
      c.y = w[1];
      c.z = c.t = c.x;
      break;
    case Kind::PositivePrefix:
    case Kind::NegativePrefix:
      c.form = shape->kind == Kind::PositivePrefix ? CriticalForm::Positive : CriticalForm::Negative;
      c.x = w[0];
      c.y = w[1];
      c.xi = w.subword(static_cast<std::size_t>(m), w.size() - static_cast<std::size_t>(m));
      c.z = c.t = c.xi.back();
      break;
    case Kind::PositiveSuffix:
    case Kind::NegativeSuffix: {
      c.form = shape->kind == Kind::PositiveSuffix ? CriticalForm::Positive : CriticalForm::Negative;
      std::size_t off = w.size() - static_cast<std::size_t>(m);
      c.x = w[off];
      c.y = w[off + 1];
      c.xi = w.prefix(off);
      c.z = c.t = c.xi.front();
      break;
    }
  }
  return c;
}

Word tau(const CriticalWord& c, const Context& ctx) {
  return Word(critical::tau(c.host.letters(), c.shape, ctx.m()));
}

Word tau(const Word& w, const Context& ctx) {
  auto c = classify_critical(w, ctx);
  if (!c) throw Error(ErrorKind::NotCritical, "word " + to_string(w) + " is not critical");
  return tau(*c, ctx);
}

std::vector<OverCritical> find_over_critical(const Word& w, const Context& ctx) {
  ctx.check_word(w);
  std::vector<OverCritical> out;
  for (const auto& o : critical::over_critical_in(w.letters(), ctx.i(), ctx.j(), ctx.m())) {
    OverCritical oc;
    oc.start = o.start;
    oc.length = o.length;
    oc.positive_first = o.positive_first;
    oc.p = o.positive_first ? o.front : o.end;
    oc.n = o.positive_first ? o.end : o.front;
    out.push_back(oc);
  }
  return out;
}

Word apply_length_reducing_tau(const Word& w, const OverCritical& o, const Context& ctx) {
  for (const auto& c : critical::over_critical_in(w.letters(), ctx.i(), ctx.j(), ctx.m())) {
    int p = c.positive_first ? c.front : c.end;
    int n = c.positive_first ? c.end : c.front;
    if (c.start == o.start && c.length == o.length && p == o.p && n == o.n &&
        c.positive_first == o.positive_first)
      return Word(critical::apply(w.letters(), c));
  }
  throw Error(ErrorKind::NotCritical, "identified subword of " + to_string(w) + " is not over-critical");
}

const char* to_string(Move::Kind kind) {
  switch (kind) {
    case Move::Kind::UnsignedTau: return "unsigned_tau";
    case Move::Kind::PositiveTau: return "positive_tau";
    case Move::Kind::NegativeTau: return "negative_tau";
    case Move::Kind::FreeCancellation: return "free_cancellation";
    case Move::Kind::CriticalTau: return "critical_tau";
  }
  return "unknown";
}

const char* to_string(MergeStep::Kind kind) {
  switch (kind) {
    case MergeStep::Kind::Cancellation: return "cancellation";
    case MergeStep::Kind::DoubleDelta: return "double_delta";
    case MergeStep::Kind::DeltaExtraction: return "delta_extraction";
  }
  return "unknown";
}

Reduction reduce_dihedral(const Word& w, const Context& ctx) {
  ctx.check_word(w);
  Reduction out;
  Word cur = w;
  while (true) {
    std::size_t cancel = cur.size();
    for (std::size_t k = 1; k < cur.size(); ++k)
      if (cur[k] == cur[k - 1].inverse()) {
        cancel = k - 1;
        break;
      }
    if (cancel < cur.size()) {
      Word next = cur.prefix(cancel) + cur.subword(cancel + 2, cur.size() - cancel - 2);
      out.log.push_back({Move::Kind::FreeCancellation, cancel, 2, cur.subword(cancel, 2), Word()});
      cur = next;
      continue;
    }
    if (!ctx.finite()) break;
    PN pn = pn_values(cur, ctx);
    if (pn.p + pn.n <= ctx.m()) break;
    auto occ = critical::over_critical_in(cur.letters(), ctx.i(), ctx.j(), ctx.m());
    if (occ.empty())
      throw Error(ErrorKind::PropertyFalsified,
                  "non-geodesic word " + to_string(cur) + " has no over-critical subword");
    auto rank = [&](const critical::Occurrence& o) {
      bool unsig = o.front < ctx.m() && o.end < ctx.m();
      return std::make_tuple(unsig ? 0 : 1, o.length, o.start);
    };
    auto best = *std::min_element(occ.begin(), occ.end(),
                                  [&](const auto& a, const auto& b) { return rank(a) < rank(b); });
    Word next(critical::apply(cur.letters(), best));
    int p = best.positive_first ? best.front : best.end;
    int n = best.positive_first ? best.end : best.front;
    Move::Kind kind = Move::Kind::UnsignedTau;
    if (p == ctx.m()) kind = Move::Kind::PositiveTau;
    else if (n == ctx.m()) kind = Move::Kind::NegativeTau;
    Word after = next.subword(best.start, best.length - 2 * static_cast<std::size_t>(best.front + best.end - ctx.m()));
    out.log.push_back({kind, best.start, best.length, cur.subword(best.start, best.length), after});
    cur = next;
  }
  out.word = cur;
  return out;
}

namespace {

// Every word obtained from w by a single tau-move on a critical subword.
template <typename F>
void for_each_tau_neighbor(const Word& w, const Context& ctx, F&& f) {
  const auto letters = w.letters();
  for (std::size_t s = 0; s < w.size(); ++s)
    for (std::size_t e = s + static_cast<std::size_t>(ctx.m()); e <= w.size(); ++e) {
      auto span = letters.subspan(s, e - s);
      auto shape = critical::classify(span, ctx.m());
      if (!shape) continue;
      auto image = critical::tau(span, *shape, ctx.m());
      std::vector<Letter> out(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(s));
      out.insert(out.end(), image.begin(), image.end());
      out.insert(out.end(), letters.begin() + static_cast<std::ptrdiff_t>(e), letters.end());
      f(Word(std::move(out)));
    }
}

}  // namespace

Word shortlex_nf_dihedral(const Word& w, const Context& ctx) {
  if (!ctx.finite()) return reduce_dihedral(w, ctx).word;
  // Geodesics of one element are tau-connected; take the least of the orbit.
  return enumerate_geodesics_dihedral(w, ctx).front();
}

std::vector<Word> enumerate_geodesics_dihedral(const Word& w, const Context& ctx) {
  Word start = reduce_dihedral(w, ctx).word;
  std::unordered_set<Word, WordHash> seen{start};
  std::deque<Word> queue{start};
  if (ctx.finite()) {
    while (!queue.empty()) {
      Word cur = queue.front();
      queue.pop_front();
      for_each_tau_neighbor(cur, ctx, [&](Word cand) {
        if (seen.insert(cand).second) queue.push_back(std::move(cand));
      });
    }
  }
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(),
            [&](const Word& a, const Word& b) { return ctx.order().shortlex_less(a, b); });
  return out;
}

Group::Group(Context ctx) : ctx_(std::move(ctx)) {}

Word Group::nf(const Word& w) const {
  {
    std::shared_lock lock(mutex_);
    auto it = nf_cache_.find(w);
    if (it != nf_cache_.end()) return it->second;
  }
  Word out = shortlex_nf_dihedral(w, ctx_);
  std::unique_lock lock(mutex_);
  nf_cache_.emplace(w, out);
  return out;
}

bool Group::is_geodesic(const Word& w) const {
  return w.freely_reduced() && is_geodesic_dihedral(w, ctx_).geodesic;
}

const std::vector<Word>& Group::geodesics(const Word& g) const {
  Word key = nf(g);
  {
    std::shared_lock lock(mutex_);
    auto it = geodesic_cache_.find(key);
    if (it != geodesic_cache_.end()) return *it->second;
  }
  auto list = std::make_unique<std::vector<Word>>(enumerate_geodesics_dihedral(key, ctx_));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = geodesic_cache_.emplace(key, std::move(list));
  return *it->second;
}

namespace {

std::vector<Word> collect_divisors(const Group& G, const Word& g, bool right) {
  std::unordered_set<Word, WordHash> set;
  for (const Word& w : G.geodesics(g))
    for (std::size_t len = 0; len <= w.size(); ++len)
      set.insert(G.nf(right ? w.suffix(len) : w.prefix(len)));
  std::vector<Word> out(set.begin(), set.end());
  const auto& order = G.context().order();
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return order.compare_lex(a.letters(), b.letters()) < 0;
  });
  return out;
}

}  // namespace

std::vector<Word> Group::right_divisors(const Word& g) const { return collect_divisors(*this, g, true); }
std::vector<Word> Group::left_divisors(const Word& g) const { return collect_divisors(*this, g, false); }

bool Group::is_left_divisor(const Word& h, const Word& g) const {
  return length(h) + length(h.inverse() + g) == length(g);
}

bool Group::is_right_divisor(const Word& h, const Word& g) const {
  return length(h) + length(g + h.inverse()) == length(g);
}

int Group::garside_power(const Word& g) const {
  if (!ctx_.finite()) throw Error(ErrorKind::InvalidArgument, "d(g) is undefined for an infinite label");
  Word key = nf(g);
  SignClass s = key.sign_class();
  if (s == SignClass::Empty) return 0;
  if (s == SignClass::Unsigned)
    throw Error(ErrorKind::InvalidArgument, "d(g) is defined only for signed elements, got " + to_string(key));
  {
    std::shared_lock lock(mutex_);
    auto it = d_cache_.find(key);
    if (it != d_cache_.end()) return it->second;
  }
  Word strip = ctx_.garside(s == SignClass::Positive ? -1 : 1);
  int k = 0;
  Word cur = key;
  while (static_cast<int>(cur.size()) >= ctx_.m()) {
    Word next = nf(strip + cur);
    if (next.size() + static_cast<std::size_t>(ctx_.m()) != cur.size()) break;
    cur = next;
    ++k;
  }
  std::unique_lock lock(mutex_);
  d_cache_.emplace(key, k);
  return k;
}

bool Group::has_short_syllable_form(const Word& g) const {
  for (const Word& w : geodesics(g))
    if (w.syllable_count() <= 2) return true;
  return false;
}

PermissibleVerdict Group::permissible(const Word& g1, const Word& g2) const {
  PermissibleVerdict v;
  Word a = nf(g1), b = nf(g2);
  Word g = nf(a + b);
  v.geodesic = a.size() + b.size() == g.size();
  if (!v.geodesic) return v;
  v.unsigned_or_free = !ctx_.finite() || g.sign_class() == SignClass::Unsigned;
  v.p1 = has_short_syllable_form(a) || has_short_syllable_form(b);
  if (ctx_.finite() && g.sign_class() != SignClass::Unsigned)
    v.p2 = garside_power(a) + garside_power(b) == garside_power(g);
  v.permissible = v.unsigned_or_free || v.p1 || v.p2;
  return v;
}

}  // namespace artin::dihedral
