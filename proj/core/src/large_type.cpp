#include "artin/large_type.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace artin::large {

namespace {

bool two_names(std::span<const Letter> v, int& a, int& b) {
  a = b = 0;
  for (Letter l : v) {
    int g = l.gen();
    if (g == a || g == b) continue;
    if (a == 0) a = g;
    else if (b == 0) b = g;
    else return false;
  }
  return b != 0;
}

std::optional<std::vector<Letter>> tau_if_critical(std::span<const Letter> v, const CoxeterPresentation& pres) {
  int a, b;
  if (v.size() < 3 || !two_names(v, a, b)) return std::nullopt;
  int m = pres.label(a, b);
  if (m == kInfinity || static_cast<int>(v.size()) < m) return std::nullopt;
  auto shape = critical::classify(v, m);
  if (!shape) return std::nullopt;
  return critical::tau(v, *shape, m);
}

// Tracks the distinct names of a span grown one letter at a time.
struct NameSet {
  int a = 0, b = 0;
  bool overflow = false;
  void add(int g) {
    if (g == a || g == b) return;
    if (a == 0) a = g;
    else if (b == 0) b = g;
    else overflow = true;
  }
  bool admits(int g) const { return !overflow && (b == 0 || g == a || g == b); }
};

Word replaced(const std::vector<Letter>& cur, std::size_t s, const std::vector<Letter>& image,
              std::size_t old_len) {
  std::vector<Letter> out(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(s));
  out.insert(out.end(), image.begin(), image.end());
  out.insert(out.end(), cur.begin() + static_cast<std::ptrdiff_t>(s + old_len), cur.end());
  return Word(std::move(out));
}

}  // namespace

std::optional<CriticalSequence> rightward_length_reducing(const Word& v, const CoxeterPresentation& pres) {
  if (v.size() < 2) return std::nullopt;
  const std::size_t L = v.size() - 1;
  const Letter target = v.back().inverse();
  CriticalSequence seq;
  seq.direction = CriticalSequence::Direction::Rightward;
  seq.before = v;
  if (v[L - 1] == target) {
    seq.free_cancellation = true;
    seq.after = v.prefix(L - 1);
    return seq;
  }

  struct Opt {
    Letter letter;
    std::size_t s;
    int src;  // -1: original letter at s, else index into opts[s]
  };
  std::vector<std::vector<Opt>> opts(L);
  std::vector<Letter> span;
  bool found = false;
  for (std::size_t e = 1; e < L && !found; ++e) {
    NameSet names;
    names.add(v[e].gen());
    for (std::size_t s = e; s-- > 0 && !found;) {
      if (s + 1 < e) names.add(v[s + 1].gen());
      if (names.overflow) break;
      const int n_cand = 1 + static_cast<int>(opts[s].size());
      for (int c = -1; c + 1 < n_cand && !found; ++c) {
        Letter first = c < 0 ? v[s] : opts[s][static_cast<std::size_t>(c)].letter;
        if (!names.admits(first.gen())) continue;
        span.assign(v.begin() + static_cast<std::ptrdiff_t>(s), v.begin() + static_cast<std::ptrdiff_t>(e + 1));
        span[0] = first;
        auto image = tau_if_critical(span, pres);
        if (!image) continue;
        Letter last = image->back();
        if (last == v[e]) continue;
        bool seen = false;
        for (const Opt& o : opts[e]) seen = seen || o.letter == last;
        if (seen) continue;
        opts[e].push_back({last, s, c});
        if (e == L - 1 && last == target) found = true;
      }
    }
  }
  if (!found) return std::nullopt;

  // Walk the back pointers, then apply the moves left to right.
  std::vector<std::pair<std::size_t, std::size_t>> chain;
  std::size_t e = L - 1;
  const Opt* o = &opts[e].back();
  while (true) {
    chain.emplace_back(o->s, e);
    if (o->src < 0) break;
    e = o->s;
    o = &opts[e][static_cast<std::size_t>(o->src)];
  }
  std::reverse(chain.begin(), chain.end());
  std::vector<Letter> cur(v.begin(), v.end() - 1);
  for (auto [s, e2] : chain) {
    std::span<const Letter> sub(cur.data() + s, e2 - s + 1);
    auto image = tau_if_critical(sub, pres);
    if (!image) throw Error(ErrorKind::PropertyFalsified, "critical sequence replay hit a non-critical subword");
    TauMove mv{s, e2 - s + 1, Word(std::vector<Letter>(sub.begin(), sub.end())), Word(*image)};
    std::copy(image->begin(), image->end(), cur.begin() + static_cast<std::ptrdiff_t>(s));
    seq.moves.push_back(std::move(mv));
  }
  if (cur.back() != target) throw Error(ErrorKind::PropertyFalsified, "critical sequence did not produce the cancelling letter");
  cur.pop_back();
  seq.free_cancellation = true;
  seq.after = Word(std::move(cur));
  return seq;
}

namespace {

struct LeftSearch {
  const CoxeterPresentation& pres;
  const LetterOrder& order;
  Word best;
  std::vector<TauMove> best_moves;
  std::vector<TauMove> moves;

  void run(const std::vector<Letter>& cur, std::size_t e) {
    NameSet names;
    names.add(cur[e].gen());
    for (std::size_t s = e; s-- > 0;) {
      names.add(cur[s].gen());
      if (names.overflow) break;
      std::span<const Letter> sub(cur.data() + s, e - s + 1);
      auto image = tau_if_critical(sub, pres);
      if (!image) continue;
      Word next = replaced(cur, s, *image, sub.size());
      moves.push_back({s, sub.size(), Word(std::vector<Letter>(sub.begin(), sub.end())), Word(*image)});
      if (order.compare_lex(next.letters(), best.letters()) < 0) {
        best = next;
        best_moves = moves;
      }
      run(next.vec(), s);
      moves.pop_back();
    }
  }
};

}  // namespace

std::optional<CriticalSequence> leftward_lex_reducing(const Word& v, const CoxeterPresentation& pres,
                                                      const LetterOrder& order) {
  if (v.size() < 3) return std::nullopt;
  LeftSearch search{pres, order, v, {}, {}};
  search.run(v.vec(), v.size() - 1);
  if (search.best == v) return std::nullopt;
  CriticalSequence seq;
  seq.direction = CriticalSequence::Direction::Leftward;
  seq.before = v;
  seq.after = search.best;
  seq.moves = std::move(search.best_moves);
  return seq;
}

std::vector<Word> tau_neighbors(const Word& w, const CoxeterPresentation& pres) {
  std::vector<Word> out;
  const auto& cur = w.vec();
  for (std::size_t s = 0; s < w.size(); ++s) {
    NameSet names;
    for (std::size_t e = s; e < w.size(); ++e) {
      names.add(w[e].gen());
      if (names.overflow) break;
      std::span<const Letter> sub(cur.data() + s, e - s + 1);
      auto image = tau_if_critical(sub, pres);
      if (image) out.push_back(replaced(cur, s, *image, sub.size()));
    }
  }
  return out;
}

const char* to_string(ReductionStep::Kind kind) {
  switch (kind) {
    case ReductionStep::Kind::Append: return "append";
    case ReductionStep::Kind::FreeCancellation: return "free_cancellation";
    case ReductionStep::Kind::LengthReducing: return "rightward_length_reducing";
    case ReductionStep::Kind::LexReducing: return "leftward_lex_reducing";
  }
  return "unknown";
}

const char* to_string(SClass::Part p) {
  switch (p) {
    case SClass::Part::S0: return "S0";
    case SClass::Part::S1: return "S1";
    case SClass::Part::S2: return "S2";
  }
  return "?";
}

ShortlexEngine::ShortlexEngine(CoxeterPresentation pres, LetterOrder order)
    : pres_(std::move(pres)), order_(std::move(order)) {
  require_large(pres_, "shortlex reduction");
  if (order_.generator_count() != pres_.generators())
    throw Error(ErrorKind::InvalidArgument, "letter order does not match the presentation");
}

Word ShortlexEngine::append(const Word& prefix, Letter a, std::size_t index,
                            std::vector<ReductionStep>* log) const {
  if (a.gen() < 1 || a.gen() > pres_.generators())
    throw Error(ErrorKind::InvalidArgument, "letter " + to_string(a) + " is outside the presentation");
  if (!prefix.empty() && prefix.back() == a.inverse()) {
    Word out = prefix.prefix(prefix.size() - 1);
    if (log) log->push_back({ReductionStep::Kind::FreeCancellation, index, std::nullopt, out});
    return out;
  }
  Word v = prefix.pushed(a);
  if (auto seq = rightward_length_reducing(v, pres_)) {
    const Word& x = seq->after;
    std::size_t keep = seq->moves.empty() ? x.size() : seq->moves.front().start;
    Word cur = x.prefix(keep);
    for (std::size_t q = keep; q < x.size(); ++q) cur = append(cur, x[q], index, nullptr);
    if (log) log->push_back({ReductionStep::Kind::LengthReducing, index, std::move(seq), cur});
    return cur;
  }
  if (auto seq = leftward_lex_reducing(v, pres_, order_)) {
    Word out = seq->after;
    if (log) log->push_back({ReductionStep::Kind::LexReducing, index, std::move(seq), out});
    return out;
  }
  if (log) log->push_back({ReductionStep::Kind::Append, index, std::nullopt, v});
  return v;
}

Reduction ShortlexEngine::reduce(const Word& w) const {
  Reduction r;
  Word cur;
  for (std::size_t k = 0; k < w.size(); ++k) cur = append(cur, w[k], k, &r.log);
  r.word = cur;
  return r;
}

Word ShortlexEngine::nf(const Word& w) const {
  if (w.empty()) return w;
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
  }
  Word p = nf(w.prefix(w.size() - 1));
  Word out = append(p, w.back(), w.size() - 1, nullptr);
  std::unique_lock lock(mutex_);
  if (cache_.size() > (std::size_t{1} << 22)) cache_.clear();
  cache_.emplace(w, out);
  return out;
}

ArtinGroup::ArtinGroup(CoxeterPresentation pres) : ArtinGroup(pres, pres.standard_order()) {}

ArtinGroup::ArtinGroup(CoxeterPresentation pres, LetterOrder order)
    : pres_(pres), engine_(std::move(pres), std::move(order)) {}

const std::vector<Word>& ArtinGroup::geodesics(const Word& g) const {
  Word key = nf(g);
  {
    std::shared_lock lock(mutex_);
    auto it = geodesic_cache_.find(key);
    if (it != geodesic_cache_.end()) return *it->second;
  }
  std::unordered_set<Word, WordHash> seen{key};
  std::deque<Word> queue{key};
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (Word& n : tau_neighbors(cur, pres_))
      if (seen.insert(n).second) queue.push_back(std::move(n));
  }
  auto list = std::make_unique<std::vector<Word>>(seen.begin(), seen.end());
  const auto& ord = order();
  std::sort(list->begin(), list->end(), [&](const Word& a, const Word& b) { return ord.shortlex_less(a, b); });
  std::unique_lock lock(mutex_);
  auto [it, inserted] = geodesic_cache_.emplace(key, std::move(list));
  return *it->second;
}

namespace {

std::vector<Letter> end_letters(const ArtinGroup& G, const Word& g, bool last) {
  const auto& geos = G.geodesics(g);
  if (geos.front().empty()) throw Error(ErrorKind::InvalidArgument, "the identity has no first or last letter");
  std::set<Letter> s;
  for (const Word& w : geos) s.insert(last ? w.back() : w.front());
  return {s.begin(), s.end()};
}

std::vector<Word> divisors(const ArtinGroup& G, const Word& g, bool right) {
  std::unordered_set<Word, WordHash> set;
  for (const Word& w : G.geodesics(g))
    for (std::size_t len = 0; len <= w.size(); ++len) set.insert(G.nf(right ? w.suffix(len) : w.prefix(len)));
  std::vector<Word> out(set.begin(), set.end());
  const auto& ord = G.order();
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return ord.compare_lex(a.letters(), b.letters()) < 0;
  });
  return out;
}

}  // namespace

std::vector<Letter> ArtinGroup::final_letters(const Word& g) const { return end_letters(*this, g, true); }
std::vector<Letter> ArtinGroup::initial_letters(const Word& g) const { return end_letters(*this, g, false); }
std::vector<Word> ArtinGroup::left_divisors(const Word& g) const { return divisors(*this, g, false); }
std::vector<Word> ArtinGroup::right_divisors(const Word& g) const { return divisors(*this, g, true); }

bool ArtinGroup::is_left_divisor(const Word& h, const Word& g) const {
  return length(h) + length(h.inverse() + g) == length(g);
}

bool ArtinGroup::is_right_divisor(const Word& h, const Word& g) const {
  return length(h) + length(g + h.inverse()) == length(g);
}

const ShortlexEngine& ArtinGroup::pair_engine(int i, int j) const {
  std::lock_guard lock(pair_mutex_);
  auto key = std::make_pair(std::min(i, j), std::max(i, j));
  auto& slot = pair_engines_[key];
  if (!slot) slot = std::make_unique<ShortlexEngine>(pres_, order().with_pair_first(key.first, key.second));
  return *slot;
}

const dihedral::Group& ArtinGroup::pair_group(int i, int j) const {
  std::lock_guard lock(pair_mutex_);
  auto key = std::make_pair(std::min(i, j), std::max(i, j));
  auto& slot = pair_groups_[key];
  if (!slot) slot = std::make_unique<dihedral::Group>(dihedral::Context::of(pres_, key.first, key.second, order()));
  return *slot;
}

Word ArtinGroup::ld(const Word& g, int i, int j) const {
  if (i == j) throw Error(ErrorKind::InvalidArgument, "LD needs two distinct generators");
  Word key = nf(g);
  auto ck = std::make_tuple(key, std::min(i, j), std::max(i, j));
  {
    std::shared_lock lock(mutex_);
    auto it = ld_cache_.find(ck);
    if (it != ld_cache_.end()) return it->second;
  }
  Word w = pair_engine(i, j).nf(key);
  std::size_t len = 0;
  while (len < w.size() && (w[len].gen() == i || w[len].gen() == j)) ++len;
  Word out = nf(w.prefix(len));
  std::unique_lock lock(mutex_);
  ld_cache_.emplace(ck, out);
  return out;
}

Word ArtinGroup::rd(const Word& g, int i, int j) const { return inverse(ld(g.inverse(), i, j)); }

LdPrime ArtinGroup::ld_prime(const Word& g, int i, int j, bool allow_counterexample) const {
  if (!allow_counterexample) require_33m(pres_, "LD'");
  LdPrime out;
  out.ld = ld(g, i, j);
  for (const Word& w : geodesics(g)) {
    std::size_t len = 0;
    while (len < w.size() && (w[len].gen() == i || w[len].gen() == j)) ++len;
    Word u = w.prefix(len);
    if (nf(u) == out.ld) continue;
    Word tail = nf(u.inverse() + out.ld);
    bool power = !tail.empty() && std::all_of(tail.begin(), tail.end(), [&](Letter l) { return l == tail[0]; });
    if (!power)
      throw Error(ErrorKind::PropertyFalsified,
                  "LD_" + std::to_string(i) + std::to_string(j) + " of " + to_string(g) + " is not u a^r for " + to_string(w));
    if (std::find(out.tails.begin(), out.tails.end(), tail[0]) == out.tails.end()) {
      out.tails.push_back(tail[0]);
      out.witnesses.push_back(w);
    }
  }
  if (out.tails.empty()) {
    out.which = 1;
    out.ld_prime = out.ld;
    return out;
  }
  out.which = 2;
  if (out.tails.size() > 1) {
    if (!allow_counterexample)
      throw Error(ErrorKind::PropertyFalsified, "tail letter of LD_ij(" + to_string(g) + ") is not unique");
    out.ld_prime = out.ld;
    return out;
  }
  Letter a = out.tails[0];
  out.letter = a;
  int s = 0;
  Word cur = out.ld;
  while (!cur.empty() && is_right_divisor(Word{a}, cur)) {
    cur = multiply(cur, Word{a.inverse()});
    ++s;
  }
  out.ld_prime = cur;
  return out;
}

bool ArtinGroup::permissible(const Word& g1, const Word& g2) const {
  Word a = nf(g1), b = nf(g2);
  if (length(a + b) != static_cast<int>(a.size() + b.size())) return false;
  for (auto [i, j] : pres_.pairs()) {
    if (!pres_.finite(i, j)) continue;
    Word x = rd(a, i, j), y = ld(b, i, j);
    if (x.empty() || y.empty()) continue;
    if (!pair_group(i, j).permissible(x, y).permissible) return false;
  }
  return true;
}

Word ArtinGroup::garside(int i, int j, int r) const {
  if (r == 0 || i == 0) return Word();
  return nf(pair_group(i, j).context().garside(r));
}

int ArtinGroup::merge_constant() const { return std::max(0, pres_.max_finite_label() - 1); }

}  // namespace artin::large
