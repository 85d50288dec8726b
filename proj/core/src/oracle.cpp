#include "artin/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <unordered_set>

#include "artin/dihedral.hpp"
#include "artin/large_type.hpp"

namespace artin::oracle {

namespace {

std::optional<Word> shorten(const Word& x, const CoxeterPresentation& pres) {
  for (std::size_t k = 1; k < x.size(); ++k)
    if (x[k] == x[k - 1].inverse()) return x.prefix(k - 1) + x.subword(k + 1, x.size() - k - 1);
  for (auto [i, j] : pres.pairs()) {
    if (!pres.finite(i, j)) continue;
    auto occ = critical::over_critical_in(x.letters(), i, j, pres.label(i, j));
    if (!occ.empty()) return Word(critical::apply(x.letters(), occ.front()));
  }
  return std::nullopt;
}

template <typename F>
void for_each_tau(const Word& x, const CoxeterPresentation& pres, F&& f) {
  const auto letters = x.letters();
  for (std::size_t s = 0; s < x.size(); ++s) {
    int a = x[s].gen(), b = 0;
    for (std::size_t e = s + 1; e < x.size(); ++e) {
      int g = x[e].gen();
      if (g != a && g != b) {
        if (b != 0) break;
        b = g;
      }
      if (b == 0 || !pres.finite(a, b)) continue;
      int m = pres.label(a, b);
      auto span = letters.subspan(s, e - s + 1);
      if (static_cast<int>(span.size()) < m) continue;
      auto shape = critical::classify(span, m);
      if (!shape) continue;
      auto image = critical::tau(span, *shape, m);
      std::vector<Letter> out(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(s));
      out.insert(out.end(), image.begin(), image.end());
      out.insert(out.end(), letters.begin() + static_cast<std::ptrdiff_t>(e + 1), letters.end());
      f(Word(std::move(out)));
    }
  }
}

}  // namespace

Oracle::Oracle(CoxeterPresentation pres, std::size_t max_closure)
    : Oracle(pres, pres.standard_order(), max_closure) {}

Oracle::Oracle(CoxeterPresentation pres, LetterOrder order, std::size_t max_closure)
    : pres_(std::move(pres)), order_(std::move(order)), max_closure_(max_closure) {
  require_large(pres_, "the closure oracle");
}

std::vector<Word> Oracle::minimal_closure(const Word& w) const {
  Word start = w;
  while (true) {
    std::unordered_set<Word, WordHash> seen{start};
    std::vector<Word> queue{start};
    std::optional<Word> shorter;
    for (std::size_t qi = 0; qi < queue.size() && !shorter; ++qi) {
      Word x = queue[qi];
      if ((shorter = shorten(x, pres_))) break;
      for_each_tau(x, pres_, [&](Word y) {
        if (seen.insert(y).second) queue.push_back(std::move(y));
      });
      if (queue.size() > max_closure_)
        throw Error(ErrorKind::BudgetExceeded, "closure of " + to_string(w) + " exceeds the oracle budget");
    }
    if (!shorter) return queue;
    start = *shorter;
  }
}

Word Oracle::canonical(const Word& w) const {
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
  }
  auto all = minimal_closure(w);
  Word best = *std::min_element(all.begin(), all.end(),
                                [&](const Word& a, const Word& b) { return order_.shortlex_less(a, b); });
  std::unique_lock lock(mutex_);
  if (cache_.size() > (std::size_t{1} << 22)) cache_.clear();
  cache_.emplace(w, best);
  return best;
}

std::vector<Word> Oracle::geodesics(const Word& w) const {
  auto all = minimal_closure(w);
  std::sort(all.begin(), all.end(), [&](const Word& a, const Word& b) { return order_.shortlex_less(a, b); });
  return all;
}

Word relator_canonical(const CoxeterPresentation& pres, const LetterOrder& order, const Word& w, int slack,
                       std::size_t max_words) {
  const std::size_t bound = w.size() + static_cast<std::size_t>(std::max(0, slack));
  std::vector<std::pair<Word, Word>> rules;
  for (auto [i, j] : pres.pairs()) {
    if (!pres.finite(i, j)) continue;
    int m = pres.label(i, j);
    Word A = alternating(Letter(i, true), Letter(j, true), m, AlternatingSide::LeftStart);
    Word B = alternating(Letter(j, true), Letter(i, true), m, AlternatingSide::LeftStart);
    rules.emplace_back(A, B);
    rules.emplace_back(B, A);
    rules.emplace_back(A.inverse(), B.inverse());
    rules.emplace_back(B.inverse(), A.inverse());
  }
  const int n = pres.generators();
  std::unordered_set<Word, WordHash> seen{w};
  std::deque<Word> queue{w};
  Word best = w;
  auto visit = [&](Word y) {
    if (y.size() > bound || !seen.insert(y).second) return;
    if (order.shortlex_less(y, best)) best = y;
    queue.push_back(std::move(y));
    if (seen.size() > max_words) throw Error(ErrorKind::BudgetExceeded, "relator closure budget exceeded");
  };
  while (!queue.empty()) {
    Word x = std::move(queue.front());
    queue.pop_front();
    for (std::size_t k = 1; k < x.size(); ++k)
      if (x[k] == x[k - 1].inverse()) visit(x.prefix(k - 1) + x.subword(k + 1, x.size() - k - 1));
    if (x.size() + 2 <= bound)
      for (std::size_t k = 0; k <= x.size(); ++k)
        for (int idx = 0; idx < 2 * n; ++idx) {
          Letter a = Letter::from_index(idx);
          visit(x.prefix(k) + Word{a, a.inverse()} + x.suffix(x.size() - k));
        }
    for (const auto& [from, to] : rules)
      for (std::size_t k = 0; k + from.size() <= x.size(); ++k)
        if (x.subword(k, from.size()) == from)
          visit(x.prefix(k) + to + x.suffix(x.size() - k - from.size()));
  }
  return best;
}

Ball Ball::build(const CoxeterPresentation& pres, const LetterOrder& order, int radius, const Step& step,
                 std::size_t max_elements) {
  if (radius < 0) throw Error(ErrorKind::InvalidArgument, "negative ball radius");
  const int n = pres.generators();
  const std::size_t L = 2 * static_cast<std::size_t>(n);
  std::vector<Word> elems{Word()};
  std::vector<int> levels{0};
  std::unordered_map<Word, int, WordHash> index{{Word(), 0}};
  std::vector<Word> targets;  // step results, row-major
  std::size_t level_start = 0;
  for (int k = 0; k <= radius; ++k) {
    std::size_t level_end = elems.size();
    for (std::size_t x = level_start; x < level_end; ++x) {
      for (std::size_t a = 0; a < L; ++a) {
        Word y = step(elems[x], Letter::from_index(static_cast<int>(a)));
        if (k < radius && !index.count(y)) {
          if (static_cast<int>(y.size()) != k + 1)
            throw Error(ErrorKind::PropertyFalsified,
                        "normal form " + to_string(y) + " has length " + std::to_string(y.size()) +
                            " but BFS depth " + std::to_string(k + 1));
          index.emplace(y, static_cast<int>(elems.size()));
          elems.push_back(y);
          levels.push_back(k + 1);
          if (elems.size() > max_elements)
            throw Error(ErrorKind::BudgetExceeded, "ball of radius " + std::to_string(radius) + " exceeds the element budget");
        }
        targets.push_back(std::move(y));
      }
    }
    level_start = level_end;
  }

  // Renumber by (level, shortlex).
  std::vector<int> perm(elems.size());
  for (std::size_t q = 0; q < perm.size(); ++q) perm[q] = static_cast<int>(q);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (levels[static_cast<std::size_t>(a)] != levels[static_cast<std::size_t>(b)])
      return levels[static_cast<std::size_t>(a)] < levels[static_cast<std::size_t>(b)];
    return order.shortlex_less(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]);
  });
  std::vector<int> rank(elems.size());
  for (std::size_t q = 0; q < perm.size(); ++q) rank[static_cast<std::size_t>(perm[q])] = static_cast<int>(q);

  Ball B;
  B.radius_ = radius;
  B.n_ = n;
  B.elements_.resize(elems.size());
  B.levels_.resize(elems.size());
  B.adj_.assign(elems.size() * L, -1);
  for (std::size_t q = 0; q < elems.size(); ++q) {
    std::size_t r = static_cast<std::size_t>(rank[q]);
    B.elements_[r] = elems[q];
    B.levels_[r] = levels[q];
    for (std::size_t a = 0; a < L; ++a) {
      auto it = index.find(targets[q * L + a]);
      B.adj_[r * L + a] = it == index.end() ? -1 : rank[static_cast<std::size_t>(it->second)];
    }
  }
  B.finish();
  return B;
}

void Ball::finish() {
  index_.clear();
  for (std::size_t q = 0; q < elements_.size(); ++q) index_.emplace(elements_[q], static_cast<int>(q));
  sphere_start_.assign(static_cast<std::size_t>(radius_) + 2, 0);
  for (int l : levels_) ++sphere_start_[static_cast<std::size_t>(l) + 1];
  for (std::size_t k = 1; k < sphere_start_.size(); ++k) sphere_start_[k] += sphere_start_[k - 1];
  sphere_index_.resize(elements_.size());
  for (std::size_t q = 0; q < elements_.size(); ++q) sphere_index_[q] = static_cast<int>(q);

  const std::size_t L = 2 * static_cast<std::size_t>(n_);
  std::vector<std::vector<int>> preds(elements_.size());
  for (std::size_t x = 0; x < elements_.size(); ++x)
    for (std::size_t a = 0; a < L; ++a) {
      int y = adj_[x * L + a];
      if (y >= 0 && levels_[static_cast<std::size_t>(y)] == levels_[x] + 1) preds[static_cast<std::size_t>(y)].push_back(static_cast<int>(x));
    }
  pred_start_.assign(elements_.size() + 1, 0);
  pred_.clear();
  for (std::size_t y = 0; y < elements_.size(); ++y) {
    auto& p = preds[y];
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    pred_.insert(pred_.end(), p.begin(), p.end());
    pred_start_[y + 1] = pred_.size();
  }
}

Ball Ball::from_oracle(const Oracle& oracle, int radius) {
  return cached(oracle.presentation(), oracle.order(), radius,
                [&](const Word& x, Letter a) { return oracle.canonical(x.pushed(a)); }, "oracle");
}

Ball Ball::from_engine(const large::ArtinGroup& group, int radius) {
  return cached(group.presentation(), group.order(), radius,
                [&](const Word& x, Letter a) { return group.nf(x.pushed(a)); }, "engine");
}

int Ball::index_of(const Word& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

std::span<const int> Ball::sphere(int k) const {
  if (k < 0 || k > radius_) throw Error(ErrorKind::BallTooSmall, "sphere " + std::to_string(k) + " outside the ball");
  std::size_t s = sphere_start_[static_cast<std::size_t>(k)], e = sphere_start_[static_cast<std::size_t>(k) + 1];
  return std::span<const int>(sphere_index_).subspan(s, e - s);
}

std::vector<Word> Ball::sphere_words(int k) const {
  std::vector<Word> out;
  for (int idx : sphere(k)) out.push_back(element(idx));
  return out;
}

int Ball::walk(const Word& w) const {
  int cur = 0;
  for (Letter a : w) {
    if (a.gen() < 1 || a.gen() > n_) return -1;
    cur = neighbor(cur, a);
    if (cur < 0) return -1;
  }
  return cur;
}

std::span<const int> Ball::predecessors(int idx) const {
  std::size_t s = pred_start_[static_cast<std::size_t>(idx)], e = pred_start_[static_cast<std::size_t>(idx) + 1];
  return std::span<const int>(pred_).subspan(s, e - s);
}

std::vector<Word> Ball::geodesics(int idx) const {
  std::vector<Word> out;
  std::vector<Letter> suffix;
  std::function<void(int)> rec = [&](int y) {
    if (y == 0) {
      out.emplace_back(std::vector<Letter>(suffix.rbegin(), suffix.rend()));
      return;
    }
    for (int x : predecessors(y))
      for (int a = 0; a < 2 * n_; ++a)
        if (neighbor(x, Letter::from_index(a)) == y) {
          suffix.push_back(Letter::from_index(a));
          rec(x);
          suffix.pop_back();
        }
  };
  rec(idx);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Ball::interval(int idx, int k) const {
  int top = level(idx);
  if (k < 0 || k > top) return {};
  std::vector<int> cur{idx};
  for (int l = top; l > k; --l) {
    std::vector<int> next;
    for (int y : cur)
      for (int x : predecessors(y)) next.push_back(x);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = std::move(next);
  }
  return cur;
}

namespace {

std::string order_tag(const LetterOrder& order) {
  std::string s;
  for (Letter a : order.sequence()) s += std::to_string(a.code()) + ",";
  return s;
}

}  // namespace

std::string Ball::serialize(std::uint64_t key_hash, const LetterOrder& order) const {
  std::ostringstream os;
  os << "artin-ball v1 " << key_hash << ' ' << radius_ << ' ' << n_ << ' ' << order_tag(order) << '\n';
  os << elements_.size() << '\n';
  const std::size_t L = 2 * static_cast<std::size_t>(n_);
  for (std::size_t q = 0; q < elements_.size(); ++q) {
    os << levels_[q] << ' ' << elements_[q].size();
    for (Letter a : elements_[q]) os << ' ' << a.code();
    for (std::size_t a = 0; a < L; ++a) os << ' ' << adj_[q * L + a];
    os << '\n';
  }
  return os.str();
}

std::optional<Ball> Ball::deserialize(const std::string& text, std::uint64_t key_hash, const LetterOrder& order,
                                      int radius) {
  std::istringstream is(text);
  std::string magic, version, tag;
  std::uint64_t h = 0;
  int R = 0, n = 0;
  if (!(is >> magic >> version >> h >> R >> n >> tag)) return std::nullopt;
  if (magic != "artin-ball" || version != "v1" || h != key_hash || R != radius || tag != order_tag(order))
    return std::nullopt;
  std::size_t count = 0;
  is >> count;
  Ball B;
  B.radius_ = R;
  B.n_ = n;
  const std::size_t L = 2 * static_cast<std::size_t>(n);
  B.elements_.resize(count);
  B.levels_.resize(count);
  B.adj_.resize(count * L);
  for (std::size_t q = 0; q < count; ++q) {
    std::size_t len = 0;
    if (!(is >> B.levels_[q] >> len)) return std::nullopt;
    std::vector<Letter> letters(len);
    for (auto& l : letters) {
      int c = 0;
      is >> c;
      l = Letter::from_code(c);
    }
    B.elements_[q] = Word(std::move(letters));
    for (std::size_t a = 0; a < L; ++a) is >> B.adj_[q * L + a];
  }
  if (!is) return std::nullopt;
  B.finish();
  return B;
}

Ball Ball::cached(const CoxeterPresentation& pres, const LetterOrder& order, int radius, const Step& step,
                  const std::string& tag) {
  const char* dir = std::getenv("ARTIN_RD_CACHE_DIR");
  if (!dir || !*dir) return build(pres, order, radius, step);
  std::uint64_t key = pres.hash() ^ (std::hash<std::string>{}(tag) * 0x9e3779b97f4a7c15ull);
  std::string order_tag;
  for (Letter a : order.sequence()) order_tag += std::to_string(a.index()) + ".";
  std::filesystem::path path =
      std::filesystem::path(dir) / ("ball-" + tag + "-" + std::to_string(pres.hash()) + "-o" +
                                    std::to_string(std::hash<std::string>{}(order_tag) % 1000000007u) + "-r" +
                                    std::to_string(radius) + ".txt");
  {
    std::ifstream in(path);
    if (in) {
      std::stringstream ss;
      ss << in.rdbuf();
      if (auto B = deserialize(ss.str(), key, order, radius)) return *B;
    }
  }
  Ball B = build(pres, order, radius, step);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream out(path);
  if (out) out << B.serialize(key, order);
  return B;
}

}  // namespace artin::oracle
