#pragma once

// Generators and independent oracles shared by the test binaries.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "artin/word.hpp"

namespace testing_support {

using artin::Letter;
using artin::Word;

inline std::vector<Letter> all_letters(int n) {
  std::vector<Letter> out;
  for (int g = 1; g <= n; ++g) {
    out.emplace_back(g, true);
    out.emplace_back(g, false);
  }
  return out;
}

/// Calls f on every freely reduced word of length 0..max_len over n generators.
inline void for_each_word(int n, int max_len, const std::function<void(const Word&)>& f) {
  auto letters = all_letters(n);
  std::vector<Letter> cur;
  std::function<void()> rec = [&] {
    f(Word(cur));
    if (static_cast<int>(cur.size()) == max_len) return;
    for (Letter a : letters) {
      if (!cur.empty() && cur.back() == a.inverse()) continue;
      cur.push_back(a);
      rec();
      cur.pop_back();
    }
  };
  rec();
}

/// Seeded random freely reduced words.
class WordGen {
 public:
  WordGen(int n, std::uint64_t seed) : n_(n), rng_(seed) {}

  Word word(int len) {
    std::uniform_int_distribution<int> pick(0, 2 * n_ - 1);
    std::vector<Letter> out;
    while (static_cast<int>(out.size()) < len) {
      Letter a = Letter::from_index(pick(rng_));
      if (!out.empty() && out.back() == a.inverse()) continue;
      out.push_back(a);
    }
    return Word(out);
  }
  Word word(int lo, int hi) { return word(std::uniform_int_distribution<int>(lo, hi)(rng_)); }
  /// Positive word over the given generator set.
  Word positive(int len, int gi, int gj) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<Letter> out;
    for (int i = 0; i < len; ++i) out.emplace_back(coin(rng_) ? gi : gj, true);
    return Word(out);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  int n_;
  std::mt19937_64 rng_;
};

/// Exact word problem for DA(m), m finite, through the Garside structure:
/// every element is Delta^k P for a unique positive word P containing no
/// alternating block of length m (such a word admits no relation, so it is
/// the only positive spelling of its element).
class GarsideKey {
 public:
  using Key = std::pair<int, std::vector<int>>;
  explicit GarsideKey(int m) : m_(m) {}

  Key operator()(const Word& w) const {
    Key s{0, {}};
    for (Letter a : w) {
      if (a.positive()) {
        s.second.push_back(a.gen());
      } else {
        // a^-1 = Delta^-1 c with c a = Delta.
        for (int& g : s.second) g = delta(g);
        int other = 3 - a.gen();
        std::vector<int> c;
        for (int t = 0; t < m_ - 1; ++t) c.push_back((m_ - 1 - t) % 2 == 1 ? other : a.gen());
        s.second.insert(s.second.end(), c.begin(), c.end());
        s.first -= 1;
      }
      normalize(s);
    }
    return s;
  }

  bool equal(const Word& a, const Word& b) const { return (*this)(a) == (*this)(b); }

 private:
  int delta(int g) const { return m_ % 2 == 1 ? 3 - g : g; }

  void normalize(Key& s) const {
    for (;;) {
      auto& P = s.second;
      int run = 1;
      std::size_t hit = P.size();
      for (std::size_t i = 1; i < P.size() && m_ > 1; ++i) {
        run = P[i] != P[i - 1] ? run + 1 : 1;
        if (run >= m_) {
          hit = i + 1 - static_cast<std::size_t>(m_);
          break;
        }
      }
      if (m_ == 1 && !P.empty()) hit = 0;
      if (hit == P.size()) return;
      std::vector<int> next;
      for (std::size_t i = 0; i < hit; ++i) next.push_back(delta(P[i]));
      next.insert(next.end(), P.begin() + static_cast<long>(hit) + m_, P.end());
      P = std::move(next);
      s.first += 1;
    }
  }

  int m_;
};

/// BFS distances from the identity up to `radius`, keyed by an exact
/// word-problem solution.
template <class KeyFn>
auto bfs_lengths(int n, int radius, const KeyFn& key) {
  using K = decltype(key(Word{}));
  std::map<K, int> dist;
  std::vector<Word> frontier{Word{}};
  dist[key(Word{})] = 0;
  auto letters = all_letters(n);
  for (int r = 1; r <= radius; ++r) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (Letter a : letters) {
        Word v = w.pushed(a);
        if (dist.try_emplace(key(v), r).second) next.push_back(v);
      }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace testing_support
