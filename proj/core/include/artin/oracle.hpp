#pragma once

#include <functional>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "artin/presentation.hpp"
#include "artin/word.hpp"

namespace artin::large {
class ArtinGroup;
}

namespace artin::oracle {

/// Brute-force word problem: closure of a word under free reduction and
/// tau-moves on every two-generator critical or over-critical subword. The
/// closure never lengthens a word; whenever a shorter word appears the search
/// restarts from it.
class Oracle {
 public:
  explicit Oracle(CoxeterPresentation pres, std::size_t max_closure = 1'000'000);
  Oracle(CoxeterPresentation pres, LetterOrder order, std::size_t max_closure = 1'000'000);

  const CoxeterPresentation& presentation() const { return pres_; }
  const LetterOrder& order() const { return order_; }

  /// Shortlex-least word of the closure. Throws BudgetExceeded.
  Word canonical(const Word& w) const;
  bool equal(const Word& a, const Word& b) const { return canonical(a) == canonical(b); }
  int geodesic_length(const Word& w) const { return static_cast<int>(canonical(w).size()); }
  /// Every geodesic spelling of the element of w, sorted shortlex.
  std::vector<Word> geodesics(const Word& w) const;

 private:
  std::vector<Word> minimal_closure(const Word& w) const;

  CoxeterPresentation pres_;
  LetterOrder order_;
  std::size_t max_closure_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<Word, Word, WordHash> cache_;
};

/// Independent check by plain relator substitution: closure of w under
/// inserting and deleting x x^-1 and replacing one side of a defining
/// relation by the other, among words of length <= |w| + slack. Returns the
/// shortlex-least shortest word found. Exponential; for tiny inputs only.
Word relator_canonical(const CoxeterPresentation& pres, const LetterOrder& order, const Word& w, int slack,
                       std::size_t max_words = 2'000'000);

/// Cayley ball: elements as normal words, BFS levels and letter-labelled
/// edges. Element 0 is the identity.
class Ball {
 public:
  using Step = std::function<Word(const Word& element, Letter a)>;

  static Ball build(const CoxeterPresentation& pres, const LetterOrder& order, int radius, const Step& step,
                    std::size_t max_elements = 20'000'000);
  static Ball from_oracle(const Oracle& oracle, int radius);
  static Ball from_engine(const large::ArtinGroup& group, int radius);
  /// Loads from or saves to $ARTIN_RD_CACHE_DIR when that variable is set.
  static Ball cached(const CoxeterPresentation& pres, const LetterOrder& order, int radius, const Step& step,
                     const std::string& tag);

  int radius() const { return radius_; }
  int generators() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const Word& element(int idx) const { return elements_[static_cast<std::size_t>(idx)]; }
  int level(int idx) const { return levels_[static_cast<std::size_t>(idx)]; }
  /// -1 if the element is not in the ball.
  int index_of(const Word& normal_word) const;
  /// Indices of the sphere C_k, in shortlex order.
  std::span<const int> sphere(int k) const;
  std::vector<Word> sphere_words(int k) const;
  /// Neighbour along a letter; -1 when it lies outside the ball.
  int neighbor(int idx, Letter a) const { return adj_[static_cast<std::size_t>(idx) * 2 * static_cast<std::size_t>(n_) + static_cast<std::size_t>(a.index())]; }
  /// Follows w from the identity; -1 if the path leaves the ball.
  int walk(const Word& w) const;
  /// Elements one level closer to the identity and adjacent to idx.
  std::span<const int> predecessors(int idx) const;

  /// All geodesic spellings of element idx, from BFS predecessors.
  std::vector<Word> geodesics(int idx) const;
  /// Elements h of level k with |h| + |h^-1 g| = |g|, for g = element idx.
  std::vector<int> interval(int idx, int k) const;
  /// |Fact_{k,|g|-k}(g)|.
  std::size_t fact_count(int idx, int k) const { return interval(idx, k).size(); }

  bool operator==(const Ball& other) const {
    return elements_ == other.elements_ && adj_ == other.adj_;
  }

  std::string serialize(std::uint64_t key_hash, const LetterOrder& order) const;
  static std::optional<Ball> deserialize(const std::string& text, std::uint64_t key_hash, const LetterOrder& order,
                                         int radius);

 private:
  void finish();

  int radius_ = 0;
  int n_ = 0;
  std::vector<Word> elements_;
  std::vector<int> levels_;
  std::vector<int> adj_;
  std::vector<std::size_t> sphere_start_;
  std::vector<int> sphere_index_;
  std::vector<std::size_t> pred_start_;
  std::vector<int> pred_;
  std::unordered_map<Word, int, WordHash> index_;
};

}  // namespace artin::oracle
