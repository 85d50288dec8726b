#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "artin/error.hpp"

namespace artin {

/// A generator or its inverse. Generators are numbered from 1.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int gen, bool positive)
      : code_(static_cast<std::int8_t>(positive ? gen : -gen)) {}

  static constexpr Letter from_code(int code) {
    Letter l;
    l.code_ = static_cast<std::int8_t>(code);
    return l;
  }

  constexpr int gen() const { return code_ < 0 ? -code_ : code_; }
  constexpr bool positive() const { return code_ > 0; }
  constexpr int sign() const { return code_ > 0 ? 1 : -1; }
  constexpr Letter inverse() const { return from_code(-code_); }
  constexpr int code() const { return code_; }
  constexpr bool valid() const { return code_ != 0; }

  /// Dense index in [0, 2n): x1, X1, x2, X2, ...
  constexpr int index() const { return 2 * (gen() - 1) + (positive() ? 0 : 1); }
  static constexpr Letter from_index(int idx) {
    return Letter(idx / 2 + 1, idx % 2 == 0);
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter a, Letter b) {
    return a.index() <=> b.index();
  }

 private:
  std::int8_t code_ = 0;
};

enum class SignClass { Empty, Positive, Negative, Unsigned };

struct Syllable {
  int gen = 0;
  int exponent = 0;
  std::size_t start = 0;
  std::size_t length() const { return static_cast<std::size_t>(exponent < 0 ? -exponent : exponent); }
};

/// Immutable word over the letters. All rewriting returns new words.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  std::span<const Letter> letters() const { return letters_; }
  const std::vector<Letter>& vec() const { return letters_; }

  Word subword(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return subword(0, len); }
  Word suffix(std::size_t len) const { return subword(size() - len, len); }
  Word inverse() const;
  Word pushed(Letter a) const;

  friend Word operator+(const Word& a, const Word& b);

  bool freely_reduced() const;
  SignClass sign_class() const;
  std::vector<Syllable> syllables() const;
  std::size_t syllable_count() const;
  /// Sorted distinct generator indices.
  std::vector<int> names() const;
  bool involves_only(int i, int j) const;
  int max_gen() const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Raw lexicographic order on letter indices, for ordered containers only.
  friend bool operator<(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.letters_ < b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Letter l : w) {
      h ^= static_cast<std::uint8_t>(l.code());
      h *= 1099511628211ull;
    }
    return h ^ w.size();
  }
};

Word free_reduce(const Word& w);

enum class AlternatingSide {
  LeftStart,  ///< the word of length r alternating a, b and starting with a
  RightEnd,   ///< the word of length r alternating a, b and ending with a
};

/// Alternating product of two distinct letters. Throws on a == b.
Word alternating(Letter a, Letter b, int r, AlternatingSide side);

/// Letter syntax: a..z are generators 1..26, A..Z their inverses,
/// x<k>/X<k> any generator index. An optional exponent ^k or ^-k may follow
/// a letter. Whitespace is ignored.
Word parse_word(std::string_view text, int generator_count);
std::string to_string(const Word& w);
std::string to_string(Letter a);

/// Total order on the 2n letters, used for shortlex comparison.
class LetterOrder {
 public:
  LetterOrder() = default;
  /// x1 < X1 < x2 < X2 < ...
  static LetterOrder standard(int generator_count);
  /// Letters listed from smallest to largest; must be a permutation.
  static LetterOrder from_sequence(const std::vector<Letter>& sequence);
  /// The standard order with the letters of x_i, x_j moved to the front.
  LetterOrder with_pair_first(int i, int j) const;

  int rank(Letter a) const { return rank_[static_cast<std::size_t>(a.index())]; }
  int generator_count() const { return static_cast<int>(rank_.size() / 2); }
  std::vector<Letter> sequence() const;

  /// -1, 0, 1 lexicographic comparison of equal-length spans.
  int compare_lex(std::span<const Letter> a, std::span<const Letter> b) const;
  bool shortlex_less(const Word& a, const Word& b) const;

  friend bool operator==(const LetterOrder&, const LetterOrder&) = default;

 private:
  std::vector<int> rank_;
};

}  // namespace artin
