#include "artin/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace artin {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::InvalidPresentation: return "invalid_presentation";
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::HypothesisViolated: return "hypothesis_violated";
    case ErrorKind::NotCritical: return "not_critical";
    case ErrorKind::BudgetExceeded: return "budget_exceeded";
    case ErrorKind::BallTooSmall: return "ball_too_small";
    case ErrorKind::PropertyFalsified: return "property_falsified";
  }
  return "unknown";
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word Word::pushed(Letter a) const {
  std::vector<Letter> out = letters_;
  out.push_back(a);
  return Word(std::move(out));
}

Word operator+(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.letters_.begin(), a.letters_.end());
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

bool Word::freely_reduced() const {
  for (std::size_t i = 1; i < size(); ++i)
    if (letters_[i] == letters_[i - 1].inverse()) return false;
  return true;
}

SignClass Word::sign_class() const {
  if (empty()) return SignClass::Empty;
  bool pos = false, neg = false;
  for (Letter l : letters_) (l.positive() ? pos : neg) = true;
  if (pos && neg) return SignClass::Unsigned;
  return pos ? SignClass::Positive : SignClass::Negative;
}

std::vector<Syllable> Word::syllables() const {
  std::vector<Syllable> out;
  for (std::size_t i = 0; i < size(); ++i) {
    Letter l = letters_[i];
    if (!out.empty() && out.back().gen == l.gen()) {
      out.back().exponent += l.sign();
    } else {
      out.push_back({l.gen(), l.sign(), i});
    }
  }
  return out;
}

std::size_t Word::syllable_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < size(); ++i)
    if (i == 0 || letters_[i].gen() != letters_[i - 1].gen()) ++count;
  return count;
}

std::vector<int> Word::names() const {
  std::vector<int> out;
  for (Letter l : letters_) out.push_back(l.gen());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Word::involves_only(int i, int j) const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [&](Letter l) { return l.gen() == i || l.gen() == j; });
}

int Word::max_gen() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, l.gen());
  return m;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

Word alternating(Letter a, Letter b, int r, AlternatingSide side) {
  if (a == b) throw Error(ErrorKind::InvalidArgument, "alternating: letters must be distinct");
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "alternating: negative length");
  std::vector<Letter> out(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) {
    // LeftStart: a b a b ...; RightEnd: ... b a b a, read from the right.
    if (side == AlternatingSide::LeftStart) {
      out[static_cast<std::size_t>(k)] = (k % 2 == 0) ? a : b;
    } else {
      out[static_cast<std::size_t>(r - 1 - k)] = (k % 2 == 0) ? a : b;
    }
  }
  return Word(std::move(out));
}

std::string to_string(Letter a) {
  if (a.gen() <= 26) {
    char c = static_cast<char>((a.positive() ? 'a' : 'A') + a.gen() - 1);
    return std::string(1, c);
  }
  return std::string(a.positive() ? "x" : "X") + std::to_string(a.gen());
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    // Indexed letters need a separator so that x27 x3 does not read as x273.
    if (i > 0 && (w[i].gen() > 26 || w[i - 1].gen() > 26)) out += ' ';
    out += to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text, int generator_count) {
  std::vector<Letter> out;
  std::size_t i = 0;
  auto read_int = [&](int& value) {
    auto res = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (res.ec != std::errc()) return false;
    i = static_cast<std::size_t>(res.ptr - text.data());
    return true;
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::Parse, "unknown generator symbol '" + std::string(1, c) + "'");
    }
    bool positive = std::islower(static_cast<unsigned char>(c)) != 0;
    int gen = std::tolower(static_cast<unsigned char>(c)) - 'a' + 1;
    ++i;
    if ((c == 'x' || c == 'X') && i < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[i]))) {
      read_int(gen);
    }
    if (gen < 1 || gen > generator_count) {
      throw Error(ErrorKind::Parse, "generator index " + std::to_string(gen) +
                                        " out of range 1.." + std::to_string(generator_count));
    }
    int exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      if (!read_int(exponent)) throw Error(ErrorKind::Parse, "malformed exponent");
    }
    Letter l(gen, positive);
    if (exponent < 0) l = l.inverse();
    for (int k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) out.push_back(l);
  }
  return Word(std::move(out));
}

LetterOrder LetterOrder::standard(int generator_count) {
  LetterOrder o;
  o.rank_.resize(static_cast<std::size_t>(2 * generator_count));
  for (int k = 0; k < 2 * generator_count; ++k) o.rank_[static_cast<std::size_t>(k)] = k;
  return o;
}

LetterOrder LetterOrder::from_sequence(const std::vector<Letter>& sequence) {
  LetterOrder o;
  o.rank_.assign(sequence.size(), -1);
  for (std::size_t r = 0; r < sequence.size(); ++r) {
    auto idx = static_cast<std::size_t>(sequence[r].index());
    if (idx >= o.rank_.size() || o.rank_[idx] != -1)
      throw Error(ErrorKind::InvalidArgument, "letter order is not a permutation of the letters");
    o.rank_[idx] = static_cast<int>(r);
  }
  return o;
}

std::vector<Letter> LetterOrder::sequence() const {
  std::vector<Letter> seq(rank_.size());
  for (std::size_t idx = 0; idx < rank_.size(); ++idx)
    seq[static_cast<std::size_t>(rank_[idx])] = Letter::from_index(static_cast<int>(idx));
  return seq;
}

LetterOrder LetterOrder::with_pair_first(int i, int j) const {
  std::vector<Letter> seq = sequence();
  std::stable_partition(seq.begin(), seq.end(),
                        [&](Letter l) { return l.gen() == i || l.gen() == j; });
  return from_sequence(seq);
}

int LetterOrder::compare_lex(std::span<const Letter> a, std::span<const Letter> b) const {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    int ra = rank(a[k]), rb = rank(b[k]);
    if (ra != rb) return ra < rb ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

bool LetterOrder::shortlex_less(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return compare_lex(a.letters(), b.letters()) < 0;
}

}  // namespace artin
