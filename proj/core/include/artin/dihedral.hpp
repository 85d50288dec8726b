#pragma once

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "artin/presentation.hpp"
#include "artin/word.hpp"

namespace artin::critical {

// Span-level machinery shared by the dihedral calculus and the large-type
// engine. A span qualifies only if it involves exactly two generator names.

enum class Kind {
  UnsignedPositiveFirst,  // _p(x,y) xi (z^-1,t^-1)_n
  UnsignedNegativeFirst,  // _n(x^-1,y^-1) xi (z,t)_p
  PositivePrefix,         // _m(x,y) xi
  PositiveSuffix,         // xi (x,y)_m
  PositiveWhole,          // _m(x,y)
  NegativePrefix,
  NegativeSuffix,
  NegativeWhole,
};

struct Shape {
  Kind kind;
  int p = 0;
  int n = 0;
};

/// Length of the maximal alternating run of the given sign starting at v[0].
int prefix_run(std::span<const Letter> v, bool positive);
/// Length of the maximal alternating run of the given sign ending at v.back().
int suffix_run(std::span<const Letter> v, bool positive);
/// Longest alternating run of the given sign anywhere in v (uncapped).
int longest_run(std::span<const Letter> v, bool positive);

/// Critical-word test for a label m < infinity.
std::optional<Shape> classify(std::span<const Letter> v, int m);

/// Image under tau of a critical word with the given shape.
std::vector<Letter> tau(std::span<const Letter> v, const Shape& shape, int m);

/// Image of an unsigned-form word with end blocks of lengths p, n (p + n >= m):
/// the critical rule when p + n = m, the length reducing rule when p + n > m.
std::vector<Letter> tau_unsigned(std::span<const Letter> v, bool positive_first, int p, int n,
                                 int m);

/// Same rule with explicit block lengths and generator pair.
std::vector<Letter> tau_unsigned(std::span<const Letter> v, int front, int end, int m, int gen_a,
                                 int gen_b);

/// Conjugation by the Garside element of the pair {a, b} on a letter.
Letter delta(Letter l, int gen_a, int gen_b, int m);

/// Over-critical subword host[start, start + length) over the pair
/// {gen_a, gen_b}; front/end are the lengths of its two alternating ends.
struct Occurrence {
  std::size_t start = 0;
  std::size_t length = 0;
  int front = 0;
  int end = 0;
  bool positive_first = true;
  int gen_a = 0, gen_b = 0, m = 0;
};

/// All over-critical subwords of host over one pair, with the maximality
/// conditions taken relative to host.
std::vector<Occurrence> over_critical_in(std::span<const Letter> host, int gen_a, int gen_b, int m);
/// host with the length reducing tau-move at o applied.
std::vector<Letter> apply(std::span<const Letter> host, const Occurrence& o);

}  // namespace artin::critical

namespace artin::dihedral {

/// A two-generator parabolic: generators x_i, x_j with label m (3 <= m <= inf)
/// and the letter order used for shortlex normal forms.
class Context {
 public:
  Context(int i, int j, int m, LetterOrder order);
  static Context of(const CoxeterPresentation& pres, int i, int j);
  static Context of(const CoxeterPresentation& pres, int i, int j, LetterOrder order);
  /// DA(m) on generators 1, 2 with the standard order.
  static Context standard(int m);

  int i() const { return i_; }
  int j() const { return j_; }
  int m() const { return m_; }
  bool finite() const { return m_ != kInfinity; }
  const LetterOrder& order() const { return order_; }

  bool owns(Letter a) const { return a.gen() == i_ || a.gen() == j_; }
  bool owns(const Word& w) const { return w.involves_only(i_, j_); }
  /// Throws InvalidArgument if w involves a foreign generator.
  void check_word(const Word& w) const;

  /// delta(a); throws for m = infinity or a foreign letter.
  Letter delta(Letter a) const;
  Word delta_word(const Word& w) const;
  /// delta^r applied letterwise (identity for even r).
  Word delta_power(const Word& w, int r) const;
  /// Delta^r as a freely reduced alternating word of length m|r|.
  Word garside(int r) const;

 private:
  int i_, j_, m_;
  LetterOrder order_;
};

struct PN {
  int p = 0;
  int n = 0;
};

/// Capped lengths of the longest positive/negative alternating subwords.
/// Throws if w is not freely reduced or involves a foreign generator.
PN pn_values(const Word& w, const Context& ctx);

struct GeodesicVerdict {
  bool geodesic = false;
  bool unique = false;  // p + n < m: the only geodesic spelling of its element
  PN pn;
};
GeodesicVerdict is_geodesic_dihedral(const Word& w, const Context& ctx);

enum class CriticalForm { Unsigned, Positive, Negative };

struct CriticalWord {
  Word host;
  CriticalForm form = CriticalForm::Unsigned;
  critical::Shape shape{};
  int p = 0;
  int n = 0;
  /// Boundary letters of the displayed alternating ends; for signed forms
  /// x, y name the Garside block and z = t = the letter next to it.
  Letter x, y, z, t;
  Word xi;
};

std::optional<CriticalWord> classify_critical(const Word& w, const Context& ctx);
Word tau(const CriticalWord& c, const Context& ctx);
/// Throws NotCritical unless w is critical.
Word tau(const Word& w, const Context& ctx);

/// An over-critical subword w[start, start + length) with end blocks p, n.
struct OverCritical {
  std::size_t start = 0;
  std::size_t length = 0;
  int p = 0;
  int n = 0;
  bool positive_first = true;
  bool unsigned_move(int m) const { return p < m && n < m; }
};

/// Every over-critical subword occurrence of w, ordered by start then length.
std::vector<OverCritical> find_over_critical(const Word& w, const Context& ctx);
/// Applies the length reducing tau-move at o; throws NotCritical if the
/// identified subword is not over-critical in w.
Word apply_length_reducing_tau(const Word& w, const OverCritical& o, const Context& ctx);

struct Move {
  enum class Kind { UnsignedTau, PositiveTau, NegativeTau, FreeCancellation, CriticalTau };
  Kind kind;
  std::size_t start = 0;
  std::size_t length = 0;
  Word before;
  Word after;
};
const char* to_string(Move::Kind kind);

struct Reduction {
  Word word;
  std::vector<Move> log;
};

/// Reduces to a geodesic by length reducing tau-moves and free reduction,
/// preferring unsigned moves.
Reduction reduce_dihedral(const Word& w, const Context& ctx);
/// Shortlex-least geodesic under ctx.order(), by critical reductions.
Word shortlex_nf_dihedral(const Word& w, const Context& ctx);
/// All geodesic spellings of the element of w, as the tau-move closure of
/// one geodesic; sorted shortlex.
std::vector<Word> enumerate_geodesics_dihedral(const Word& w, const Context& ctx);

struct PermissibleVerdict {
  bool permissible = false;
  bool geodesic = false;          // |g1| + |g2| = |g1 g2|
  bool unsigned_or_free = false;  // all geodesic factorisations allowed
  bool p1 = false;                // a factor with a <= 2-syllable geodesic
  bool p2 = false;                // d(g1) + d(g2) = d(g1 g2)
};

struct MergeStep {
  enum class Kind { Cancellation, DoubleDelta, DeltaExtraction };
  Kind kind;
  Word h;        // stripped from the right of the left factor
  Word h_prime;  // stripped from the left of the right factor
  int epsilon = 0;
  int r_after = 0;
};
const char* to_string(MergeStep::Kind kind);

/// (f1, Delta^r, f2) with g1 g2 = f1 Delta^r f2.
struct MergerTripleD {
  Word g1, g2;
  Word f1;
  int r = 0;
  Word f2;
  Word h1, h2;  // h1 = f1^-1 g1, h2 = g2 f2^-1, h1 h2 = Delta^r
  std::vector<MergeStep> trace;
};

struct CompressionStage {
  std::string stage;  // "split", "u2", "pair", "v-absorb", "u-absorb", "repair"
  Word before;
  Word after;
};

struct Compression {
  Word word;  // u4 delta^{r'-s}(v4) Delta^s, geodesic
  Word kappa;  // u4
  Word unsigned_part;  // u4 delta^{r'-s}(v4)
  int s = 0;
  int r_prime = 0;
  int r0 = 0;
  std::string shape;  // "u.D^r0,v", "u,D^r0.v", "u.D^r0.v" or "plain"
  std::vector<CompressionStage> log;
  bool fallback_used = false;  // a stage needed generic reduction
};

/// Memoizing group object for DA(m) on one generator pair. Elements are
/// represented by their shortlex normal forms. Thread-safe.
class Group {
 public:
  explicit Group(Context ctx);

  const Context& context() const { return ctx_; }
  int m() const { return ctx_.m(); }

  Word nf(const Word& w) const;
  int length(const Word& w) const { return static_cast<int>(nf(w).size()); }
  Word multiply(const Word& a, const Word& b) const { return nf(a + b); }
  Word inverse(const Word& a) const { return nf(a.inverse()); }
  bool equal(const Word& a, const Word& b) const { return nf(a) == nf(b); }
  bool is_geodesic(const Word& w) const;

  /// Geodesic spellings of the element of g, sorted shortlex.
  const std::vector<Word>& geodesics(const Word& g) const;
  /// Normal forms of all right (left) divisors of g, including 1 and g,
  /// sorted by decreasing length then shortlex.
  std::vector<Word> right_divisors(const Word& g) const;
  std::vector<Word> left_divisors(const Word& g) const;
  bool is_left_divisor(const Word& h, const Word& g) const;
  bool is_right_divisor(const Word& h, const Word& g) const;

  SignClass sign(const Word& g) const { return nf(g).sign_class(); }
  bool signed_element(const Word& g) const { return sign(g) != SignClass::Unsigned; }
  /// d(g) for signed g (the power of Delta^-1 for negative g); throws for
  /// unsigned g or m = infinity.
  int garside_power(const Word& g) const;
  bool has_short_syllable_form(const Word& g) const;
  PermissibleVerdict permissible(const Word& g1, const Word& g2) const;

  /// Merging process with the canonical schedule; trivial triple when the
  /// product is geodesic.
  MergerTripleD merge(const Word& g1, const Word& g2) const;
  /// Replays a trace from (g1, 0, g2); returns (f1, r, f2).
  std::tuple<Word, int, Word> replay(const Word& g1, const Word& g2,
                                     const std::vector<MergeStep>& trace) const;
  Compression compress(const MergerTripleD& t) const;

 private:
  Context ctx_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<Word, Word, WordHash> nf_cache_;
  mutable std::unordered_map<Word, std::unique_ptr<std::vector<Word>>, WordHash> geodesic_cache_;
  mutable std::unordered_map<Word, int, WordHash> d_cache_;
};

}  // namespace artin::dihedral
