#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "artin/dihedral.hpp"
#include "artin/presentation.hpp"
#include "artin/word.hpp"

namespace artin::large {

/// One tau-move on the subword [start, start + length) of the word current
/// at that point of a sequence.
struct TauMove {
  std::size_t start = 0;
  std::size_t length = 0;
  Word before;
  Word after;
};

struct CriticalSequence {
  enum class Direction { Leftward, Rightward };
  Direction direction = Direction::Rightward;
  std::vector<TauMove> moves;
  bool free_cancellation = false;  // rightward length reducing: one trailing cancellation
  Word before;
  Word after;
};

/// For v = w a with w geodesic and v freely reduced: a rightward critical
/// sequence on w turning its last letter into a^-1, followed by the free
/// cancellation. Empty if v is geodesic.
std::optional<CriticalSequence> rightward_length_reducing(const Word& v, const CoxeterPresentation& pres);

/// For a geodesic v whose maximal proper prefix is shortlex minimal: the
/// leftward critical sequence (first move on a suffix) giving the lex-least
/// result. Empty if no sequence lowers v.
std::optional<CriticalSequence> leftward_lex_reducing(const Word& v, const CoxeterPresentation& pres,
                                                      const LetterOrder& order);

/// Every word obtained from w by one tau-move on a critical subword over a
/// pair with finite label.
std::vector<Word> tau_neighbors(const Word& w, const CoxeterPresentation& pres);

struct ReductionStep {
  enum class Kind { Append, FreeCancellation, LengthReducing, LexReducing };
  Kind kind = Kind::Append;
  std::size_t letter = 0;  // index of the input letter being processed
  std::optional<CriticalSequence> sequence;
  Word prefix;  // normal form after this step
};
const char* to_string(ReductionStep::Kind kind);

struct Reduction {
  Word word;
  std::vector<ReductionStep> log;
};

struct LdPrime {
  Word ld;        // LD_ij(g)
  Word ld_prime;  // LD'_ij(g)
  int which = 1;  // case 1 or 2
  std::optional<Letter> letter;  // the letter a in case 2
  std::vector<Letter> tails;     // all letters seen; more than one refutes uniqueness
  std::vector<Word> witnesses;   // a geodesic per tail letter
};

struct MergeStep {
  dihedral::MergeStep::Kind kind;
  int i = 0, j = 0;  // pair of the Garside element involved; 0 for free cancellation at r = 0
  Word h;
  Word h_prime;
  int epsilon = 0;
  int r_after = 0;
};

/// (f1, (i,j), r, f2) with g1 g2 = f1 Delta_ij^r f2.
struct MergerTriple {
  Word g1, g2;
  Word f1;
  int i = 0, j = 0;
  int r = 0;
  Word f2;
  Word h1, h2;
  std::vector<MergeStep> trace;
};

struct STReport {
  struct Entry {
    Word f1;
    int i = 0, j = 0;
    int r = 0;
    Word f2;
    Word g1, g2;  // first factorisation producing the triple
    Word h1, h2;
  };
  std::vector<Entry> S;
  std::vector<std::tuple<int, int, int>> T;  // (i, j, r); r = 0 recorded once as (0, 0, 0)
  int max_p1 = 0;
  int max_p2 = 0;
  int max_abs_r = 0;
  std::size_t pairs = 0;  // factorisations examined

  /// Records one merger; false if its (f1, i, j, r, f2) was already in S.
  bool add(const MergerTriple& m);
};

struct SClass {
  enum class Part { S0, S1, S2 };
  Part part = Part::S0;
  int i = 0, j = 0;
  Word f1pp, f1p, fhat, f2p, f2pp, h1p, h2p;
  bool checks_ok = true;
  std::string failure;
  bool inner_merge_agrees = false;
  // Witnesses for S2.
  std::optional<Letter> a, b, c;
  int s = 0, t = 0, q = 0;
  Word e1, e2;
};
const char* to_string(SClass::Part p);

struct SDecomposition {
  std::vector<SClass> items;  // parallel to STReport::S
  std::size_t s0 = 0, s1 = 0, s2 = 0;
  std::size_t failures = 0;
};

/// Shortlex normal forms for a large-type presentation under one letter
/// order, by letter-by-letter reduction with critical sequences.
class ShortlexEngine {
 public:
  ShortlexEngine(CoxeterPresentation pres, LetterOrder order);
  const CoxeterPresentation& presentation() const { return pres_; }
  const LetterOrder& order() const { return order_; }

  Reduction reduce(const Word& w) const;
  Word nf(const Word& w) const;

 private:
  Word append(const Word& nf_prefix, Letter a, std::size_t index, std::vector<ReductionStep>* log) const;

  CoxeterPresentation pres_;
  LetterOrder order_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<Word, Word, WordHash> cache_;
};

/// Group object for an Artin group of large type. Elements are shortlex
/// normal forms under the chosen order. Thread-safe.
class ArtinGroup {
 public:
  explicit ArtinGroup(CoxeterPresentation pres);
  ArtinGroup(CoxeterPresentation pres, LetterOrder order);

  const CoxeterPresentation& presentation() const { return pres_; }
  const LetterOrder& order() const { return engine_.order(); }
  int generators() const { return pres_.generators(); }

  Reduction shortlex_reduce(const Word& w) const { return engine_.reduce(w); }
  Word nf(const Word& w) const { return engine_.nf(w); }
  int length(const Word& w) const { return static_cast<int>(nf(w).size()); }
  Word multiply(const Word& a, const Word& b) const { return nf(a + b); }
  Word inverse(const Word& a) const { return nf(a.inverse()); }
  bool equal(const Word& a, const Word& b) const { return nf(a) == nf(b); }
  bool is_geodesic(const Word& w) const { return length(w) == static_cast<int>(w.size()); }

  /// All geodesic spellings, as the tau-closure of the normal form.
  const std::vector<Word>& geodesics(const Word& g) const;
  std::vector<Letter> final_letters(const Word& g) const;
  std::vector<Letter> initial_letters(const Word& g) const;
  /// Normal forms of all left (right) divisors, longest first then shortlex.
  std::vector<Word> left_divisors(const Word& g) const;
  std::vector<Word> right_divisors(const Word& g) const;
  bool is_left_divisor(const Word& h, const Word& g) const;
  bool is_right_divisor(const Word& h, const Word& g) const;

  /// Longest left (right) divisor in G(i,j), as a normal form.
  Word ld(const Word& g, int i, int j) const;
  Word rd(const Word& g, int i, int j) const;
  /// Refuses presentations failing the (3,3,m)-hypothesis unless
  /// allow_counterexample; a non-unique tail letter is then reported in
  /// `tails` instead of raising PropertyFalsified.
  LdPrime ld_prime(const Word& g, int i, int j, bool allow_counterexample = false) const;

  const dihedral::Group& pair_group(int i, int j) const;
  bool in_subgroup(const Word& g, int i, int j) const { return nf(g).involves_only(i, j); }
  bool permissible(const Word& g1, const Word& g2) const;

  /// Merging with the canonical schedule. Requires the (3,3,m)-hypothesis
  /// unless allow_counterexample.
  MergerTriple merge(const Word& g1, const Word& g2, bool allow_counterexample = false) const;
  std::tuple<Word, int, Word> replay(const Word& g1, const Word& g2, const std::vector<MergeStep>& trace) const;
  /// Delta_ij^r as a normal form (identity for r = 0 or i = 0).
  Word garside(int i, int j, int r) const;
  /// m - 1 for the largest finite label m.
  int merge_constant() const;

  /// S(g,k,l) and T(k,l) over the given sphere C_k.
  STReport build_S_T(const Word& g, int k, int l, std::span<const Word> sphere_k) const;
  SDecomposition split_S(const STReport& st, const Word& g, int k, int l) const;

 private:
  const ShortlexEngine& pair_engine(int i, int j) const;

  CoxeterPresentation pres_;
  ShortlexEngine engine_;
  mutable std::mutex pair_mutex_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<ShortlexEngine>> pair_engines_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<dihedral::Group>> pair_groups_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<Word, std::unique_ptr<std::vector<Word>>, WordHash> geodesic_cache_;
  mutable std::map<std::tuple<Word, int, int>, Word> ld_cache_;
};

}  // namespace artin::large
