#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "artin/word.hpp"

namespace artin {

/// Edge label m_ij of the defining graph; infinity means no relation.
inline constexpr int kInfinity = -1;

struct Classification {
  bool large = false;        // every m_ij >= 3 (infinity allowed)
  bool extra_large = false;  // every m_ij >= 4
  bool satisfies_33m = false;
  bool dihedral = false;  // exactly two generators
  bool free = false;      // every m_ij infinite
};

/// Standard presentation of an Artin group from a symmetric Coxeter matrix.
class CoxeterPresentation {
 public:
  CoxeterPresentation() = default;
  /// `matrix` is row-major n x n, diagonal 1, kInfinity for no relation.
  /// Throws InvalidPresentation on asymmetric or out-of-range entries.
  CoxeterPresentation(int n, std::vector<std::vector<int>> matrix, std::string name = {});

  /// Two-generator presentation with label m (kInfinity allowed).
  static CoxeterPresentation dihedral(int m, std::string name = {});
  /// Three generators with m12, m13, m23.
  static CoxeterPresentation triangle(int m12, int m13, int m23, std::string name = {});

  int generators() const { return n_; }
  int label(int i, int j) const { return m_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }
  bool finite(int i, int j) const { return label(i, j) != kInfinity; }
  const std::string& name() const { return name_; }
  const std::vector<std::vector<int>>& matrix() const { return m_; }

  bool classify_large() const;
  bool classify_extra_large() const;
  bool classify_33m() const;
  Classification classify() const;
  /// Largest finite off-diagonal label (0 if none).
  int max_finite_label() const;

  /// Stable hash of the matrix, used to key cached artifacts.
  std::uint64_t hash() const;

  /// All pairs i < j, in lexicographic order.
  std::vector<std::pair<int, int>> pairs() const;

  Word parse(std::string_view text) const { return parse_word(text, n_); }
  LetterOrder standard_order() const { return LetterOrder::standard(n_); }

  friend bool operator==(const CoxeterPresentation& a, const CoxeterPresentation& b) {
    return a.m_ == b.m_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> m_;
  std::string name_;
};

/// Full validation report; throws on malformed matrices.
Classification validate_presentation(const CoxeterPresentation& pres);

/// Parses the presentation document: JSON with fields "n" and "matrix"
/// (row-major, "inf" for infinity) and an optional "name".
CoxeterPresentation presentation_from_json(const std::string& text);
std::string presentation_to_json(const CoxeterPresentation& pres);
CoxeterPresentation load_presentation(const std::string& path);

/// Built-in presets: DA3, DA4, DA5, DAinf, tri345, tri444, tri555, tri433.
CoxeterPresentation preset(const std::string& name);
std::vector<std::string> preset_names();

/// Throws HypothesisViolated unless the presentation is of large type.
void require_large(const CoxeterPresentation& pres, const char* what);
/// Throws HypothesisViolated unless large and (3,3,m)-free.
void require_33m(const CoxeterPresentation& pres, const char* what);

}  // namespace artin
