#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "artin/large_type.hpp"
#include "artin/oracle.hpp"

namespace artin::harmonic {

using Complex = std::complex<double>;

/// Finitely supported function on group elements, keyed by normal form.
/// Zero values are never stored.
class GroupFunction {
 public:
  void set(const Word& g, Complex v);
  void add(const Word& g, Complex v);
  Complex operator()(const Word& g) const;
  const std::map<Word, Complex>& values() const { return values_; }
  std::size_t support_size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  GroupFunction scaled(Complex c) const;

 private:
  std::map<Word, Complex> values_;
};

GroupFunction point_mass(const Word& g, Complex v = 1.0);
/// chi_{C_k} over the ball's sphere.
GroupFunction sphere_indicator(const oracle::Ball& ball, int k);

struct Norms {
  double l2 = 0;
  double sobolev = 0;
};
/// l2 norm and the Sobolev norm of order r for the word length (keys must
/// be normal forms, so l(g) is the key length).
Norms norms(const GroupFunction& phi, double r);

/// (phi * psi)(g) = sum over x y = g of phi(x) psi(y).
GroupFunction convolve(const large::ArtinGroup& G, const GroupFunction& phi, const GroupFunction& psi);
GroupFunction sphere_restrict(const GroupFunction& phi, int k);

enum class Side { Right, Left };

/// Right: g -> sqrt(sum over h in C_p with (g,h) in P of |phi_k(g h)|^2) on
/// C_{k-p}. Left: g -> sqrt(sum over h in C_p with (h,g) in P of
/// |phi_k(h g)|^2). Throws InvalidArgument if phi_k leaves C_k.
GroupFunction projection(const large::ArtinGroup& G, const GroupFunction& phi_k, int k, int p, Side side);

/// Permissible factorisation lists over one sphere of a ball, for fast
/// repeated projections.
class ProjectionTable {
 public:
  ProjectionTable(const large::ArtinGroup& G, const oracle::Ball& ball, int k, int p, Side side);
  int k() const { return k_; }
  int p() const { return p_; }
  /// F_{P,k-p,p} (right) or F_{P,p,k-p} (left) over the sphere.
  std::size_t bound() const { return bound_; }
  /// Squared projection values on C_{k-p}, in sphere order; phi in C_k sphere order.
  std::vector<double> apply_squared(std::span<const Complex> phi) const;
  const std::vector<std::vector<int>>& lists() const { return lists_; }

 private:
  int k_, p_;
  std::size_t target_size_ = 0;
  std::size_t bound_ = 0;
  std::vector<std::vector<int>> lists_;  // per position in C_k: positions in C_{k-p}
};

struct L2Check {
  int k = 0, p = 0;
  Side side = Side::Right;
  std::size_t bound = 0;
  double max_ratio = 0;  // max ||phi^(p)||^2 / ||phi_k||^2
  std::size_t violations = 0;
  std::size_t trials = 0;
};
/// Random seeded complex functions on C_k against the projection inequality.
L2Check check_relate_l2(const ProjectionTable& table, const oracle::Ball& ball, Side side, std::size_t trials,
                        std::uint64_t seed, double tolerance = 1e-9);

struct StarStarRow {
  int k = 0, l = 0, m = 0;
  double random_max = 0;
  double all_ones = 0;
  double single_atom = 0;
};
/// Ratios ||(phi_k * psi_l)_m|| / (||phi_k|| ||psi_l||) for every m in
/// [|k-l|, k+l]. Needs the ball to contain C_k and C_l.
std::vector<StarStarRow> condition_star_star(const large::ArtinGroup& G, const oracle::Ball& ball, int k, int l,
                                             std::size_t trials, std::uint64_t seed);

/// Sparse matrix of psi -> phi * psi with psi supported on the radius-R ball.
struct ConvolutionOperator {
  std::vector<Word> columns;
  std::vector<Word> rows;
  struct Entry {
    int row, col;
    Complex value;
  };
  std::vector<Entry> entries;
};
ConvolutionOperator convolution_operator(const large::ArtinGroup& G, const GroupFunction& phi, const oracle::Ball& ball,
                                         int radius);

struct OperatorNormEstimate {
  int radius = 0;
  double estimate = 0;
  std::size_t dimension = 0;
};
/// Lower bounds ||phi * psi|| / ||psi|| with psi on growing balls; power
/// iteration warm-started from the previous radius, so nondecreasing in R.
std::vector<OperatorNormEstimate> operator_norm_estimates(const large::ArtinGroup& G, const GroupFunction& phi,
                                                          const oracle::Ball& ball, int iterations);

}  // namespace artin::harmonic
