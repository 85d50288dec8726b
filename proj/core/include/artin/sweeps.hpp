#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "artin/harmonic.hpp"
#include "artin/large_type.hpp"
#include "artin/oracle.hpp"

namespace artin::sweeps {

/// %.12g, the one number format used in every artifact.
std::string format_number(double v);

struct CsvRow {
  std::string presentation;
  int k = 0, l = 0;
  std::string statistic;
  std::string value;
};
/// Header "presentation,k,l,statistic,value".
std::string to_csv(const std::vector<CsvRow>& rows);

/// Runs f(0..n-1) on up to `threads` workers. Each call must write only its
/// own output slot, which keeps results independent of scheduling.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& f);

// ---------------------------------------------------------------------------
// D1

/// P'(k) = 4 m k^2 + 5 (k + 1), Q(k) = sum_{j=1..k} P'(j),
/// P1(n) = 2 sum_{j=0..n} Q(j).
double d1_bound(int m, int n);

struct D1Cell {
  int k = 0, l = 0;
  std::size_t f_permissible = 0;  // F_{P,k,l}
  std::size_t f_all = 0;          // F_{k,l}
  Word argmax;                    // shortlex-first g attaining f_permissible
};

struct D1Series {
  int min_kl = 0;
  std::vector<std::pair<int, std::size_t>> values;  // (k + l, max over k,l with that min)
  bool no_growth = false;
  double bound = 0;
};

struct D1Result {
  std::string presentation;
  int radius = 0;
  std::vector<D1Cell> cells;  // k + l <= radius, ordered by (k + l, k)
  std::vector<D1Series> series;  // min(k,l) = 1, 2, 3
  bool no_growth = true;

  std::vector<CsvRow> rows() const;
  std::string json() const;
};

/// Exhaustive F_{P,k,l} and F_{k,l} over the ball. A series has no growth
/// when every value is within d1_bound and, given at least three points, its
/// last two values agree (the plateau is reached inside the tested range).
/// Refuses presentations failing the (3,3,m)-hypothesis unless allowed.
D1Result d1_scan(const large::ArtinGroup& G, const oracle::Ball& ball, const std::string& id, int threads = 1,
                  bool allow_counterexample = false);

// ---------------------------------------------------------------------------
// D2

struct D2Cell {
  int k = 0, l = 0;
  std::size_t pairs = 0;
  std::size_t nontrivial = 0;  // mergers with at least one step
  int max_abs_r = 0;
  int max_h1 = 0, max_h2 = 0;
  int h_bound = 0;  // K min(k,l)
  std::size_t t_size = 0;
  std::size_t max_s = 0;
  std::size_t s0 = 0, s1 = 0, s2 = 0;
  std::size_t violations = 0;
  std::size_t compressed = 0;
  std::size_t compression_failures = 0;
  std::size_t compression_fallbacks = 0;
};

struct D2Result {
  std::string presentation;
  int radius = 0;
  int K = 0;
  std::vector<D2Cell> cells;
  std::vector<std::string> violations;  // first failures, for the report
  std::size_t total_violations = 0;
  std::size_t total_pairs = 0;
  std::size_t total_compressed = 0;
  std::size_t total_compression_failures = 0;
  std::size_t max_q_over_k_violations = 0;

  bool ok() const { return total_violations == 0 && total_compression_failures == 0; }
  std::vector<CsvRow> rows() const;
  std::string json() const;
};

struct D2Options {
  bool compress = true;
  /// Compression results are checked against the oracle when given.
  const oracle::Oracle* oracle = nullptr;
  int threads = 1;
  bool allow_counterexample = false;
};

/// Merges every pair (g1, g2) in C_k x C_l with k + l <= radius and checks
/// f1 Delta^r f2 = g1 g2, |r| <= min(k,l), |h_i| <= K min(k,l), permissible
/// side factorisations, h1 h2 = Delta^r and trace replay. Two-generator
/// presentations use the dihedral merger; larger ones also run the S/T
/// analysis per (g, k, l) and compress the inner dihedral triple.
D2Result d2_scan(const large::ArtinGroup& G, const oracle::Ball& ball, const std::string& id,
                 const D2Options& options = {});

// ---------------------------------------------------------------------------
// Harmonic checks

struct RdCheckResult {
  std::string presentation;
  int radius = 0;
  std::vector<harmonic::L2Check> l2;
  std::vector<harmonic::StarStarRow> star_star;
  std::size_t support_violations = 0;
  std::size_t support_checks = 0;

  bool ok() const;
  std::vector<CsvRow> l2_rows() const;
  /// Header "presentation,k,l,m,statistic,value".
  std::string star_star_csv() const;
  std::string json() const;
};

struct RdCheckOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::size_t star_trials = 50;
  int star_radius = -1;  // max k + l for the (**) table; defaults to the ball radius
};

RdCheckResult rd_check(const large::ArtinGroup& G, const oracle::Ball& ball, const std::string& id,
                       const RdCheckOptions& options = {});

// ---------------------------------------------------------------------------
// Worked examples

struct ReproItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ReproResult {
  std::vector<ReproItem> items;
  bool ok() const;
  std::string text() const;
  std::string json() const;
};

/// The fixed worked examples: notation, dihedral calculus, the (3,4,5)
/// reduction and the (4,3,3) divisor counterexample.
ReproResult reproduce_examples();

}  // namespace artin::sweeps
