#pragma once

// Spectrahull membership: is b in {p(X) : X in the spectraplex}?
//
// The solver walks X' through the spectraplex with rank-one pivots. A pivot at
// X' is any unit v with
//
//     A . vv^T <= (||p(X')||^2 - ||b||^2) / 2,   A = sum_i (A_i . X' - b_i) A_i,
//
// and none exists exactly when lambda_min(A) exceeds the right-hand side, in
// which case p(X') is a witness and its bisector separates b from the hull.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "trihull/chm.hpp"
#include "trihull/eigen.hpp"
#include "trihull/symcore.hpp"

namespace trihull {

struct PivotMatrixAssembly {
  SymmetricMatrix matrix;   // sum_i (p_i - b_i) A_i
  double threshold = 0.0;   // (||p||^2 - ||b||^2) / 2
  double strict_threshold = 0.0;  // p^T b - ||b||^2
  Vector current;           // p(X')
  Vector target;            // b
};

/// Requires x bound to the instance.
PivotMatrixAssembly assemble_pivot_matrix(const ShmInstance& instance, const SpectraplexPoint& x);

enum class PivotMode {
  power,   // shifted power method with early exit, one restart, then Jacobi
  exact,   // Jacobi only
  cached,  // scan the cache images first, then as power
};

const char* to_string(PivotMode mode);

/// Unit directions U generated so far and their images S(V).
class PivotCache {
 public:
  explicit PivotCache(std::size_t image_dim = 0) : images_(image_dim, {}) {}

  std::size_t size() const noexcept { return directions_.size(); }
  const std::vector<Vector>& directions() const noexcept { return directions_; }
  const PointSet& images() const noexcept { return images_; }

  /// Appends unless some stored direction has |cos| > 1 - 1e-9 with it.
  /// Returns the index of the stored or matching entry.
  std::size_t insert(Vector direction, Vector image);

 private:
  std::vector<Vector> directions_;
  PointSet images_;
};

struct PivotOutcome {
  enum class Kind { pivot, no_pivot, inconclusive };

  Kind kind = Kind::inconclusive;
  Vector vector;             // pivot direction, or the certified eigenvector
  Vector image;              // p(vv^T) when taken from the cache, else empty
  double value = 0.0;        // Rayleigh value of a pivot, or certified lambda_min
  double threshold = 0.0;    // the (non-strict) pivot threshold
  std::optional<std::size_t> cache_index;
  bool strict_fallback = false;
  bool used_eigensolver = false;
  std::size_t power_iterations = 0;
  std::size_t jacobi_calls = 0;
};

struct OracleSettings {
  std::size_t power_budget = 0;  // 0: default_power_budget(n)
  bool strict = false;
};

/// Searches for a rank-one pivot. A no_pivot outcome is always certified by
/// Jacobi: lambda_min(A) > threshold.
PivotOutcome pivot_oracle(const PivotMatrixAssembly& assembly, PivotMode mode, const PivotCache* cache,
                          std::mt19937_64& rng, const OracleSettings& settings = {});

enum class StartMode { rank_one_e, identity };

const char* to_string(StartMode mode);

struct ShmOptions {
  double epsilon = 1e-3;
  std::size_t max_iters = 0;  // 0: ceil(64 / epsilon^2)
  PivotMode mode = PivotMode::cached;
  StartMode start = StartMode::rank_one_e;
  bool strict = false;
  std::uint64_t seed = 0;
  std::size_t power_budget = 0;
  std::optional<SpectraplexPoint> warm_start;  // overrides `start`
  bool record_trace = false;
};

struct ShmStats {
  std::size_t cache_pivots = 0;
  std::size_t power_iterations = 0;
  std::size_t jacobi_calls = 0;
  std::size_t prunes = 0;
  std::size_t strict_fallbacks = 0;
  std::size_t max_terms = 0;
  double max_prune_image_change = 0.0;
};

struct Certificate {
  Verdict kind = Verdict::inconclusive;
  SpectraplexPoint point;
  double gap = 0.0;  // ||p(X') - b||
  double epsilon = 0.0;
  double radius_bound = 0.0;
  std::optional<Hyperplane> hyperplane;  // witness only
  std::optional<double> eig_margin;      // lambda_min(A) - threshold, witness only
  std::size_t iterations = 0;
  std::size_t oracle_calls = 0;  // pivot searches over the whole spectraplex
  std::vector<Vector> pivots;    // every accepted pivot direction (deduplicated)
  ShmStats stats;
  std::vector<double> gap_trace;
};

Certificate solve_shm(const ShmInstance& instance, const ShmOptions& options);

/// solve_shm in cached mode.
Certificate solve_shm_cached(const ShmInstance& instance, double epsilon, std::size_t max_iters,
                             std::uint64_t seed);

struct PruneResult {
  SpectraplexPoint point;
  bool changed = false;
  double image_change = 0.0;
  std::string warning;
};

/// Rewrites a bound point with at most min(m+1, n) rank-one terms and the same
/// image: exact duplicates merge, more than n terms are refactored through the
/// eigenvectors of X, and affine dependencies among the term images are
/// eliminated one term at a time.
PruneResult prune_representation(const ShmInstance& instance, const SpectraplexPoint& x);

/// floor((sqrt(8m + 9) - 1) / 2); reported, never enforced.
std::size_t low_rank_bound(std::size_t m);

struct VerifyReport {
  bool passed = true;
  std::size_t samples_checked = 0;
  std::size_t violation_count = 0;
  std::vector<std::string> violations;  // first 20 messages
};

VerifyReport verify_certificate(const ShmInstance& instance, const Certificate& cert, std::size_t samples,
                                std::uint64_t seed);

}  // namespace trihull
