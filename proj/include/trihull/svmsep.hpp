#pragma once

// Intersection or separation of two spectrahulls C = SH(S) and C' = SH(S').

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "trihull/shm.hpp"

namespace trihull {

struct PairIterate {
  SpectraplexPoint left;   // bound to S
  SpectraplexPoint right;  // bound to S'
  double gap = 0.0;        // ||p(left) - p'(right)||
};

enum class PairVerdict { intersecting, separated, inconclusive };

const char* to_string(PairVerdict v);

struct SeparationOptions {
  double epsilon = 1e-3;
  std::size_t max_iters = 0;  // 0: ceil(64 / epsilon^2)
  std::uint64_t seed = 0;
  std::size_t power_budget = 0;
  bool record_trace = false;
};

struct PairCertificate {
  PairVerdict kind = PairVerdict::inconclusive;
  PairIterate pair;
  double scale = 0.0;  // sum ||A_i||_F + sum ||A'_i||_F, bounds every pair distance
  double epsilon = 0.0;
  /// Orthogonal bisector with normal = p' - p: C lies on the negative side,
  /// C' on the positive side.
  std::optional<Hyperplane> hyperplane;
  std::optional<double> left_margin;   // lambda_min - threshold certified on C
  std::optional<double> right_margin;  // same on C'
  std::size_t iterations = 0;
  std::size_t oracle_calls = 0;
  std::vector<double> gap_trace;
};

/// Both instances must share the image dimension m; their targets are ignored.
PairCertificate solve_separation(const ShmInstance& left, const ShmInstance& right, const SeparationOptions& options);

}  // namespace trihull
