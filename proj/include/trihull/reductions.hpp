#pragma once

// Problem constructors on top of the spectrahull solver: bounded SDP
// feasibility as a homogeneous membership test, and the MAX CUT relaxation by
// bisection on the objective value.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trihull/shm.hpp"

namespace trihull {

/// {X psd : A_i . X = b_i}. Boundedness (no recession direction) is the
/// caller's promise and is not checked.
struct SdpFeasibilityInstance {
  std::vector<SymmetricMatrix> mats;
  Vector rhs;

  SdpFeasibilityInstance(std::vector<SymmetricMatrix> mats, Vector rhs);
  std::size_t n() const { return mats.front().order(); }
};

/// A'_i = diag(A_i, -b_i) of order n+1 and target 0.
ShmInstance reduce_sdp_to_shm(const SdpFeasibilityInstance& sdp);

struct PrimalRecovery {
  double alpha = 0.0;                   // X'_{n+1,n+1}
  std::optional<SymmetricMatrix> primal;  // top-left block / alpha
  std::string diagnostic;
};

/// Back-converts a homogeneous solution. Refuses when alpha <= 1e-10, which
/// signals a recession direction.
PrimalRecovery recover_sdp_solution(const SdpFeasibilityInstance& sdp, const SpectraplexPoint& x);

struct MaxCutInstance {
  std::size_t n = 0;
  SymmetricMatrix weights;  // nonnegative, zero diagonal

  explicit MaxCutInstance(SymmetricMatrix w);
};

/// mats (W, E_1, ..., E_n), target (w, 1, ..., 1) / n; feasible iff some
/// Y = nX in the elliptope has W . Y = w.
ShmInstance maxcut_feasibility_probe(const MaxCutInstance& mc, double w);

struct MaxCutProbe {
  double w = 0.0;
  Verdict verdict = Verdict::inconclusive;
  double gap = 0.0;
  std::size_t iterations = 0;
  std::size_t oracle_calls = 0;
  double tolerance = 0.0;  // absolute gap target used
};

struct MaxCutResult {
  double sdp_value = 0.0;  // min W . Y over the elliptope, up to the bracket width
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  SpectraplexPoint x;  // Y = n * X
  std::vector<MaxCutProbe> trace;
  bool complete = true;

  SymmetricMatrix y_matrix() const;
};

MaxCutResult solve_maxcut_relaxation(const MaxCutInstance& mc, double epsilon, std::size_t iter_budget,
                                     std::uint64_t seed);

}  // namespace trihull
