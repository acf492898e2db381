#include "trihull/reductions.hpp"

#include <algorithm>
#include <cmath>

#include "trihull/errors.hpp"

namespace trihull {

SdpFeasibilityInstance::SdpFeasibilityInstance(std::vector<SymmetricMatrix> m, Vector b)
    : mats(std::move(m)), rhs(std::move(b)) {
  if (mats.empty()) throw DimensionError("SdpFeasibilityInstance: need at least one constraint");
  if (rhs.size() != mats.size()) throw DimensionError("SdpFeasibilityInstance: rhs must have length m");
  for (const auto& a : mats)
    if (a.order() != mats.front().order()) throw DimensionError("SdpFeasibilityInstance: order mismatch");
}

ShmInstance reduce_sdp_to_shm(const SdpFeasibilityInstance& sdp) {
  const std::size_t n = sdp.n();
  const std::size_t n1 = n + 1;
  std::vector<SymmetricMatrix> mats;
  mats.reserve(sdp.mats.size());
  for (std::size_t i = 0; i < sdp.mats.size(); ++i) {
    std::vector<double> a(n1 * n1, 0.0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a[r * n1 + c] = sdp.mats[i](r, c);
    a[n * n1 + n] = -sdp.rhs[i];
    mats.emplace_back(n1, std::move(a));
  }
  return ShmInstance(std::move(mats), Vector(sdp.mats.size(), 0.0));
}

PrimalRecovery recover_sdp_solution(const SdpFeasibilityInstance& sdp, const SpectraplexPoint& x) {
  const std::size_t n = sdp.n();
  if (x.order() != n + 1) throw DimensionError("recover_sdp_solution: expected a point of order n+1");
  PrimalRecovery out;
  std::vector<double> block(n * n, 0.0);
  for (const auto& t : x.terms()) {
    const double last = t.direction[n];
    out.alpha += t.weight * last * last;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) block[r * n + c] += t.weight * t.direction[r] * t.direction[c];
  }
  if (!(out.alpha > 1e-10)) {
    out.diagnostic = "corner weight alpha is ~0: the SDP has a recession direction; no primal point";
    return out;
  }
  for (double& v : block) v /= out.alpha;
  out.primal = SymmetricMatrix(n, std::move(block));
  if (std::all_of(sdp.rhs.begin(), sdp.rhs.end(), [](double v) { return v == 0.0; })) {
    out.diagnostic = "rhs is zero: the homogeneous solution may only recover X = 0";
  }
  return out;
}

// ---------------------------------------------------------------------------

MaxCutInstance::MaxCutInstance(SymmetricMatrix w) : n(w.order()), weights(std::move(w)) {
  if (n == 0) throw DimensionError("MaxCutInstance: empty graph");
  for (std::size_t i = 0; i < n; ++i) {
    if (weights(i, i) != 0.0) throw DomainError("MaxCutInstance: diagonal must be zero");
    for (std::size_t j = 0; j < n; ++j)
      if (weights(i, j) < 0.0) throw DomainError("MaxCutInstance: weights must be nonnegative");
  }
}

ShmInstance maxcut_feasibility_probe(const MaxCutInstance& mc, double w) {
  const std::size_t n = mc.n;
  std::vector<SymmetricMatrix> mats;
  mats.reserve(n + 1);
  mats.push_back(mc.weights);
  for (std::size_t i = 0; i < n; ++i) {
    Vector d(n, 0.0);
    d[i] = 1.0;
    mats.push_back(SymmetricMatrix::diagonal(d));
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  Vector b(n + 1, inv_n);
  b[0] = w * inv_n;
  return ShmInstance(std::move(mats), std::move(b));
}

SymmetricMatrix MaxCutResult::y_matrix() const {
  SymmetricMatrix y = SymmetricMatrix::zeros(x.order());
  y.add_scaled(x.to_matrix(), static_cast<double>(x.order()));
  return y;
}

MaxCutResult solve_maxcut_relaxation(const MaxCutInstance& mc, double epsilon, std::size_t iter_budget,
                                     std::uint64_t seed) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("solve_maxcut_relaxation: epsilon must lie in (0,1)");
  const double n = static_cast<double>(mc.n);
  const double abs_tol = epsilon / n;

  MaxCutResult res;
  res.x = SpectraplexPoint::scaled_identity(mc.n);  // W . (I/n) = 0: w = 0 is feasible
  const double frob = mc.weights.frobenius_norm();
  double lo = -n * frob;
  double hi = 0.0;

  SpectraplexPoint warm = res.x;
  std::uint64_t probe_seed = seed;
  while (hi - lo > abs_tol) {
    const double w = 0.5 * (lo + hi);
    const ShmInstance probe = maxcut_feasibility_probe(mc, w);

    ShmOptions opts;
    opts.epsilon = abs_tol / probe.radius_bound();
    opts.max_iters = iter_budget;
    opts.seed = probe_seed++;
    opts.warm_start = warm;
    Certificate cert = solve_shm(probe, opts);
    if (cert.kind == Verdict::inconclusive) {
      opts.epsilon = std::min(0.5, 10.0 * opts.epsilon);
      opts.warm_start = cert.point;
      cert = solve_shm(probe, opts);
    }

    res.trace.push_back(MaxCutProbe{w, cert.kind, cert.gap, cert.iterations, cert.oracle_calls,
                                    opts.epsilon * probe.radius_bound()});
    if (cert.kind == Verdict::inconclusive) {
      res.complete = false;
      break;
    }
    warm = cert.point;
    if (cert.kind == Verdict::feasible) {
      hi = w;
      res.x = cert.point;
    } else {
      lo = w;
    }
  }
  res.bracket_lo = lo;
  res.bracket_hi = hi;
  res.sdp_value = hi;
  return res;
}

}  // namespace trihull
