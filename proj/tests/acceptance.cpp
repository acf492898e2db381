// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "trihull/chm.hpp"
#include "trihull/eigen.hpp"
#include "trihull/reductions.hpp"
#include "trihull/shm.hpp"
#include "trihull/svmsep.hpp"

using namespace trihull;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

// Witnesses and run statistics gathered by criteria 1-3 for criteria 4 and 9.
struct WitnessRecord {
  ShmInstance instance;
  Certificate cert;
  std::string origin;
};

struct RunRecord {
  ShmInstance instance;
  ShmOptions options;
  Certificate cert;
  std::string origin;
};

std::vector<WitnessRecord> g_witnesses;
std::vector<RunRecord> g_runs;

Certificate tracked_solve(const ShmInstance& inst, const ShmOptions& opts, const std::string& origin) {
  Certificate cert = solve_shm(inst, opts);
  if (cert.kind == Verdict::witness) g_witnesses.push_back({inst, cert, origin});
  g_runs.push_back({inst, opts, cert, origin});
  return cert;
}

SymmetricMatrix random_sym(std::size_t n, std::mt19937_64& rng, double lo = -1, double hi = 1) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a[i * n + j] = a[j * n + i] = u(rng);
  return SymmetricMatrix(n, a);
}

Vector random_unit(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vector v(n);
  do {
    for (auto& x : v) x = g(rng);
  } while (norm(v) == 0.0);
  return normalized(v);
}

// ---------------------------------------------------------------------------
// 1. interval oracle: SH = [1, 3] for diag(1,2,3)

Outcome criterion_interval() {
  Outcome o;
  const Vector d{1, 2, 3};
  double worst_time = 0;
  for (double b : {1.0, 1.5, 2.0, 3.0}) {
    ShmInstance inst({SymmetricMatrix::diagonal(d)}, {b});
    ShmOptions opts;
    opts.epsilon = 1e-6;
    const auto t0 = Clock::now();
    const auto cert = tracked_solve(inst, opts, "interval b=" + std::to_string(b));
    const double dt = seconds_since(t0);
    worst_time = std::max(worst_time, dt);
    if (cert.kind != Verdict::feasible) o.fail("b=" + std::to_string(b) + " not feasible");
    if (cert.gap > 1e-6 * cert.radius_bound) o.fail("b=" + std::to_string(b) + " gap too large");
    if (dt >= 1.0) o.fail("b=" + std::to_string(b) + " took " + std::to_string(dt) + " s");
  }
  // Distance from b to [1, 3].
  for (auto [b, delta] : {std::pair{0.0, 1.0}, std::pair{5.0, 2.0}}) {
    ShmInstance inst({SymmetricMatrix::diagonal(d)}, {b});
    ShmOptions opts;
    opts.epsilon = 1e-6;
    const auto cert = tracked_solve(inst, opts, "interval b=" + std::to_string(b));
    if (cert.kind != Verdict::witness) {
      o.fail("b=" + std::to_string(b) + " not a witness");
      continue;
    }
    if (cert.gap < delta || cert.gap > 2 * delta) o.fail("b=" + std::to_string(b) + " gap outside [d*, 2d*]");
    o.detail << "b=" << b << " witness gap " << cert.gap << " in [" << delta << "," << 2 * delta << "]; ";
  }
  o.detail << "slowest feasible run " << worst_time << " s";
  return o;
}

// ---------------------------------------------------------------------------
// 2. diagonal instances against the explicit point-set solver

Outcome criterion_diagonal() {
  Outcome o;
  std::mt19937_64 rng(2002);
  std::uniform_real_distribution<double> u(-1, 1), w(0.1, 1.0), margin(0.05, 0.5);
  std::uniform_int_distribution<std::size_t> size(1, 10);
  const double eps = 1e-4;
  std::size_t feasible = 0, witness = 0;
  double worst_gap_diff = 0;

  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = size(rng), m = size(rng);
    // Column j of the stacked diagonals is the image of e_j e_j^T.
    std::vector<Vector> diags(m, Vector(n));
    for (auto& dg : diags)
      for (auto& x : dg) x = u(rng);
    std::vector<SymmetricMatrix> mats;
    for (const auto& dg : diags) mats.push_back(SymmetricMatrix::diagonal(dg));
    PointSet cols(m, {});
    for (std::size_t j = 0; j < n; ++j) {
      Vector c(m);
      for (std::size_t i = 0; i < m; ++i) c[i] = diags[i][j];
      cols.add(c);
    }

    // An interior convex combination, pushed out along a support direction
    // for the second half of the trials.
    Vector b(m, 0.0);
    double total = 0;
    std::vector<double> lambda(n);
    for (auto& l : lambda) total += (l = w(rng));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < m; ++i) b[i] += lambda[j] / total * cols.points[j][i];
    const bool outside = trial % 2 == 1;
    if (outside) {
      const Vector dir = random_unit(m, rng);
      double support = -1e300;
      for (const auto& c : cols.points) support = std::max(support, dot(dir, c));
      const double lift = support - dot(dir, b) + margin(rng);
      for (std::size_t i = 0; i < m; ++i) b[i] += lift * dir[i];
    }

    ShmInstance inst(mats, b);
    ShmOptions so;
    so.epsilon = eps;
    so.seed = trial;
    const auto s = tracked_solve(inst, so, "diagonal #" + std::to_string(trial));
    ChmOptions co;
    co.epsilon = eps;
    const auto c = solve_chm(cols, b, co);

    if (s.kind != c.verdict) {
      o.fail("trial " + std::to_string(trial) + ": shm " + to_string(s.kind) + " vs chm " + to_string(c.verdict));
      continue;
    }
    if (s.kind == Verdict::inconclusive) {
      o.fail("trial " + std::to_string(trial) + " inconclusive");
      continue;
    }
    if (outside != (s.kind == Verdict::witness)) o.fail("trial " + std::to_string(trial) + " wrong side");
    if (s.kind == Verdict::feasible) {
      ++feasible;
      const double diff = std::abs(s.gap - c.gap);
      worst_gap_diff = std::max(worst_gap_diff, diff / inst.radius_bound());
      if (diff > 1e-3 * inst.radius_bound()) o.fail("trial " + std::to_string(trial) + " gaps differ");
    } else {
      ++witness;
    }
  }
  o.detail << feasible << " feasible, " << witness << " witness, all verdicts agree; worst feasible gap difference "
           << worst_gap_diff << " R-hat";
  return o;
}

// ---------------------------------------------------------------------------
// 3. n = 2 against a grid over the spectraplex

// Uniform grid in the (x, z) plane restricted to z^2 <= x(1 - x): about 1e6
// points, every point of the disk within ~1.3e-3 of one of them.
std::vector<std::array<double, 3>> delta2_grid() {
  const int steps = 1128;
  std::vector<std::array<double, 3>> grid;
  grid.reserve(1000000);
  for (int i = 0; i < steps; ++i) {
    const double x = static_cast<double>(i) / (steps - 1);
    for (int j = 0; j < steps; ++j) {
      const double z = -0.5 + static_cast<double>(j) / (steps - 1);
      if (z * z <= x * (1 - x)) grid.push_back({x, z, 1 - x});
    }
  }
  return grid;
}

double grid_min_gap(const std::vector<std::array<double, 3>>& grid, const ShmInstance& inst) {
  const std::size_t m = inst.m();
  std::vector<std::array<double, 3>> coef(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& a = inst.mats()[i];
    coef[i] = {a(0, 0), 2 * a(0, 1), a(1, 1)};
  }
  double best = 1e300;
  for (const auto& g : grid) {
    double s = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const double r = coef[i][0] * g[0] + coef[i][1] * g[1] + coef[i][2] * g[2] - inst.b()[i];
      s += r * r;
    }
    best = std::min(best, s);
  }
  return std::sqrt(best);
}

Outcome criterion_grid() {
  Outcome o;
  const auto grid = delta2_grid();
  std::mt19937_64 rng(3003);
  std::uniform_int_distribution<std::size_t> msize(1, 4);
  std::normal_distribution<double> noise(0.0, 0.4);
  const double eps = 1e-2;
  std::size_t feasible = 0, witness = 0, banded = 0;

  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = msize(rng);
    std::vector<SymmetricMatrix> mats;
    for (std::size_t i = 0; i < m; ++i) mats.push_back(random_sym(2, rng));
    const ShmInstance probe(mats, Vector(m, 0.0));
    Vector b = rank_one_image(probe, random_unit(2, rng));
    for (auto& x : b) x += noise(rng);
    ShmInstance inst(mats, b);

    const double tol = eps * inst.radius_bound();
    const double min_gap = grid_min_gap(grid, inst);
    if (min_gap > tol / 2 && min_gap < 2 * tol) {
      ++banded;
      continue;
    }
    const Verdict expected = min_gap <= tol / 2 ? Verdict::feasible : Verdict::witness;
    ShmOptions opts;
    opts.epsilon = eps;
    opts.seed = trial;
    const auto cert = tracked_solve(inst, opts, "grid #" + std::to_string(trial));
    if (cert.kind != expected) {
      o.fail("trial " + std::to_string(trial) + ": solver " + to_string(cert.kind) + ", grid " + to_string(expected));
    }
    (expected == Verdict::feasible ? feasible : witness)++;
  }
  o.detail << grid.size() << " grid points; " << feasible << " feasible, " << witness << " witness, " << banded
           << " in the tolerance band (excluded)";
  if (feasible == 0 || witness == 0) o.fail("one verdict never exercised");
  return o;
}

// ---------------------------------------------------------------------------
// 4. every witness above survives sampling and an independent eigen check

Outcome criterion_witnesses() {
  Outcome o;
  std::size_t samples = 0;
  double smallest_margin = 1e300;
  for (std::size_t k = 0; k < g_witnesses.size(); ++k) {
    const auto& w = g_witnesses[k];
    const auto rep = verify_certificate(w.instance, w.cert, 10000, 4000 + k);
    samples += rep.samples_checked;
    if (!rep.passed) o.fail(w.origin + ": " + (rep.violations.empty() ? "verify failed" : rep.violations.front()));

    const auto a = assemble_pivot_matrix(w.instance, w.cert.point);
    const double margin = certified_min_eig(a.matrix).value - a.threshold;
    smallest_margin = std::min(smallest_margin, margin);
    if (!(margin > 0)) o.fail(w.origin + ": independent eig margin " + std::to_string(margin));
    if (!w.cert.eig_margin || !(*w.cert.eig_margin > 0)) o.fail(w.origin + ": reported eig_margin not positive");
  }
  o.detail << g_witnesses.size() << " witnesses, " << samples << " samples, zero violations required; smallest margin "
           << smallest_margin;
  if (g_witnesses.empty()) o.fail("no witnesses collected");
  return o;
}

// ---------------------------------------------------------------------------
// 5. pruning

Outcome criterion_pruning() {
  Outcome o;
  std::mt19937_64 rng(5005);
  std::uniform_int_distribution<std::size_t> size(1, 20);
  std::uniform_real_distribution<double> w(0.01, 1.0);
  double worst_change = 0;
  std::size_t prunes = 0;

  for (int run = 0; run < 100; ++run) {
    const std::size_t n = size(rng), m = size(rng);
    std::vector<SymmetricMatrix> mats;
    for (std::size_t i = 0; i < m; ++i) mats.push_back(random_sym(n, rng));
    ShmInstance inst(mats, Vector(m, 0.0));
    const std::size_t target = std::min(m + 1, n);

    // As wide as the solver ever lets a representation grow, and wider.
    const std::size_t terms = target + 9 + run % (n + 1);
    std::vector<std::pair<double, Vector>> raw;
    double total = 0;
    for (std::size_t k = 0; k < terms; ++k) {
      raw.emplace_back(w(rng), random_unit(n, rng));
      total += raw.back().first;
    }
    for (auto& [wt, v] : raw) wt /= total;
    SpectraplexPoint x(n, raw);
    x.bind(inst);
    const Vector before = image(inst, x);
    const auto r = prune_representation(inst, x);
    ++prunes;
    const double change = distance(image(inst, r.point), before) / inst.radius_bound();
    worst_change = std::max(worst_change, change);
    if (r.point.size() > target) o.fail("run " + std::to_string(run) + ": " + std::to_string(r.point.size()) + " terms");
    if (change > 1e-9) o.fail("run " + std::to_string(run) + ": image moved " + std::to_string(change));
    try {
      r.point.validate();
    } catch (const std::exception& e) {
      o.fail("run " + std::to_string(run) + ": " + e.what());
    }
  }

  // Prunes inside the solver are held to the same bound.
  std::size_t solver_prunes = 0;
  for (int run = 0; run < 10; ++run) {
    const std::size_t n = 6 + run, m = 3;
    std::vector<SymmetricMatrix> mats;
    for (std::size_t i = 0; i < m; ++i) mats.push_back(random_sym(n, rng));
    ShmInstance probe(mats, Vector(m, 0.0));
    Vector b(m, 0.0);
    for (int k = 0; k < 4; ++k) {
      const auto p = rank_one_image(probe, random_unit(n, rng));
      for (std::size_t i = 0; i < m; ++i) b[i] += p[i] / 4;
    }
    ShmOptions opts;
    opts.epsilon = 1e-5;
    opts.mode = PivotMode::power;
    const auto cert = solve_shm(probe.with_target(b), opts);
    solver_prunes += cert.stats.prunes;
    worst_change = std::max(worst_change, cert.stats.max_prune_image_change / cert.radius_bound);
    if (cert.stats.max_prune_image_change > 1e-9 * cert.radius_bound) o.fail("solver prune moved the image");
  }
  o.detail << prunes << " direct prunes and " << solver_prunes
           << " in-solver prunes; worst image change " << worst_change << " R-hat";
  return o;
}

// ---------------------------------------------------------------------------
// 6. MAX CUT relaxation values

double k2_closed_form(double w12) {
  // Y = [[1, a], [a, 1]] is psd iff |a| <= 1 and W . Y = 2 a w12.
  return -2 * w12;
}

double k3_grid_min() {
  // Y = [[1,a,b],[a,1,c],[b,c,1]] psd iff |a| <= 1 and det >= 0.
  const int steps = 400;
  double best = 0;
  for (int i = 0; i <= steps; ++i) {
    const double a = -1 + 2.0 * i / steps;
    for (int j = 0; j <= steps; ++j) {
      const double b = -1 + 2.0 * j / steps;
      for (int k = 0; k <= steps; ++k) {
        const double c = -1 + 2.0 * k / steps;
        if (1 - a * a - b * b - c * c + 2 * a * b * c < 0) continue;
        best = std::min(best, 2 * (a + b + c));
      }
    }
  }
  return best;
}

Outcome criterion_maxcut() {
  Outcome o;
  const double eps = 1e-3;
  for (std::size_t n : {2u, 3u}) {
    std::vector<double> w(n * n, 1.0);
    for (std::size_t i = 0; i < n; ++i) w[i * n + i] = 0;
    const MaxCutInstance mc(SymmetricMatrix(n, w));
    const double oracle = n == 2 ? k2_closed_form(1.0) : k3_grid_min();
    const auto t0 = Clock::now();
    const auto r = solve_maxcut_relaxation(mc, eps, 0, 0);
    const double dt = seconds_since(t0);
    const auto y = r.y_matrix();
    double diag_err = 0;
    for (std::size_t i = 0; i < n; ++i) diag_err = std::max(diag_err, std::abs(y(i, i) - 1));
    o.detail << "K" << n << " value " << r.sdp_value << " vs oracle " << oracle << " in " << dt << " s, max |Y_ii-1| "
             << diag_err << "; ";
    if (!r.complete) o.fail("K" + std::to_string(n) + " search aborted");
    if (std::abs(r.sdp_value - oracle) > 1e-2) o.fail("K" + std::to_string(n) + " value off");
    if (dt >= 30) o.fail("K" + std::to_string(n) + " too slow");
    if (diag_err > n * eps) o.fail("K" + std::to_string(n) + " diagonal off");
  }
  return o;
}

// ---------------------------------------------------------------------------
// 7. SDP feasibility through the homogeneous reduction

Outcome criterion_sdp() {
  Outcome o;
  {
    SdpFeasibilityInstance sdp({SymmetricMatrix::diagonal(Vector{1})}, {2});
    ShmOptions opts;
    opts.epsilon = 1e-6;
    const auto cert = solve_shm(reduce_sdp_to_shm(sdp), opts);
    const auto rec = cert.kind == Verdict::feasible ? recover_sdp_solution(sdp, cert.point) : PrimalRecovery{};
    if (!rec.primal || std::abs((*rec.primal)(0, 0) - 2) > 1e-3) o.fail("A=(1), b=2 did not recover X=2");
  }
  {
    SdpFeasibilityInstance sdp({SymmetricMatrix::diagonal(Vector{-1})}, {1});
    const auto cert = solve_shm(reduce_sdp_to_shm(sdp), {});
    if (cert.kind != Verdict::witness) o.fail("A=(-1), b=1 not a witness");
  }

  std::mt19937_64 rng(7007);
  std::uniform_int_distribution<std::size_t> nsize(1, 6), msize(1, 5);
  double worst = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = nsize(rng), m = msize(rng);
    // A_1 positive definite: no psd direction is annihilated, so the set is bounded.
    auto a1 = SymmetricMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) a1.add_scaled(SymmetricMatrix::outer(random_unit(n, rng)), 0.5);
    std::vector<SymmetricMatrix> mats{a1};
    for (std::size_t i = 1; i < m; ++i) mats.push_back(random_sym(n, rng));

    // X* = (I + G G^T) / 2n with unit-norm columns g_k: unit trace and
    // lambda_min >= 1/2n. A nearly singular X* leaves 0 almost on the boundary
    // of the reduced hull, where progress drops to the O(1/eps^2) worst case.
    auto xstar = SymmetricMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) xstar.add_scaled(SymmetricMatrix::outer(random_unit(n, rng)), 1.0);
    xstar = [&] {
      auto scaled = SymmetricMatrix::zeros(n);
      scaled.add_scaled(xstar, 0.5 / n);
      return scaled;
    }();
    Vector rhs;
    for (const auto& a : mats) rhs.push_back(frobenius_dot(a, xstar));

    SdpFeasibilityInstance sdp(mats, rhs);
    ShmOptions opts;
    opts.epsilon = 1e-5;
    opts.seed = trial;
    const auto cert = solve_shm(reduce_sdp_to_shm(sdp), opts);
    if (cert.kind != Verdict::feasible) {
      o.fail("trial " + std::to_string(trial) + " " + to_string(cert.kind));
      continue;
    }
    const auto rec = recover_sdp_solution(sdp, cert.point);
    if (!rec.primal) {
      o.fail("trial " + std::to_string(trial) + ": " + rec.diagnostic);
      continue;
    }
    for (std::size_t i = 0; i < m; ++i) worst = std::max(worst, std::abs(frobenius_dot(mats[i], *rec.primal) - rhs[i]));
  }
  o.detail << "two n=1 examples plus 50 random instances; worst residual " << worst;
  if (worst > 1e-3) o.fail("residual above 1e-3");
  return o;
}

// ---------------------------------------------------------------------------
// 8. separation of interval pairs

Outcome criterion_separation() {
  Outcome o;
  auto interval = [](double lo, double hi) { return ShmInstance({SymmetricMatrix::diagonal(Vector{lo, hi})}, {0}); };
  SeparationOptions opts;
  opts.epsilon = 1e-4;

  const auto left = interval(1, 2), right = interval(4, 5);
  const auto sep = solve_separation(left, right, opts);
  if (sep.kind != PairVerdict::separated || !sep.hyperplane) {
    o.fail("[1,2] vs [4,5] not separated");
  } else {
    std::mt19937_64 rng(8008);
    std::size_t errors = 0;
    for (int s = 0; s < 5000; ++s) {
      if (!(sep.hyperplane->evaluate(rank_one_image(left, random_unit(2, rng))) < 0)) ++errors;
      if (!(sep.hyperplane->evaluate(rank_one_image(right, random_unit(2, rng))) > 0)) ++errors;
    }
    o.detail << "[1,2] vs [4,5] separated at x = " << sep.hyperplane->offset / sep.hyperplane->normal[0] << ", "
             << errors << " misclassified of 10000; ";
    if (errors) o.fail("misclassified samples");
  }

  const auto meet = solve_separation(interval(1, 3), interval(2, 5), opts);
  o.detail << "[1,3] vs [2,5] " << to_string(meet.kind) << " with gap " << meet.pair.gap / meet.scale << " scale";
  if (meet.kind != PairVerdict::intersecting) o.fail("[1,3] vs [2,5] not intersecting");
  if (meet.pair.gap > 1e-4 * meet.scale) o.fail("pair gap above 1e-4 scale");
  return o;
}

// ---------------------------------------------------------------------------
// 9. iteration budget and cache economy over the runs of criteria 1-3

Outcome criterion_budget() {
  Outcome o;
  std::size_t feasible = 0, compared = 0, cached_calls = 0, plain_calls = 0;
  double worst_ratio = 0;
  for (const auto& run : g_runs) {
    if (run.cert.kind == Verdict::feasible) {
      ++feasible;
      const double bound = 64.0 / (run.options.epsilon * run.options.epsilon);
      worst_ratio = std::max(worst_ratio, run.cert.iterations / bound);
      if (run.cert.iterations > bound) o.fail(run.origin + " exceeded 64/eps^2");
    }
    if (run.options.mode != PivotMode::cached) continue;
    ShmOptions plain = run.options;
    plain.mode = PivotMode::power;
    const auto p = solve_shm(run.instance, plain);
    ++compared;
    cached_calls += run.cert.oracle_calls;
    plain_calls += p.oracle_calls;
    if (run.cert.oracle_calls > p.oracle_calls) {
      o.fail(run.origin + ": cached " + std::to_string(run.cert.oracle_calls) + " > plain " +
             std::to_string(p.oracle_calls));
    }
  }
  o.detail << feasible << " feasible runs, worst iterations/(64/eps^2) = " << worst_ratio << "; " << compared
           << " cached-vs-plain pairs, oracle calls " << cached_calls << " vs " << plain_calls;
  return o;
}

// ---------------------------------------------------------------------------
// 10. eigen backend

Outcome criterion_eigen() {
  Outcome o;
  std::mt19937_64 rng(10010);
  std::uniform_int_distribution<std::size_t> size(1, 64);
  double worst_rec = 0, worst_orth = 0, worst_ray = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = size(rng);
    const auto a = random_sym(n, rng);
    const double fro = a.frobenius_norm();
    const auto e = jacobi_eigen(a);

    auto rebuilt = SymmetricMatrix::zeros(n);
    for (std::size_t k = 0; k < n; ++k) rebuilt.add_scaled(SymmetricMatrix::outer(e.vectors[k]), e.values[k]);
    rebuilt.add_scaled(a, -1.0);
    const double rec = rebuilt.frobenius_norm() / fro;

    double orth = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) orth = std::max(orth, std::abs(dot(e.vectors[i], e.vectors[j]) - (i == j)));

    // Threshold below every eigenvalue: the full budget runs and every
    // returned Rayleigh value must still sit above lambda_min.
    std::mt19937_64 prng(trial);
    const auto p = min_eig_power(a, e.values.front() - fro, default_power_budget(n), prng);
    const double ray = (e.values.front() - p.rayleigh) / fro;

    worst_rec = std::max(worst_rec, rec);
    worst_orth = std::max(worst_orth, orth);
    worst_ray = std::max(worst_ray, ray);
    if (rec > 1e-9) o.fail("reconstruction " + std::to_string(rec));
    if (orth > 1e-10) o.fail("orthogonality " + std::to_string(orth));
    if (ray > 1e-10) o.fail("Rayleigh below lambda_min");
  }
  o.detail << "500 matrices; worst reconstruction " << worst_rec << " ||A||_F, orthogonality " << worst_orth
           << ", Rayleigh undershoot " << worst_ray << " ||A||_F";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"interval oracle", criterion_interval},
      {"diagonal reduction equivalence", criterion_diagonal},
      {"n=2 grid oracle", criterion_grid},
      {"witness certificate validity", criterion_witnesses},
      {"representation pruning", criterion_pruning},
      {"MAX CUT oracles", criterion_maxcut},
      {"SDP feasibility reduction", criterion_sdp},
      {"two-hull separation", criterion_separation},
      {"iteration budget and cache economy", criterion_budget},
      {"eigen backend", criterion_eigen},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %zu %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, seconds_since(t0),
                o.detail.str().c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed;
}
