#pragma once

// Triangle Algorithm for convex hull membership over an explicit point list.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "trihull/symcore.hpp"

namespace trihull {

struct PointSet {
  std::size_t dim = 0;
  std::vector<Vector> points;

  PointSet() = default;
  PointSet(std::size_t dim, std::vector<Vector> points);

  std::size_t size() const noexcept { return points.size(); }
  void add(Vector point);
};

/// {x : normal^T x = offset}, the orthogonal bisector of a witness segment.
/// With normal = p' - p0, hull points lie strictly on the side normal^T x > offset.
struct Hyperplane {
  Vector normal;
  double offset = 0.0;

  double evaluate(std::span<const double> x) const { return dot(normal, x) - offset; }
};

/// Bisector of the segment target -> iterate: normal = iterate - target,
/// offset = (||iterate||^2 - ||target||^2) / 2.
Hyperplane bisector(std::span<const double> target, std::span<const double> iterate);

enum class Verdict { feasible, witness, inconclusive };

const char* to_string(Verdict v);

/// Right-hand side of the pivot test (p' - p0)^T v <= threshold.
/// Plain: (||p'||^2 - ||p0||^2) / 2. Strict: p'^T p0 - ||p0||^2.
double pivot_threshold(std::span<const double> p0, std::span<const double> current, bool strict);

/// The minimizer of (p' - p0)^T v over the set (lowest index on ties), if it
/// satisfies the pivot test. Throws DomainError for an empty set.
std::optional<std::size_t> find_pivot(const PointSet& set, std::span<const double> p0,
                                      std::span<const double> current, bool strict);

struct TaStep {
  Vector point;
  double alpha = 0.0;
};

/// Nearest point to p0 on the segment [p', v]. Throws DomainError when v == p'.
TaStep ta_step(std::span<const double> p0, std::span<const double> current, std::span<const double> pivot);

struct ChmOptions {
  double epsilon = 1e-3;
  std::size_t max_iters = 0;  // 0: ceil(64 / epsilon^2)
  bool strict = false;
  bool record_trace = false;
};

struct ChmResult {
  Verdict verdict = Verdict::inconclusive;
  Vector coeffs;   // convex weights over the points
  Vector current;  // sum_i coeffs_i points_i
  double gap = 0.0;
  double radius = 0.0;  // max_i ||points_i - p0||
  std::optional<Hyperplane> hyperplane;
  std::size_t iterations = 0;
  std::size_t strict_fallbacks = 0;
  // Steps where ||p' - v|| >= sqrt(1 + eps) ||p0 - v|| held for the chosen pivot.
  std::size_t epsilon_property_steps = 0;
  std::vector<double> gap_trace;
};

std::size_t default_max_iters(double epsilon);

ChmResult solve_chm(const PointSet& set, std::span<const double> p0, const ChmOptions& options);

}  // namespace trihull
