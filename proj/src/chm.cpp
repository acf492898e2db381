#include "trihull/chm.hpp"

#include <algorithm>
#include <cmath>

#include "trihull/errors.hpp"

namespace trihull {

PointSet::PointSet(std::size_t d, std::vector<Vector> pts) : dim(d), points(std::move(pts)) {
  for (const auto& p : points) {
    if (p.size() != dim) throw DimensionError("PointSet: point dimension mismatch");
    for (double x : p)
      if (!std::isfinite(x)) throw DomainError("PointSet: non-finite coordinate");
  }
}

void PointSet::add(Vector point) {
  if (point.size() != dim) throw DimensionError("PointSet: point dimension mismatch");
  points.push_back(std::move(point));
}

Hyperplane bisector(std::span<const double> target, std::span<const double> iterate) {
  if (target.size() != iterate.size()) throw DimensionError("bisector: length mismatch");
  Hyperplane h;
  h.normal.resize(target.size());
  for (std::size_t i = 0; i < target.size(); ++i) h.normal[i] = iterate[i] - target[i];
  h.offset = 0.5 * (dot(iterate, iterate) - dot(target, target));
  return h;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::feasible: return "feasible";
    case Verdict::witness: return "witness";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

double pivot_threshold(std::span<const double> p0, std::span<const double> current, bool strict) {
  if (strict) return dot(current, p0) - dot(p0, p0);
  return 0.5 * (dot(current, current) - dot(p0, p0));
}

namespace {

// argmin_i (p' - p0)^T v_i with its score.
std::pair<std::size_t, double> linear_minimizer(const PointSet& set, std::span<const double> p0,
                                                std::span<const double> current) {
  if (set.points.empty()) throw DomainError("find_pivot: empty point set");
  if (p0.size() != set.dim || current.size() != set.dim) throw DimensionError("find_pivot: dimension mismatch");
  Vector dir(set.dim);
  for (std::size_t i = 0; i < set.dim; ++i) dir[i] = current[i] - p0[i];
  std::size_t best = 0;
  double best_score = dot(dir, set.points[0]);
  for (std::size_t k = 1; k < set.size(); ++k) {
    const double s = dot(dir, set.points[k]);
    if (s < best_score) {
      best_score = s;
      best = k;
    }
  }
  return {best, best_score};
}

}  // namespace

std::optional<std::size_t> find_pivot(const PointSet& set, std::span<const double> p0,
                                      std::span<const double> current, bool strict) {
  const auto [idx, score] = linear_minimizer(set, p0, current);
  if (score <= pivot_threshold(p0, current, strict)) return idx;
  return std::nullopt;
}

TaStep ta_step(std::span<const double> p0, std::span<const double> current, std::span<const double> pivot) {
  const std::size_t d = p0.size();
  if (current.size() != d || pivot.size() != d) throw DimensionError("ta_step: dimension mismatch");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const double dv = pivot[i] - current[i];
    num += (p0[i] - current[i]) * dv;
    den += dv * dv;
  }
  if (den == 0.0) throw DomainError("ta_step: degenerate pivot equal to the iterate");
  TaStep out;
  out.alpha = std::clamp(num / den, 0.0, 1.0);
  out.point.resize(d);
  for (std::size_t i = 0; i < d; ++i) out.point[i] = (1.0 - out.alpha) * current[i] + out.alpha * pivot[i];
  return out;
}

std::size_t default_max_iters(double epsilon) {
  return static_cast<std::size_t>(std::ceil(64.0 / (epsilon * epsilon)));
}

ChmResult solve_chm(const PointSet& set, std::span<const double> p0, const ChmOptions& options) {
  if (!(options.epsilon > 0.0 && options.epsilon < 1.0)) throw DomainError("solve_chm: epsilon must lie in (0,1)");
  if (set.points.empty()) throw DomainError("solve_chm: empty point set");
  if (p0.size() != set.dim) throw DimensionError("solve_chm: target dimension mismatch");
  const std::size_t max_iters = options.max_iters ? options.max_iters : default_max_iters(options.epsilon);

  ChmResult res;
  std::size_t start = 0;
  double nearest = distance(set.points[0], p0);
  for (std::size_t k = 0; k < set.size(); ++k) {
    const double d = distance(set.points[k], p0);
    res.radius = std::max(res.radius, d);
    if (d < nearest) {
      nearest = d;
      start = k;
    }
  }
  res.coeffs.assign(set.size(), 0.0);
  res.coeffs[start] = 1.0;
  res.current = set.points[start];

  const double sqrt_one_eps = std::sqrt(1.0 + options.epsilon);
  for (;;) {
    res.gap = distance(res.current, p0);
    if (options.record_trace) res.gap_trace.push_back(res.gap);
    if (res.gap <= options.epsilon * res.radius || res.gap == 0.0) {
      res.verdict = Verdict::feasible;
      return res;
    }
    if (res.iterations >= max_iters) {
      res.verdict = Verdict::inconclusive;
      return res;
    }

    std::optional<std::size_t> pivot;
    if (options.strict) {
      pivot = find_pivot(set, p0, res.current, true);
      if (!pivot) {
        pivot = find_pivot(set, p0, res.current, false);
        if (pivot) ++res.strict_fallbacks;
      }
    } else {
      pivot = find_pivot(set, p0, res.current, false);
    }
    if (!pivot) {
      res.verdict = Verdict::witness;
      res.hyperplane = bisector(p0, res.current);
      return res;
    }

    const auto& v = set.points[*pivot];
    if (distance(res.current, v) >= sqrt_one_eps * distance(p0, v)) ++res.epsilon_property_steps;
    auto step = ta_step(p0, res.current, v);
    for (auto& c : res.coeffs) c *= 1.0 - step.alpha;
    res.coeffs[*pivot] += step.alpha;
    res.current = std::move(step.point);
    ++res.iterations;
  }
}

}  // namespace trihull
