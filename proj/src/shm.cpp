#include "trihull/shm.hpp"

#include <algorithm>
#include <cmath>

#include "trihull/errors.hpp"

namespace trihull {

namespace {

constexpr std::size_t kRefreshPeriod = 1000;
constexpr std::size_t kPruneSlack = 8;
constexpr double kCacheCosine = 1.0 - 1e-9;
// Cache pivots converge to the nearest point of conv(cache images), which can
// sit short of b. A long window of cache steps that shrinks the gap by less
// than 0.1% forces one search over the whole spectraplex. Shorter windows
// spend eigen calls on runs that are merely slow.
constexpr std::size_t kStallWindow = 1024;
constexpr double kStallRatio = 0.999;

}  // namespace

PivotMatrixAssembly assemble_pivot_matrix(const ShmInstance& instance, const SpectraplexPoint& x) {
  const Vector& p = x.image();
  const Vector& b = instance.b();
  if (p.size() != instance.m()) throw DimensionError("assemble_pivot_matrix: image length mismatch");
  PivotMatrixAssembly out;
  out.matrix = SymmetricMatrix::zeros(instance.n());
  for (std::size_t i = 0; i < instance.m(); ++i) {
    const double r = p[i] - b[i];
    if (r != 0.0) out.matrix.add_scaled(instance.mats()[i], r);
  }
  out.threshold = pivot_threshold(b, p, false);
  out.strict_threshold = pivot_threshold(b, p, true);
  out.current = p;
  out.target = b;
  return out;
}

const char* to_string(PivotMode mode) {
  switch (mode) {
    case PivotMode::power: return "power";
    case PivotMode::exact: return "exact";
    case PivotMode::cached: return "cached";
  }
  return "unknown";
}

const char* to_string(StartMode mode) {
  switch (mode) {
    case StartMode::rank_one_e: return "rankone-e";
    case StartMode::identity: return "identity";
  }
  return "unknown";
}

std::size_t PivotCache::insert(Vector direction, Vector image) {
  for (std::size_t k = 0; k < directions_.size(); ++k) {
    if (std::abs(dot(directions_[k], direction)) > kCacheCosine) return k;
  }
  if (images_.dim == 0 && directions_.empty()) images_.dim = image.size();
  directions_.push_back(std::move(direction));
  images_.add(std::move(image));
  return directions_.size() - 1;
}

PivotOutcome pivot_oracle(const PivotMatrixAssembly& assembly, PivotMode mode, const PivotCache* cache,
                          std::mt19937_64& rng, const OracleSettings& settings) {
  const SymmetricMatrix& a = assembly.matrix;
  const double threshold = assembly.threshold;
  const double test = settings.strict ? assembly.strict_threshold : threshold;

  PivotOutcome out;
  out.threshold = threshold;

  auto accept = [&](Vector v, double value, bool fallback) {
    out.kind = PivotOutcome::Kind::pivot;
    out.vector = std::move(v);
    out.value = value;
    out.strict_fallback = fallback;
    return out;
  };

  if (mode == PivotMode::cached && cache != nullptr && cache->size() > 0) {
    auto idx = find_pivot(cache->images(), assembly.target, assembly.current, settings.strict);
    bool fallback = false;
    if (!idx && settings.strict) {
      idx = find_pivot(cache->images(), assembly.target, assembly.current, false);
      fallback = idx.has_value();
    }
    if (idx) {
      const Vector& v = cache->directions()[*idx];
      const double value = quad_form(a, v);
      // The image-space score and v^T A v agree up to rounding; insist on the latter.
      if (value <= threshold) {
        out.cache_index = idx;
        out.image = cache->images().points[*idx];
        return accept(v, value, fallback);
      }
    }
  }

  out.used_eigensolver = true;
  if (mode != PivotMode::exact) {
    const std::size_t budget = settings.power_budget ? settings.power_budget : default_power_budget(a.order());
    for (int attempt = 0; attempt < 2; ++attempt) {
      auto r = min_eig_power(a, test, budget, rng);
      out.power_iterations += r.iterations;
      if (r.exited_early) return accept(std::move(r.vector), r.rayleigh, false);
    }
  }

  auto me = certified_min_eig(a);
  ++out.jacobi_calls;
  const double value = quad_form(a, me.vector);
  if (value <= test) return accept(std::move(me.vector), value, false);
  if (settings.strict && value <= threshold) return accept(std::move(me.vector), value, true);

  out.vector = std::move(me.vector);
  out.value = me.value;
  out.kind = me.value > threshold ? PivotOutcome::Kind::no_pivot : PivotOutcome::Kind::inconclusive;
  return out;
}

Certificate solve_shm(const ShmInstance& instance, const ShmOptions& options) {
  if (!(options.epsilon > 0.0 && options.epsilon < 1.0)) throw DomainError("solve_shm: epsilon must lie in (0,1)");
  const std::size_t max_iters = options.max_iters ? options.max_iters : default_max_iters(options.epsilon);
  const double radius = instance.radius_bound();
  const Vector& b = instance.b();

  SpectraplexPoint x;
  if (options.warm_start) {
    x = *options.warm_start;
  } else if (options.start == StartMode::identity) {
    x = SpectraplexPoint::scaled_identity(instance.n());
  } else {
    x = SpectraplexPoint::uniform_rank_one(instance.n());
  }
  if (x.order() != instance.n()) throw DimensionError("solve_shm: warm start has the wrong order");
  x.bind(instance);

  std::mt19937_64 rng(options.seed);
  PivotCache cache(instance.m());
  const OracleSettings settings{options.power_budget, options.strict};
  const std::size_t prune_trigger = std::min(instance.m() + 1, instance.n()) + kPruneSlack;

  Certificate cert;
  cert.epsilon = options.epsilon;
  cert.radius_bound = radius;

  auto finish = [&](Verdict kind, double gap) {
    cert.kind = kind;
    cert.gap = gap;
    cert.stats.max_terms = std::max(cert.stats.max_terms, x.size());
    cert.point = std::move(x);
    cert.pivots = cache.directions();
    return cert;
  };

  std::size_t since_refresh = 0;
  std::size_t cache_run = 0;
  double window_gap = 0.0;
  bool skip_cache = false;
  for (;;) {
    if (since_refresh >= kRefreshPeriod) {
      x.refresh_image();
      since_refresh = 0;
    }
    const double gap = distance(x.image(), b);
    if (options.record_trace) cert.gap_trace.push_back(gap);
    if (gap <= options.epsilon * radius || gap == 0.0) return finish(Verdict::feasible, gap);
    if (cert.iterations >= max_iters) return finish(Verdict::inconclusive, gap);

    const auto assembly = assemble_pivot_matrix(instance, x);
    auto outcome = pivot_oracle(assembly, options.mode, skip_cache ? nullptr : &cache, rng, settings);
    skip_cache = false;
    if (outcome.used_eigensolver) ++cert.oracle_calls;
    if (outcome.cache_index) {
      ++cert.stats.cache_pivots;
      if (cache_run++ == 0) window_gap = gap;
      if (cache_run == kStallWindow) {
        skip_cache = gap > kStallRatio * window_gap;
        cache_run = 0;
      }
    } else {
      cache_run = 0;
    }
    if (outcome.strict_fallback) ++cert.stats.strict_fallbacks;
    cert.stats.power_iterations += outcome.power_iterations;
    cert.stats.jacobi_calls += outcome.jacobi_calls;

    if (outcome.kind == PivotOutcome::Kind::no_pivot) {
      cert.hyperplane = bisector(b, x.image());
      cert.eig_margin = outcome.value - outcome.threshold;
      return finish(Verdict::witness, gap);
    }
    if (outcome.kind == PivotOutcome::Kind::inconclusive) return finish(Verdict::inconclusive, gap);

    Vector img = outcome.image.empty() ? rank_one_image(instance, outcome.vector) : std::move(outcome.image);
    if (distance(img, x.image()) == 0.0) return finish(Verdict::inconclusive, gap);
    const auto step = ta_step(b, x.image(), img);
    if (!(step.alpha > 0.0)) return finish(Verdict::inconclusive, gap);

    cache.insert(outcome.vector, img);
    x.mix_in(step.alpha, std::move(outcome.vector), std::move(img));
    ++cert.iterations;
    ++since_refresh;
    cert.stats.max_terms = std::max(cert.stats.max_terms, x.size());

    if (x.size() > prune_trigger) {
      auto pruned = prune_representation(instance, x);
      if (pruned.changed) {
        ++cert.stats.prunes;
        cert.stats.max_prune_image_change = std::max(cert.stats.max_prune_image_change, pruned.image_change);
        x = std::move(pruned.point);
        since_refresh = 0;
      }
    }
  }
}

Certificate solve_shm_cached(const ShmInstance& instance, double epsilon, std::size_t max_iters,
                             std::uint64_t seed) {
  ShmOptions opts;
  opts.epsilon = epsilon;
  opts.max_iters = max_iters;
  opts.seed = seed;
  opts.mode = PivotMode::cached;
  return solve_shm(instance, opts);
}

}  // namespace trihull
