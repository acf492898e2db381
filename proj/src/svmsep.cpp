#include "trihull/svmsep.hpp"

#include <cmath>
#include <random>

#include "trihull/errors.hpp"

namespace trihull {

const char* to_string(PairVerdict v) {
  switch (v) {
    case PairVerdict::intersecting: return "intersecting";
    case PairVerdict::separated: return "separated";
    case PairVerdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

struct Side {
  ShmInstance instance;  // target refreshed to the other side's image each attempt
  SpectraplexPoint point;
  PivotCache cache;
};

}  // namespace

PairCertificate solve_separation(const ShmInstance& left, const ShmInstance& right,
                                 const SeparationOptions& options) {
  if (!(options.epsilon > 0.0 && options.epsilon < 1.0)) throw DomainError("solve_separation: epsilon must lie in (0,1)");
  if (left.m() != right.m()) throw DimensionError("solve_separation: image dimensions differ");
  const std::size_t m = left.m();
  const std::size_t max_iters = options.max_iters ? options.max_iters : default_max_iters(options.epsilon);

  PairCertificate cert;
  cert.epsilon = options.epsilon;
  for (const auto& a : left.mats()) cert.scale += a.frobenius_norm();
  for (const auto& a : right.mats()) cert.scale += a.frobenius_norm();

  const Vector zero(m, 0.0);
  Side sides[2] = {
      Side{left.with_target(zero), SpectraplexPoint::uniform_rank_one(left.n()), PivotCache(m)},
      Side{right.with_target(zero), SpectraplexPoint::uniform_rank_one(right.n()), PivotCache(m)},
  };
  for (auto& s : sides) s.point.bind(s.instance);

  std::mt19937_64 rng(options.seed);
  const OracleSettings settings{options.power_budget, false};
  std::optional<double> margins[2];
  int first = 0;  // side searched first in the next sweep

  auto finish = [&](PairVerdict kind) {
    cert.kind = kind;
    cert.pair.gap = distance(sides[0].point.image(), sides[1].point.image());
    cert.pair.left = std::move(sides[0].point);
    cert.pair.right = std::move(sides[1].point);
    return cert;
  };

  for (;;) {
    const double gap = distance(sides[0].point.image(), sides[1].point.image());
    if (options.record_trace) cert.gap_trace.push_back(gap);
    if (gap <= options.epsilon * cert.scale) return finish(PairVerdict::intersecting);
    if (cert.iterations >= max_iters) return finish(PairVerdict::inconclusive);

    bool stepped = false;
    margins[0].reset();
    margins[1].reset();
    for (int attempt = 0; attempt < 2 && !stepped; ++attempt) {
      const int k = attempt == 0 ? first : 1 - first;
      Side& side = sides[k];
      const Side& other = sides[1 - k];
      side.instance = side.instance.with_target(other.point.image());
      const auto assembly = assemble_pivot_matrix(side.instance, side.point);
      auto outcome = pivot_oracle(assembly, PivotMode::cached, &side.cache, rng, settings);
      if (outcome.used_eigensolver) ++cert.oracle_calls;

      if (outcome.kind == PivotOutcome::Kind::no_pivot) {
        margins[k] = outcome.value - outcome.threshold;
        continue;
      }
      if (outcome.kind == PivotOutcome::Kind::inconclusive) return finish(PairVerdict::inconclusive);

      Vector img = outcome.image.empty() ? rank_one_image(side.instance, outcome.vector) : std::move(outcome.image);
      if (distance(img, side.point.image()) == 0.0) return finish(PairVerdict::inconclusive);
      const auto step = ta_step(other.point.image(), side.point.image(), img);
      if (!(step.alpha > 0.0)) return finish(PairVerdict::inconclusive);
      side.cache.insert(outcome.vector, img);
      side.point.mix_in(step.alpha, std::move(outcome.vector), std::move(img));
      if (side.point.size() > std::min(m + 1, side.instance.n()) + 8) {
        auto pruned = prune_representation(side.instance, side.point);
        if (pruned.changed) side.point = std::move(pruned.point);
      }
      ++cert.iterations;
      stepped = true;
      first = k;
    }

    if (!stepped) {
      // Neither side has a pivot against the other's current point.
      cert.hyperplane = bisector(sides[0].point.image(), sides[1].point.image());
      cert.left_margin = margins[0];
      cert.right_margin = margins[1];
      return finish(PairVerdict::separated);
    }
  }
}

}  // namespace trihull
