#include <algorithm>
#include <cmath>
#include <optional>

#include "trihull/errors.hpp"
#include "trihull/shm.hpp"

namespace trihull {

namespace {

constexpr double kPruneGuard = 1e-10;
constexpr double kRankTolerance = 1e-12;

// A nonzero c with sum_k c_k images_k = 0 and sum_k c_k = 0, normalized so
// max |c_k| = 1. Gaussian elimination with partial pivoting on the
// (m+1) x t system; the first free column fixes c.
std::optional<Vector> affine_dependency(const std::vector<RankOneTerm>& terms) {
  const std::size_t t = terms.size();
  const std::size_t rows = terms.front().image.size() + 1;
  std::vector<Vector> a(rows, Vector(t));
  for (std::size_t k = 0; k < t; ++k) {
    for (std::size_t i = 0; i + 1 < rows; ++i) a[i][k] = terms[k].image[i];
    a[rows - 1][k] = 1.0;
  }
  for (auto& r : a) {
    double scale = 0.0;
    for (double x : r) scale = std::max(scale, std::abs(x));
    if (scale > 0.0)
      for (double& x : r) x /= scale;
  }

  std::vector<std::size_t> pivot_col;  // pivot column of each reduced row
  std::size_t row = 0;
  std::optional<std::size_t> free_col;
  for (std::size_t col = 0; col < t; ++col) {
    std::size_t best = row;
    double best_abs = 0.0;
    for (std::size_t r = row; r < rows; ++r) {
      if (std::abs(a[r][col]) > best_abs) {
        best_abs = std::abs(a[r][col]);
        best = r;
      }
    }
    if (row == rows || best_abs <= kRankTolerance) {
      free_col = col;
      break;
    }
    std::swap(a[row], a[best]);
    const double inv = 1.0 / a[row][col];
    for (double& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0.0) continue;
      const double f = a[r][col];
      for (std::size_t k = 0; k < t; ++k) a[r][k] -= f * a[row][k];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (!free_col) return std::nullopt;

  Vector c(t, 0.0);
  c[*free_col] = 1.0;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) c[pivot_col[r]] = -a[r][*free_col];
  double scale = 0.0;
  for (double x : c) scale = std::max(scale, std::abs(x));
  for (double& x : c) x /= scale;
  return c;
}

// X = sum_k lambda_k u_k u_k^T over the positive spectrum of X.
std::vector<RankOneTerm> spectral_terms(const ShmInstance& instance, const SpectraplexPoint& x) {
  const auto eig = jacobi_eigen(x.to_matrix());
  const double top = eig.values.back();
  std::vector<RankOneTerm> out;
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    if (eig.values[k] <= 1e-15 * top) continue;
    out.push_back(RankOneTerm{eig.values[k], eig.vectors[k], rank_one_image(instance, eig.vectors[k])});
  }
  return out;
}

}  // namespace

std::size_t low_rank_bound(std::size_t m) {
  return static_cast<std::size_t>(std::floor((std::sqrt(8.0 * static_cast<double>(m) + 9.0) - 1.0) / 2.0));
}

PruneResult prune_representation(const ShmInstance& instance, const SpectraplexPoint& input) {
  PruneResult res;
  res.point = input;
  if (!res.point.is_bound()) res.point.bind(instance);
  const Vector original = res.point.image();
  const std::size_t bound = std::min(instance.m() + 1, instance.n());

  std::vector<RankOneTerm> terms;
  for (const auto& t : res.point.terms()) {
    auto same = std::find_if(terms.begin(), terms.end(),
                             [&](const RankOneTerm& u) { return same_direction(u.direction, t.direction); });
    if (same != terms.end()) {
      same->weight += t.weight;
    } else {
      terms.push_back(t);
    }
  }
  if (terms.size() == res.point.size() && terms.size() <= bound) return res;

  try {
    if (terms.size() > instance.n()) {
      SpectraplexPoint merged = res.point;
      merged.assign_terms(terms);
      terms = spectral_terms(instance, merged);
    }
    while (terms.size() > instance.m() + 1) {
      auto c = affine_dependency(terms);
      if (!c) {
        res.warning = "prune: no affine dependency found; representation left unchanged";
        return res;
      }
      std::size_t leave = terms.size();
      double theta = 0.0;
      for (std::size_t k = 0; k < terms.size(); ++k) {
        if ((*c)[k] <= 0.0) continue;
        const double ratio = terms[k].weight / (*c)[k];
        if (leave == terms.size() || ratio < theta) {
          theta = ratio;
          leave = k;
        }
      }
      for (std::size_t k = 0; k < terms.size(); ++k) terms[k].weight -= theta * (*c)[k];
      terms[leave].weight = 0.0;
      std::erase_if(terms, [](const RankOneTerm& t) { return t.weight <= 0.0; });
    }
  } catch (const std::exception& e) {
    res.warning = std::string("prune: ") + e.what() + "; representation left unchanged";
    return res;
  }

  SpectraplexPoint pruned = res.point;
  pruned.assign_terms(std::move(terms));
  const double change = distance(pruned.image(), original);
  if (change > kPruneGuard * instance.radius_bound()) {
    res.warning = "prune: image drift above tolerance; representation left unchanged";
    return res;
  }
  res.point = std::move(pruned);
  res.changed = true;
  res.image_change = change;
  return res;
}

}  // namespace trihull
