#include "trihull/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "trihull/errors.hpp"

namespace trihull {

namespace {

constexpr int kMaxSweeps = 30;

double off_diagonal_mass(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition jacobi_eigen(const SymmetricMatrix& m, double tol) {
  if (!(tol > 0.0)) throw DomainError("jacobi_eigen: tol must be positive");
  const std::size_t n = m.order();
  std::vector<double> a(m.data().begin(), m.data().end());
  std::vector<double> v(n * n, 0.0);  // columns are eigenvectors
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const double target = tol * m.frobenius_norm();
  std::size_t sweep = 0;
  for (;; ++sweep) {
    if (off_diagonal_mass(a, n) <= target) break;
    if (sweep == kMaxSweeps) throw NumericalError("jacobi_eigen: no convergence after 30 sweeps");

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        // Negligible relative to both diagonal entries: annihilate outright.
        if (sweep > 3 && std::abs(app) + 100.0 * std::abs(apq) == std::abs(app) &&
            std::abs(aqq) + 100.0 * std::abs(apq) == std::abs(aqq)) {
          a[p * n + q] = a[q * n + p] = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          const double nkp = c * akp - s * akq;
          const double nkq = s * akp + c * akq;
          a[k * n + p] = a[p * n + k] = nkp;
          a[k * n + q] = a[q * n + k] = nkq;
        }
        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;

        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a[i * n + i] < a[j * n + j]; });

  EigenDecomposition out;
  out.sweeps = sweep;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (std::size_t idx : order) {
    out.values.push_back(a[idx * n + idx]);
    Vector col(n);
    for (std::size_t k = 0; k < n; ++k) col[k] = v[k * n + idx];
    out.vectors.push_back(normalized(col));
  }
  return out;
}

MinEigenpair certified_min_eig(const SymmetricMatrix& a) {
  auto eig = jacobi_eigen(a);
  return {eig.values.front(), std::move(eig.vectors.front())};
}

std::size_t default_power_budget(std::size_t n, double eps0) {
  if (!(eps0 > 0.0)) throw DomainError("default_power_budget: eps0 must be positive");
  const double k = std::ceil(10.0 * std::log(static_cast<double>(std::max<std::size_t>(n, 1))) / eps0);
  return std::max<std::size_t>(1, static_cast<std::size_t>(k));
}

PowerResult min_eig_power(const SymmetricMatrix& a, double threshold, std::size_t budget,
                          std::mt19937_64& rng) {
  if (budget == 0) throw DomainError("min_eig_power: budget must be at least 1");
  const std::size_t n = a.order();

  Vector v(n);
  for (auto& x : v) x = (rng() & 1u) ? 1.0 : -1.0;
  v = normalized(v);

  PowerResult best;
  if (a.is_zero()) {
    best.rayleigh = 0.0;
    best.vector = std::move(v);
    best.iterations = 0;
    best.exited_early = 0.0 <= threshold;
    return best;
  }

  const double sigma = gershgorin_bound(a);
  best.rayleigh = quad_form(a, v);
  best.vector = v;
  if (best.rayleigh <= threshold) {
    best.exited_early = true;
    return best;
  }

  for (std::size_t k = 1; k <= budget; ++k) {
    // v <- (sigma I - A) v / ||.||
    Vector av = a.multiply(v);
    for (std::size_t i = 0; i < n; ++i) av[i] = sigma * v[i] - av[i];
    const double len = norm(av);
    if (!(len > 0.0)) break;  // v spans the null space of M; no further progress
    for (std::size_t i = 0; i < n; ++i) v[i] = av[i] / len;

    best.iterations = k;
    const double r = quad_form(a, v);
    if (r < best.rayleigh) {
      best.rayleigh = r;
      best.vector = v;
    }
    if (r <= threshold) {
      best.rayleigh = r;
      best.vector = v;
      best.exited_early = true;
      return best;
    }
  }
  return best;
}

}  // namespace trihull
