#include <cmath>
#include <random>
#include <sstream>

#include "trihull/errors.hpp"
#include "trihull/shm.hpp"

namespace trihull {

namespace {

std::string describe(const char* what, double lhs, double rhs) {
  std::ostringstream os;
  os.precision(17);
  os << what << " (" << lhs << " vs " << rhs << ")";
  return os.str();
}

}  // namespace

VerifyReport verify_certificate(const ShmInstance& instance, const Certificate& cert, std::size_t samples,
                                std::uint64_t seed) {
  VerifyReport report;
  auto fail = [&](std::string msg) {
    report.passed = false;
    ++report.violation_count;
    if (report.violations.size() < 20) report.violations.push_back(std::move(msg));
  };

  if (cert.kind == Verdict::inconclusive) {
    fail("inconclusive certificates carry nothing to verify");
    return report;
  }
  try {
    cert.point.validate();
  } catch (const DomainError& e) {
    fail(std::string("spectraplex invariant: ") + e.what());
    return report;
  }
  if (cert.point.order() != instance.n()) {
    fail("certificate order does not match the instance");
    return report;
  }

  const double radius = instance.radius_bound();
  const Vector& b = instance.b();
  const Vector p = image(instance, cert.point);
  const double gap = distance(p, b);
  if (std::abs(gap - cert.gap) > 1e-9 * radius) fail(describe("reported gap differs from recomputed gap", cert.gap, gap));

  if (cert.kind == Verdict::feasible) {
    if (cert.gap > cert.epsilon * radius) fail(describe("reported gap exceeds epsilon * R", cert.gap, cert.epsilon * radius));
    if (gap > cert.epsilon * radius + 1e-12 * radius) fail(describe("recomputed gap exceeds epsilon * R", gap, cert.epsilon * radius));
    return report;
  }

  // Witness: lambda_min of the pivot matrix at p must exceed the pivot threshold.
  SymmetricMatrix a = SymmetricMatrix::zeros(instance.n());
  for (std::size_t i = 0; i < instance.m(); ++i) a.add_scaled(instance.mats()[i], p[i] - b[i]);
  const double threshold = pivot_threshold(b, p, false);
  const auto me = certified_min_eig(a);
  if (!(me.value - threshold > 0.0)) fail(describe("certified eigenvalue margin is not positive", me.value, threshold));
  if (!cert.eig_margin || !(*cert.eig_margin > 0.0)) fail("witness carries no positive eig_margin");
  if (!cert.hyperplane) {
    fail("witness carries no hyperplane");
    return report;
  }
  const Hyperplane& h = *cert.hyperplane;
  if (!(h.evaluate(b) < 0.0)) fail(describe("target is not strictly on the far side of the hyperplane", h.evaluate(b), 0.0));

  auto check = [&](std::span<const double> v) {
    const Vector q = rank_one_image(instance, v);
    ++report.samples_checked;
    const double to_w = distance(p, q);
    const double to_b = distance(b, q);
    if (!(to_w < to_b)) fail(describe("witness inequality violated", to_w, to_b));
    if (!(h.evaluate(q) > 0.0)) fail(describe("sample on the target side of the hyperplane", h.evaluate(q), 0.0));
  };

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Vector v(instance.n());
  for (std::size_t s = 0; s < samples; ++s) {
    double len = 0.0;
    do {
      for (auto& x : v) x = gauss(rng);
      len = norm(v);
    } while (len == 0.0);
    for (auto& x : v) x /= len;
    check(v);
  }
  for (const auto& u : cert.pivots) check(u);
  for (const auto& t : cert.point.terms()) check(t.direction);
  return report;
}

}  // namespace trihull
