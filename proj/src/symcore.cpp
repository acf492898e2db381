#include "trihull/symcore.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>

#include "trihull/errors.hpp"

namespace trihull {

namespace {

constexpr double kAsymmetryTolerance = 1e-9;
constexpr double kWeightTolerance = 1e-12;
constexpr double kUnitTolerance = 1e-12;
constexpr double kDropWeight = 1e-14;

}  // namespace

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionError("distance: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

bool same_direction(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) return false;
  const double tol = 4.0 * DBL_EPSILON;
  bool plus = true;
  bool minus = true;
  for (std::size_t i = 0; i < a.size() && (plus || minus); ++i) {
    plus = plus && std::abs(a[i] - b[i]) <= tol;
    minus = minus && std::abs(a[i] + b[i]) <= tol;
  }
  return plus || minus;
}

Vector normalized(std::span<const double> v) {
  const double len = norm(v);
  if (!(len > 0.0) || !std::isfinite(len)) throw DomainError("cannot normalize a zero or non-finite vector");
  Vector out(v.begin(), v.end());
  for (double& x : out) x /= len;
  return out;
}

// ---------------------------------------------------------------------------

SymmetricMatrix::SymmetricMatrix(std::size_t n, std::vector<double> row_major)
    : n_(n), a_(std::move(row_major)) {
  if (a_.size() != n_ * n_) throw DimensionError("SymmetricMatrix: expected n*n entries");
  double fro2 = 0.0;
  double max_asym = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const double x = a_[i * n_ + j];
      if (!std::isfinite(x)) throw DomainError("SymmetricMatrix: non-finite entry");
      fro2 += x * x;
      if (j > i) max_asym = std::max(max_asym, std::abs(x - a_[j * n_ + i]));
    }
  }
  if (max_asym > kAsymmetryTolerance * std::sqrt(fro2)) {
    throw DomainError("SymmetricMatrix: asymmetry exceeds tolerance");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const double avg = 0.5 * (a_[i * n_ + j] + a_[j * n_ + i]);
      a_[i * n_ + j] = avg;
      a_[j * n_ + i] = avg;
    }
  }
}

SymmetricMatrix SymmetricMatrix::zeros(std::size_t n) {
  return SymmetricMatrix(n, std::vector<double>(n * n, 0.0));
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t n) {
  std::vector<double> a(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = 1.0;
  return SymmetricMatrix(n, std::move(a));
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> d) {
  const std::size_t n = d.size();
  std::vector<double> a(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = d[i];
  return SymmetricMatrix(n, std::move(a));
}

SymmetricMatrix SymmetricMatrix::outer(std::span<const double> v) {
  const std::size_t n = v.size();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = v[i] * v[j];
  return SymmetricMatrix(n, std::move(a));
}

double SymmetricMatrix::frobenius_norm() const { return norm(a_); }

bool SymmetricMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](double x) { return x == 0.0; });
}

Vector SymmetricMatrix::multiply(std::span<const double> v) const {
  if (v.size() != n_) throw DimensionError("multiply: order mismatch");
  Vector out(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    const double* r = a_.data() + i * n_;
    double s = 0.0;
    for (std::size_t j = 0; j < n_; ++j) s += r[j] * v[j];
    out[i] = s;
  }
  return out;
}

void SymmetricMatrix::add_scaled(const SymmetricMatrix& other, double scale) {
  if (other.n_ != n_) throw DimensionError("add_scaled: order mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += scale * other.a_[k];
}

double frobenius_dot(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  if (a.order() != b.order()) throw DimensionError("frobenius_dot: order mismatch");
  return dot(a.data(), b.data());
}

double quad_form(const SymmetricMatrix& a, std::span<const double> v) {
  const std::size_t n = a.order();
  if (v.size() != n) throw DimensionError("quad_form: order mismatch");
  if (std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; })) {
    throw DomainError("quad_form: zero vector");
  }
  // Symmetric: diagonal once, strict upper triangle twice.
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = a.row(i);
    double acc = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) acc += r[j] * v[j];
    s += v[i] * (r[i] * v[i] + 2.0 * acc);
  }
  return s;
}

double gershgorin_bound(const SymmetricMatrix& a) {
  double sigma = 0.0;
  for (std::size_t i = 0; i < a.order(); ++i) {
    double row_sum = 0.0;
    for (double x : a.row(i)) row_sum += std::abs(x);
    sigma = std::max(sigma, row_sum);
  }
  return sigma;
}

double radius_bound(std::span<const SymmetricMatrix> mats, std::span<const double> b) {
  double r = norm(b);
  for (const auto& m : mats) r += m.frobenius_norm();
  return r;
}

// ---------------------------------------------------------------------------

ShmInstance::ShmInstance(std::vector<SymmetricMatrix> mats, Vector b)
    : mats_(std::move(mats)), b_(std::move(b)) {
  if (mats_.empty()) throw DimensionError("ShmInstance: need at least one matrix");
  if (b_.size() != mats_.size()) throw DimensionError("ShmInstance: b must have length m");
  n_ = mats_.front().order();
  if (n_ == 0) throw DimensionError("ShmInstance: matrices must have positive order");
  for (const auto& m : mats_) {
    if (m.order() != n_) throw DimensionError("ShmInstance: matrices must share one order");
  }
  for (double x : b_) {
    if (!std::isfinite(x)) throw DomainError("ShmInstance: non-finite target");
  }
  radius_bound_ = trihull::radius_bound(mats_, b_);
}

ShmInstance ShmInstance::with_target(Vector b) const { return ShmInstance(mats_, std::move(b)); }

Vector rank_one_image(const ShmInstance& instance, std::span<const double> v) {
  Vector out(instance.m());
  for (std::size_t k = 0; k < instance.m(); ++k) out[k] = quad_form(instance.mats()[k], v);
  return out;
}

// ---------------------------------------------------------------------------

SpectraplexPoint::SpectraplexPoint(std::size_t n, std::vector<std::pair<double, Vector>> terms) : n_(n) {
  if (n_ == 0) throw DimensionError("SpectraplexPoint: order must be positive");
  terms_.reserve(terms.size());
  for (auto& [w, v] : terms) {
    if (v.size() != n_) throw DimensionError("SpectraplexPoint: direction length must equal order");
    if (!(w >= 0.0) || !std::isfinite(w)) throw DomainError("SpectraplexPoint: weights must be nonnegative");
    if (w == 0.0) continue;
    terms_.push_back(RankOneTerm{w, normalized(v), {}});
  }
  validate();
}

SpectraplexPoint SpectraplexPoint::rank_one(std::span<const double> v) {
  return SpectraplexPoint(v.size(), {{1.0, Vector(v.begin(), v.end())}});
}

SpectraplexPoint SpectraplexPoint::uniform_rank_one(std::size_t n) {
  return rank_one(Vector(n, 1.0));
}

SpectraplexPoint SpectraplexPoint::scaled_identity(std::size_t n) {
  std::vector<std::pair<double, Vector>> terms;
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n, 0.0);
    e[i] = 1.0;
    terms.emplace_back(1.0 / static_cast<double>(n), std::move(e));
  }
  return SpectraplexPoint(n, std::move(terms));
}

const Vector& SpectraplexPoint::image() const {
  if (!image_) throw DomainError("SpectraplexPoint: not bound to an instance");
  return *image_;
}

void SpectraplexPoint::bind(const ShmInstance& instance) {
  if (instance.n() != n_) throw DimensionError("bind: order mismatch");
  for (auto& t : terms_) t.image = rank_one_image(instance, t.direction);
  image_ = Vector(instance.m(), 0.0);
  refresh_image();
}

void SpectraplexPoint::refresh_image() {
  if (!image_) throw DomainError("refresh_image: point is not bound");
  const double s = weight_sum();
  Vector p(image_->size(), 0.0);
  for (auto& t : terms_) {
    t.weight /= s;
    for (std::size_t k = 0; k < p.size(); ++k) p[k] += t.weight * t.image[k];
  }
  image_ = std::move(p);
}

void SpectraplexPoint::mix_in(double alpha, Vector direction, Vector direction_image) {
  if (!image_) throw DomainError("mix_in: point is not bound");
  if (direction.size() != n_ || direction_image.size() != image_->size()) {
    throw DimensionError("mix_in: shape mismatch");
  }
  alpha = std::clamp(alpha, 0.0, 1.0);
  for (auto& t : terms_) t.weight *= 1.0 - alpha;
  auto& p = *image_;
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = (1.0 - alpha) * p[k] + alpha * direction_image[k];

  auto same = std::find_if(terms_.begin(), terms_.end(), [&](const RankOneTerm& t) {
    return same_direction(t.direction, direction);
  });
  if (same != terms_.end()) {
    same->weight += alpha;
  } else {
    terms_.push_back(RankOneTerm{alpha, std::move(direction), std::move(direction_image)});
  }

  const auto before = terms_.size();
  std::erase_if(terms_, [](const RankOneTerm& t) { return t.weight < kDropWeight; });
  if (terms_.size() != before) refresh_image();
}

void SpectraplexPoint::assign_terms(std::vector<RankOneTerm> terms) {
  for (const auto& t : terms) {
    if (t.direction.size() != n_) throw DimensionError("assign_terms: direction length mismatch");
    if (image_ && t.image.size() != image_->size()) throw DimensionError("assign_terms: missing term image");
  }
  terms_ = std::move(terms);
  if (image_) refresh_image();
}

double SpectraplexPoint::weight_sum() const {
  double s = 0.0;
  for (const auto& t : terms_) s += t.weight;
  return s;
}

void SpectraplexPoint::validate() const {
  if (terms_.empty()) throw DomainError("SpectraplexPoint: no terms");
  for (const auto& t : terms_) {
    if (!(t.weight >= 0.0) || t.weight > 1.0 + kWeightTolerance) {
      throw DomainError("SpectraplexPoint: weight outside [0,1]");
    }
    if (std::abs(norm(t.direction) - 1.0) > kUnitTolerance) {
      throw DomainError("SpectraplexPoint: direction is not unit norm");
    }
  }
  if (std::abs(weight_sum() - 1.0) > kWeightTolerance) {
    throw DomainError("SpectraplexPoint: weights do not sum to one");
  }
}

SymmetricMatrix SpectraplexPoint::to_matrix() const {
  std::vector<double> a(n_ * n_, 0.0);
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) a[i * n_ + j] += t.weight * t.direction[i] * t.direction[j];
  }
  return SymmetricMatrix(n_, std::move(a));
}

Vector image(const ShmInstance& instance, const SpectraplexPoint& x) {
  if (instance.n() != x.order()) throw DimensionError("image: order mismatch");
  Vector p(instance.m(), 0.0);
  for (const auto& t : x.terms()) {
    for (std::size_t k = 0; k < instance.m(); ++k) p[k] += t.weight * quad_form(instance.mats()[k], t.direction);
  }
  return p;
}

}  // namespace trihull
