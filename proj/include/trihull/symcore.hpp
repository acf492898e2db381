#pragma once

// Dense symmetric matrices, factored spectraplex points and the linear image
// map X -> (A_1 . X, ..., A_m . X).

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace trihull {

using Vector = std::vector<double>;

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);
double distance(std::span<const double> a, std::span<const double> b);
/// Returns v / ||v||; throws DomainError for a zero vector.
Vector normalized(std::span<const double> v);
/// a == b or a == -b up to a few ulps per component; vv^T is then the same matrix.
bool same_direction(std::span<const double> a, std::span<const double> b);

/// Dense n x n real symmetric matrix, row-major, full storage.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;

  /// Symmetrizes as (A + A^T)/2. Rejects non-finite entries and asymmetry
  /// larger than 1e-9 * ||A||_F.
  SymmetricMatrix(std::size_t n, std::vector<double> row_major);

  static SymmetricMatrix zeros(std::size_t n);
  static SymmetricMatrix identity(std::size_t n);
  static SymmetricMatrix diagonal(std::span<const double> d);
  /// v v^T
  static SymmetricMatrix outer(std::span<const double> v);

  std::size_t order() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const noexcept {
    return std::span<const double>(a_).subspan(i * n_, n_);
  }
  std::span<const double> data() const noexcept { return a_; }

  double frobenius_norm() const;
  bool is_zero() const;
  Vector multiply(std::span<const double> v) const;

  /// *this += scale * other
  void add_scaled(const SymmetricMatrix& other, double scale);

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// sum_ij A_ij B_ij
double frobenius_dot(const SymmetricMatrix& a, const SymmetricMatrix& b);

/// v^T A v, i.e. A . vv^T without forming vv^T. Throws DomainError for v = 0.
double quad_form(const SymmetricMatrix& a, std::span<const double> v);

/// max_i (|A_ii| + sum_{j != i} |A_ij|); every eigenvalue lies in [-sigma, sigma].
double gershgorin_bound(const SymmetricMatrix& a);

/// R-hat = ||b|| + sum_i ||A_i||_F, an upper bound on max ||b - p(X)|| over the spectraplex.
double radius_bound(std::span<const SymmetricMatrix> mats, std::span<const double> b);

/// Constraint matrices A_1..A_m of a common order plus the target b.
class ShmInstance {
 public:
  ShmInstance(std::vector<SymmetricMatrix> mats, Vector b);

  std::size_t m() const noexcept { return mats_.size(); }
  std::size_t n() const noexcept { return n_; }
  const std::vector<SymmetricMatrix>& mats() const noexcept { return mats_; }
  const Vector& b() const noexcept { return b_; }
  double radius_bound() const noexcept { return radius_bound_; }

  /// Same matrices, different target.
  ShmInstance with_target(Vector b) const;

 private:
  std::size_t n_ = 0;
  std::vector<SymmetricMatrix> mats_;
  Vector b_;
  double radius_bound_ = 0.0;
};

/// p(vv^T) = (v^T A_1 v, ..., v^T A_m v).
Vector rank_one_image(const ShmInstance& instance, std::span<const double> v);

struct RankOneTerm {
  double weight = 0.0;
  Vector direction;  // unit norm
  Vector image;      // p(direction direction^T); empty until bound
};

/// X = sum_k w_k v_k v_k^T with w on the simplex and unit v_k. Never stored densely.
class SpectraplexPoint {
 public:
  SpectraplexPoint() = default;

  /// Validates the weights and normalizes each direction.
  SpectraplexPoint(std::size_t n, std::vector<std::pair<double, Vector>> terms);

  /// v v^T / ||v||^2
  static SpectraplexPoint rank_one(std::span<const double> v);
  /// ee^T / n, stored as the single term e/sqrt(n).
  static SpectraplexPoint uniform_rank_one(std::size_t n);
  /// I / n, stored as n coordinate terms.
  static SpectraplexPoint scaled_identity(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<RankOneTerm>& terms() const noexcept { return terms_; }
  bool is_bound() const noexcept { return image_.has_value(); }
  /// Cached p(X). Throws DomainError when the point is unbound.
  const Vector& image() const;

  /// Computes per-term images and the cached image against an instance.
  void bind(const ShmInstance& instance);
  /// Recomputes the cached image as sum_k w_k p(v_k v_k^T) and renormalizes
  /// the weights to sum to one.
  void refresh_image();

  /// X <- (1 - alpha) X + alpha vv^T. The image is updated by the same
  /// convex recurrence. Terms whose weight falls below 1e-14 are removed;
  /// a direction equal (up to sign) to an existing one is merged into it.
  void mix_in(double alpha, Vector direction, Vector direction_image);

  /// Replaces the representation. Terms must carry images if the point is bound.
  void assign_terms(std::vector<RankOneTerm> terms);

  double weight_sum() const;
  /// Throws DomainError if weights or directions break the spectraplex invariants.
  void validate() const;
  SymmetricMatrix to_matrix() const;

 private:
  std::size_t n_ = 0;
  std::vector<RankOneTerm> terms_;
  std::optional<Vector> image_;
};

/// p(X) recomputed from the factors; ignores any cached image.
Vector image(const ShmInstance& instance, const SpectraplexPoint& x);

}  // namespace trihull
