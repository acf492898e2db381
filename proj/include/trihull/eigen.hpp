#pragma once

// Symmetric eigenvalue machinery: cyclic Jacobi for exact certification and a
// shifted power method that doubles as the pivot oracle.

#include <cstddef>
#include <random>

#include "trihull/symcore.hpp"

namespace trihull {

struct EigenDecomposition {
  Vector values;                // ascending
  std::vector<Vector> vectors;  // vectors[k] pairs with values[k], orthonormal
  std::size_t sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius mass drops below
/// tol * ||A||_F. Throws NumericalError after 30 sweeps.
EigenDecomposition jacobi_eigen(const SymmetricMatrix& a, double tol = 1e-14);

struct MinEigenpair {
  double value = 0.0;
  Vector vector;
};

/// lambda_min(A) and a unit eigenvector, via jacobi_eigen.
MinEigenpair certified_min_eig(const SymmetricMatrix& a);

struct PowerResult {
  double rayleigh = 0.0;  // v^T A v of the returned vector
  Vector vector;          // unit
  std::size_t iterations = 0;
  bool exited_early = false;  // rayleigh <= threshold was observed
};

/// Power iteration on M = sigma I - A (sigma the Gershgorin bound) from a
/// random {-1,1}^n start. Stops as soon as an iterate v has v^T A v <=
/// threshold; otherwise returns the smallest Rayleigh value seen.
PowerResult min_eig_power(const SymmetricMatrix& a, double threshold, std::size_t budget,
                          std::mt19937_64& rng);

/// ceil(10 ln(n) / eps0), at least 1.
std::size_t default_power_budget(std::size_t n, double eps0 = 0.1);

}  // namespace trihull
