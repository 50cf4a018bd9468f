#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spectool/graph.hpp"

namespace spectool {

// Tolerance policy. Eigensolver convergence is driven by kDefaultTol;
// eigenvalues are grouped into clusters with kClusterEps; threshold and
// equality decisions on lambda_1 (tightness, lambda_1 >= sqrt(m)) use kEqEps.
inline constexpr double kDefaultTol = 1e-12;
inline constexpr double kClusterEps = 1e-8;
inline constexpr double kEqEps = 1e-9;
inline constexpr int kDefaultMaxSweeps = 100;

/// Full real eigendecomposition of an adjacency matrix.
struct Spectrum {
  int n = 0;
  /// Sorted descending.
  std::vector<double> eigenvalues;
  /// Row-major n x n; row i is the unit eigenvector for eigenvalues[i].
  std::vector<double> eigenvectors;
  /// max_i ||A v_i - lambda_i v_i||_2
  double residual = 0.0;
  double tol = kDefaultTol;
  int sweeps = 0;

  double lambda1() const { return eigenvalues.front(); }
  double lambda_n() const { return eigenvalues.back(); }
  std::span<const double> eigenvector(int i) const {
    return {eigenvectors.data() + static_cast<std::size_t>(i) * n, static_cast<std::size_t>(n)};
  }
};

/// Dense row-major adjacency matrix.
std::vector<double> adjacency_matrix(const Graph& g);

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is <= tol.
/// Throws kNonConvergence when the sweep cap is hit or the residual contract
/// (residual <= tol * max(1, n)) fails, kEmptyGraph for n = 0.
Spectrum eigendecompose(const Graph& g, double tol = kDefaultTol,
                        int max_sweeps = kDefaultMaxSweeps);

/// Same iteration without eigenvector accumulation; descending order.
std::vector<double> eigenvalues(const Graph& g, double tol = kDefaultTol,
                                int max_sweeps = kDefaultMaxSweeps);

/// Rayleigh quotient of power iteration on A + I from the all-ones vector,
/// stopped once ||A x - rho x|| <= 10 tol max(1, rho).
double power_iteration_radius(const Graph& g, double tol = kDefaultTol,
                              int max_iterations = 1'000'000);

/// Jacobi lambda_1, cross-checked against power iteration (agreement within 100 * tol).
double spectral_radius(const Graph& g, double tol = kDefaultTol);

/// (sum of lambda_i^3) / 6.
double triangle_count_spectral(const Spectrum& s);
/// Rounded variant; throws kNonIntegral when the value is more than 1e-6 from an integer.
std::int64_t triangle_count_spectral_integral(const Spectrum& s);

/// Number of clusters after splitting the sorted eigenvalues at gaps > cluster_eps.
int distinct_eigenvalue_count(const Spectrum& s, double cluster_eps = kClusterEps);

/// True iff the eigenvalue multiset equals its negation under cluster_eps matching.
bool is_spectrum_symmetric(const Spectrum& s, double cluster_eps = kClusterEps);

struct PerronReport {
  bool dominates = false;          // lambda_1 >= |lambda_i| - tol for all i
  bool bipartite_extreme = false;  // lambda_n == -lambda_1 within cluster_eps
  double lambda1 = 0.0;
  double lambda_n = 0.0;
};

/// Throws kDisconnectedInput unless g is connected.
PerronReport perron_check(const Graph& g, const Spectrum& s, double cluster_eps = kClusterEps);

struct SpectrumDiagnostics {
  double trace = 0.0;           // sum lambda_i
  double sum_squares = 0.0;     // sum lambda_i^2, equals 2m
  double orthonormality = 0.0;  // max |V V^T - I|
};

SpectrumDiagnostics diagnose(const Spectrum& s);

}  // namespace spectool
