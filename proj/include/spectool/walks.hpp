#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "spectool/graph.hpp"
#include "spectool/spectrum.hpp"

namespace spectool {

using BigInt = boost::multiprecision::cpp_int;

/// Exact walk counts. totals[k] = 1^T A^k 1, per_vertex[k][i] = (A^k 1)_i
/// = number of length-k walks starting at vertex i.
struct WalkTable {
  int max_length = 0;
  std::vector<BigInt> totals;
  std::vector<std::vector<BigInt>> per_vertex;
};

/// Repeated products A x starting from the all-ones vector.
WalkTable walk_counts(const Graph& g, int max_length);

/// w_k = sum_i w_{k-2}(i) w_2(i) for 2 <= k <= K, and w_2(i) = sum over
/// neighbours j of d(j); both checked exactly.
bool decomposition_identity_check(const Graph& g, const WalkTable& table);
bool decomposition_identity_check(const Graph& g, int max_length);

/// w_{k+1} >= w_k for every 1 <= k < K.
bool walks_nondecreasing(const WalkTable& table);

struct WalkResidual {
  int k = 0;
  /// r_k = numerator / denominator with
  /// numerator = w_k + w_{k-1} - maxclosed * w_{k-2}, denominator = w_{k-2}.
  BigInt numerator;
  BigInt denominator;
  double value = 0.0;
};

/// Residuals of w_k/w_{k-2} + w_{k-1}/w_{k-2} - maxclosed for 2 <= k <= K.
/// Indices with w_{k-2} = 0 are skipped.
std::vector<WalkResidual> walk_inequality_residuals(const Graph& g, int max_length);
std::vector<WalkResidual> walk_inequality_residuals(const WalkTable& table,
                                                    std::int64_t max_closed_sum);

/// Integer form of the same inequality: w_k + w_{k-1} <= maxclosed * w_{k-2} for all k.
bool walk_inequality_holds(const WalkTable& table, std::int64_t max_closed_sum);

/// w_k = sum_i c_i lambda_i^k with c_i = (1^T u_i)^2.
struct SpectralWalkExpansion {
  std::vector<double> coefficients;  // aligned with Spectrum::eigenvalues
  double a = 0.0;                    // sum of c_i with lambda_i ~ lambda_1
  double b = 0.0;                    // sum of c_i with lambda_i ~ -lambda_1 (0 if absent)
  bool has_negative_extreme = false;
  double min_coefficient = 0.0;
  double max_relative_error = 0.0;  // against the exact table, k <= K
};

/// Throws kExpansionMismatch if the reconstruction misses some w_k (k <= K)
/// by more than relative 1e-6.
SpectralWalkExpansion walk_expansion(const Graph& g, const Spectrum& s, int max_length);
SpectralWalkExpansion walk_expansion(const Spectrum& s, const WalkTable& table,
                                     double cluster_eps = kClusterEps);

struct AGreaterBResult {
  bool vacuous = false;  // not connected, edgeless, or lambda_n != -lambda_1
  bool passed = false;
  double a = 0.0;
  double b = 0.0;
  double ratio = 0.0;            // w_{2K} / w_{2K-1}
  double predicted_ratio = 0.0;  // lambda_1 (a + b) / (a - b)
  double ratio_relative_error = 0.0;
};

/// a > b + 10 tol, plus the finite-K ratio w_{2K}/w_{2K-1} matching
/// lambda_1 (a+b)/(a-b) within relative 1e-3.
AGreaterBResult a_greater_b_check(const Graph& g, int half_length = 30);
AGreaterBResult a_greater_b_check(const Graph& g, const Spectrum& s, int half_length = 30);

struct RatioConvergence {
  double ratio = 0.0;  // w_K / w_{K-2}
  double gap = 0.0;    // |ratio - lambda_1^2|
};

/// Requires a connected graph with an edge and K >= 10.
RatioConvergence ratio_convergence(const Graph& g, int max_length);
RatioConvergence ratio_convergence(const Graph& g, int max_length, double lambda1);

double to_double(const BigInt& x);
/// Faithfully rounded quotient of two big integers.
double ratio_to_double(const BigInt& num, const BigInt& den);

}  // namespace spectool
