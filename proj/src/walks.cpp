#include "spectool/walks.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "spectool/graph_algorithms.hpp"

namespace spectool {

double to_double(const BigInt& x) { return x.convert_to<double>(); }

double ratio_to_double(const BigInt& num, const BigInt& den) {
  return boost::multiprecision::cpp_rational(num, den).convert_to<double>();
}

WalkTable walk_counts(const Graph& g, int max_length) {
  if (g.order() == 0) throw Error(ErrorCode::kEmptyGraph, "walk_counts needs n >= 1");
  if (max_length < 0) throw Error(ErrorCode::kInvalidArgument, "negative walk length");
  const int n = g.order();
  WalkTable t;
  t.max_length = max_length;
  t.per_vertex.resize(max_length + 1);
  t.totals.resize(max_length + 1);
  t.per_vertex[0].assign(n, BigInt(1));
  t.totals[0] = n;
  for (int k = 1; k <= max_length; ++k) {
    const auto& prev = t.per_vertex[k - 1];
    auto& cur = t.per_vertex[k];
    cur.assign(n, BigInt(0));
    BigInt total = 0;
    for (Vertex i = 0; i < n; ++i) {
      for_each_bit(g.row(i), [&](Vertex j) { cur[i] += prev[j]; });
      total += cur[i];
    }
    t.totals[k] = std::move(total);
  }
  return t;
}

bool decomposition_identity_check(const Graph& g, const WalkTable& table) {
  const int n = g.order();
  if (table.max_length < 2) return true;
  const auto d = g.degrees();
  for (Vertex i = 0; i < n; ++i) {
    std::int64_t s = 0;
    for_each_bit(g.row(i), [&](Vertex j) { s += d[j]; });
    if (table.per_vertex[2][i] != s) return false;
  }
  for (int k = 2; k <= table.max_length; ++k) {
    BigInt sum = 0;
    for (Vertex i = 0; i < n; ++i) sum += table.per_vertex[k - 2][i] * table.per_vertex[2][i];
    if (sum != table.totals[k]) return false;
  }
  return true;
}

bool decomposition_identity_check(const Graph& g, int max_length) {
  return decomposition_identity_check(g, walk_counts(g, max_length));
}

bool walks_nondecreasing(const WalkTable& table) {
  for (int k = 1; k < table.max_length; ++k)
    if (table.totals[k + 1] < table.totals[k]) return false;
  return true;
}

std::vector<WalkResidual> walk_inequality_residuals(const WalkTable& table,
                                                    std::int64_t max_closed_sum) {
  std::vector<WalkResidual> out;
  for (int k = 2; k <= table.max_length; ++k) {
    const BigInt& den = table.totals[k - 2];
    if (den == 0) continue;
    WalkResidual r;
    r.k = k;
    r.numerator = table.totals[k] + table.totals[k - 1] - max_closed_sum * den;
    r.denominator = den;
    r.value = ratio_to_double(r.numerator, r.denominator);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<WalkResidual> walk_inequality_residuals(const Graph& g, int max_length) {
  return walk_inequality_residuals(walk_counts(g, max_length),
                                   neighborhood_degree_sums(g).max_closed);
}

bool walk_inequality_holds(const WalkTable& table, std::int64_t max_closed_sum) {
  for (int k = 2; k <= table.max_length; ++k) {
    if (table.totals[k] + table.totals[k - 1] > max_closed_sum * table.totals[k - 2]) return false;
  }
  return true;
}

SpectralWalkExpansion walk_expansion(const Spectrum& s, const WalkTable& table,
                                     double cluster_eps) {
  const int n = s.n;
  SpectralWalkExpansion e;
  e.coefficients.resize(n);
  for (int i = 0; i < n; ++i) {
    const auto u = s.eigenvector(i);
    double sum = 0.0;
    for (double x : u) sum += x;
    e.coefficients[i] = sum * sum;
  }
  e.min_coefficient = *std::min_element(e.coefficients.begin(), e.coefficients.end());

  const double l1 = s.lambda1();
  e.has_negative_extreme = l1 > cluster_eps && std::abs(s.lambda_n() + l1) <= cluster_eps;
  for (int i = 0; i < n; ++i) {
    const double l = s.eigenvalues[i];
    if (l >= l1 - cluster_eps) {
      e.a += e.coefficients[i];
    } else if (e.has_negative_extreme && l <= -l1 + cluster_eps) {
      e.b += e.coefficients[i];
    }
  }

  for (int k = 0; k <= table.max_length; ++k) {
    double recon = 0.0;
    for (int i = 0; i < n; ++i) recon += e.coefficients[i] * std::pow(s.eigenvalues[i], k);
    const double exact = to_double(table.totals[k]);
    const double err = std::abs(recon - exact) / std::max(std::abs(exact), 1.0);
    e.max_relative_error = std::max(e.max_relative_error, err);
  }
  if (e.max_relative_error > 1e-6) {
    throw Error(ErrorCode::kExpansionMismatch,
                "spectral walk expansion off by relative " + std::to_string(e.max_relative_error));
  }
  return e;
}

SpectralWalkExpansion walk_expansion(const Graph& g, const Spectrum& s, int max_length) {
  return walk_expansion(s, walk_counts(g, max_length));
}

AGreaterBResult a_greater_b_check(const Graph& g, int half_length) {
  return a_greater_b_check(g, eigendecompose(g), half_length);
}

AGreaterBResult a_greater_b_check(const Graph& g, const Spectrum& s, int half_length) {
  AGreaterBResult r;
  const auto table = walk_counts(g, 2 * half_length);
  const auto e = walk_expansion(s, table);
  r.a = e.a;
  r.b = e.b;
  if (g.edge_count() == 0 || !is_connected(g) || !e.has_negative_extreme) {
    r.vacuous = true;
    r.passed = true;
    r.b = 0.0;
    return r;
  }
  r.ratio = ratio_to_double(table.totals[2 * half_length], table.totals[2 * half_length - 1]);
  r.predicted_ratio = s.lambda1() * (r.a + r.b) / (r.a - r.b);
  r.ratio_relative_error = std::abs(r.ratio - r.predicted_ratio) / std::abs(r.predicted_ratio);
  r.passed = r.a > r.b + 10.0 * s.tol && r.ratio_relative_error <= 1e-3;
  return r;
}

RatioConvergence ratio_convergence(const Graph& g, int max_length) {
  return ratio_convergence(g, max_length, eigenvalues(g).front());
}

RatioConvergence ratio_convergence(const Graph& g, int max_length, double lambda1) {
  if (max_length < 10) throw Error(ErrorCode::kInvalidArgument, "ratio_convergence needs K >= 10");
  if (g.edge_count() == 0 || !is_connected(g)) {
    throw Error(ErrorCode::kInvalidArgument, "ratio_convergence needs a connected graph with an edge");
  }
  const auto table = walk_counts(g, max_length);
  RatioConvergence r;
  r.ratio = ratio_to_double(table.totals[max_length], table.totals[max_length - 2]);
  r.gap = std::abs(r.ratio - lambda1 * lambda1);
  return r;
}

}  // namespace spectool
