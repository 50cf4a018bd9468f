#include "spectool/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "spectool/graph_algorithms.hpp"

namespace spectool {

std::vector<double> adjacency_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (Vertex v = 0; v < n; ++v) for_each_bit(g.row(v), [&](Vertex u) { a[v * n + u] = 1.0; });
  return a;
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double s = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) s += a[p * n + q] * a[p * n + q];
  return std::sqrt(2.0 * s);
}

// Cyclic Jacobi on the symmetric row-major matrix `a` (overwritten). When
// `v` is non-null it accumulates the rotations, so column i of v is the
// eigenvector of a[i][i]. Returns the number of sweeps used.
int jacobi(std::vector<double>& a, std::vector<double>* v, int n, double tol, int max_sweeps) {
  if (v) {
    v->assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) (*v)[i * n + i] = 1.0;
  }
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(a, n) <= tol) return sweep;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double g = 100.0 * std::abs(apq);
        // Once past the first few sweeps an entry below the rounding level of
        // both diagonal entries is dropped outright.
        if (sweep > 3 && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
          a[p * n + q] = a[q * n + p] = 0.0;
          continue;
        }
        const double h = aqq - app;
        double t;
        if (std::abs(h) + g == std::abs(h)) {
          t = apq / h;
        } else {
          const double theta = 0.5 * h / apq;
          t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[r * n + p];
          const double arq = a[r * n + q];
          const double np = arp - s * (arq + arp * tau);
          const double nq = arq + s * (arp - arq * tau);
          a[r * n + p] = a[p * n + r] = np;
          a[r * n + q] = a[q * n + r] = nq;
        }
        if (v) {
          auto& vm = *v;
          for (int r = 0; r < n; ++r) {
            const double vrp = vm[r * n + p];
            const double vrq = vm[r * n + q];
            vm[r * n + p] = vrp - s * (vrq + vrp * tau);
            vm[r * n + q] = vrq + s * (vrp - vrq * tau);
          }
        }
      }
    }
  }
  if (off_diagonal_norm(a, n) <= tol) return max_sweeps;
  throw Error(ErrorCode::kNonConvergence,
              "Jacobi did not converge in " + std::to_string(max_sweeps) + " sweeps");
}

std::vector<int> descending_order(const std::vector<double>& a, int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a[i * n + i] > a[j * n + j]; });
  return order;
}

void require_nonempty(const Graph& g, const char* op) {
  if (g.order() == 0) throw Error(ErrorCode::kEmptyGraph, std::string(op) + " needs n >= 1");
}

}  // namespace

Spectrum eigendecompose(const Graph& g, double tol, int max_sweeps) {
  require_nonempty(g, "eigendecompose");
  const int n = g.order();
  auto a = adjacency_matrix(g);
  std::vector<double> v;
  Spectrum s;
  s.n = n;
  s.tol = tol;
  s.sweeps = jacobi(a, &v, n, tol, max_sweeps);

  const auto order = descending_order(a, n);
  s.eigenvalues.resize(n);
  s.eigenvectors.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const int col = order[i];
    s.eigenvalues[i] = a[col * n + col];
    // Sign convention: first component of magnitude > 1e-9 is positive.
    double sign = 1.0;
    for (int r = 0; r < n; ++r) {
      if (std::abs(v[r * n + col]) > 1e-9) {
        sign = v[r * n + col] > 0 ? 1.0 : -1.0;
        break;
      }
    }
    for (int r = 0; r < n; ++r) s.eigenvectors[i * n + r] = sign * v[r * n + col];
  }

  double residual = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto x = s.eigenvector(i);
    double norm2 = 0.0;
    for (Vertex r = 0; r < n; ++r) {
      double ax = 0.0;
      for_each_bit(g.row(r), [&](Vertex u) { ax += x[u]; });
      const double d = ax - s.eigenvalues[i] * x[r];
      norm2 += d * d;
    }
    residual = std::max(residual, std::sqrt(norm2));
  }
  s.residual = residual;
  if (residual > tol * std::max(1, n)) {
    throw Error(ErrorCode::kNonConvergence, "eigen-residual " + std::to_string(residual) +
                                                " exceeds tol * max(1, n)");
  }
  return s;
}

std::vector<double> eigenvalues(const Graph& g, double tol, int max_sweeps) {
  require_nonempty(g, "eigenvalues");
  const int n = g.order();
  auto a = adjacency_matrix(g);
  jacobi(a, nullptr, n, tol, max_sweeps);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = a[i * n + i];
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double power_iteration_radius(const Graph& g, double tol, int max_iterations) {
  require_nonempty(g, "power_iteration_radius");
  const int n = g.order();
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> ax(n);
  for (int it = 0; it < max_iterations; ++it) {
    for (Vertex r = 0; r < n; ++r) {
      double sum = 0.0;
      for_each_bit(g.row(r), [&](Vertex u) { sum += x[u]; });
      ax[r] = sum;
    }
    const double rho = std::inner_product(x.begin(), x.end(), ax.begin(), 0.0);
    double res2 = 0.0;
    for (int r = 0; r < n; ++r) res2 += (ax[r] - rho * x[r]) * (ax[r] - rho * x[r]);
    // Relative stop: the rounding floor of A x grows with lambda_1.
    if (std::sqrt(res2) <= 10.0 * tol * std::max(1.0, rho)) return rho;
    // Step with the shifted matrix A + I.
    double norm2 = 0.0;
    for (int r = 0; r < n; ++r) {
      ax[r] += x[r];
      norm2 += ax[r] * ax[r];
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (int r = 0; r < n; ++r) x[r] = ax[r] * inv;
  }
  throw Error(ErrorCode::kNonConvergence, "power iteration hit its iteration cap");
}

double spectral_radius(const Graph& g, double tol) {
  const double jacobi_l1 = eigenvalues(g, tol).front();
  const double power_l1 = power_iteration_radius(g, tol);
  if (std::abs(jacobi_l1 - power_l1) > 100.0 * tol) {
    throw Error(ErrorCode::kNonConvergence, "Jacobi and power iteration disagree on lambda_1");
  }
  return jacobi_l1;
}

double triangle_count_spectral(const Spectrum& s) {
  double sum = 0.0;
  for (double l : s.eigenvalues) sum += l * l * l;
  return sum / 6.0;
}

std::int64_t triangle_count_spectral_integral(const Spectrum& s) {
  const double t = triangle_count_spectral(s);
  const double r = std::round(t);
  if (std::abs(t - r) > 1e-6) {
    throw Error(ErrorCode::kNonIntegral, "spectral triangle count " + std::to_string(t));
  }
  return static_cast<std::int64_t>(r);
}

int distinct_eigenvalue_count(const Spectrum& s, double cluster_eps) {
  if (s.eigenvalues.empty()) return 0;
  int clusters = 1;
  for (std::size_t i = 1; i < s.eigenvalues.size(); ++i)
    if (s.eigenvalues[i - 1] - s.eigenvalues[i] > cluster_eps) ++clusters;
  return clusters;
}

bool is_spectrum_symmetric(const Spectrum& s, double cluster_eps) {
  // Sorted descending, so lambda_i pairs with lambda_{n+1-i}.
  const auto& l = s.eigenvalues;
  for (std::size_t i = 0, j = l.size(); i < l.size(); ++i)
    if (std::abs(l[i] + l[--j]) > cluster_eps) return false;
  return true;
}

PerronReport perron_check(const Graph& g, const Spectrum& s, double cluster_eps) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::kDisconnectedInput, "perron_check requires a connected graph");
  }
  PerronReport r;
  r.lambda1 = s.lambda1();
  r.lambda_n = s.lambda_n();
  r.dominates = std::all_of(s.eigenvalues.begin(), s.eigenvalues.end(),
                            [&](double l) { return r.lambda1 >= std::abs(l) - s.tol; });
  r.bipartite_extreme = std::abs(r.lambda_n + r.lambda1) <= cluster_eps;
  return r;
}

SpectrumDiagnostics diagnose(const Spectrum& s) {
  SpectrumDiagnostics d;
  for (double l : s.eigenvalues) {
    d.trace += l;
    d.sum_squares += l * l;
  }
  const int n = s.n;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const auto x = s.eigenvector(i);
      const auto y = s.eigenvector(j);
      const double dot = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
      d.orthonormality = std::max(d.orthonormality, std::abs(dot - (i == j ? 1.0 : 0.0)));
    }
  }
  return d;
}

}  // namespace spectool
