#include "levelflow/eig_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "levelflow/config.hpp"
#include "levelflow/errors.hpp"

namespace levelflow {

void fix_phases(Matrix& vectors) {
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    Eigen::Index imax = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < vectors.rows(); ++i) {
      const double mag = std::abs(vectors(i, j));
      if (mag > best) {  // strict: lowest row index wins ties
        best = mag;
        imax = i;
      }
    }
    if (best <= 0.0) continue;
    vectors.col(j) *= std::conj(vectors(imax, j)) / best;
  }
}

namespace {

// Re-orthonormalize eigenvector columns inside each near-degenerate cluster
// (modified Gram-Schmidt). Ascending eigenvalue order assumed.
void reorthonormalizeClusters(const RealVector& values, Matrix& vectors,
                              double cluster_width) {
  const Eigen::Index n = values.size();
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && values(end) - values(end - 1) <= cluster_width) ++end;
    for (Eigen::Index j = start; j < end; ++j) {
      for (Eigen::Index i = start; i < j; ++i)
        vectors.col(j) -= vectors.col(i).dot(vectors.col(j)) * vectors.col(i);
      const double nrm = vectors.col(j).norm();
      if (nrm > 0.0) vectors.col(j) /= nrm;
    }
    start = end;
  }
}

}  // namespace

Spectrum eig_hermitian(const Matrix& H) {
  const Tolerances& tol = Tolerances::global();
  const double scale = std::max(1.0, H.norm());
  if ((H - H.adjoint()).norm() > tol.hermiticity() * scale)
    throw PreconditionError("eig_hermitian: input is not Hermitian within tolerance");

  const Matrix sym = 0.5 * (H + H.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw NumericalFailureError(
        "eig_hermitian: iteration failed to converge (dim=" +
        std::to_string(H.rows()) + ", ||H||=" + std::to_string(H.norm()) + ")");

  Spectrum spec;
  spec.hermitian = true;
  RealVector values = solver.eigenvalues();
  Matrix vectors = solver.eigenvectors();
  reorthonormalizeClusters(values, vectors, tol.cluster() * scale);
  fix_phases(vectors);
  spec.eigenvalues = values.cast<Complex>();
  spec.eigenvectors = std::move(vectors);
  return spec;
}

std::vector<Complex> characteristic_polynomial(const Matrix& A) {
  const Eigen::Index n = A.rows();
  if (n != A.cols()) throw InvalidParameterError("characteristic_polynomial: matrix must be square");
  std::vector<Complex> c(n + 1);
  c[n] = 1.0;
  Matrix M = A;
  for (Eigen::Index k = 1; k <= n; ++k) {
    const Complex ck = -M.trace() / static_cast<double>(k);
    c[n - k] = ck;
    if (k < n) M = A * (M + ck * Matrix::Identity(n, n));
  }
  return c;
}

namespace {

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex p = c.back();
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) p = p * z + *it;
  return p;
}

Complex hornerDeriv(const std::vector<Complex>& c, Complex z) {
  const int n = static_cast<int>(c.size()) - 1;
  Complex p = static_cast<double>(n) * c[n];
  for (int k = n - 1; k >= 1; --k) p = p * z + static_cast<double>(k) * c[k];
  return p;
}

}  // namespace

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
  if (coeffs.size() < 2)
    throw InvalidParameterError("polynomial_roots: degree must be >= 1");
  if (coeffs.back() == Complex{0.0, 0.0})
    throw InvalidParameterError("polynomial_roots: leading coefficient is zero");

  std::vector<Complex> c = coeffs;
  for (auto& ck : c) ck /= coeffs.back();
  const int n = static_cast<int>(c.size()) - 1;

  double cauchy = 0.0;
  for (int k = 0; k < n; ++k) cauchy = std::max(cauchy, std::abs(c[k]));
  const double radius = 1.0 + cauchy;

  // Aberth-Ehrlich from a slightly de-symmetrized circle.
  std::vector<Complex> z(n);
  for (int i = 0; i < n; ++i) {
    const double angle = 2.0 * M_PI * (i + 0.25) / n + 0.3;
    z[i] = 0.8 * radius * Complex{std::cos(angle), std::sin(angle)};
  }

  const int max_iter = 400;
  for (int iter = 0; iter < max_iter; ++iter) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      const Complex p = horner(c, z[i]);
      const Complex dp = hornerDeriv(c, z[i]);
      Complex w = (dp != Complex{0.0, 0.0}) ? p / dp : Complex{0.0, 0.0};
      Complex s{0.0, 0.0};
      for (int j = 0; j < n; ++j)
        if (j != i && z[i] != z[j]) s += 1.0 / (z[i] - z[j]);
      const Complex denom = 1.0 - w * s;
      const Complex corr = (denom != Complex{0.0, 0.0}) ? w / denom : w;
      z[i] -= corr;
      worst = std::max(worst, std::abs(corr) / (1.0 + std::abs(z[i])));
    }
    if (worst < 1e-15) break;
  }
  for (int polish = 0; polish < 3; ++polish)
    for (int i = 0; i < n; ++i) {
      const Complex dp = hornerDeriv(c, z[i]);
      if (dp != Complex{0.0, 0.0}) z[i] -= horner(c, z[i]) / dp;
    }
  return z;
}

namespace {

struct RootCluster {
  Complex value;          // cluster mean
  std::vector<int> slots; // positions in the sorted output
};

bool reImLess(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

Spectrum eig_general(const Matrix& H) {
  const Eigen::Index n = H.rows();
  if (n != H.cols()) throw InvalidParameterError("eig_general: matrix must be square");
  if (n > 12)
    throw UnsupportedSizeError("eig_general supports dim <= 12, got " + std::to_string(n));

  const Tolerances& tol = Tolerances::global();
  Spectrum spec;
  spec.hermitian = false;
  spec.eigenvalues = Vector::Zero(n);
  spec.eigenvectors = Matrix::Identity(n, n);

  const double scale = H.norm();
  if (scale == 0.0) return spec;  // zero matrix

  const Matrix B = H / scale;
  std::vector<Complex> roots = polynomial_roots(characteristic_polynomial(B));
  for (auto& r : roots) r *= scale;

  // Coalesce roots that are indistinguishable at double precision (a double
  // root carries ~sqrt(eps) error) and snap them to the cluster mean, which
  // is coefficient-accurate.
  double maxabs = 0.0;
  for (const auto& r : roots) maxabs = std::max(maxabs, std::abs(r));
  const double cluster_width = tol.rootCluster() * (1.0 + maxabs);

  const int nn = static_cast<int>(n);
  std::vector<int> group(nn);
  std::iota(group.begin(), group.end(), 0);
  std::function<int(int)> find = [&](int i) {
    while (group[i] != i) i = group[i] = group[group[i]];
    return i;
  };
  for (int i = 0; i < nn; ++i)
    for (int j = i + 1; j < nn; ++j)
      if (std::abs(roots[i] - roots[j]) <= cluster_width) group[find(i)] = find(j);

  std::vector<RootCluster> clusters;
  std::vector<int> cluster_of(nn, -1);
  for (int i = 0; i < nn; ++i) {
    const int root = find(i);
    if (cluster_of[root] < 0) {
      cluster_of[root] = static_cast<int>(clusters.size());
      clusters.push_back({});
    }
    clusters[cluster_of[root]].slots.push_back(i);
  }
  std::vector<Complex> snapped(nn);
  for (auto& cl : clusters) {
    Complex mean{0.0, 0.0};
    for (int i : cl.slots) mean += roots[i];
    mean /= static_cast<double>(cl.slots.size());
    cl.value = cl.slots.size() > 1 ? mean : roots[cl.slots.front()];
    for (int i : cl.slots) snapped[i] = cl.value;
  }

  std::vector<int> order(nn);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return reImLess(snapped[a], snapped[b]); });

  Vector values(n);
  for (int j = 0; j < nn; ++j) values(j) = snapped[order[j]];

  // Eigenvectors: smallest right singular vectors of H - E I per cluster.
  Matrix vectors(n, n);
  bool defective = false;
  const double kernel_tol = tol.defectSigma() * std::max(1.0, scale);
  int j = 0;
  while (j < nn) {
    int jend = j + 1;
    while (jend < nn && values(jend) == values(j)) ++jend;
    const int mult = jend - j;

    Eigen::JacobiSVD<Matrix> svd(H - values(j) * Matrix::Identity(n, n),
                                 Eigen::ComputeFullV);
    const auto& sigma = svd.singularValues();
    int kernel_dim = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i)
      if (sigma(i) <= kernel_tol) ++kernel_dim;
    if (kernel_dim < mult) defective = true;
    const int avail = std::max(kernel_dim, 1);
    for (int r = 0; r < mult; ++r) {
      // Defective clusters repeat the kernel vector; the eigenvector matrix
      // is then genuinely rank-deficient, as it should be.
      const int pick = std::min(r, avail - 1);
      vectors.col(j + r) = svd.matrixV().col(n - 1 - pick);
    }
    j = jend;
  }

  fix_phases(vectors);
  spec.eigenvalues = std::move(values);
  spec.eigenvectors = std::move(vectors);
  spec.defective = defective;
  return spec;
}

Spectrum eig_for(const MatrixFamily& family, Complex lambda) {
  Spectrum spec;
  if (family.hermitian_on_real_axis() && lambda.imag() == 0.0)
    spec = eig_hermitian(family.evaluate(lambda));
  else
    spec = eig_general(family.evaluate(lambda));
  spec.lambda = lambda;
  return spec;
}

}  // namespace levelflow
