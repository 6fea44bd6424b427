#ifndef LEVELFLOW_EXCEPTIONAL_HPP
#define LEVELFLOW_EXCEPTIONAL_HPP

#include <utility>
#include <vector>

#include "levelflow/matrix_model.hpp"
#include "levelflow/types.hpp"

namespace levelflow {

/// Discriminant D(z) = prod_{i<j} (E_i - E_j)^2 from the general solver;
/// zero exactly where two eigenvalues coalesce. dim <= 12.
Complex discriminant(const MatrixFamily& family, Complex z);

struct ExceptionalPoint {
  Complex z_star{0.0, 0.0};
  std::pair<int, int> pair{0, 1};   // coalescing eigenvalue indices at z_star
  double discriminant_abs = 0.0;
  double sigma_min = 0.0;           // smallest singular value of V at z_star
  double puiseux_exponent = 0.0;    // fitted |dE| ~ |z - z_star|^p
  int iterations = 0;
};

/// Damped Newton iteration on D(z) from `seed`, derivative by complex
/// central differences, until |D| <= ep_tol (ep_tol <= 0 selects a
/// norm-scaled default). Throws SearchFailureError with an iterate trace
/// after 100 iterations without convergence.
ExceptionalPoint find_exceptional_point(const MatrixFamily& family, Complex seed,
                                        double ep_tol = 0.0);

enum class PTPhase { unbroken, broken, boundary };

struct PTPhasePoint {
  double g = 0.0;
  PTPhase phase = PTPhase::unbroken;
  Vector eigenvalues;
};

struct PTSweepResult {
  std::vector<PTPhasePoint> points;
  /// Bisected unbroken<->broken transition locations, interval width 1e-10.
  std::vector<double> boundaries;
};

/// Classify each grid point of a real-parameter sweep: unbroken when every
/// |Im E| <= real_tol, broken otherwise. real_tol <= 0 selects the default.
PTSweepResult pt_classify_sweep(const MatrixFamily& family, double g_min,
                                double g_max, int steps, double real_tol = 0.0);

/// Eigenvalues over a complex-parameter grid z = x + iy, each node sorted
/// by (Re, Im); no sheet tracking across nodes.
struct SurfaceGrid {
  std::vector<double> xs, ys;
  std::vector<Vector> eigenvalues;  // node (ix, iy) at ix * ny + iy
  int nx = 0, ny = 0, dim = 0;

  const Vector& at(int ix, int iy) const { return eigenvalues[ix * ny + iy]; }
};

SurfaceGrid surface_scan(const MatrixFamily& family, double x0, double x1,
                         double y0, double y1, int nx, int ny);

}  // namespace levelflow

#endif
