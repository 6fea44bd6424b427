#ifndef LEVELFLOW_CONFIG_HPP
#define LEVELFLOW_CONFIG_HPP

namespace levelflow {

/// Default numerical thresholds. All tolerance-like values are multiplied
/// by `scale`, which is read once from LEVELFLOW_TOLERANCE_SCALE (a positive
/// real). Step sizes and the overlap floor are heuristics, not tolerances,
/// and are left untouched by the scale.
struct Tolerances {
  double scale = 1.0;

  double hermiticity_rel = 1e-12;   // ||H - H^+|| <= tol * ||H||
  double residual_rel = 1e-12;      // ||H v - E v|| <= tol * ||H||
  double orthonormality = 1e-12;    // ||V^+ V - I||
  double cluster_rel = 1e-10;       // Hermitian eigenvalue cluster width / ||H||
  double root_cluster = 1e-7;       // general-solver root coalescence (abs, per unit scale)
  double defect_sigma = 1e-8;       // singular values below this count as kernel
  double cross_tol = 1e-8;          // crossing vs avoided, * (1 + max|E|)
  double refine_width = 1e-13;      // bisection target width, * (1 + |lambda|)
  double real_tol = 1e-10;          // default PT reality threshold
  double ep_tol = 1e-12;            // default |discriminant| convergence target

  double overlap_floor = 0.7;       // not scaled
  double fd_step_rel = 1e-5;        // default first-derivative step, * (1 + |lambda|)

  double hermiticity() const { return hermiticity_rel * scale; }
  double residual() const { return residual_rel * scale; }
  double orthonorm() const { return orthonormality * scale; }
  double cluster() const { return cluster_rel * scale; }
  double rootCluster() const { return root_cluster * scale; }
  double defectSigma() const { return defect_sigma * scale; }
  double crossTol() const { return cross_tol * scale; }
  double refineWidth() const { return refine_width * scale; }
  double realTol() const { return real_tol * scale; }
  double epTol() const { return ep_tol * scale; }

  /// Process-wide defaults, env scale applied.
  static const Tolerances& global();
};

}  // namespace levelflow

#endif
