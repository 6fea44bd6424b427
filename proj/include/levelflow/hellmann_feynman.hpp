#ifndef LEVELFLOW_HELLMANN_FEYNMAN_HPP
#define LEVELFLOW_HELLMANN_FEYNMAN_HPP

#include <vector>

#include "levelflow/eig_core.hpp"
#include "levelflow/matrix_model.hpp"
#include "levelflow/types.hpp"

namespace levelflow {

/// <psi_m | psi_n>, conjugate-linear in the first argument.
Complex overlap(const Spectrum& spec, int m, int n);

/// <psi_m | H'(lambda) | psi_n> with the spectrum's own eigenvectors.
Complex hf_element(const MatrixFamily& family, const Spectrum& spec, int m, int n);

/// One identity evaluation: lhs and rhs of
///   <psi_m|H'|psi_n> = E'_n <psi_m|psi_n> + (E_n - E_m) <psi_m|psi'_n>
/// with E'_n and psi'_n from gauge-aligned central differences.
struct IdentityReport {
  double lambda = 0.0;
  int m = 0;
  int n = 0;
  Complex lhs{0.0, 0.0};
  Complex rhs{0.0, 0.0};
  double residual = 0.0;  // |lhs - rhs|
  double fd_step = 0.0;
};

/// fd_step <= 0 selects the default 1e-5 * (1 + |lambda|). Branch indices
/// follow ascending order at lambda. Throws PreconditionError when the pair
/// gap is below 10 * fd_step * ||H'||_F (the identity needs a limit
/// treatment there).
IdentityReport hf_offdiag_residual(const MatrixFamily& family, double lambda,
                                   int m, int n, double fd_step = 0.0);

/// Derivatives d^k/dlambda^k [ Delta(lambda) S(lambda) ] for k = 0..order+1,
/// Delta = E_m - E_n, S = <psi_m|psi_n>, from central-difference stencils on
/// branch-tracked, phase-aligned states. noise[k] estimates the roundoff
/// amplification of the k-th stencil.
struct ProductIdentityResult {
  std::vector<Complex> value;
  std::vector<double> noise;
};

/// order <= 4 (wider stencils are too noisy in double precision). Branch
/// indices follow ascending order at the left edge of the sample window;
/// fd_step <= 0 selects the default, and the k-th stencil widens its step
/// by a factor 10^(k-1).
ProductIdentityResult product_identity_check(const MatrixFamily& family,
                                             double lambda0, int m, int n,
                                             int order, double fd_step = 0.0);

/// Diagonal relation: dE_b/dlambda = Re <psi_b|H'|psi_b>.
double diagonal_slope(const MatrixFamily& family, const Spectrum& spec, int b);

/// Maximizer of |<psi_m|H'|psi_n>| over [lo, hi] (golden section, then
/// bisection on the finite-difference slope of the squared magnitude).
struct ElementMax {
  double lambda_star = 0.0;
  double value = 0.0;
};
ElementMax hf_element_max(const MatrixFamily& family, int m, int n, double lo,
                          double hi);

}  // namespace levelflow

#endif
