#ifndef LEVELFLOW_OSCILLATOR_HPP
#define LEVELFLOW_OSCILLATOR_HPP

#include "levelflow/matrix_model.hpp"
#include "levelflow/types.hpp"

namespace levelflow::oscillator {

/// Product state of the 2D oscillator: m excitations along x, n along y.
struct OscState {
  int m = 0;
  int n = 0;
};

/// H = -d2/dx2 - d2/dy2 + k x^2 + lambda y^2 in dimensionless form,
/// represented in the truncated product basis of 1D eigenfunctions at
/// stiffness k (x) and lambda_ref (y), indices 0..truncation.
struct OscSpec {
  double k = 1.0;
  int truncation = 8;
  double lambda_ref = 0.0;  // <= 0 means "use k"

  double lambdaRef() const { return lambda_ref > 0.0 ? lambda_ref : k; }
};

/// sqrt(k)(2m+1) + sqrt(lambda)(2n+1). Throws DomainError for lambda <= 0.
double exact_energy(const OscSpec& spec, OscState state, double lambda);

/// <phi_a| q^2 |phi_b> in the 1D eigenbasis of -d2/dq2 + k_eff q^2:
/// (2a+1)/(2 sqrt(k_eff)) on the diagonal, sqrt((a+1)(a+2))/(2 sqrt(k_eff))
/// for |a-b| = 2, zero otherwise.
double q2_element(double k_eff, int a, int b);

/// Affine family H(lambda) = C0 + C1 lambda of dimension (N+1)^2 with
/// C1 the y^2 blocks (so H' is lambda-independent). H(lambda_ref) is
/// exactly diagonal with entries sqrt(k)(2m+1) + sqrt(lambda_ref)(2n+1).
MatrixFamily build_family(const OscSpec& spec);

/// Number of basis states with m + n == level inside the truncation:
/// level+1 for level <= N, 2N+1-level above. Throws DomainError past 2N.
int degeneracy_at_iso(const OscSpec& spec, int level);

/// Basis index of a product state (m outer, n inner).
int state_index(const OscSpec& spec, OscState state);

}  // namespace levelflow::oscillator

#endif
