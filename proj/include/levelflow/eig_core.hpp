#ifndef LEVELFLOW_EIG_CORE_HPP
#define LEVELFLOW_EIG_CORE_HPP

#include <vector>

#include "levelflow/matrix_model.hpp"
#include "levelflow/types.hpp"

namespace levelflow {

/// Eigendecomposition at one parameter value. Column j of `eigenvectors`
/// pairs with eigenvalues[j]; columns are unit-norm and phase-fixed
/// (largest-magnitude entry real positive, lowest row index on ties).
struct Spectrum {
  Complex lambda{0.0, 0.0};
  Vector eigenvalues;
  Matrix eigenvectors;
  bool hermitian = false;
  /// Set by the general solver when an eigenvalue cluster has fewer
  /// independent eigenvectors than its multiplicity (exceptional point).
  bool defective = false;
};

/// Dense Hermitian eigendecomposition, eigenvalues ascending, eigenvector
/// columns orthonormal. Near-degenerate clusters are re-orthonormalized.
/// Throws PreconditionError if ||H - H^+|| > hermiticity tol * ||H||,
/// NumericalFailureError if the iteration fails.
Spectrum eig_hermitian(const Matrix& H);

/// Dense general (possibly non-Hermitian) eigendecomposition for dim <= 12:
/// characteristic polynomial by Faddeev-LeVerrier, simultaneous Aberth root
/// refinement, eigenvectors from the smallest singular vectors of H - E I.
/// Eigenvalues sorted by (Re, Im). Coalesced roots are snapped to their
/// cluster mean; a defective cluster repeats the kernel vector and sets the
/// `defective` flag rather than failing.
Spectrum eig_general(const Matrix& H);

/// Dispatch: Hermitian path when the family is Hermitian on the real axis
/// and lambda is real, general path otherwise.
Spectrum eig_for(const MatrixFamily& family, Complex lambda);

/// Deterministic per-column phase normalization (in place): the entry of
/// largest magnitude becomes real and positive. Idempotent.
void fix_phases(Matrix& vectors);

/// Monic characteristic polynomial coefficients c[0..n], p(E) = sum c[k] E^k,
/// c[n] = 1, by the Faddeev-LeVerrier recurrence.
std::vector<Complex> characteristic_polynomial(const Matrix& A);

/// All roots of a monic polynomial (coefficients ascending, c.back() != 0)
/// by Aberth-Ehrlich iteration with Newton polish.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

}  // namespace levelflow

#endif
