#ifndef LEVELFLOW_SPECTRAL_FLOW_HPP
#define LEVELFLOW_SPECTRAL_FLOW_HPP

#include <optional>
#include <utility>
#include <vector>

#include "levelflow/eig_core.hpp"
#include "levelflow/matrix_model.hpp"
#include "levelflow/types.hpp"

namespace levelflow {

struct MatchOptions {
  /// Eigenvalues closer than cluster_rel * (1 + ||H||) are treated as one
  /// degenerate cluster; for Hermitian spectra the cluster basis is rotated
  /// to the closest orthonormal frame of the reference vectors, which is
  /// what makes tracked states continuous through an exact crossing.
  bool rotate_clusters = true;
  double cluster_scale = 0.0;  // absolute width; 0 means derive from ||H||
};

/// Result of matching a freshly computed spectrum against reference branch
/// vectors: perm[b] is the sorted-spectrum index assigned to branch b.
struct Matched {
  std::vector<int> perm;
  Vector values;             // branch-ordered
  Matrix vectors;            // column b = branch b, phase-fixed
  std::vector<double> overlap_mags;  // |<ref_b, new_b>| before phase fixing
};

/// Assign the columns of `raw` to branches greedily by descending overlap
/// magnitude with `ref_vectors` (ties below 1e-12 broken by eigenvalue
/// proximity to `ref_values`), then align degenerate clusters.
/// `H` is needed only for cluster rotation (Rayleigh re-evaluation);
/// pass nullptr to skip rotation.
Matched match_spectra(const Vector& ref_values, const Matrix& ref_vectors,
                      const Spectrum& raw, const Matrix* H = nullptr,
                      const MatchOptions& opts = {});

struct SweepOptions {
  double overlap_floor = 0.7;
  /// March from lambda_max down instead; branch indices then follow sorted
  /// order at lambda_max. The stored grid is ascending either way.
  bool reversed = false;
};

/// Continuity-tracked eigenvalue/eigenvector branches over a real grid.
struct FlowResult {
  std::vector<double> grid;                 // ascending
  std::vector<RealVector> energies;         // per point, branch-ordered
  std::vector<Matrix> vectors;              // per point, column b = branch b
  std::vector<std::vector<int>> permutations;  // per point, branch -> sorted index
  /// (point index, branch) pairs where the step overlap fell below the
  /// floor: possible missed event, the grid is too coarse there.
  std::vector<std::pair<int, int>> low_overlap_flags;
  bool reversed = false;

  int dim() const { return energies.empty() ? 0 : static_cast<int>(energies.front().size()); }
  int points() const { return static_cast<int>(grid.size()); }
};

/// Sweep a Hermitian-on-the-real-axis family over [lambda_min, lambda_max]
/// with `steps` grid points (steps >= 2). Throws NumericalFailureError
/// naming the grid point if an eigendecomposition fails.
FlowResult sweep(const MatrixFamily& family, double lambda_min,
                 double lambda_max, int steps, const SweepOptions& opts = {});

enum class CrossingKind { crossing, avoided };

struct CrossingEvent {
  int branch_m = 0;
  int branch_n = 0;
  double lambda_star = 0.0;
  double gap_min = 0.0;
  CrossingKind classification = CrossingKind::avoided;
  double slope_m = 0.0;       // <psi_m|H'|psi_m> at lambda_star
  double slope_n = 0.0;
  double hf_element_abs = 0.0;  // |<psi_m|H'|psi_n>| at lambda_star
  double overlap_abs = 0.0;     // |<psi_m|psi_n>| at lambda_star

  // Tracking anchor used for later re-evaluation of the limit states.
  double anchor_lambda = 0.0;
  Vector anchor_m, anchor_n;
};

/// Scan every branch pair of `flow` for a strict interior local minimum of
/// the squared tracked gap, refine each bracket, and classify: gap_min at
/// or below cross_tol * (1 + max|E|) is a crossing, above it an avoided
/// crossing. Empty result when no branch pair approaches.
std::vector<CrossingEvent> detect_events(const FlowResult& flow,
                                         const MatrixFamily& family);

struct GapMinimum {
  double lambda_star = 0.0;
  double gap_min = 0.0;
};

/// Locate the minimizer of the squared tracked gap between two branches
/// inside (lambda_lo, lambda_hi). The bracket must contain exactly one
/// interior minimum (else BracketError). Branches are anchored by their
/// eigenvectors at lambda_lo; the overload taking branch indices uses
/// ascending order at lambda_lo.
GapMinimum refine_gap_minimum(const MatrixFamily& family, int branch_m,
                              int branch_n, double lambda_lo, double lambda_hi);
GapMinimum refine_gap_minimum(const MatrixFamily& family, const Vector& anchor_m,
                              const Vector& anchor_n, double lambda_lo,
                              double lambda_hi);

/// Overlap magnitudes of the tracked pair while approaching a crossing.
struct OrthogonalityReport {
  std::vector<double> offsets;
  std::vector<double> overlap_below;  // |<m|n>| at lambda_star - offset
  std::vector<double> overlap_above;  // |<m|n>| at lambda_star + offset
  double overlap_at_star = 0.0;       // limit states, cluster-aligned
};

/// Requires event.classification == crossing.
OrthogonalityReport crossing_orthogonality_check(
    const MatrixFamily& family, const CrossingEvent& event,
    const std::vector<double>& approach_offsets);

}  // namespace levelflow

#endif
