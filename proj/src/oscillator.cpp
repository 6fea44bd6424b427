#include "levelflow/oscillator.hpp"

#include <cmath>
#include <string>

#include "levelflow/errors.hpp"

namespace levelflow::oscillator {

double exact_energy(const OscSpec& spec, OscState state, double lambda) {
  if (lambda <= 0.0) throw DomainError("exact_energy: lambda must be > 0");
  if (state.m < 0 || state.n < 0)
    throw InvalidParameterError("exact_energy: quantum numbers must be >= 0");
  return std::sqrt(spec.k) * (2 * state.m + 1) + std::sqrt(lambda) * (2 * state.n + 1);
}

double q2_element(double k_eff, int a, int b) {
  if (k_eff <= 0.0) throw DomainError("q2_element: stiffness must be > 0");
  if (a < 0 || b < 0) throw InvalidParameterError("q2_element: indices must be >= 0");
  const double s = 2.0 * std::sqrt(k_eff);
  if (a == b) return (2 * a + 1) / s;
  const int lo = std::min(a, b);
  if (std::abs(a - b) == 2) return std::sqrt(double(lo + 1) * double(lo + 2)) / s;
  return 0.0;
}

MatrixFamily build_family(const OscSpec& spec) {
  return MatrixFamily::builtin(
      "oscillator_2d",
      {{"k", spec.k},
       {"N", static_cast<double>(spec.truncation)},
       {"lambda_ref", spec.lambda_ref > 0.0 ? spec.lambda_ref : 0.0}});
}

int degeneracy_at_iso(const OscSpec& spec, int level) {
  const int N = spec.truncation;
  if (level < 0 || level > 2 * N)
    throw DomainError("degeneracy_at_iso: level " + std::to_string(level) +
                      " is beyond truncation 2N = " + std::to_string(2 * N));
  // Count of (m, n) with m + n == level and 0 <= m, n <= N.
  return level <= N ? level + 1 : 2 * N + 1 - level;
}

int state_index(const OscSpec& spec, OscState state) {
  const int N = spec.truncation;
  if (state.m < 0 || state.n < 0 || state.m > N || state.n > N)
    throw IndexError("state_index: quantum numbers outside truncation");
  return state.m * (N + 1) + state.n;
}

}  // namespace levelflow::oscillator
