#ifndef LEVELFLOW_MATRIX_MODEL_HPP
#define LEVELFLOW_MATRIX_MODEL_HPP

#include <map>
#include <string>
#include <vector>

#include "levelflow/types.hpp"

namespace levelflow {

enum class FamilyKind { polynomial, builtin };

/// A parameter-dependent matrix H(lambda) = sum_k C_k lambda^k with its
/// analytic derivative. Builtin models are stored in the same polynomial
/// form plus their name and parameters. Immutable after construction;
/// evaluation is pure and thread-safe.
class MatrixFamily {
 public:
  /// User-supplied polynomial family. Requires at least one coefficient,
  /// square matrices of equal dimension >= 2.
  static MatrixFamily polynomial(std::vector<Matrix> coeffs,
                                 bool hermitian_on_real_axis);

  /// Builtin by name: "two_level_hermitian", "two_level_pt",
  /// "oscillator_2d" (params: k > 0, N >= 2, optional lambda_ref > 0).
  static MatrixFamily builtin(const std::string& name,
                              const std::map<std::string, double>& params = {});

  static MatrixFamily two_level_hermitian();
  static MatrixFamily two_level_pt();

  int dim() const { return dim_; }
  FamilyKind kind() const { return kind_; }
  const std::string& builtin_name() const { return name_; }
  const std::map<std::string, double>& params() const { return params_; }
  bool hermitian_on_real_axis() const { return hermitian_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Matrix>& coeffs() const { return coeffs_; }

  /// H(lambda). Throws InvalidParameterError for non-finite lambda and
  /// DomainError outside a builtin's domain (oscillator_2d needs real
  /// lambda > 0).
  Matrix evaluate(Complex lambda) const;

  /// Analytic H'(lambda) = sum_k k C_k lambda^(k-1). Same domain rules.
  Matrix evaluate_derivative(Complex lambda) const;

  /// max over sampled lambda in [lo, hi] of ||H'||_F; bounds |dE/dlambda|
  /// for Hermitian families.
  double derivative_norm_bound(double lo, double hi, int samples = 33) const;

 private:
  MatrixFamily() = default;
  void checkDomain(Complex lambda) const;

  int dim_ = 0;
  FamilyKind kind_ = FamilyKind::polynomial;
  std::string name_;
  std::map<std::string, double> params_;
  std::vector<Matrix> coeffs_;
  bool hermitian_ = false;
  bool positive_real_domain_ = false;  // oscillator_2d: lambda real, > 0
};

/// Parse a model definition file (JSON). Errors report the file path and
/// the offending field.
MatrixFamily load_model_file(const std::string& path);

/// Parse from a JSON string; `origin` names the source in error messages.
MatrixFamily parse_model_json(const std::string& text, const std::string& origin);

}  // namespace levelflow

#endif
