#include "levelflow/matrix_model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "levelflow/config.hpp"
#include "levelflow/errors.hpp"
#include "levelflow/oscillator.hpp"

namespace levelflow {

using nlohmann::json;

MatrixFamily MatrixFamily::polynomial(std::vector<Matrix> coeffs,
                                      bool hermitian_on_real_axis) {
  if (coeffs.empty())
    throw InvalidParameterError("polynomial family needs at least one coefficient matrix");
  const auto n = coeffs.front().rows();
  if (n < 2)
    throw InvalidParameterError("matrix dimension must be >= 2");
  for (const auto& c : coeffs)
    if (c.rows() != n || c.cols() != n)
      throw InvalidParameterError("all coefficient matrices must be square of equal dimension");

  MatrixFamily f;
  f.dim_ = static_cast<int>(n);
  f.kind_ = FamilyKind::polynomial;
  f.coeffs_ = std::move(coeffs);
  f.hermitian_ = hermitian_on_real_axis;
  return f;
}

MatrixFamily MatrixFamily::two_level_hermitian() {
  Matrix c0(2, 2), c1(2, 2);
  c0 << -1.0, -1.0, -1.0, 1.0;
  c1 << 1.0, 0.0, 0.0, -1.0;
  MatrixFamily f = polynomial({c0, c1}, true);
  f.kind_ = FamilyKind::builtin;
  f.name_ = "two_level_hermitian";
  return f;
}

MatrixFamily MatrixFamily::two_level_pt() {
  const Complex i{0.0, 1.0};
  Matrix c0(2, 2), c1(2, 2);
  c0 << 0.0, -1.0, -1.0, 0.0;
  c1 << i, 0.0, 0.0, -i;
  MatrixFamily f = polynomial({c0, c1}, false);
  f.kind_ = FamilyKind::builtin;
  f.name_ = "two_level_pt";
  return f;
}

MatrixFamily MatrixFamily::builtin(const std::string& name,
                                   const std::map<std::string, double>& params) {
  if (name == "two_level_hermitian") return two_level_hermitian();
  if (name == "two_level_pt") return two_level_pt();
  if (name == "oscillator_2d") {
    oscillator::OscSpec spec;
    auto get = [&](const char* key, double fallback, bool required) {
      auto it = params.find(key);
      if (it == params.end()) {
        if (required)
          throw InvalidParameterError("oscillator_2d requires parameter '" + std::string(key) + "'");
        return fallback;
      }
      return it->second;
    };
    spec.k = get("k", 1.0, true);
    spec.truncation = static_cast<int>(get("N", 8.0, true));
    spec.lambda_ref = get("lambda_ref", 0.0, false);
    if (spec.k <= 0.0) throw InvalidParameterError("oscillator_2d: k must be > 0");
    if (spec.truncation < 2) throw InvalidParameterError("oscillator_2d: N must be >= 2");
    if (spec.lambda_ref < 0.0)
      throw InvalidParameterError("oscillator_2d: lambda_ref must be > 0");

    const int M = spec.truncation + 1;
    const int dim = M * M;
    const double lref = spec.lambdaRef();

    Matrix q2 = Matrix::Zero(M, M);
    for (int a = 0; a < M; ++a)
      for (int b = 0; b < M; ++b) q2(a, b) = oscillator::q2_element(lref, a, b);

    // x-major product basis: state (m, n) sits at index m * M + n, so the
    // y^2 operator is block diagonal over the conserved x quantum number.
    Matrix c1 = Matrix::Zero(dim, dim);
    for (int m = 0; m < M; ++m) c1.block(m * M, m * M, M, M) = q2;

    Matrix c0 = Matrix::Zero(dim, dim);
    for (int m = 0; m < M; ++m)
      for (int n = 0; n < M; ++n)
        c0(m * M + n, m * M + n) =
            std::sqrt(spec.k) * (2 * m + 1) + std::sqrt(lref) * (2 * n + 1);
    c0 -= lref * c1;

    MatrixFamily f = polynomial({c0, c1}, true);
    f.kind_ = FamilyKind::builtin;
    f.name_ = "oscillator_2d";
    f.params_ = {{"k", spec.k},
                 {"N", static_cast<double>(spec.truncation)},
                 {"lambda_ref", lref}};
    f.positive_real_domain_ = true;
    return f;
  }
  throw InvalidParameterError("unknown builtin model '" + name + "'");
}

void MatrixFamily::checkDomain(Complex lambda) const {
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()))
    throw InvalidParameterError("non-finite parameter value");
  if (positive_real_domain_ && (lambda.imag() != 0.0 || lambda.real() <= 0.0))
    throw DomainError(name_ + " is defined for real lambda > 0");
}

Matrix MatrixFamily::evaluate(Complex lambda) const {
  checkDomain(lambda);
  Matrix h = coeffs_.back();
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it)
    h = h * lambda + *it;
  return h;
}

Matrix MatrixFamily::evaluate_derivative(Complex lambda) const {
  checkDomain(lambda);
  const int d = degree();
  if (d == 0) return Matrix::Zero(dim_, dim_);
  Matrix h = static_cast<double>(d) * coeffs_[d];
  for (int k = d - 1; k >= 1; --k)
    h = h * lambda + static_cast<double>(k) * coeffs_[k];
  return h;
}

double MatrixFamily::derivative_norm_bound(double lo, double hi, int samples) const {
  if (samples < 2) samples = 2;
  double bound = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double lam = lo + (hi - lo) * i / (samples - 1);
    bound = std::max(bound, evaluate_derivative(lam).norm());
  }
  return bound;
}

namespace {

Complex parseEntry(const json& e, const std::string& where) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
    throw ParseError(where + ": matrix entry must be a [re, im] pair");
  return {e[0].get<double>(), e[1].get<double>()};
}

Matrix parseCoefficient(const json& m, int dim, const std::string& where) {
  if (!m.is_array() || static_cast<int>(m.size()) != dim)
    throw ParseError(where + ": expected " + std::to_string(dim) + " rows");
  Matrix out(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const json& row = m[i];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw ParseError(where + ", row " + std::to_string(i) + ": expected " +
                       std::to_string(dim) + " entries");
    for (int j = 0; j < dim; ++j)
      out(i, j) = parseEntry(row[j], where + "[" + std::to_string(i) + "][" +
                                         std::to_string(j) + "]");
  }
  return out;
}

void verifyHermitianSampling(const MatrixFamily& f, const std::string& origin) {
  // Declared Hermitian families are spot checked right at load time.
  const Tolerances& tol = Tolerances::global();
  for (double lam : {-1.7, -0.3, 0.0, 0.9, 2.4}) {
    const Matrix h = f.evaluate(lam);
    if ((h - h.adjoint()).norm() > tol.hermiticity() * std::max(1.0, h.norm()))
      throw ParseError(origin +
                       ": field 'hermitian_on_real_axis' is true but H(" +
                       std::to_string(lam) + ") is not Hermitian");
  }
}

}  // namespace

MatrixFamily parse_model_json(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(origin + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError(origin + ": top level must be an object");

  const std::string kind = j.value("kind", std::string{});
  if (kind == "builtin") {
    if (!j.contains("name") || !j["name"].is_string())
      throw ParseError(origin + ": builtin model needs a string field 'name'");
    std::map<std::string, double> params;
    if (j.contains("params")) {
      if (!j["params"].is_object())
        throw ParseError(origin + ": field 'params' must be an object");
      for (const auto& [key, val] : j["params"].items()) {
        if (!val.is_number())
          throw ParseError(origin + ": params." + key + " must be a number");
        params[key] = val.get<double>();
      }
    }
    try {
      return MatrixFamily::builtin(j["name"].get<std::string>(), params);
    } catch (const Error& e) {
      throw ParseError(origin + ": " + e.what());
    }
  }
  if (kind == "polynomial") {
    if (!j.contains("dim") || !j["dim"].is_number_integer())
      throw ParseError(origin + ": polynomial model needs an integer field 'dim'");
    const int dim = j["dim"].get<int>();
    if (dim < 2) throw ParseError(origin + ": field 'dim' must be >= 2");
    if (!j.contains("coeffs") || !j["coeffs"].is_array() || j["coeffs"].empty())
      throw ParseError(origin + ": field 'coeffs' must be a non-empty array of matrices");
    std::vector<Matrix> coeffs;
    for (std::size_t k = 0; k < j["coeffs"].size(); ++k)
      coeffs.push_back(parseCoefficient(j["coeffs"][k], dim,
                                        origin + ": coeffs[" + std::to_string(k) + "]"));
    const bool herm = j.value("hermitian_on_real_axis", false);
    MatrixFamily f = MatrixFamily::polynomial(std::move(coeffs), herm);
    if (herm) verifyHermitianSampling(f, origin);
    return f;
  }
  throw ParseError(origin + ": field 'kind' must be \"polynomial\" or \"builtin\"");
}

MatrixFamily load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model_json(buf.str(), path);
}

}  // namespace levelflow
