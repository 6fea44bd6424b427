#ifndef LEVELFLOW_TYPES_HPP
#define LEVELFLOW_TYPES_HPP

#include <complex>
#include <Eigen/Dense>

namespace levelflow {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

}  // namespace levelflow

#endif
