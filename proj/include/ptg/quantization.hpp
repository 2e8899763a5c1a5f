#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ptg/ptolemy.hpp"

namespace ptg {

struct Seed {
  std::vector<std::string> edges;
  Eigen::MatrixXi eps;

  int index(const std::string& e) const;  // EdgeNotPresent
  int size() const { return static_cast<int>(edges.size()); }
  friend bool operator==(const Seed& a, const Seed& b) { return a.edges == b.edges && a.eps == b.eps; }
};

// coordinates over the seed's edge order
using ShearingPoint = Eigen::VectorXd;
using LambdaPoint = Eigen::VectorXd;

Seed epsilon_of(const MarkedTessellation& t, const std::vector<Edge>& restriction);
Seed epsilon_of(const MarkedTessellation& t);  // all interior edges

Seed mutate(const Seed& s, int e);
Seed mutate(const Seed& s, const std::string& e);

std::pair<Seed, ShearingPoint> shear_flip(const Seed& s, const ShearingPoint& x, int e);
std::pair<Seed, LambdaPoint> lambda_flip(const Seed& s, const LambdaPoint& a, int e);
ShearingPoint p_map(const Seed& s, const LambdaPoint& a);
Eigen::MatrixXd shear_jacobian(const Seed& s, const ShearingPoint& x, int e);

struct QuantumEvalParams {
  double h = 1.0;
  double quad_tolerance = 1e-10;
  double contour_offset = 0.0;  // 0 picks min(1, 1/h)/2
  double t_max = 400.0;
};

std::complex<double> quantum_log(std::complex<double> z, const QuantumEvalParams& p);
std::complex<double> quantum_dilog(std::complex<double> z, const QuantumEvalParams& p);
// the exponent of quantum_dilog, free of branch choices
std::complex<double> log_quantum_dilog(std::complex<double> z, const QuantumEvalParams& p);

}  // namespace ptg
