#include "ptg/quantization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ptg/error.hpp"

namespace ptg {

using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;

int Seed::index(const std::string& e) const {
  auto it = std::find(edges.begin(), edges.end(), e);
  if (it == edges.end()) throw Error(ErrorKind::EdgeNotPresent, "edge " + e + " not in the seed");
  return static_cast<int>(it - edges.begin());
}

Seed epsilon_of(const MarkedTessellation& t, const std::vector<Edge>& restriction) {
  const int n = static_cast<int>(restriction.size());
  std::map<Edge, int> idx;
  Seed s;
  for (int i = 0; i < n; ++i) {
    if (t.triangles_on(restriction[i]).size() != 2)
      throw Error(ErrorKind::EdgeNotInterior, restriction[i].str());
    idx[restriction[i]] = i;
    s.edges.push_back(restriction[i].str());
  }
  s.eps = Eigen::MatrixXi::Zero(n, n);
  for (const auto& tr : t.support) {
    auto es = tr.edges();
    for (const auto& e : es)
      for (const auto& f : es) {
        if (e == f || !idx.contains(e) || !idx.contains(f)) continue;
        const Fraction& v = f.has(e.a) ? e.a : e.b;
        // rotating e onto f about v clockwise through the triangle
        s.eps(idx[e], idx[f]) += ccw(v, e.other(v), f.other(v)) ? -1 : 1;
      }
  }
  return s;
}

Seed epsilon_of(const MarkedTessellation& t) { return epsilon_of(t, t.interior_edges()); }

namespace {
void check_index(const Seed& s, int e) {
  if (e < 0 || e >= s.size()) throw Error(ErrorKind::EdgeNotPresent, "edge index " + std::to_string(e));
}

int sgn(int v) { return (v > 0) - (v < 0); }

// log(1 + exp(u)) without overflow
double softplus(double u) { return u > 0 ? u + std::log1p(std::exp(-u)) : std::log1p(std::exp(u)); }
double sigmoid(double u) { return u > 0 ? 1 / (1 + std::exp(-u)) : std::exp(u) / (1 + std::exp(u)); }
}  // namespace

Seed mutate(const Seed& s, int e) {
  check_index(s, e);
  Seed m = s;
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.size(); ++j) {
      if (i == e || j == e)
        m.eps(i, j) = -s.eps(i, j);
      else if (s.eps(i, e) * s.eps(e, j) > 0)
        m.eps(i, j) = s.eps(i, j) + std::abs(s.eps(i, e)) * s.eps(e, j);
    }
  return m;
}

Seed mutate(const Seed& s, const std::string& e) { return mutate(s, s.index(e)); }

std::pair<Seed, ShearingPoint> shear_flip(const Seed& s, const ShearingPoint& x, int e) {
  check_index(s, e);
  ShearingPoint y = x;
  for (int i = 0; i < s.size(); ++i) {
    int k = s.eps(i, e);
    if (i == e || k == 0) continue;
    y(i) = x(i) - k * softplus(-sgn(k) * x(e));
  }
  y(e) = -x(e);
  return {mutate(s, e), y};
}

std::pair<Seed, LambdaPoint> lambda_flip(const Seed& s, const LambdaPoint& a, int e) {
  check_index(s, e);
  double pos = 0, neg = 0;
  for (int t = 0; t < s.size(); ++t) {
    int k = s.eps(e, t);
    if (k > 0) pos += k * a(t);
    if (k < 0) neg -= k * a(t);
  }
  LambdaPoint b = a;
  double m = std::max(pos, neg);
  b(e) = -a(e) + m + std::log(std::exp(pos - m) + std::exp(neg - m));
  return {mutate(s, e), b};
}

ShearingPoint p_map(const Seed& s, const LambdaPoint& a) { return s.eps.cast<double>() * a; }

Eigen::MatrixXd shear_jacobian(const Seed& s, const ShearingPoint& x, int e) {
  check_index(s, e);
  Eigen::MatrixXd j = Eigen::MatrixXd::Identity(s.size(), s.size());
  for (int i = 0; i < s.size(); ++i) {
    int k = s.eps(i, e);
    if (i == e || k == 0) continue;
    j(i, e) = std::abs(k) * sigmoid(-sgn(k) * x(e));
  }
  j(e, e) = -1;
  return j;
}

namespace {

// ∫ exp(-itz) / (sh(πt) sh(πht)) w(t) dt along Im t = δ, with w(t) = 1 or 1/t
cd contour_integral(cd z, const QuantumEvalParams& p, bool divide_by_t) {
  const double h = p.h;
  if (!(h > 0)) throw Error(ErrorKind::DomainViolation, "h must be positive");
  if (std::abs(z.imag()) >= pi * (1 + h))
    throw Error(ErrorKind::DomainViolation, "|Im z| must stay below pi(1+h)");
  const double delta = p.contour_offset > 0 ? p.contour_offset : std::min(1.0, 1.0 / h) / 2;
  if (delta >= std::min(1.0, 1.0 / h))
    throw Error(ErrorKind::DomainViolation, "contour offset crosses a pole");
  auto f = [&](double s) {
    cd t(s, delta);
    cd v = std::exp(cd(0, -1) * t * z) / (std::sinh(pi * t) * std::sinh(pi * h * t));
    return divide_by_t ? v / t : v;
  };
  // truncate where the integrand has decayed below tolerance on both sides
  const double cutoff = p.quad_tolerance * 1e-2;
  double T = 1;
  while (std::abs(f(T)) > cutoff || std::abs(f(-T)) > cutoff) {
    T += 0.5;
    if (T > p.t_max) throw Error(ErrorKind::NonConvergent, "integrand does not decay before t_max");
  }
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  cd sum = 0;
  double err_total = 0;
  const double width = std::min(1.0, 4 * delta);
  const int pieces = static_cast<int>(std::ceil(2 * T / width));
  for (int k = 0; k < pieces; ++k) {
    double a = -T + 2 * T * k / pieces, b = -T + 2 * T * (k + 1) / pieces;
    double er = 0, ei = 0;
    double re = GK::integrate([&](double s) { return f(s).real(); }, a, b, 15, 1e-13, &er);
    double im = GK::integrate([&](double s) { return f(s).imag(); }, a, b, 15, 1e-13, &ei);
    sum += cd(re, im);
    err_total += er + ei;
  }
  if (!(err_total < p.quad_tolerance * std::max(1.0, std::abs(sum))) || !std::isfinite(std::abs(sum)))
    throw Error(ErrorKind::NonConvergent, "quadrature error estimate " + std::to_string(err_total));
  return sum;
}

}  // namespace

cd quantum_log(cd z, const QuantumEvalParams& p) { return -(pi * p.h / 2) * contour_integral(z, p, false); }

cd log_quantum_dilog(cd z, const QuantumEvalParams& p) { return -0.25 * contour_integral(z, p, true); }

cd quantum_dilog(cd z, const QuantumEvalParams& p) { return std::exp(log_quantum_dilog(z, p)); }

}  // namespace ptg
