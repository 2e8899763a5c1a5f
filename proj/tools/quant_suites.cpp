#include "quant_suites.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ptg/quantization.hpp"

using namespace ptg;
using cd = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;
using Rng = std::mt19937_64;

int uniform(Rng& r, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(r); }

MarkedTessellation random_tess(Rng& r) {
  FreeWord w;
  for (int k = uniform(r, 0, 16); k > 0; --k) w.push({uniform(r, 1, 2), uniform(r, 0, 1) ? 1 : -1});
  auto t = act_word(base_tessellation(), w);
  for (int k = 0; k < 3; ++k) {
    auto bd = t.boundary_edges();
    t = with_edge_interior(t, bd[uniform(r, 0, static_cast<int>(bd.size()) - 1)]);
  }
  return t;
}

Eigen::VectorXd random_point(Rng& r, int n) {
  std::uniform_real_distribution<double> u(-3, 3);
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x(i) = u(r);
  return x;
}

double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

QuantumEvalParams with_h(double h) {
  QuantumEvalParams p;
  p.h = h;
  return p;
}

void mutation(std::vector<CheckRow>& rows, Rng& r, int samples) {
  for (int n = 0; n < samples; ++n) {
    auto t = random_tess(r);
    auto inner = t.interior_edges();
    Seed s = epsilon_of(t, inner);
    int e = uniform(r, 0, s.size() - 1);
    Seed m = mutate(s, e);
    rows.push_back({"mutation", "involution #" + std::to_string(n),
                    max_abs((mutate(m, e).eps - s.eps).cast<double>()), 0});
    auto w = with_edge_interior(t, inner[e]);
    auto tri = w.triangles_on(inner[e]);
    auto renamed = inner;
    renamed[e] = Edge(tri[0].apex(inner[e]), tri[1].apex(inner[e]));
    Seed f = epsilon_of(flip(t, inner[e]), renamed);
    rows.push_back({"mutation", "flip " + inner[e].str(), max_abs((f.eps - m.eps).cast<double>()), 0});
  }
}

void pentagon(std::vector<CheckRow>& rows, Rng& r, int samples) {
  int done = 0;
  for (int guard = 0; done < samples && guard < 100 * samples; ++guard) {
    Seed s = epsilon_of(random_tess(r));
    int e = uniform(r, 0, s.size() - 1), f = uniform(r, 0, s.size() - 1);
    if (std::abs(s.eps(e, f)) != 1) continue;
    auto x = random_point(r, s.size());
    Seed cur = s;
    Eigen::VectorXd y = x;
    for (int k = 0; k < 5; ++k) std::tie(cur, y) = shear_flip(cur, y, k % 2 == 0 ? e : f);
    Eigen::VectorXd xs = x;
    std::swap(xs(e), xs(f));
    Eigen::MatrixXi es = s.eps;
    es.row(e).swap(es.row(f));
    es.col(e).swap(es.col(f));
    double res = std::max(max_abs(y - xs), max_abs((cur.eps - es).cast<double>()));
    rows.push_back({"pentagon", s.edges[e] + " / " + s.edges[f], res, 1e-9});
    ++done;
  }
}

void poisson(std::vector<CheckRow>& rows, Rng& r, int samples) {
  for (int n = 0; n < samples; ++n) {
    Seed s = epsilon_of(random_tess(r));
    auto x = random_point(r, s.size());
    int e = uniform(r, 0, s.size() - 1);
    auto J = shear_jacobian(s, x, e);
    Eigen::MatrixXd moved = J * s.eps.cast<double>() * J.transpose();
    const std::string tag = " #" + std::to_string(n);
    rows.push_back({"poisson", "transport" + tag, max_abs(moved - mutate(s, e).eps.cast<double>()), 1e-9});
    const double step = 1e-6;
    Eigen::MatrixXd fd(s.size(), s.size());
    for (int j = 0; j < s.size(); ++j) {
      Eigen::VectorXd dx = Eigen::VectorXd::Unit(s.size(), j) * step;
      fd.col(j) = (shear_flip(s, x + dx, e).second - shear_flip(s, x - dx, e).second) / (2 * step);
    }
    rows.push_back({"poisson", "jacobian" + tag, max_abs(fd - J), 1e-6});
    auto [s1, x1] = shear_flip(s, x, e);
    rows.push_back({"poisson", "shear involution" + tag, max_abs(shear_flip(s1, x1, e).second - x), 1e-12});
    auto a = random_point(r, s.size());
    auto [q1, a1] = lambda_flip(s, a, e);
    rows.push_back({"poisson", "lambda involution" + tag, max_abs(lambda_flip(q1, a1, e).second - a), 1e-12});
    rows.push_back({"poisson", "p equivariance" + tag, max_abs(shear_flip(s, p_map(s, a), e).second - p_map(q1, a1)), 1e-9});
  }
}

void qlog(std::vector<CheckRow>& rows) {
  for (double h : {0.3, 0.7, 1.3})
    for (int k = -2; k <= 2; ++k) {
      cd z(k, 0);
      auto p = with_h(h);
      std::string tag = "h=" + num(h) + " z=" + num(k);
      rows.push_back({"qlog", "difference " + tag, std::abs(quantum_log(z, p) - quantum_log(-z, p) - z), 1e-6});
      rows.push_back(
          {"qlog", "modular " + tag, std::abs(quantum_log(z, p) / h - quantum_log(z / h, with_h(1 / h))), 1e-6});
    }
  rows.push_back({"qlog", "limit h=0.001 z=1", std::abs(quantum_log(1.0, with_h(0.001)) - std::log1p(std::exp(1.0))), 0.01});
  for (cd z : {cd(0.5, 0.3), cd(-1.2, 1.5)})
    rows.push_back({"qlog", "conjugation z=" + num(z.real()) + "+" + num(z.imag()) + "i",
                    std::abs(std::conj(quantum_log(z, with_h(0.8))) - quantum_log(std::conj(z), with_h(0.8))), 1e-6});
}

void qdilog(std::vector<CheckRow>& rows) {
  const cd i(0, 1);
  for (double h : {0.3, 0.7, 1.3})
    for (int k = -2; k <= 2; ++k) {
      cd z(k, 0);
      auto p = with_h(h);
      std::string tag = "h=" + num(h) + " z=" + num(k);
      cd rhs = std::exp(z * z / (4 * pi * i * h)) * std::exp(-(pi * i / 12.0) * (h + 1 / h));
      rows.push_back({"qdilog", "product " + tag, std::abs(quantum_dilog(z, p) * quantum_dilog(-z, p) - rhs), 1e-6});
      rows.push_back(
          {"qdilog", "modular " + tag, std::abs(quantum_dilog(z, p) - quantum_dilog(z / h, with_h(1 / h))), 1e-6});
      const double eta = 1e-4;
      cd d = (log_quantum_dilog(z + eta, p) - log_quantum_dilog(z - eta, p)) / (2 * eta);
      rows.push_back({"qdilog", "log-derivative " + tag, std::abs(2 * pi * i * h * d - quantum_log(z, p)), 1e-4});
    }
}

}  // namespace

std::vector<std::string> quant_suite_names() { return {"mutation", "pentagon", "poisson", "qlog", "qdilog"}; }

std::vector<CheckRow> run_quant_suite(const std::string& name, std::uint64_t seed, int samples) {
  Rng r(seed);
  std::vector<CheckRow> rows;
  if (name == "mutation")
    mutation(rows, r, samples);
  else if (name == "pentagon")
    pentagon(rows, r, samples);
  else if (name == "poisson")
    poisson(rows, r, samples);
  else if (name == "qlog")
    qlog(rows);
  else if (name == "qdilog")
    qdilog(rows);
  else
    throw std::invalid_argument("unknown suite " + name);
  return rows;
}
