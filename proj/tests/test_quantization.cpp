#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "gen.hpp"
#include "ptg/error.hpp"
#include "ptg/quantization.hpp"

using namespace ptg;
using cd = std::complex<double>;

namespace {
constexpr double pi = std::numbers::pi;
Fraction F(const char* s) { return Fraction::parse(s); }

MarkedTessellation random_tess(gen::Rng& r, int len) {
  auto t = act_word(base_tessellation(), gen::move_word(r, len));
  // grow the support a little so that seeds have several interior edges
  for (int k = 0; k < 3; ++k) {
    auto bd = t.boundary_edges();
    t = with_edge_interior(t, bd[gen::uniform(r, 0, static_cast<int>(bd.size()) - 1)]);
  }
  return t;
}

Eigen::VectorXd random_point(gen::Rng& r, int n, double scale = 3.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x(i) = u(r);
  return x;
}

// seed and point with indices i and j exchanged
Eigen::MatrixXi swap_ij(Eigen::MatrixXi m, int i, int j) {
  m.row(i).swap(m.row(j));
  m.col(i).swap(m.col(j));
  return m;
}

QuantumEvalParams with_h(double h) {
  QuantumEvalParams p;
  p.h = h;
  return p;
}
}  // namespace

TEST_CASE("exchange matrix examples") {
  auto base = base_tessellation();
  Seed s = epsilon_of(base);
  CHECK(s.size() == 1);
  CHECK(s.eps(0, 0) == 0);

  // pentagon: add the Farey triangle beyond {0, 1}
  auto pent = with_edge_interior(base, Edge(F("0"), F("1")));
  Seed p = epsilon_of(pent, {base.doe.edge(), Edge(F("0"), F("1"))});
  CHECK(std::abs(p.eps(0, 1)) == 1);
  CHECK(p.eps(0, 1) == -p.eps(1, 0));
  // at 0, the ray to ∞ turns clockwise onto the ray to 1 across the triangle {0, 1, ∞}
  CHECK(p.eps(0, 1) == 1);

  try {
    epsilon_of(base, {Edge(F("0"), F("1"))});
    FAIL("expected EdgeNotInterior");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EdgeNotInterior);
  }
}

TEST_CASE("exchange matrices are skew with small entries") {
  gen::Rng r(3);
  for (int n = 0; n < 80; ++n) {
    Seed s = epsilon_of(random_tess(r, gen::uniform(r, 0, 16)));
    CHECK(s.eps == Eigen::MatrixXi(-s.eps.transpose()));
    CHECK(s.eps.cwiseAbs().maxCoeff() <= 2);
  }
}

TEST_CASE("mutation") {
  gen::Rng r(7);
  for (int n = 0; n < 80; ++n) {
    auto t = random_tess(r, gen::uniform(r, 0, 16));
    auto inner = t.interior_edges();
    Seed s = epsilon_of(t, inner);
    int e = gen::uniform(r, 0, s.size() - 1);
    Seed m = mutate(s, e);
    CHECK(mutate(m, e) == s);
    CHECK(m.eps.row(e) == Eigen::RowVectorXi(-s.eps.row(e)));
    // recompute from the flipped tessellation, with e replaced by the new diagonal
    auto w = with_edge_interior(t, inner[e]);
    auto tri = w.triangles_on(inner[e]);
    auto renamed = inner;
    renamed[e] = Edge(tri[0].apex(inner[e]), tri[1].apex(inner[e]));
    Seed f = epsilon_of(flip(t, inner[e]), renamed);
    CHECK(f.eps == m.eps);
  }
  Seed s = epsilon_of(base_tessellation());
  CHECK_THROWS_AS(mutate(s, 3), Error);
  CHECK_THROWS_AS(mutate(s, "{0/1, 7/1}"), Error);
}

TEST_CASE("shear flips") {
  gen::Rng r(13);
  for (int n = 0; n < 80; ++n) {
    Seed s = epsilon_of(random_tess(r, gen::uniform(r, 0, 16)));
    auto x = random_point(r, s.size());
    int e = gen::uniform(r, 0, s.size() - 1);
    auto [s1, x1] = shear_flip(s, x, e);
    CHECK(x1(e) == doctest::Approx(-x(e)));
    for (int i = 0; i < s.size(); ++i)
      if (i != e && s.eps(i, e) == 0) CHECK(x1(i) == x(i));
    auto [s2, x2] = shear_flip(s1, x1, e);
    CHECK(s2 == s);
    CHECK((x2 - x).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("lambda flips and the p map") {
  Seed s;
  s.edges = {"e", "a", "b", "c", "d"};
  s.eps = Eigen::MatrixXi::Zero(5, 5);
  int row[] = {0, 1, 1, -1, -1};
  for (int j = 0; j < 5; ++j) s.eps(0, j) = row[j], s.eps(j, 0) = -row[j];
  Eigen::VectorXd a = Eigen::VectorXd::Zero(5);
  a(0) = 0.7;
  auto [s1, a1] = lambda_flip(s, a, 0);
  CHECK(a1(0) == doctest::Approx(-0.7 + std::log(2.0)).epsilon(1e-14));
  CHECK(s1.eps.row(0) == Eigen::RowVectorXi(-s.eps.row(0)));

  Eigen::VectorXd zero = Eigen::VectorXd::Zero(5);
  CHECK(p_map(s, zero).isZero());
  for (int t = 0; t < 5; ++t) {
    Eigen::VectorXd u = Eigen::VectorXd::Unit(5, t);
    for (int i = 0; i < 5; ++i) CHECK(p_map(s, u)(i) == s.eps(i, t));
  }

  gen::Rng r(17);
  for (int n = 0; n < 80; ++n) {
    Seed q = epsilon_of(random_tess(r, gen::uniform(r, 0, 16)));
    auto b = random_point(r, q.size());
    int e = gen::uniform(r, 0, q.size() - 1);
    auto [q1, b1] = lambda_flip(q, b, e);
    for (int i = 0; i < q.size(); ++i)
      if (i != e) CHECK(b1(i) == b(i));
    auto [q2, b2] = lambda_flip(q1, b1, e);
    CHECK((b2 - b).cwiseAbs().maxCoeff() < 1e-12);
    // p intertwines the two flips
    auto [q3, x3] = shear_flip(q, p_map(q, b), e);
    CHECK((x3 - p_map(q1, b1)).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("shear jacobian and Poisson transport") {
  gen::Rng r(19);
  for (int n = 0; n < 80; ++n) {
    Seed s = epsilon_of(random_tess(r, gen::uniform(r, 0, 16)));
    auto x = random_point(r, s.size());
    int e = gen::uniform(r, 0, s.size() - 1);
    auto J = shear_jacobian(s, x, e);
    CHECK(J(e, e) == -1);
    for (int i = 0; i < s.size(); ++i)
      if (i != e && s.eps(i, e) == 0) CHECK(J.row(i) == Eigen::RowVectorXd::Unit(s.size(), i));
    const double step = 1e-6;
    Eigen::MatrixXd fd(s.size(), s.size());
    for (int j = 0; j < s.size(); ++j) {
      Eigen::VectorXd dx = Eigen::VectorXd::Unit(s.size(), j) * step;
      fd.col(j) = (shear_flip(s, x + dx, e).second - shear_flip(s, x - dx, e).second) / (2 * step);
    }
    CHECK((fd - J).cwiseAbs().maxCoeff() < 1e-6);
    Eigen::MatrixXd moved = J * s.eps.cast<double>() * J.transpose();
    CHECK((moved - mutate(s, e).eps.cast<double>()).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("classical pentagon") {
  gen::Rng r(23);
  int tried = 0;
  for (int n = 0; n < 200 && tried < 60; ++n) {
    Seed s = epsilon_of(random_tess(r, gen::uniform(r, 0, 16)));
    int e = gen::uniform(r, 0, s.size() - 1), f = gen::uniform(r, 0, s.size() - 1);
    if (std::abs(s.eps(e, f)) != 1) continue;
    ++tried;
    auto x = random_point(r, s.size());
    Seed cur = s;
    Eigen::VectorXd y = x;
    for (int k = 0; k < 5; ++k) std::tie(cur, y) = shear_flip(cur, y, k % 2 == 0 ? e : f);
    CHECK(cur.eps == swap_ij(s.eps, e, f));
    Eigen::VectorXd xs = x;
    std::swap(xs(e), xs(f));
    CHECK((y - xs).cwiseAbs().maxCoeff() < 1e-9);
  }
  CHECK(tried >= 30);
}

TEST_CASE("quantum logarithm identities") {
  for (double h : {0.3, 0.7, 1.3})
    for (int k = -2; k <= 2; ++k) {
      cd z(k, 0);
      auto p = with_h(h);
      CHECK(std::abs(quantum_log(z, p) - quantum_log(-z, p) - z) < 1e-6);
      CHECK(std::abs(quantum_log(z, p) / h - quantum_log(z / h, with_h(1 / h))) < 1e-6);
    }
  CHECK(std::abs(quantum_log(1.0, with_h(0.001)) - std::log(1 + std::exp(1.0))) < 0.01);
  for (cd z : {cd(0.5, 0.3), cd(-1.2, 1.5), cd(2, -0.7)}) {
    auto p = with_h(0.8);
    CHECK(std::abs(std::conj(quantum_log(z, p)) - quantum_log(std::conj(z), p)) < 1e-6);
    CHECK(std::abs(quantum_log(z, p) - quantum_log(-z, p) - z) < 1e-6);
  }
}

TEST_CASE("quantum logarithm classical limit is monotone") {
  double prev = 1e9;
  for (double h : {0.1, 0.03, 0.01, 0.003}) {
    double sup = 0;
    for (int k = -4; k <= 4; ++k) {
      double z = 0.5 * k;
      sup = std::max(sup, std::abs(quantum_log(z, with_h(h)) - std::log1p(std::exp(z))));
    }
    CHECK(sup < prev);
    prev = sup;
  }
  CHECK(prev < 0.01);
}

TEST_CASE("quantum dilogarithm identities") {
  const cd i(0, 1);
  for (double h : {0.3, 0.7, 1.3})
    for (cd z : {cd(-2, 0), cd(-0.5, 0), cd(0, 0), cd(1, 0), cd(0.4, 0.6), cd(-1, -1.1)}) {
      auto p = with_h(h);
      cd lhs = quantum_dilog(z, p) * quantum_dilog(-z, p);
      cd rhs = std::exp(z * z / (4 * pi * i * h)) * std::exp(-(pi * i / 12.0) * (h + 1 / h));
      CHECK(std::abs(lhs - rhs) < 1e-6 * std::max(1.0, std::abs(rhs)));
      CHECK(std::abs(quantum_dilog(z, p) - quantum_dilog(z / h, with_h(1 / h))) <
            1e-6 * std::max(1.0, std::abs(quantum_dilog(z, p))));
      const double eta = 1e-4;
      cd dlog = (log_quantum_dilog(z + eta, p) - log_quantum_dilog(z - eta, p)) / (2 * eta);
      CHECK(std::abs(2 * pi * i * h * dlog - quantum_log(z, p)) < 1e-4);
    }
}

TEST_CASE("quantum evaluation domain") {
  auto expect = [](auto fn, ErrorKind k) {
    try {
      fn();
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == k);
    }
  };
  expect([] { quantum_log(cd(0, 4.0), with_h(0.2)); }, ErrorKind::DomainViolation);
  expect([] { quantum_dilog(0.5, with_h(0)); }, ErrorKind::DomainViolation);
  expect([] { quantum_log(1.0, with_h(-1)); }, ErrorKind::DomainViolation);
  QuantumEvalParams tight = with_h(1);
  tight.t_max = 2;
  expect([&] { quantum_log(1.0, tight); }, ErrorKind::NonConvergent);
  // close to the strip edge the decay is too slow for the default truncation
  expect([] { quantum_log(cd(0, 2 * pi - 1e-9), with_h(1)); }, ErrorKind::NonConvergent);
}
