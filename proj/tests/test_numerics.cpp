#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "nhnet/numerics.hpp"
#include "support.hpp"

using namespace nhnet;
using testing_support::random_complex;

namespace {

bool throws_kind(ErrorKind kind, const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("solve_linear recovers a known solution") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix a = random_complex(rng, 6, 6) + 4.0 * CMatrix::Identity(6, 6);
    const CVector x = random_complex(rng, 6, 1);
    const CVector got = solve_linear(a, CVector(a * x));
    CHECK((got - x).norm() < 1e-12 * x.norm());
  }
}

TEST_CASE("solve_linear rejects singular, mismatched and non-finite input") {
  CMatrix a = CMatrix::Zero(2, 2);
  a(0, 0) = 1.0;
  a(0, 1) = 2.0;
  a(1, 0) = 2.0;
  a(1, 1) = 4.0;
  CHECK(throws_kind(ErrorKind::SingularMatrix, [&] { (void)solve_linear(a, CVector(CVector::Ones(2))); }));
  CHECK(throws_kind(ErrorKind::DimensionMismatch, [&] { (void)solve_linear(a, CVector(CVector::Ones(3))); }));
  CMatrix bad = CMatrix::Identity(2, 2);
  bad(1, 0) = std::nan("");
  CHECK(throws_kind(ErrorKind::InvalidInput, [&] { (void)solve_linear(bad, CVector(CVector::Ones(2))); }));
}

TEST_CASE("eig_dense matches the 2x2 closed form") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const CMatrix a = random_complex(rng, 2, 2);
    const Cplx tr = a(0, 0) + a(1, 1);
    const Cplx det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    const Cplx disc = std::sqrt(tr * tr - 4.0 * det);
    std::array<Cplx, 2> expected{0.5 * (tr - disc), 0.5 * (tr + disc)};
    std::sort(expected.begin(), expected.end(), eigenvalue_less);
    const auto eig = eig_dense(a);
    REQUIRE(eig.values.size() == 2);
    CHECK(std::abs(eig.values[0] - expected[0]) < 1e-12);
    CHECK(std::abs(eig.values[1] - expected[1]) < 1e-12);
    CHECK(eig.max_relative_residual(a) < 1e-12);
  }
}

TEST_CASE("eigenpairs satisfy A v = lambda v and come out sorted") {
  std::mt19937_64 rng(5);
  const CMatrix a = random_complex(rng, 30, 30);
  const auto eig = eig_dense(a);
  CHECK(eig.max_relative_residual(a) < 1e-12);
  for (std::size_t k = 1; k < eig.values.size(); ++k) CHECK_FALSE(eigenvalue_less(eig.values[k], eig.values[k - 1]));
  for (Eigen::Index k = 0; k < a.cols(); ++k) CHECK(std::abs(eig.right_vectors.col(k).norm() - 1.0) < 1e-12);

  const auto vals = eigvals_dense(a);
  for (std::size_t k = 0; k < vals.size(); ++k) CHECK(std::abs(vals[k] - eig.values[k]) < 1e-10);
}

TEST_CASE("open chain eigenvalues follow the cosine ladder") {
  const int n = 40;
  CMatrix h = CMatrix::Zero(n, n);
  for (int k = 0; k + 1 < n; ++k) h(k, k + 1) = h(k + 1, k) = 1.0;
  const auto vals = eigvals_dense(h);
  for (int k = 0; k < n; ++k) {
    const double expected = 2.0 * std::cos(std::numbers::pi * (n - k) / (n + 1));
    CHECK(std::abs(vals[static_cast<std::size_t>(k)] - expected) < 1e-12);
  }
}

TEST_CASE("solve_sylvester: diagonal formula and Kronecker oracle") {
  SUBCASE("diagonal") {
    const CMatrix a = CVector{{Cplx{1.0, -1.0}, Cplx{2.0, -0.5}}}.asDiagonal();
    const CMatrix b = CVector{{Cplx{0.5, 0.0}, Cplx{-1.0, 0.0}, Cplx{3.0, 0.0}}}.asDiagonal();
    CMatrix c(2, 3);
    c << 1.0, 2.0, Cplx{0.0, 1.0}, -1.0, 0.5, 4.0;
    const CMatrix x = solve_sylvester(a, b, c);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 3; ++j) CHECK(std::abs(x(i, j) - c(i, j) / (a(i, i) - b(j, j))) < 1e-14);
    }
  }
  SUBCASE("random") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
      const CMatrix a = random_complex(rng, 4, 4) - Cplx{0.0, 3.0} * CMatrix::Identity(4, 4);
      const CMatrix b = random_complex(rng, 5, 5);
      const CMatrix c = random_complex(rng, 4, 5);
      const CMatrix x = solve_sylvester(a, b, c);
      const CMatrix oracle = testing_support::sylvester_kronecker(a, b, c);
      CHECK((x - oracle).norm() < 1e-10 * oracle.norm());
      CHECK((a * x - x * b - c).norm() < 1e-11 * c.norm());
    }
  }
}

TEST_CASE("solve_sylvester refuses overlapping spectra") {
  const CMatrix a = CMatrix::Identity(2, 2);
  const CMatrix b = CMatrix::Identity(3, 3);
  CHECK(throws_kind(ErrorKind::SpectraOverlap, [&] { (void)solve_sylvester(a, b, CMatrix::Ones(2, 3)); }));
  CHECK(throws_kind(ErrorKind::DimensionMismatch, [&] { (void)solve_sylvester(a, b, CMatrix::Ones(3, 3)); }));
}

TEST_CASE("poly_roots recovers roots of a product of linear factors") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const auto roots = random_complex(rng, 4, 1, 3.0);
    std::vector<Cplx> coeffs{1.0};
    for (Eigen::Index k = 0; k < roots.size(); ++k) {
      std::vector<Cplx> next(coeffs.size() + 1, 0.0);
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        next[j] -= roots(k) * coeffs[j];
        next[j + 1] += coeffs[j];
      }
      coeffs = next;
    }
    const auto found = poly_roots(coeffs);
    REQUIRE(found.size() == 4);
    for (Eigen::Index k = 0; k < roots.size(); ++k) {
      double best = 1e300;
      for (const auto& f : found) best = std::min(best, std::abs(f - roots(k)));
      CHECK(best < 1e-10);
    }
  }
}

TEST_CASE("poly_roots finds the real root of the y^3 + 5.6 y^2 - 4 y + 0.6 cubic by bisection oracle") {
  const std::vector<Cplx> c{0.6, -4.0, 5.6, 1.0};
  const auto f = [](double y) { return ((y + 5.6) * y - 4.0) * y + 0.6; };
  double lo = -10.0;
  double hi = -5.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(lo) * f(mid) <= 0.0 ? hi : lo) = mid;
  }
  const auto roots = poly_roots(c);
  double best = 1e300;
  for (const auto& r : roots) best = std::min(best, std::abs(r - lo));
  CHECK(best < 1e-12);
}

TEST_CASE("poly_roots refuses a vanishing leading coefficient") {
  const std::vector<Cplx> c{1.0, 2.0, 0.0};
  CHECK(throws_kind(ErrorKind::DegenerateLeadingCoefficient, [&] { (void)poly_roots(c); }));
}

TEST_CASE("RK4 follows the Rabi closed form") {
  const double omega = 0.7;
  CMatrix h = CMatrix::Zero(2, 2);
  h(0, 1) = h(1, 0) = omega;
  CVector c0 = CVector::Zero(2);
  c0(0) = 1.0;
  const auto traj = propagate_linear(h, c0, 10.0, 0.01);
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const double t = traj.times[k];
    CHECK(std::abs(std::norm(traj.states[k](0)) - std::pow(std::cos(omega * t), 2)) < 1e-8);
  }
}

TEST_CASE("RK4 is fourth order against the matrix exponential") {
  std::mt19937_64 rng(29);
  const CMatrix h = random_complex(rng, 5, 5, 0.5);
  const CVector c0 = random_complex(rng, 5, 1);
  const double t_end = 2.0;
  const CVector oracle = testing_support::exact_propagate(h, c0, t_end);
  const auto err = [&](double dt) { return (propagate_linear(h, c0, t_end, dt).states.back() - oracle).norm(); };
  const double e1 = err(0.04);
  const double e2 = err(0.02);
  const double e3 = err(0.01);
  CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.1));
  CHECK(e2 / e3 == doctest::Approx(16.0).epsilon(0.1));
}

TEST_CASE("Hermitian propagation conserves the norm") {
  std::mt19937_64 rng(31);
  const CMatrix h = testing_support::random_real_symmetric(rng, 12);
  CVector c0 = CVector::Zero(12);
  c0(3) = 1.0;
  const auto traj = propagate_linear(h, c0, 20.0, 0.005);
  for (const auto& s : traj.states) CHECK(std::abs(s.squaredNorm() - 1.0) < 1e-8);
}

TEST_CASE("propagation guards the step size and grid") {
  CMatrix h = CMatrix::Zero(2, 2);
  h(0, 1) = h(1, 0) = 100.0;
  CVector c0 = CVector::Zero(2);
  c0(0) = 1.0;
  CHECK(throws_kind(ErrorKind::StepTooLarge, [&] { (void)propagate_linear(h, c0, 1.0, 0.1); }));
  CHECK(throws_kind(ErrorKind::InvalidInput, [&] { (void)propagate_linear(h, c0, 1.0, -0.1); }));
  CHECK(step_count(1.0, 0.1) == 10);
  const auto traj = propagate_linear(CMatrix::Zero(2, 2), c0, 1.0, 0.25);
  CHECK(traj.times.size() == 5);
  CHECK(traj.times.back() == doctest::Approx(1.0));
}
