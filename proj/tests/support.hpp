#pragma once

// Independent reference computations used by the tests. Nothing here calls the
// library's solvers, so agreement is a genuine cross-check.

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "nhnet/network.hpp"

namespace testing_support {

using nhnet::CMatrix;
using nhnet::Cplx;
using nhnet::CVector;

inline CMatrix random_real_symmetric(std::mt19937_64& rng, Eigen::Index n, double scale = 1.0) {
  std::uniform_real_distribution<double> d(-scale, scale);
  CMatrix m = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) m(i, j) = m(j, i) = d(rng);
  }
  return m;
}

inline CMatrix random_complex(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols, double scale = 1.0) {
  std::uniform_real_distribution<double> d(-scale, scale);
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Cplx{d(rng), d(rng)};
  }
  return m;
}

/// A network whose auxiliary cluster is real-symmetric minus i·diag(γ), γ in [gmin, gmax].
/// Every eigenvalue of such an H_A has Im λ ≤ −gmin.
inline nhnet::PartitionedHamiltonian random_dissipative(std::mt19937_64& rng, Eigen::Index n, Eigen::Index m,
                                                        double coupling, double gmin = 0.5, double gmax = 2.0) {
  std::uniform_real_distribution<double> gamma(gmin, gmax);
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  nhnet::PartitionedHamiltonian p;
  p.h_s = random_real_symmetric(rng, n);
  p.h_a = random_real_symmetric(rng, m);
  for (Eigen::Index a = 0; a < m; ++a) p.h_a(a, a) -= Cplx{0.0, gamma(rng)};
  p.rho = CMatrix::Zero(m, n);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index k = 0; k < n; ++k) p.rho(a, k) = coupling * c(rng);
  }
  return p;
}

/// Gauss–Legendre nodes and weights on [−1, 1] by the Golub–Welsch eigenproblem.
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

inline GaussRule gauss_legendre(int order) {
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k - 1, k) = jacobi(k, k - 1) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  GaussRule rule;
  for (int k = 0; k < order; ++k) {
    rule.x.push_back(es.eigenvalues()(k));
    rule.w.push_back(2.0 * es.eigenvectors()(0, k) * es.eigenvectors()(0, k));
  }
  return rule;
}

/// Φ = −i ∫₀^∞ ρᵀ e^{−i H_A τ} ρ e^{i H_S τ} dτ by composite Gauss–Legendre on [0, T]
/// with matrix exponentials, T chosen so the neglected tail is below e^{−45}.
inline CMatrix phi_quadrature(const nhnet::PartitionedHamiltonian& p) {
  const CMatrix& ha = p.h_a;
  const CMatrix& hs = p.h_s;
  Eigen::ComplexEigenSolver<CMatrix> es(ha, false);
  double decay = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < ha.rows(); ++k) decay = std::min(decay, -es.eigenvalues()(k).imag());
  const double t_end = 45.0 / decay;
  const double scale = ha.cwiseAbs().rowwise().sum().maxCoeff() + hs.cwiseAbs().rowwise().sum().maxCoeff();
  const double panel = 0.5 / std::max(1.0, scale);
  const int panels = static_cast<int>(std::ceil(t_end / panel));
  const double h = t_end / panels;
  const auto rule = gauss_legendre(12);

  const CMatrix rho_t = p.rho.transpose();
  CMatrix acc = CMatrix::Zero(hs.rows(), hs.cols());
  for (int k = 0; k < panels; ++k) {
    for (std::size_t j = 0; j < rule.x.size(); ++j) {
      const double tau = h * (k + 0.5 * (rule.x[j] + 1.0));
      const CMatrix ea = (Cplx{0.0, -tau} * ha).exp();
      const CMatrix es_ = (Cplx{0.0, tau} * hs).exp();
      acc += (0.5 * h * rule.w[j]) * (rho_t * ea * p.rho * es_);
    }
  }
  return Cplx{0.0, -1.0} * acc;
}

/// c(t) = e^{−iHt} c(0).
inline CVector exact_propagate(const CMatrix& h, const CVector& c0, double t) {
  return (Cplx{0.0, -t} * h).exp() * c0;
}

/// Solves A X − X B = C through the Kronecker form (I ⊗ A − Bᵀ ⊗ I) vec X = vec C.
inline CMatrix sylvester_kronecker(const CMatrix& a, const CMatrix& b, const CMatrix& c) {
  const CMatrix ia = CMatrix::Identity(b.rows(), b.rows());
  const CMatrix ib = CMatrix::Identity(a.rows(), a.rows());
  const CMatrix k = Eigen::kroneckerProduct(ia, a).eval() - Eigen::kroneckerProduct(b.transpose(), ib).eval();
  const CVector vec_c = Eigen::Map<const CVector>(c.data(), c.size());
  const CVector vec_x = k.fullPivLu().solve(vec_c);
  return Eigen::Map<const CMatrix>(vec_x.data(), c.rows(), c.cols());
}

}  // namespace testing_support
