#include "nhnet/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace nhnet {
namespace {

std::string dims(const CMatrix& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols();
  return os.str();
}

void require_square(const CMatrix& a, const char* what) {
  if (a.rows() == 0 || a.rows() != a.cols()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " must be square and non-empty, got " + dims(a));
  }
}

double row_sum_norm(const CMatrix& a) {
  return a.rows() == 0 ? 0.0 : a.cwiseAbs().rowwise().sum().maxCoeff();
}

// Permutation sorting eigenvalues by (re, im); stable so exact ties keep solver order.
std::vector<Eigen::Index> sorted_order(const Eigen::VectorXcd& values) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index l, Eigen::Index r) { return eigenvalue_less(values[l], values[r]); });
  return order;
}

}  // namespace

bool eigenvalue_less(const Cplx& lhs, const Cplx& rhs) {
  if (lhs.real() != rhs.real()) return lhs.real() < rhs.real();
  return lhs.imag() < rhs.imag();
}

double EigResult::max_relative_residual(const CMatrix& a) const {
  const double norm_a = a.norm();
  double worst = 0.0;
  for (Eigen::Index k = 0; k < right_vectors.cols(); ++k) {
    const CVector v = right_vectors.col(k);
    const double denom = norm_a * v.norm();
    const double res = (a * v - values[static_cast<std::size_t>(k)] * v).norm();
    worst = std::max(worst, denom > 0.0 ? res / denom : res);
  }
  return worst;
}

void require_finite(const CMatrix& m, const char* what) {
  if (!m.allFinite()) throw Error(ErrorKind::InvalidInput, std::string(what) + " contains NaN or Inf");
}

void require_finite(const CVector& v, const char* what) {
  if (!v.allFinite()) throw Error(ErrorKind::InvalidInput, std::string(what) + " contains NaN or Inf");
}

CMatrix solve_linear(const CMatrix& a, const CMatrix& b, double rcond_floor) {
  require_square(a, "solve_linear: A");
  if (b.rows() != a.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "solve_linear: A is " + dims(a) + ", rhs is " + dims(b));
  }
  require_finite(a, "solve_linear: A");
  require_finite(b, "solve_linear: rhs");

  const Eigen::PartialPivLU<CMatrix> lu(a);
  const double rcond = lu.rcond();
  if (!(rcond >= rcond_floor)) {
    std::ostringstream os;
    os << "solve_linear: reciprocal condition estimate " << rcond << " below " << rcond_floor;
    throw Error(ErrorKind::SingularMatrix, os.str());
  }
  return lu.solve(b);
}

CVector solve_linear(const CMatrix& a, const CVector& b, double rcond_floor) {
  return solve_linear(a, CMatrix(b), rcond_floor).col(0);
}

EigResult eig_dense(const CMatrix& a) {
  require_square(a, "eig_dense: A");
  require_finite(a, "eig_dense: A");

  Eigen::ComplexEigenSolver<CMatrix> solver(a, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure,
                "eig_dense: QR iteration exceeded " + std::to_string(30 * a.rows()) + " sweeps");
  }
  const auto order = sorted_order(solver.eigenvalues());

  EigResult out;
  out.values.reserve(order.size());
  out.right_vectors.resize(a.rows(), a.cols());
  for (std::size_t k = 0; k < order.size(); ++k) {
    out.values.push_back(solver.eigenvalues()[order[k]]);
    CVector v = solver.eigenvectors().col(order[k]);
    const double n = v.norm();
    if (n > 0.0) v /= n;
    out.right_vectors.col(static_cast<Eigen::Index>(k)) = v;
  }
  return out;
}

std::vector<Cplx> eigvals_dense(const CMatrix& a) {
  require_square(a, "eigvals_dense: A");
  require_finite(a, "eigvals_dense: A");

  Eigen::ComplexEigenSolver<CMatrix> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure,
                "eigvals_dense: QR iteration exceeded " + std::to_string(30 * a.rows()) + " sweeps");
  }
  std::vector<Cplx> values(solver.eigenvalues().begin(), solver.eigenvalues().end());
  std::stable_sort(values.begin(), values.end(), eigenvalue_less);
  return values;
}

CMatrix solve_sylvester(const CMatrix& a, const CMatrix& b, const CMatrix& c, double gap_tol) {
  require_square(a, "solve_sylvester: A");
  require_square(b, "solve_sylvester: B");
  if (c.rows() != a.rows() || c.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch,
                "solve_sylvester: A " + dims(a) + ", B " + dims(b) + ", C " + dims(c));
  }
  require_finite(a, "solve_sylvester: A");
  require_finite(b, "solve_sylvester: B");
  require_finite(c, "solve_sylvester: C");

  const Eigen::ComplexSchur<CMatrix> schur_a(a);
  const Eigen::ComplexSchur<CMatrix> schur_b(b);
  if (schur_a.info() != Eigen::Success || schur_b.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "solve_sylvester: Schur decomposition failed");
  }
  const CMatrix& ta = schur_a.matrixT();
  const CMatrix& tb = schur_b.matrixT();

  double scale = a.norm() + b.norm();
  if (scale == 0.0) scale = 1.0;
  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < ta.rows(); ++i) {
    for (Eigen::Index j = 0; j < tb.rows(); ++j) gap = std::min(gap, std::abs(ta(i, i) - tb(j, j)));
  }
  if (gap < gap_tol * scale) {
    std::ostringstream os;
    os << "solve_sylvester: spectra of A and B are " << gap << " apart (threshold " << gap_tol * scale << ")";
    throw Error(ErrorKind::SpectraOverlap, os.str());
  }

  // T_A·Y − Y·T_B = F, solved column by column since T_B is upper triangular.
  const CMatrix f = schur_a.matrixU().adjoint() * c * schur_b.matrixU();
  CMatrix y(f.rows(), f.cols());
  const auto id = CMatrix::Identity(ta.rows(), ta.cols());
  for (Eigen::Index k = 0; k < f.cols(); ++k) {
    CVector rhs = f.col(k);
    for (Eigen::Index j = 0; j < k; ++j) rhs += tb(j, k) * y.col(j);
    const CMatrix shifted = ta - tb(k, k) * id;
    y.col(k) = shifted.triangularView<Eigen::Upper>().solve(rhs);
  }
  return schur_a.matrixU() * y * schur_b.matrixU().adjoint();
}

Cplx poly_eval(std::span<const Cplx> coeffs, Cplx y) {
  Cplx acc{0.0, 0.0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * y + *it;
  return acc;
}

std::vector<Cplx> poly_roots(std::span<const Cplx> coeffs) {
  if (coeffs.empty()) throw Error(ErrorKind::InvalidInput, "poly_roots: empty coefficient list");
  for (const auto& c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorKind::InvalidInput, "poly_roots: non-finite coefficient");
    }
  }
  const auto degree = static_cast<Eigen::Index>(coeffs.size()) - 1;
  const Cplx lead = coeffs.back();
  if (lead == Cplx{0.0, 0.0}) {
    throw Error(ErrorKind::DegenerateLeadingCoefficient, "poly_roots: leading coefficient is zero");
  }
  if (degree == 0) return {};

  CMatrix companion = CMatrix::Zero(degree, degree);
  for (Eigen::Index i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < degree; ++i) companion(i, degree - 1) = -coeffs[static_cast<std::size_t>(i)] / lead;

  std::vector<Cplx> roots = eigvals_dense(companion);

  std::vector<Cplx> deriv(coeffs.size() - 1);
  for (std::size_t k = 1; k < coeffs.size(); ++k) deriv[k - 1] = static_cast<double>(k) * coeffs[k];
  for (auto& r : roots) {
    const Cplx p = poly_eval(coeffs, r);
    const Cplx dp = poly_eval(deriv, r);
    if (std::abs(dp) == 0.0) continue;
    const Cplx polished = r - p / dp;
    if (std::abs(poly_eval(coeffs, polished)) < std::abs(p)) r = polished;
  }
  std::stable_sort(roots.begin(), roots.end(), eigenvalue_less);
  return roots;
}

std::size_t step_count(double t_max, double dt) {
  return static_cast<std::size_t>(std::ceil(t_max / dt - 1e-9));
}

void propagate_observe(const CMatrix& h, const CVector& c0, double t_max, double dt,
                       const std::function<void(std::size_t, double, const CVector&)>& observer) {
  require_square(h, "propagate: H");
  if (c0.size() != h.rows()) {
    throw Error(ErrorKind::DimensionMismatch,
                "propagate: H is " + dims(h) + ", initial state has " + std::to_string(c0.size()) + " entries");
  }
  require_finite(h, "propagate: H");
  require_finite(c0, "propagate: initial state");
  if (!(t_max > 0.0) || !(dt > 0.0) || !std::isfinite(t_max)) {
    throw Error(ErrorKind::InvalidInput, "propagate: t_max and dt must be positive and finite");
  }
  const double stiffness = dt * row_sum_norm(h);
  if (stiffness > kRk4StabilityBound) {
    std::ostringstream os;
    os << "propagate: dt*|H|_inf = " << stiffness << " exceeds " << kRk4StabilityBound;
    throw Error(ErrorKind::StepTooLarge, os.str());
  }

  const CMatrix gen = -kI * h;
  const std::size_t steps = step_count(t_max, dt);
  CVector c = c0;
  CVector k1(c.size()), k2(c.size()), k3(c.size()), k4(c.size()), tmp(c.size());
  observer(0, 0.0, c);
  for (std::size_t s = 1; s <= steps; ++s) {
    k1.noalias() = gen * c;
    tmp = c + (0.5 * dt) * k1;
    k2.noalias() = gen * tmp;
    tmp = c + (0.5 * dt) * k2;
    k3.noalias() = gen * tmp;
    tmp = c + dt * k3;
    k4.noalias() = gen * tmp;
    c += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    observer(s, static_cast<double>(s) * dt, c);
  }
}

Trajectory propagate_linear(const CMatrix& h, const CVector& c0, double t_max, double dt) {
  Trajectory traj;
  const std::size_t steps = dt > 0.0 && t_max > 0.0 ? step_count(t_max, dt) : 0;
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  propagate_observe(h, c0, t_max, dt, [&](std::size_t, double t, const CVector& c) {
    traj.times.push_back(t);
    traj.states.push_back(c);
  });
  return traj;
}

}  // namespace nhnet
