#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "nhnet/error.hpp"

namespace nhnet {

using Cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;

inline constexpr Cplx kI{0.0, 1.0};

/// Default tolerances. Every routine that uses one accepts an override.
struct Tolerances {
  double solve = 1e-10;        // relative residual of linear solves
  double eig_residual = 1e-9;  // max ‖Av − λv‖ / (‖A‖‖v‖)
  double singular_rcond = 1e-14;
  double spectra_gap = 1e-10;  // Sylvester eigenvalue separation, relative to ‖A‖+‖B‖
};

/// Eigenpairs of a dense complex matrix. Column k of right_vectors pairs with values[k]
/// and has unit 2-norm. Values are sorted by real part, then imaginary part.
struct EigResult {
  std::vector<Cplx> values;
  CMatrix right_vectors;

  /// max_k ‖A v_k − λ_k v_k‖ / (‖A‖_F ‖v_k‖)
  [[nodiscard]] double max_relative_residual(const CMatrix& a) const;
};

/// Throws InvalidInput if any entry is NaN or Inf.
void require_finite(const CMatrix& m, const char* what);
void require_finite(const CVector& v, const char* what);

/// Solves A x = b by LU with partial pivoting.
/// Throws DimensionMismatch, SingularMatrix (reciprocal condition below rcond_floor).
CVector solve_linear(const CMatrix& a, const CVector& b, double rcond_floor = Tolerances{}.singular_rcond);
CMatrix solve_linear(const CMatrix& a, const CMatrix& b, double rcond_floor = Tolerances{}.singular_rcond);

/// Full non-Hermitian eigendecomposition (Hessenberg reduction + shifted complex QR).
/// Throws ConvergenceFailure when the QR iteration does not converge.
EigResult eig_dense(const CMatrix& a);

/// Eigenvalues only, same ordering as eig_dense.
std::vector<Cplx> eigvals_dense(const CMatrix& a);

/// Orders eigenvalues by real part, then imaginary part.
bool eigenvalue_less(const Cplx& lhs, const Cplx& rhs);

/// Solves A X − X B = C (Bartels–Stewart on complex Schur forms).
/// Throws SpectraOverlap when min |λ(A) − μ(B)| < gap_tol · (‖A‖ + ‖B‖).
CMatrix solve_sylvester(const CMatrix& a, const CMatrix& b, const CMatrix& c,
                        double gap_tol = Tolerances{}.spectra_gap);

/// Roots of c[0] + c[1] y + ... + c[d] y^d via companion-matrix eigenvalues,
/// polished by one Newton step each. Throws DegenerateLeadingCoefficient when c[d] == 0.
std::vector<Cplx> poly_roots(std::span<const Cplx> coeffs_ascending);

/// Horner evaluation, same coefficient order as poly_roots.
Cplx poly_eval(std::span<const Cplx> coeffs_ascending, Cplx y);

// Fixed-step RK4 propagation of i dc/dt = H c.

/// dt · ‖H‖_∞ must stay below this. RK4 is stable on the imaginary axis up to 2√2;
/// the row-sum norm bounds the spectral radius.
inline constexpr double kRk4StabilityBound = 2.5;
inline constexpr double kDefaultDt = 0.01;

struct Trajectory {
  std::vector<double> times;
  std::vector<CVector> states;
};

/// Number of steps taken for the grid 0, dt, 2dt, ... up to t_max.
std::size_t step_count(double t_max, double dt);

/// Calls observer(step_index, time, state) on every grid point, including t = 0.
/// Throws StepTooLarge, InvalidInput.
void propagate_observe(const CMatrix& h, const CVector& c0, double t_max, double dt,
                       const std::function<void(std::size_t, double, const CVector&)>& observer);

Trajectory propagate_linear(const CMatrix& h, const CVector& c0, double t_max, double dt = kDefaultDt);

}  // namespace nhnet
