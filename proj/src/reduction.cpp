#include "nhnet/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/SVD>

namespace nhnet {
namespace {

void require_blocks(const PartitionedHamiltonian& p) {
  if (p.h_s.rows() != p.h_s.cols() || p.h_a.rows() != p.h_a.cols() || p.rho.rows() != p.h_a.rows() ||
      p.rho.cols() != p.h_s.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "reduction: inconsistent block sizes");
  }
}

}  // namespace

CMatrix effective_hamiltonian(const PartitionedHamiltonian& p, Cplx energy, double resonance_tol) {
  require_blocks(p);
  if (p.m_aux() == 0) return p.h_s;

  const auto aux_spectrum = eigvals_dense(p.h_a);
  const double scale = std::max(1.0, p.h_a.norm());
  for (const auto& lambda : aux_spectrum) {
    if (std::abs(energy - lambda) < resonance_tol * scale) {
      std::ostringstream os;
      os << "E = " << energy << " is within " << resonance_tol * scale << " of auxiliary eigenvalue " << lambda;
      throw Error(ErrorKind::ResonantEnergy, os.str());
    }
  }
  const CMatrix resolvent_rho =
      solve_linear(CMatrix(energy * CMatrix::Identity(p.m_aux(), p.m_aux()) - p.h_a), p.rho);
  return p.h_s + p.rho.transpose() * resolvent_rho;
}

CVector auxiliary_amplitudes(const PartitionedHamiltonian& p, Cplx energy, const CVector& c_sys) {
  require_blocks(p);
  if (c_sys.size() != p.n_sys()) throw Error(ErrorKind::DimensionMismatch, "auxiliary_amplitudes: wrong S length");
  if (p.m_aux() == 0) return CVector(0);
  return solve_linear(CMatrix(energy * CMatrix::Identity(p.m_aux(), p.m_aux()) - p.h_a), CVector(p.rho * c_sys));
}

CMatrix large_potential_effective(const PartitionedHamiltonian& p) {
  require_blocks(p);
  if (p.m_aux() == 0) return p.h_s;
  try {
    return p.h_s - p.rho.transpose() * solve_linear(p.h_a, p.rho);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SingularMatrix) throw Error(ErrorKind::SingularAuxiliary, e.what());
    throw;
  }
}

Cplx synthesize_bond(Cplx target, double existing, double rho_product) {
  if (rho_product == 0.0) throw Error(ErrorKind::InvalidInput, "synthesize_bond: rho_product must be nonzero");
  const Cplx shift = Cplx{existing, 0.0} - target;
  if (std::abs(shift) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(target))) {
    throw Error(ErrorKind::NoSynthesisNeeded, "synthesize_bond: target equals the existing hopping");
  }
  return rho_product / shift;
}

CMatrix weak_coupling_phi(const PartitionedHamiltonian& p, double dissipation_tol) {
  require_blocks(p);
  if (p.m_aux() == 0) return CMatrix::Zero(p.n_sys(), p.n_sys());

  const double hs_scale = std::max(1.0, p.h_s.norm());
  if ((p.h_s - p.h_s.adjoint()).norm() > 1e-12 * hs_scale) {
    throw Error(ErrorKind::InvalidInput, "weak_coupling_phi: H_S must be Hermitian");
  }
  for (const auto& lambda : eigvals_dense(p.h_a)) {
    if (lambda.imag() >= -dissipation_tol) {
      std::ostringstream os;
      os << "weak_coupling_phi: auxiliary eigenvalue " << lambda << " is not strictly dissipative";
      throw Error(ErrorKind::NonDissipativeAuxiliary, os.str());
    }
  }
  const CMatrix x = solve_sylvester(p.h_a, p.h_s, CMatrix(-kI * p.rho));
  return -kI * (p.rho.transpose() * x);
}

CMatrix markov_effective(const PartitionedHamiltonian& p) {
  return p.h_s + weak_coupling_phi(p);
}

double weak_coupling_ratio(const PartitionedHamiltonian& p) {
  require_blocks(p);
  if (p.m_aux() == 0) return 0.0;
  double min_decay = std::numeric_limits<double>::infinity();
  for (const auto& lambda : eigvals_dense(p.h_a)) min_decay = std::min(min_decay, std::abs(lambda.imag()));
  const double rho_norm = Eigen::JacobiSVD<CMatrix>(p.rho).singularValues()(0);
  return min_decay > 0.0 ? rho_norm / min_decay : std::numeric_limits<double>::infinity();
}

EffectiveOperator EffectiveOperator::exact(PartitionedHamiltonian base, Cplx energy) {
  return EffectiveOperator(std::move(base), Kind::Exact, energy);
}

EffectiveOperator EffectiveOperator::large_potential(PartitionedHamiltonian base) {
  return EffectiveOperator(std::move(base), Kind::LargePotential, Cplx{});
}

EffectiveOperator EffectiveOperator::markov(PartitionedHamiltonian base) {
  return EffectiveOperator(std::move(base), Kind::Markov, Cplx{});
}

CMatrix EffectiveOperator::evaluate() const { return evaluate_at(energy_); }

CMatrix EffectiveOperator::evaluate_at(Cplx energy) const {
  switch (kind_) {
    case Kind::Exact: return effective_hamiltonian(base_, energy);
    case Kind::LargePotential: return large_potential_effective(base_);
    case Kind::Markov: return markov_effective(base_);
  }
  return base_.h_s;
}

}  // namespace nhnet
