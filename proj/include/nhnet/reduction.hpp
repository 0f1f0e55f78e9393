#pragma once

#include "nhnet/network.hpp"
#include "nhnet/numerics.hpp"

namespace nhnet {

/// Relative distance |E − λ(H_A)| / max(1, ‖H_A‖) below which ResonantEnergy is raised.
inline constexpr double kResonanceTol = 1e-8;

/// H_S + ρᵀ (E − H_A)⁻¹ ρ, the exact energy-dependent reduction onto S.
/// Complex-symmetric whenever p satisfies validate(). Throws ResonantEnergy.
CMatrix effective_hamiltonian(const PartitionedHamiltonian& p, Cplx energy, double resonance_tol = kResonanceTol);

/// Auxiliary amplitudes a = (E − H_A)⁻¹ ρ c belonging to S amplitudes c at energy E.
CVector auxiliary_amplitudes(const PartitionedHamiltonian& p, Cplx energy, const CVector& c_sys);

/// H_S − ρᵀ H_A⁻¹ ρ: the |H_A| ≫ |E| limit. Throws SingularAuxiliary.
CMatrix large_potential_effective(const PartitionedHamiltonian& p);

/// Auxiliary potential U that turns an existing real hopping into `target` when one
/// auxiliary site couples to both bond ends with coupling product `rho_product`:
/// target = existing − rho_product / U.
/// Throws NoSynthesisNeeded when target == existing, InvalidInput when rho_product == 0.
Cplx synthesize_bond(Cplx target, double existing, double rho_product);

/// Φ = −i ∫₀^∞ ρᵀ e^{−i H_A τ} ρ e^{i H_S τ} dτ, computed as Φ = −i ρᵀ X with
/// H_A X − X H_S = −i ρ. Needs Hermitian H_S and strictly dissipative H_A.
/// Throws NonDissipativeAuxiliary, InvalidInput (non-Hermitian H_S), SpectraOverlap.
CMatrix weak_coupling_phi(const PartitionedHamiltonian& p, double dissipation_tol = 1e-12);

/// H_S + Φ, the Markovian weak-coupling Hamiltonian.
CMatrix markov_effective(const PartitionedHamiltonian& p);

/// ‖ρ‖₂ / min_α |Im λ_α(H_A)|: how weak the coupling is relative to the auxiliary decay.
/// Reported only; the Markov reduction does not enforce a bound.
double weak_coupling_ratio(const PartitionedHamiltonian& p);

/// A network together with the rule used to eliminate its auxiliary cluster.
///
/// Exact reductions depend on the energy at which they are taken, so solving the implicit
/// eigenproblem E c = H_eff(E) c self-consistently means re-evaluating at updated energies;
/// no fixed-point driver is provided here, callers iterate evaluate_at() themselves.
class EffectiveOperator {
 public:
  enum class Kind { Exact, LargePotential, Markov };

  static EffectiveOperator exact(PartitionedHamiltonian base, Cplx energy);
  static EffectiveOperator large_potential(PartitionedHamiltonian base);
  static EffectiveOperator markov(PartitionedHamiltonian base);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] Cplx energy() const { return energy_; }
  [[nodiscard]] const PartitionedHamiltonian& base() const { return base_; }

  [[nodiscard]] CMatrix evaluate() const;
  /// Exact kind: reduce at `energy`. Other kinds ignore the argument.
  [[nodiscard]] CMatrix evaluate_at(Cplx energy) const;

 private:
  EffectiveOperator(PartitionedHamiltonian base, Kind kind, Cplx energy)
      : base_(std::move(base)), kind_(kind), energy_(energy) {}

  PartitionedHamiltonian base_;
  Kind kind_;
  Cplx energy_;
};

}  // namespace nhnet
