#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "nhnet/network.hpp"
#include "nhnet/numerics.hpp"

namespace nhnet {

/// Plane-wave scattering state on a lattice with homogeneous leads of hopping κ:
///   c_n = e^{−iqn} + r e^{iqn}  (left lead),   c_n = t e^{−iqn}  (right lead),
/// with E = 2κ cos q.
struct ScatteringPoint {
  double q = 0.0;
  double energy = 0.0;
  Cplx t;
  Cplx r;

  [[nodiscard]] double transmittance() const { return std::norm(t); }
  [[nodiscard]] double reflectance() const { return std::norm(r); }
};

/// Closed-form t and r for the side-coupled defect chain, from the renormalised bond
/// θ' = θ + ω²/(E−U) and potential σ' = σ + ω²/(E−U).
/// Requires 0 < q < π. Throws ResonantEnergy when E hits U, SingularScatteringSystem at a pole.
ScatteringPoint defect_transmission(const DefectChainParams& params, double q);

/// A finite window of a lattice whose first and last sites already belong to the leads.
/// hamiltonian(E) returns the window's (possibly energy-dependent) matrix; row k is
/// physical site first_site + k. first_site ≤ 0 < first_site + size − 1 is required so the
/// amplitudes share the phase convention of ScatteringPoint.
struct ScatteringWindow {
  std::function<CMatrix(Cplx)> hamiltonian;
  int first_site = 0;
  double lead_hopping = 1.0;
};

/// Window given by exactly reducing a truncated network onto its S sites.
ScatteringWindow window_from_network(PartitionedHamiltonian net, double lead_hopping);

/// Solves the window's site equations together with the lead ansatz for (r, t).
/// Throws SingularScatteringSystem.
ScatteringPoint scattering_numeric(const ScatteringWindow& window, double q);

/// Pole of the defect transmission outside the unit circle (a bound state), y = e^{iq}.
struct BoundStatePole {
  Cplx y;
  Cplx energy;        // κ (y + 1/y)
  double residual;    // |cubic(y)|
};

/// Coefficients (ascending) of y³ + (1 − U/κ − 2θ/κ) y² + (1 + U/κ) y + 1 − 2θ/κ,
/// valid under invisibility tuning.
std::vector<Cplx> bound_state_cubic(double u, double theta, double kappa = 1.0);

/// Roots with |y| > 1 + 1e−9, sorted by energy.
std::vector<BoundStatePole> bound_state_poles(double u, double theta, double kappa = 1.0);

/// Bound-state energies (E₁ physical, E₂ ghost) of the imaginary-coupling Lee chain,
/// principal branch of the square root. Both are real when (σ/2κ)² ≥ (G/κ)² + 1.
std::pair<Cplx, Cplx> lee_bound_energies(double sigma, double g_imag, double kappa = 1.0);

struct LeePhaseBoundaries {
  double g_curve1;  // κ √(σ/κ − 2): below it, one bound state
  double g_curve2;  // κ √((σ/2κ)² − 1): above it, broken PT
};

/// Throws DomainError for σ/κ < 2.
LeePhaseBoundaries lee_phase_boundaries(double sigma, double kappa = 1.0);

enum class LeeRegion { OneBoundState, TwoBoundStates, BrokenPT };

LeeRegion classify_lee(double sigma, double g_imag, double kappa = 1.0);

}  // namespace nhnet
