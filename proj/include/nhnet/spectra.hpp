#pragma once

#include <functional>
#include <vector>

#include "nhnet/network.hpp"
#include "nhnet/numerics.hpp"

namespace nhnet {

/// (Σ|c|²)² / Σ|c|⁴. Equals 1 for a single-site state and N for a uniform one.
/// Throws ZeroVector.
double participation_ratio(const CVector& v);

struct SpectrumReport {
  std::vector<Cplx> energies;          // sorted by real part, then imaginary part
  std::vector<double> participation;   // aligned with energies
  CMatrix modes;                       // unit-norm right eigenvectors, column k ↔ energies[k]
  double max_abs_imag = 0.0;
  Eigen::Index n_sites = 0;

  /// Indices of states with |Re E| > band_edge.
  [[nodiscard]] std::vector<std::size_t> outside_band(double band_edge) const;
  /// Index of the state closest to `energy`.
  [[nodiscard]] std::size_t nearest(Cplx energy) const;
};

SpectrumReport spectrum(const CMatrix& h);

/// max |Im λ| without computing eigenvectors.
double max_abs_imag(const CMatrix& h);

/// max over λ of the distance from λ* to the nearest element of the multiset.
double conjugation_defect(const std::vector<Cplx>& values);

/// BIC of the complex-hopping PT lattice at E = 0, sites −n_half..n_half:
/// c_n = 0 for odd n, c_0 = κ/g, c_n = sgn(n) i^{n+1} / √(n² − 1) for even n ≠ 0.
CVector bic_state(double g, int n_half, double kappa = 1.0);

/// bic_state with g = ω²/U on the S sites, followed by the auxiliary amplitudes
/// a = (0 − H_A)⁻¹ ρ c. Ordered like assemble_composite(build_pt_bic(p)).
CVector embed_bic_composite(const PtBicParams& p);

/// Residual of the embedded BIC against the assembled composite, all normalised by ‖ψ‖.
struct BicResidual {
  double interior = 0.0;    // every row except the two outermost S sites
  double boundary = 0.0;    // the two outermost S rows
  double tail_bound = 0.0;  // analytic value of the truncation term on those rows
};

BicResidual verify_bic(const PtBicParams& p);

/// |v|² weight on odd physical sites over total |v|² (auxiliary rows count toward the total only).
double odd_site_mass(const CVector& v, Eigen::Index n_sys, Eigen::Index site_offset);

/// Rotates v so its largest-magnitude component is real and positive.
CVector align_phase(const CVector& v);

/// |⟨u, v⟩| / (‖u‖ ‖v‖).
double overlap(const CVector& u, const CVector& v);

/// Bisection for the smallest U (to `resolution`) at which max |Im λ(builder(U))| > eps_imag.
/// Throws NoBracket unless u_lo is PT-unbroken and u_hi broken.
double pt_threshold_scan(const std::function<CMatrix(double)>& builder, double u_lo, double u_hi,
                         double eps_imag = 1e-6, double resolution = 1e-3);

}  // namespace nhnet
