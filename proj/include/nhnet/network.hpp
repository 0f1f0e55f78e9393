#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nhnet/numerics.hpp"

namespace nhnet {

/// A main network S side-coupled to an auxiliary cluster A.
///
/// h_s is N×N, h_a is M×M, rho is M×N with rho(α, n) the coupling from S site n to A site α.
/// The S→A coupling block is rho and the A→S block is its transpose; no separate ρ̃ is stored.
/// Physical couplings are real and symmetric; only diagonal (on-site) entries may be complex.
///
/// site_offset is the storage row of physical site 0, so signed lattices (n = −L..L) map
/// to rows n + site_offset.
struct PartitionedHamiltonian {
  CMatrix h_s;
  CMatrix h_a;
  CMatrix rho;
  Eigen::Index site_offset = 0;

  [[nodiscard]] Eigen::Index n_sys() const { return h_s.rows(); }
  [[nodiscard]] Eigen::Index m_aux() const { return h_a.rows(); }
  [[nodiscard]] Eigen::Index row_of(Eigen::Index site) const { return site + site_offset; }
};

struct Violation {
  enum class Kind { Shape, NonFinite, Asymmetric, ComplexHopping, ComplexCoupling };
  Kind kind;
  std::string block;  // "h_s", "h_a" or "rho"
  Eigen::Index row;
  Eigen::Index col;

  [[nodiscard]] std::string describe() const;
};

struct ValidationReport {
  std::vector<Violation> violations;
  [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Checks the no-gauge-field constraints: real symmetric off-diagonal blocks and a real rho.
ValidationReport validate(const PartitionedHamiltonian& p, double tol = 1e-14);

/// (N+M)×(N+M) block matrix [[H_S, ρᵀ], [ρ, H_A]].
CMatrix assemble_composite(const PartitionedHamiltonian& p);

// ---------------------------------------------------------------------------
// Scenario lattices

/// Straight chain with a weakened bond θ between sites 0 and 1, potential σ on both,
/// and one auxiliary site of potential U tied to sites 0 and 1 by ω.
/// The S chain has 2·n_trunc sites, n = −(n_trunc−1) .. n_trunc.
struct DefectChainParams {
  double kappa = 1.0;
  double theta = 0.2;
  double sigma = -0.8;
  double omega = 2.0;
  Cplx u_aux{-5.0, 0.0};
  int n_trunc = 200;

  /// Invisibility tuning σ = θ − κ, ω² = U(θ − κ). Requires real U with U(θ − κ) ≥ 0.
  static DefectChainParams invisible(double theta, double u, double kappa = 1.0, int n_trunc = 200);
};

PartitionedHamiltonian build_defect_chain(const DefectChainParams& p);

/// Semi-infinite chain (sites 1..n_trunc, hopping κ) attached to a level σ at site 0
/// through the imaginary coupling g = −iG.
struct LeeParams {
  double kappa = 1.0;
  double sigma = 3.0;
  double g_imag = 1.05;
  double theta = 0.2;
  double omega = 7.0;
  int n_trunc = 300;
};

CMatrix build_lee_exact(const LeeParams& p);

enum class LeeReference { Physical, Ghost };  // E₁ or E₂

/// Hermitian-coupling realisation of the Lee chain: bond θ between sites 0 and 1,
/// potentials σ₁ = σ + θ + iG and σ₂ = θ + iG, auxiliary potential U = ω²/(θ + iG) + e_ref.
/// Throws DegenerateBond when |θ + iG| is below tolerance.
PartitionedHamiltonian build_lee_synth(const LeeParams& p, Cplx e_ref);
PartitionedHamiltonian build_lee_synth(const LeeParams& p, LeeReference ref = LeeReference::Ghost);

/// PT-symmetric lattice n = −L..L (n_sites = 2L+1 odd) with hoppings κ_n on every bond
/// (n−1, n) except those touching site 0, plus two auxiliary sites with potentials ∓iU
/// coupled by ω to sites {−1, 0} and {0, +1}.
struct PtBicParams {
  double kappa = 1.0;
  double omega = 1.0;
  double u_aux = 0.4;
  int n_sites = 401;

  [[nodiscard]] int half_width() const { return n_sites / 2; }
  [[nodiscard]] double g() const { return omega * omega / u_aux; }

  /// Size counted over the whole lattice, auxiliary sites included.
  static PtBicParams with_total_sites(int total_sites, double omega = 1.0, double u_aux = 0.4,
                                      double kappa = 1.0);
};

/// Bond amplitude κ_n between sites n−1 and n. Defined for n ∉ {0, 1}.
double pt_bic_hopping(int n, double kappa = 1.0);

PartitionedHamiltonian build_pt_bic(const PtBicParams& p);

// ---------------------------------------------------------------------------
// JSON network documents (schema_version 1):
//   { "schema_version": 1, "n_sys": N, "m_aux": M, "site_offset": k,
//     "h_s": [[i, j, re, im], ...], "h_a": [[α, β, re, im], ...], "rho": [[α, n, re, im], ...] }
// Triplets list nonzero entries only; absent entries are zero.

inline constexpr int kNetworkSchemaVersion = 1;

nlohmann::json to_json(const PartitionedHamiltonian& p);
/// Throws InvalidConfig on schema errors.
PartitionedHamiltonian network_from_json(const nlohmann::json& doc);

}  // namespace nhnet
