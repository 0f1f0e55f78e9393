#include "nhnet/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nhnet/reduction.hpp"

namespace nhnet {
namespace {

void require_open_q(double q) {
  if (!(q > 0.0 && q < std::numbers::pi)) {
    throw Error(ErrorKind::DomainError, "scattering: q must lie strictly inside (0, π)");
  }
}

}  // namespace

ScatteringPoint defect_transmission(const DefectChainParams& p, double q) {
  require_open_q(q);
  const double kappa = p.kappa;
  const double energy = 2.0 * kappa * std::cos(q);
  const Cplx detuning = energy - p.u_aux;
  if (std::abs(detuning) < kResonanceTol * std::max(1.0, std::abs(p.u_aux))) {
    throw Error(ErrorKind::ResonantEnergy, "defect_transmission: E coincides with the auxiliary potential");
  }

  const Cplx y = std::polar(1.0, q);
  const double w2 = p.omega * p.omega;
  const Cplx numer = 2.0 * kI * kappa * (p.theta * detuning + w2) * std::sin(q) * y;
  const Cplx denom = (kappa * y - p.sigma + p.theta) * (detuning * (kappa * y - p.sigma - p.theta) - 2.0 * w2);
  if (std::abs(denom) == 0.0) throw Error(ErrorKind::SingularScatteringSystem, "defect_transmission: pole on the real q axis");

  const Cplx shift = w2 / detuning;
  const Cplx theta_eff = p.theta + shift;
  const Cplx sigma_eff = p.sigma + shift;
  const Cplx t = numer / denom;
  const Cplx y_inv = std::conj(y);
  const Cplx r_denom = kappa * y - sigma_eff;
  if (std::abs(r_denom) == 0.0) throw Error(ErrorKind::SingularScatteringSystem, "defect_transmission: κe^{iq} = σ'");
  const Cplx r = (theta_eff * t * y_inv + sigma_eff - kappa * y_inv) / r_denom;
  return {q, energy, t, r};
}

ScatteringWindow window_from_network(PartitionedHamiltonian net, double lead_hopping) {
  ScatteringWindow w;
  w.first_site = static_cast<int>(-net.site_offset);
  w.lead_hopping = lead_hopping;
  w.hamiltonian = [net = std::move(net)](Cplx e) { return effective_hamiltonian(net, e); };
  return w;
}

ScatteringPoint scattering_numeric(const ScatteringWindow& window, double q) {
  require_open_q(q);
  const double kappa = window.lead_hopping;
  const double energy = 2.0 * kappa * std::cos(q);
  const CMatrix h = window.hamiltonian(Cplx{energy, 0.0});
  const Eigen::Index n = h.rows();
  const int x0 = window.first_site;
  const int xl = x0 + static_cast<int>(n) - 1;
  if (h.cols() != n || n < 2 || x0 > 0 || xl < 1) {
    throw Error(ErrorKind::DimensionMismatch, "scattering_numeric: window must be square and straddle the bond (0, 1)");
  }

  const auto wave = [q](double x, double sign) { return std::polar(1.0, sign * q * x); };
  const Eigen::Index ir = n;
  const Eigen::Index it = n + 1;

  CMatrix a = CMatrix::Zero(n + 2, n + 2);
  CVector b = CVector::Zero(n + 2);
  a.topLeftCorner(n, n) = energy * CMatrix::Identity(n, n) - h;
  // Left neighbour outside the window: c = e^{−iq x} + r e^{iq x}.
  a(0, ir) = -kappa * wave(x0 - 1, +1.0);
  b(0) = kappa * wave(x0 - 1, -1.0);
  // Right neighbour outside the window: c = t e^{−iq x}.
  a(n - 1, it) = -kappa * wave(xl + 1, -1.0);
  // The window's end sites are lead sites and follow the same ansatz.
  a(n, 0) = 1.0;
  a(n, ir) = -wave(x0, +1.0);
  b(n) = wave(x0, -1.0);
  a(n + 1, n - 1) = 1.0;
  a(n + 1, it) = -wave(xl, -1.0);

  CVector sol;
  try {
    sol = solve_linear(a, b);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SingularMatrix) throw Error(ErrorKind::SingularScatteringSystem, e.what());
    throw;
  }
  return {q, energy, sol(it), sol(ir)};
}

std::vector<Cplx> bound_state_cubic(double u, double theta, double kappa) {
  const double us = u / kappa;
  const double ts = theta / kappa;
  return {Cplx{1.0 - 2.0 * ts}, Cplx{1.0 + us}, Cplx{1.0 - us - 2.0 * ts}, Cplx{1.0}};
}

std::vector<BoundStatePole> bound_state_poles(double u, double theta, double kappa) {
  constexpr double kOutsideUnitCircle = 1.0 + 1e-9;
  const auto cubic = bound_state_cubic(u, theta, kappa);
  std::vector<BoundStatePole> poles;
  for (const auto& y : poly_roots(cubic)) {
    if (std::abs(y) > kOutsideUnitCircle) {
      poles.push_back({y, kappa * (y + 1.0 / y), std::abs(poly_eval(cubic, y))});
    }
  }
  std::sort(poles.begin(), poles.end(),
            [](const BoundStatePole& l, const BoundStatePole& r) { return eigenvalue_less(l.energy, r.energy); });
  return poles;
}

std::pair<Cplx, Cplx> lee_bound_energies(double sigma, double g_imag, double kappa) {
  const double half = 0.5 * sigma / kappa;
  const double g2 = (g_imag / kappa) * (g_imag / kappa);
  const Cplx root = std::sqrt(Cplx{half * half - g2 - 1.0, 0.0});
  const auto energy = [&](Cplx a) { return kappa * (a * a + (1.0 + g2) * (1.0 + g2)) / ((1.0 + g2) * a); };
  return {energy(half + root), energy(half - root)};
}

LeePhaseBoundaries lee_phase_boundaries(double sigma, double kappa) {
  const double s = sigma / kappa;
  if (!(s >= 2.0)) {
    std::ostringstream os;
    os << "lee_phase_boundaries: σ/κ = " << s << " < 2 leaves the curves undefined";
    throw Error(ErrorKind::DomainError, os.str());
  }
  return {kappa * std::sqrt(s - 2.0), kappa * std::sqrt(0.25 * s * s - 1.0)};
}

LeeRegion classify_lee(double sigma, double g_imag, double kappa) {
  const auto curves = lee_phase_boundaries(sigma, kappa);
  if (g_imag > curves.g_curve2) return LeeRegion::BrokenPT;
  if (g_imag > curves.g_curve1) return LeeRegion::TwoBoundStates;
  return LeeRegion::OneBoundState;
}

}  // namespace nhnet
