#include "nhnet/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "nhnet/reduction.hpp"

namespace nhnet {

double participation_ratio(const CVector& v) {
  double s2 = 0.0;
  double s4 = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double w = std::norm(v(i));
    s2 += w;
    s4 += w * w;
  }
  if (!(s4 > 0.0)) throw Error(ErrorKind::ZeroVector, "participation_ratio: zero vector");
  return s2 * s2 / s4;
}

std::vector<std::size_t> SpectrumReport::outside_band(double band_edge) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < energies.size(); ++k) {
    if (std::abs(energies[k].real()) > band_edge) out.push_back(k);
  }
  return out;
}

std::size_t SpectrumReport::nearest(Cplx energy) const {
  std::size_t best = 0;
  for (std::size_t k = 1; k < energies.size(); ++k) {
    if (std::abs(energies[k] - energy) < std::abs(energies[best] - energy)) best = k;
  }
  return best;
}

SpectrumReport spectrum(const CMatrix& h) {
  auto eig = eig_dense(h);
  SpectrumReport rep;
  rep.n_sites = h.rows();
  rep.participation.reserve(eig.values.size());
  for (Eigen::Index k = 0; k < eig.right_vectors.cols(); ++k) {
    rep.participation.push_back(participation_ratio(eig.right_vectors.col(k)));
  }
  for (const auto& e : eig.values) rep.max_abs_imag = std::max(rep.max_abs_imag, std::abs(e.imag()));
  rep.energies = std::move(eig.values);
  rep.modes = std::move(eig.right_vectors);
  return rep;
}

double max_abs_imag(const CMatrix& h) {
  double worst = 0.0;
  for (const auto& e : eigvals_dense(h)) worst = std::max(worst, std::abs(e.imag()));
  return worst;
}

double conjugation_defect(const std::vector<Cplx>& values) {
  double worst = 0.0;
  for (const auto& v : values) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& w : values) best = std::min(best, std::abs(std::conj(v) - w));
    worst = std::max(worst, best);
  }
  return worst;
}

namespace {

Cplx i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

Cplx bic_amplitude(int n, double g, double kappa) {
  if (n == 0) return {kappa / g, 0.0};
  if (n % 2 != 0) return {0.0, 0.0};
  const double nn = n;
  return (n > 0 ? 1.0 : -1.0) * i_power(n + 1) / std::sqrt(nn * nn - 1.0);
}

}  // namespace

CVector bic_state(double g, int n_half, double kappa) {
  if (g == 0.0) throw Error(ErrorKind::InvalidInput, "bic_state: g must be nonzero");
  if (n_half < 1) throw Error(ErrorKind::InvalidInput, "bic_state: n_half must be positive");
  CVector c(2 * n_half + 1);
  for (int n = -n_half; n <= n_half; ++n) c(n + n_half) = bic_amplitude(n, g, kappa);
  return c;
}

CVector embed_bic_composite(const PtBicParams& p) {
  if (p.u_aux == 0.0) throw Error(ErrorKind::InvalidInput, "embed_bic_composite: U must be nonzero");
  const auto net = build_pt_bic(p);
  const CVector c = bic_state(p.g(), p.half_width(), p.kappa);
  const CVector a = solve_linear(CMatrix(-net.h_a), CVector(net.rho * c));
  CVector psi(c.size() + a.size());
  psi << c, a;
  return psi;
}

BicResidual verify_bic(const PtBicParams& p) {
  const auto net = build_pt_bic(p);
  const CVector psi = embed_bic_composite(p);
  const CVector res = assemble_composite(net) * psi;
  const double norm = psi.norm();

  const int half = p.half_width();
  const auto left = net.row_of(-half);
  const auto right = net.row_of(half);
  double interior2 = 0.0;
  for (Eigen::Index r = 0; r < res.size(); ++r) {
    if (r != left && r != right) interior2 += std::norm(res(r));
  }
  const double boundary2 = std::norm(res(left)) + std::norm(res(right));

  // Terms dropped by truncation: bonds (half, half+1) and (−half−1, −half).
  const double g = p.g();
  const double right_tail = pt_bic_hopping(half + 1, p.kappa) * std::abs(bic_amplitude(half + 1, g, p.kappa));
  const double left_tail = pt_bic_hopping(-half, p.kappa) * std::abs(bic_amplitude(-half - 1, g, p.kappa));

  BicResidual out;
  out.interior = std::sqrt(interior2) / norm;
  out.boundary = std::sqrt(boundary2) / norm;
  out.tail_bound = std::hypot(right_tail, left_tail) / norm;
  return out;
}

double odd_site_mass(const CVector& v, Eigen::Index n_sys, Eigen::Index site_offset) {
  double odd = 0.0;
  for (Eigen::Index r = 0; r < n_sys; ++r) {
    if ((r - site_offset) % 2 != 0) odd += std::norm(v(r));
  }
  const double total = v.squaredNorm();
  if (!(total > 0.0)) throw Error(ErrorKind::ZeroVector, "odd_site_mass: zero vector");
  return odd / total;
}

CVector align_phase(const CVector& v) {
  Eigen::Index idx = 0;
  v.cwiseAbs().maxCoeff(&idx);
  const double mag = std::abs(v(idx));
  if (mag == 0.0) return v;
  return v * (std::conj(v(idx)) / mag);
}

double overlap(const CVector& u, const CVector& v) {
  return std::abs(u.dot(v)) / (u.norm() * v.norm());
}

double pt_threshold_scan(const std::function<CMatrix(double)>& builder, double u_lo, double u_hi,
                         double eps_imag, double resolution) {
  if (!(u_lo < u_hi) || !(resolution > 0.0)) {
    throw Error(ErrorKind::InvalidInput, "pt_threshold_scan: need u_lo < u_hi and positive resolution");
  }
  const auto broken = [&](double u) { return max_abs_imag(builder(u)) > eps_imag; };
  if (broken(u_lo) || !broken(u_hi)) {
    std::ostringstream os;
    os << "pt_threshold_scan: [" << u_lo << ", " << u_hi << "] does not bracket the PT transition at eps "
       << eps_imag;
    throw Error(ErrorKind::NoBracket, os.str());
  }
  double lo = u_lo;
  double hi = u_hi;
  while (hi - lo > resolution) {
    const double mid = 0.5 * (lo + hi);
    (broken(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace nhnet
