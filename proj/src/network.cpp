#include "nhnet/network.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "nhnet/scattering.hpp"

namespace nhnet {
namespace {

void require(bool cond, ErrorKind kind, const std::string& msg) {
  if (!cond) throw Error(kind, msg);
}

void check_symmetric_real_offdiag(const CMatrix& m, const char* block, double tol, ValidationReport& rep) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Cplx v = m(i, j);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        rep.violations.push_back({Violation::Kind::NonFinite, block, i, j});
        continue;
      }
      if (i == j) continue;
      const double scale = std::max(1.0, std::abs(v));
      if (std::abs(v.imag()) > tol * scale) rep.violations.push_back({Violation::Kind::ComplexHopping, block, i, j});
      if (j > i && std::abs(v - m(j, i)) > tol * scale) {
        rep.violations.push_back({Violation::Kind::Asymmetric, block, i, j});
      }
    }
  }
}

}  // namespace

std::string Violation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Shape: os << "shape mismatch"; break;
    case Kind::NonFinite: os << "non-finite entry"; break;
    case Kind::Asymmetric: os << "asymmetric pair"; break;
    case Kind::ComplexHopping: os << "complex off-diagonal hopping"; break;
    case Kind::ComplexCoupling: os << "complex S-A coupling"; break;
  }
  os << " in " << block << " at (" << row << ", " << col << ")";
  return os.str();
}

ValidationReport validate(const PartitionedHamiltonian& p, double tol) {
  ValidationReport rep;
  if (p.h_s.rows() != p.h_s.cols() || p.h_s.rows() == 0) rep.violations.push_back({Violation::Kind::Shape, "h_s", p.h_s.rows(), p.h_s.cols()});
  if (p.h_a.rows() != p.h_a.cols()) rep.violations.push_back({Violation::Kind::Shape, "h_a", p.h_a.rows(), p.h_a.cols()});
  if (p.rho.rows() != p.h_a.rows() || p.rho.cols() != p.h_s.rows()) {
    rep.violations.push_back({Violation::Kind::Shape, "rho", p.rho.rows(), p.rho.cols()});
  }
  if (!rep.ok()) return rep;

  check_symmetric_real_offdiag(p.h_s, "h_s", tol, rep);
  check_symmetric_real_offdiag(p.h_a, "h_a", tol, rep);
  for (Eigen::Index a = 0; a < p.rho.rows(); ++a) {
    for (Eigen::Index n = 0; n < p.rho.cols(); ++n) {
      const Cplx v = p.rho(a, n);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        rep.violations.push_back({Violation::Kind::NonFinite, "rho", a, n});
      } else if (std::abs(v.imag()) > tol * std::max(1.0, std::abs(v))) {
        rep.violations.push_back({Violation::Kind::ComplexCoupling, "rho", a, n});
      }
    }
  }
  return rep;
}

CMatrix assemble_composite(const PartitionedHamiltonian& p) {
  const Eigen::Index n = p.n_sys();
  const Eigen::Index m = p.m_aux();
  if (p.rho.rows() != m || p.rho.cols() != n || p.h_s.cols() != n || p.h_a.cols() != m) {
    throw Error(ErrorKind::DimensionMismatch, "assemble_composite: inconsistent block sizes");
  }
  CMatrix h(n + m, n + m);
  h.topLeftCorner(n, n) = p.h_s;
  h.topRightCorner(n, m) = p.rho.transpose();
  h.bottomLeftCorner(m, n) = p.rho;
  h.bottomRightCorner(m, m) = p.h_a;
  return h;
}

DefectChainParams DefectChainParams::invisible(double theta, double u, double kappa, int n_trunc) {
  const double omega_sq = u * (theta - kappa);
  require(omega_sq >= 0.0, ErrorKind::DomainError,
          "invisibility tuning needs U(θ − κ) ≥ 0 so that ω is real");
  DefectChainParams p;
  p.kappa = kappa;
  p.theta = theta;
  p.sigma = theta - kappa;
  p.omega = std::sqrt(omega_sq);
  p.u_aux = Cplx{u, 0.0};
  p.n_trunc = n_trunc;
  return p;
}

PartitionedHamiltonian build_defect_chain(const DefectChainParams& p) {
  require(p.kappa > 0.0, ErrorKind::InvalidInput, "defect chain: kappa must be positive");
  require(p.n_trunc >= 10, ErrorKind::InvalidInput, "defect chain: n_trunc must be at least 10");

  const Eigen::Index len = 2 * static_cast<Eigen::Index>(p.n_trunc);
  PartitionedHamiltonian net;
  net.site_offset = p.n_trunc - 1;
  net.h_s = CMatrix::Zero(len, len);
  for (Eigen::Index r = 0; r + 1 < len; ++r) net.h_s(r, r + 1) = net.h_s(r + 1, r) = p.kappa;

  const auto r0 = net.row_of(0);
  const auto r1 = net.row_of(1);
  net.h_s(r0, r1) = net.h_s(r1, r0) = p.theta;
  net.h_s(r0, r0) = net.h_s(r1, r1) = p.sigma;

  net.h_a = CMatrix::Constant(1, 1, p.u_aux);
  net.rho = CMatrix::Zero(1, len);
  net.rho(0, r0) = net.rho(0, r1) = p.omega;
  return net;
}

CMatrix build_lee_exact(const LeeParams& p) {
  require(p.kappa > 0.0, ErrorKind::InvalidInput, "Lee chain: kappa must be positive");
  require(p.g_imag >= 0.0, ErrorKind::InvalidInput, "Lee chain: G must be non-negative");
  require(p.n_trunc >= 2, ErrorKind::InvalidInput, "Lee chain: n_trunc must be at least 2");

  const Eigen::Index len = p.n_trunc + 1;
  CMatrix h = CMatrix::Zero(len, len);
  for (Eigen::Index r = 1; r + 1 < len; ++r) h(r, r + 1) = h(r + 1, r) = p.kappa;
  h(0, 0) = p.sigma;
  h(0, 1) = h(1, 0) = Cplx{0.0, -p.g_imag};
  return h;
}

PartitionedHamiltonian build_lee_synth(const LeeParams& p, Cplx e_ref) {
  require(p.kappa > 0.0, ErrorKind::InvalidInput, "Lee synthesis: kappa must be positive");
  require(p.g_imag >= 0.0, ErrorKind::InvalidInput, "Lee synthesis: G must be non-negative");
  require(p.n_trunc >= 2, ErrorKind::InvalidInput, "Lee synthesis: n_trunc must be at least 2");

  const Cplx bond{p.theta, p.g_imag};  // θ + iG
  if (std::abs(bond) < 1e-12 * p.kappa) {
    throw Error(ErrorKind::DegenerateBond, "Lee synthesis: θ + iG vanishes, auxiliary potential would be infinite");
  }

  const Eigen::Index len = p.n_trunc + 1;
  PartitionedHamiltonian net;
  net.h_s = CMatrix::Zero(len, len);
  for (Eigen::Index r = 1; r + 1 < len; ++r) net.h_s(r, r + 1) = net.h_s(r + 1, r) = p.kappa;
  net.h_s(0, 1) = net.h_s(1, 0) = p.theta;
  net.h_s(0, 0) = p.sigma + bond;
  net.h_s(1, 1) = bond;

  net.h_a = CMatrix::Constant(1, 1, p.omega * p.omega / bond + e_ref);
  net.rho = CMatrix::Zero(1, len);
  net.rho(0, 0) = net.rho(0, 1) = p.omega;
  return net;
}

PartitionedHamiltonian build_lee_synth(const LeeParams& p, LeeReference ref) {
  const auto [e1, e2] = lee_bound_energies(p.sigma, p.g_imag, p.kappa);
  return build_lee_synth(p, ref == LeeReference::Physical ? e1 : e2);
}

PtBicParams PtBicParams::with_total_sites(int total_sites, double omega, double u_aux, double kappa) {
  PtBicParams p;
  p.kappa = kappa;
  p.omega = omega;
  p.u_aux = u_aux;
  p.n_sites = total_sites - 2;
  return p;
}

double pt_bic_hopping(int n, double kappa) {
  require(n != 0 && n != 1, ErrorKind::DomainError, "κ_n is not a lattice bond for n = 0, 1");
  const double nn = n;
  const double ratio = (n % 2 == 0) ? (nn + 1.0) / (nn - 1.0) : (nn - 2.0) / nn;
  return kappa * std::sqrt(ratio);
}

PartitionedHamiltonian build_pt_bic(const PtBicParams& p) {
  require(p.kappa > 0.0, ErrorKind::InvalidInput, "PT lattice: kappa must be positive");
  require(p.n_sites >= 3 && p.n_sites % 2 == 1, ErrorKind::InvalidInput, "PT lattice: n_sites must be odd and ≥ 3");

  const int half = p.half_width();
  PartitionedHamiltonian net;
  net.site_offset = half;
  net.h_s = CMatrix::Zero(p.n_sites, p.n_sites);
  for (int n = -half + 1; n <= half; ++n) {
    if (n == 0 || n == 1) continue;
    const double k = pt_bic_hopping(n, p.kappa);
    net.h_s(net.row_of(n - 1), net.row_of(n)) = k;
    net.h_s(net.row_of(n), net.row_of(n - 1)) = k;
  }

  net.h_a = CMatrix::Zero(2, 2);
  net.h_a(0, 0) = Cplx{0.0, -p.u_aux};
  net.h_a(1, 1) = Cplx{0.0, p.u_aux};

  net.rho = CMatrix::Zero(2, p.n_sites);
  net.rho(0, net.row_of(-1)) = net.rho(0, net.row_of(0)) = p.omega;
  net.rho(1, net.row_of(0)) = net.rho(1, net.row_of(1)) = p.omega;
  return net;
}

// ---------------------------------------------------------------------------

namespace {

nlohmann::json triplets(const CMatrix& m) {
  auto out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) != Cplx{0.0, 0.0}) out.push_back({i, j, m(i, j).real(), m(i, j).imag()});
    }
  }
  return out;
}

CMatrix from_triplets(const nlohmann::json& list, Eigen::Index rows, Eigen::Index cols, const std::string& block) {
  require(list.is_array(), ErrorKind::InvalidConfig, "network: '" + block + "' must be an array of [i, j, re, im]");
  CMatrix m = CMatrix::Zero(rows, cols);
  for (const auto& t : list) {
    require(t.is_array() && t.size() == 4 && t[0].is_number_integer() && t[1].is_number_integer() &&
                t[2].is_number() && t[3].is_number(),
            ErrorKind::InvalidConfig, "network: malformed triplet in '" + block + "': " + t.dump());
    const auto i = t[0].get<Eigen::Index>();
    const auto j = t[1].get<Eigen::Index>();
    require(i >= 0 && i < rows && j >= 0 && j < cols, ErrorKind::InvalidConfig,
            "network: triplet index out of range in '" + block + "': " + t.dump());
    m(i, j) = Cplx{t[2].get<double>(), t[3].get<double>()};
  }
  return m;
}

}  // namespace

nlohmann::json to_json(const PartitionedHamiltonian& p) {
  nlohmann::json doc;
  doc["schema_version"] = kNetworkSchemaVersion;
  doc["n_sys"] = p.n_sys();
  doc["m_aux"] = p.m_aux();
  doc["site_offset"] = p.site_offset;
  doc["h_s"] = triplets(p.h_s);
  doc["h_a"] = triplets(p.h_a);
  doc["rho"] = triplets(p.rho);
  return doc;
}

PartitionedHamiltonian network_from_json(const nlohmann::json& doc) {
  require(doc.is_object(), ErrorKind::InvalidConfig, "network: document must be a JSON object");
  static const std::set<std::string> known{"schema_version", "n_sys", "m_aux", "site_offset", "h_s", "h_a", "rho"};
  for (const auto& [key, _] : doc.items()) {
    require(known.contains(key), ErrorKind::InvalidConfig, "network: unknown key '" + key + "'");
  }
  for (const char* key : {"schema_version", "n_sys", "m_aux", "h_s", "h_a", "rho"}) {
    require(doc.contains(key), ErrorKind::InvalidConfig, std::string("network: missing key '") + key + "'");
  }
  require(doc["schema_version"] == kNetworkSchemaVersion, ErrorKind::InvalidConfig,
          "network: unsupported schema_version " + doc["schema_version"].dump());
  require(doc["n_sys"].is_number_integer() && doc["m_aux"].is_number_integer(), ErrorKind::InvalidConfig,
          "network: n_sys and m_aux must be integers");

  const auto n = doc["n_sys"].get<Eigen::Index>();
  const auto m = doc["m_aux"].get<Eigen::Index>();
  require(n > 0 && m >= 0, ErrorKind::InvalidConfig, "network: need n_sys > 0 and m_aux ≥ 0");

  PartitionedHamiltonian p;
  p.h_s = from_triplets(doc["h_s"], n, n, "h_s");
  p.h_a = from_triplets(doc["h_a"], m, m, "h_a");
  p.rho = from_triplets(doc["rho"], m, n, "rho");
  if (doc.contains("site_offset")) {
    require(doc["site_offset"].is_number_integer(), ErrorKind::InvalidConfig, "network: site_offset must be an integer");
    p.site_offset = doc["site_offset"].get<Eigen::Index>();
  }
  return p;
}

}  // namespace nhnet
