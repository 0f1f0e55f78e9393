#include <doctest.h>

#include <random>

#include "nhnet/network.hpp"
#include "support.hpp"

using namespace nhnet;

namespace {

bool throws_kind(ErrorKind kind, const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

PartitionedHamiltonian small_network() {
  PartitionedHamiltonian p;
  p.h_s = CMatrix::Zero(2, 2);
  p.h_s(0, 1) = p.h_s(1, 0) = 1.0;
  p.h_s(1, 1) = Cplx{0.3, -0.2};
  p.h_a = CMatrix::Constant(1, 1, Cplx{-4.0, 1.0});
  p.rho = CMatrix::Zero(1, 2);
  p.rho(0, 0) = 0.5;
  p.rho(0, 1) = -0.25;
  return p;
}

}  // namespace

TEST_CASE("assemble_composite places the blocks") {
  const auto p = small_network();
  const CMatrix h = assemble_composite(p);
  REQUIRE(h.rows() == 3);
  CHECK(h.topLeftCorner(2, 2) == p.h_s);
  CHECK(h.bottomRightCorner(1, 1) == p.h_a);
  CHECK(h.topRightCorner(2, 1) == p.rho.transpose());
  CHECK(h.bottomLeftCorner(1, 2) == p.rho);
  CHECK((h - h.transpose()).norm() == 0.0);
}

TEST_CASE("validate accepts complex on-site terms and flags gauge fields") {
  auto p = small_network();
  CHECK(validate(p).ok());

  auto complex_hop = p;
  complex_hop.h_s(0, 1) = complex_hop.h_s(1, 0) = Cplx{1.0, 0.1};
  const auto r1 = validate(complex_hop);
  REQUIRE_FALSE(r1.ok());
  CHECK(r1.violations.front().kind == Violation::Kind::ComplexHopping);
  CHECK(r1.violations.front().block == "h_s");

  auto asym = p;
  asym.h_s(0, 1) = 2.0;
  CHECK(validate(asym).violations.front().kind == Violation::Kind::Asymmetric);

  auto complex_rho = p;
  complex_rho.rho(0, 1) = Cplx{0.0, 1.0};
  CHECK(validate(complex_rho).violations.front().kind == Violation::Kind::ComplexCoupling);

  auto shape = p;
  shape.rho = CMatrix::Zero(2, 2);
  CHECK(validate(shape).violations.front().kind == Violation::Kind::Shape);

  auto nan = p;
  nan.rho(0, 0) = std::nan("");
  CHECK(validate(nan).violations.front().kind == Violation::Kind::NonFinite);
  CHECK_FALSE(validate(nan).violations.front().describe().empty());
}

TEST_CASE("defect chain layout and invisibility tuning") {
  const auto params = DefectChainParams::invisible(0.2, -5.0);
  CHECK(params.sigma == doctest::Approx(-0.8));
  CHECK(params.omega == doctest::Approx(2.0));
  const auto net = build_defect_chain(params);
  CHECK(net.n_sys() == 400);
  CHECK(net.m_aux() == 1);
  CHECK(net.h_s(net.row_of(0), net.row_of(1)) == Cplx{0.2, 0.0});
  CHECK(net.h_s(net.row_of(-1), net.row_of(0)) == Cplx{1.0, 0.0});
  CHECK(net.rho(0, net.row_of(0)) == Cplx{2.0, 0.0});
  CHECK(net.rho.cwiseAbs().sum() == doctest::Approx(4.0));
  CHECK(validate(net).ok());
  CHECK(throws_kind(ErrorKind::DomainError, [] { (void)DefectChainParams::invisible(0.2, 5.0); }));
}

TEST_CASE("Lee builders") {
  const LeeParams p;
  const CMatrix exact = build_lee_exact(p);
  CHECK(exact.rows() == 301);
  CHECK(exact(0, 1) == Cplx{0.0, -1.05});
  CHECK(exact(0, 0) == Cplx{3.0, 0.0});

  const auto synth = build_lee_synth(p, Cplx{2.0, 0.0});
  CHECK(validate(synth).ok());
  CHECK(synth.h_s(0, 0) == Cplx{3.2, 1.05});
  CHECK(synth.h_s(1, 1) == Cplx{0.2, 1.05});
  CHECK(std::abs(synth.h_a(0, 0) - (49.0 / Cplx{0.2, 1.05} + 2.0)) < 1e-14);

  LeeParams flat = p;
  flat.theta = 0.0;
  flat.g_imag = 0.0;
  CHECK(throws_kind(ErrorKind::DegenerateBond, [&] { (void)build_lee_synth(flat, Cplx{2.0, 0.0}); }));
}

TEST_CASE("PT lattice hoppings and couplings") {
  CHECK(pt_bic_hopping(2) == doctest::Approx(std::sqrt(3.0)));
  CHECK(pt_bic_hopping(3) == doctest::Approx(std::sqrt(1.0 / 3.0)));
  CHECK(pt_bic_hopping(-1) == doctest::Approx(std::sqrt(3.0)));
  CHECK(pt_bic_hopping(-2) == doctest::Approx(std::sqrt(1.0 / 3.0)));
  CHECK(throws_kind(ErrorKind::DomainError, [] { (void)pt_bic_hopping(1); }));

  const auto p = PtBicParams::with_total_sites(403);
  CHECK(p.n_sites == 401);
  CHECK(p.g() == doctest::Approx(2.5));
  const auto net = build_pt_bic(p);
  CHECK(validate(net).ok());
  CHECK(net.h_s(net.row_of(0), net.row_of(1)) == Cplx{0.0, 0.0});
  CHECK(net.h_s(net.row_of(-1), net.row_of(0)) == Cplx{0.0, 0.0});
  CHECK(net.h_a(0, 0) == Cplx{0.0, -0.4});
  CHECK(net.h_a(1, 1) == Cplx{0.0, 0.4});
  CHECK(net.rho(0, net.row_of(-1)) == Cplx{1.0, 0.0});
  CHECK(net.rho(1, net.row_of(1)) == Cplx{1.0, 0.0});
  CHECK(net.rho(0, net.row_of(1)) == Cplx{0.0, 0.0});
}

TEST_CASE("network JSON round trip is lossless") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    auto p = testing_support::random_dissipative(rng, 4, 2, 0.7);
    p.site_offset = trial % 3;
    const auto doc = to_json(p);
    const auto back = network_from_json(nlohmann::json::parse(doc.dump()));
    CHECK(back.h_s == p.h_s);
    CHECK(back.h_a == p.h_a);
    CHECK(back.rho == p.rho);
    CHECK(back.site_offset == p.site_offset);
  }
}

TEST_CASE("network JSON schema errors are reported") {
  auto doc = to_json(small_network());
  auto extra = doc;
  extra["colour"] = "blue";
  CHECK(throws_kind(ErrorKind::InvalidConfig, [&] { (void)network_from_json(extra); }));
  auto missing = doc;
  missing.erase("rho");
  CHECK(throws_kind(ErrorKind::InvalidConfig, [&] { (void)network_from_json(missing); }));
  auto version = doc;
  version["schema_version"] = 7;
  CHECK(throws_kind(ErrorKind::InvalidConfig, [&] { (void)network_from_json(version); }));
  auto out_of_range = doc;
  out_of_range["h_s"].push_back({5, 0, 1.0, 0.0});
  CHECK(throws_kind(ErrorKind::InvalidConfig, [&] { (void)network_from_json(out_of_range); }));
}
