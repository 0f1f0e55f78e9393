#include "nhnet/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include <fftw3.h>

#include "nhnet/scattering.hpp"

namespace nhnet {
namespace {

CVector unit_vector(Eigen::Index size, Eigen::Index site) {
  if (site < 0 || site >= size) {
    throw Error(ErrorKind::InvalidInput, "initial site " + std::to_string(site) + " outside the lattice");
  }
  CVector c = CVector::Zero(size);
  c(site) = 1.0;
  return c;
}

template <typename Observable>
TimeSeries record(const CMatrix& h, Eigen::Index site, double t_max, double dt, Observable&& obs) {
  TimeSeries out;
  const auto n = step_count(t_max, dt) + 1;
  out.times.reserve(n);
  out.values.reserve(n);
  propagate_observe(h, unit_vector(h.rows(), site), t_max, dt, [&](std::size_t, double t, const CVector& c) {
    out.times.push_back(t);
    out.values.push_back(obs(c));
  });
  return out;
}

// FFTW planner calls are not re-entrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwBuffer {
  explicit FftwBuffer(std::size_t bytes) : ptr(fftw_malloc(bytes)) {}
  ~FftwBuffer() { fftw_free(ptr); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
  void* ptr;
};

struct FftwPlan {
  FftwPlan(int len, double* in, fftw_complex* out) {
    const std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_r2c_1d(len, in, out, FFTW_ESTIMATE);
  }
  ~FftwPlan() {
    const std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  FftwPlan(const FftwPlan&) = delete;
  FftwPlan& operator=(const FftwPlan&) = delete;
  fftw_plan plan;
};

}  // namespace

double TimeSeries::swing(double t_from, double t_to) const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (times[k] < t_from || times[k] > t_to) continue;
    lo = std::min(lo, values[k]);
    hi = std::max(hi, values[k]);
  }
  return hi >= lo ? hi - lo : 0.0;
}

double TimeSeries::mean(double t_from, double t_to) const {
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (times[k] < t_from || times[k] > t_to) continue;
    sum += values[k];
    ++count;
  }
  return count > 0 ? sum / static_cast<double>(count) : 0.0;
}

TimeSeries occupation_series(const CMatrix& h, Eigen::Index site, double t_max, double dt) {
  return record(h, site, t_max, dt, [site](const CVector& c) { return std::norm(c(site)); });
}

TimeSeries norm_series(const CMatrix& h, Eigen::Index site, double t_max, double dt) {
  return record(h, site, t_max, dt, [](const CVector& c) { return c.squaredNorm(); });
}

double dominant_frequency(const TimeSeries& series, int pad_factor) {
  const std::size_t n = series.values.size();
  if (n < 4 || pad_factor < 1) throw Error(ErrorKind::InvalidInput, "dominant_frequency: series too short");
  const double dt = series.dt();
  const double mean = std::accumulate(series.values.begin(), series.values.end(), 0.0) / static_cast<double>(n);

  const std::size_t len = n * static_cast<std::size_t>(pad_factor);
  const std::size_t bins = len / 2 + 1;
  FftwBuffer in(sizeof(double) * len);
  FftwBuffer out(sizeof(fftw_complex) * bins);
  auto* x = static_cast<double*>(in.ptr);
  auto* f = static_cast<fftw_complex*>(out.ptr);
  const FftwPlan plan(static_cast<int>(len), x, f);
  std::fill(x, x + len, 0.0);
  for (std::size_t k = 0; k < n; ++k) x[k] = series.values[k] - mean;
  fftw_execute(plan.plan);

  std::vector<double> mag(bins);
  for (std::size_t k = 0; k < bins; ++k) mag[k] = std::hypot(f[k][0], f[k][1]);
  const auto peak = static_cast<std::size_t>(std::max_element(mag.begin() + 1, mag.end()) - mag.begin());

  double offset = 0.0;
  if (peak > 0 && peak + 1 < bins) {
    const double a = mag[peak - 1];
    const double b = mag[peak];
    const double c = mag[peak + 1];
    const double curv = a - 2.0 * b + c;
    if (curv != 0.0) offset = 0.5 * (a - c) / curv;
  }
  return 2.0 * std::numbers::pi * (static_cast<double>(peak) + offset) / (static_cast<double>(len) * dt);
}

LeeComparison compare_lee(const LeeParams& p, double t_max, double dt, LeeReference ref) {
  LeeComparison out;
  out.echo_time = echo_time(p.n_trunc, p.kappa);
  if (t_max >= out.echo_time) {
    std::ostringstream os;
    os << "compare_lee: t_max = " << t_max << " reaches the lead echo time " << out.echo_time
       << "; increase n_trunc";
    throw Error(ErrorKind::InvalidInput, os.str());
  }

  const CMatrix exact = build_lee_exact(p);
  const CMatrix synth = assemble_composite(build_lee_synth(p, ref));
  out.exact = occupation_series(exact, 0, t_max, dt);
  out.synth = occupation_series(synth, 0, t_max, dt);
  for (std::size_t k = 0; k < out.exact.values.size(); ++k) {
    out.linf_gap = std::max(out.linf_gap, std::abs(out.exact.values[k] - out.synth.values[k]));
  }
  out.dominant_frequency = dominant_frequency(out.exact);
  out.dominant_frequency_synth = dominant_frequency(out.synth);
  const auto [e1, e2] = lee_bound_energies(p.sigma, p.g_imag, p.kappa);
  out.beat_expected = std::abs(e1 - e2);
  return out;
}

}  // namespace nhnet
