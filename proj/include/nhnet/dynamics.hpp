#pragma once

#include <vector>

#include "nhnet/network.hpp"
#include "nhnet/numerics.hpp"

namespace nhnet {

inline constexpr double kDynamicsDt = 0.005;
inline constexpr double kDynamicsTMax = 40.0;
inline constexpr int kSpectralPadding = 8;

/// Real observable on the uniform grid times[k] = k·dt.
struct TimeSeries {
  std::vector<double> times;
  std::vector<double> values;

  [[nodiscard]] double dt() const { return times.size() > 1 ? times[1] - times[0] : 0.0; }
  /// max − min of the values with t_from ≤ t ≤ t_to.
  [[nodiscard]] double swing(double t_from, double t_to) const;
  [[nodiscard]] double mean(double t_from, double t_to) const;
};

/// P(t) = |c_site(t)|² starting from c_n(0) = δ_{n,site}. No renormalisation is applied,
/// so non-Hermitian runs may exceed 1 or decay. Throws StepTooLarge, InvalidInput.
TimeSeries occupation_series(const CMatrix& h, Eigen::Index site, double t_max = kDynamicsTMax,
                             double dt = kDynamicsDt);

/// Σ_n |c_n(t)|² from the same initial condition.
TimeSeries norm_series(const CMatrix& h, Eigen::Index site, double t_max = kDynamicsTMax, double dt = kDynamicsDt);

/// Angular frequency of the largest spectral peak of (values − mean): real FFT of the
/// series zero-padded to pad_factor × its length, refined by a parabola through the
/// peak bin and its neighbours.
double dominant_frequency(const TimeSeries& series, int pad_factor = kSpectralPadding);

/// Time after which waves reflected from the far end of an n-site chain reach site 0.
inline double echo_time(int n_trunc, double kappa) { return n_trunc / (2.0 * kappa); }

struct LeeComparison {
  TimeSeries exact;           // P(t) of the imaginary-coupling Lee chain
  TimeSeries synth;           // P(t) of the composite with the auxiliary site
  double linf_gap = 0.0;      // max_t |P_exact − P_synth|
  double dominant_frequency = 0.0;        // of the exact series
  double dominant_frequency_synth = 0.0;
  double beat_expected = 0.0;              // |E₁ − E₂|
  double echo_time = 0.0;
};

/// Exact Lee chain vs Hermitian-coupling synthesis, both from c_n(0) = δ_{n,0}.
/// Throws InvalidInput if t_max reaches the lead echo time.
LeeComparison compare_lee(const LeeParams& p, double t_max = kDynamicsTMax, double dt = kDynamicsDt,
                          LeeReference ref = LeeReference::Ghost);

}  // namespace nhnet
