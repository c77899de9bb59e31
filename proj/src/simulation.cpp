#include "gnsscorr/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gnsscorr/errors.hpp"
#include "gnsscorr/geodesy.hpp"

namespace gnsscorr {

void SimNoiseConfig::validate() const {
  if (gaussian_sigma < 0.0) throw ConfigError("noise: sigma must be >= 0");
  if (bias_low > bias_high) throw ConfigError("noise: bias range inverted");
  if (bias_count_rate < 0.0) throw ConfigError("noise: bias rate must be >= 0");
  if (elevation_mask < 0.0 || elevation_mask >= M_PI / 2.0) {
    throw ConfigError("noise: elevation mask must be in [0, pi/2)");
  }
}

MeasurementEpoch simulate_epoch(const EcefPosition& truth,
                                const std::vector<SatelliteState>& sats,
                                const SimNoiseConfig& noise, Rng& rng) {
  noise.validate();

  const auto visible = visible_satellites(sats, truth, noise.elevation_mask);
  if (visible.empty()) {
    throw NoVisibleSatellites("simulate_epoch: no satellites above the mask");
  }
  const std::size_t m = visible.size();

  MeasurementEpoch epoch;
  epoch.truth_position = truth;
  epoch.measurements.reserve(m);
  for (const auto& sat : visible) {
    PseudorangeMeasurement meas;
    meas.sat_id = sat.sat_id;
    meas.sat_position = sat.position;
    const double range = (sat.position - truth).norm();
    meas.pseudorange = range + noise.receiver_clock_bias +
                       (noise.gaussian_sigma > 0.0
                            ? rng.normal(0.0, noise.gaussian_sigma)
                            : 0.0);
    epoch.measurements.push_back(meas);
  }

  if (noise.bias_enabled && noise.bias_count_rate > 0.0) {
    const std::size_t count =
        std::min<std::size_t>(m, static_cast<std::size_t>(
                                     rng.poisson(noise.bias_count_rate)));
    // Partial Fisher-Yates over measurement indices.
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t k = 0; k < count; ++k) {
      const std::size_t pick = k + rng.index(m - k);
      std::swap(order[k], order[pick]);
    }
    for (std::size_t k = 0; k < count; ++k) {
      auto& meas = epoch.measurements[order[k]];
      meas.is_biased = true;
      meas.injected_bias = rng.uniform(noise.bias_low, noise.bias_high);
      meas.pseudorange += meas.injected_bias;
    }
  }
  return epoch;
}

std::vector<MeasurementEpoch> simulate_dataset(const SimDatasetConfig& cfg) {
  const auto orbits = nominal_constellation(cfg.n_planes, cfg.sats_per_plane);
  const Rng base(cfg.seed);
  const auto trajectory =
      simulate_trajectory(cfg.trajectory, base.split(0).seed());
  std::vector<MeasurementEpoch> epochs;
  epochs.reserve(trajectory.size());
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    const auto& sample = trajectory[i];
    const auto states = propagate_all(orbits, sample.time);
    Rng epoch_rng = base.split(i + 1);
    MeasurementEpoch epoch =
        simulate_epoch(sample.truth_position, states, cfg.noise, epoch_rng);
    epoch.epoch_id = static_cast<std::int64_t>(i);
    epoch.time = sample.time;
    epoch.trace_id = cfg.trace_id;
    epochs.push_back(std::move(epoch));
  }
  return epochs;
}

std::vector<MeasurementEpoch> simulate_traces(const SimDatasetConfig& base,
                                              int n_traces) {
  if (n_traces < 1) throw ConfigError("simulate_traces: n_traces must be >= 1");
  std::vector<MeasurementEpoch> all;
  std::int64_t next_id = 0;
  for (int k = 0; k < n_traces; ++k) {
    SimDatasetConfig cfg = base;
    cfg.seed = Rng(base.seed).split(1000 + k).seed();
    cfg.trace_id = base.trace_id + "-" + std::to_string(k);
    auto epochs = simulate_dataset(cfg);
    for (auto& e : epochs) e.epoch_id = next_id++;
    all.insert(all.end(), std::make_move_iterator(epochs.begin()),
               std::make_move_iterator(epochs.end()));
  }
  return all;
}

}  // namespace gnsscorr
