#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gnsscorr/constellation.hpp"
#include "gnsscorr/rng.hpp"
#include "gnsscorr/trajectory.hpp"
#include "gnsscorr/types.hpp"

namespace gnsscorr {

struct SimNoiseConfig {
  double gaussian_sigma = 6.0;              // m
  bool bias_enabled = false;
  double bias_low = 50.0;                   // m
  double bias_high = 200.0;                 // m
  double bias_count_rate = 1.0;             // Poisson rate per epoch
  double elevation_mask = 5.0 * M_PI / 180.0;
  double receiver_clock_bias = 0.0;         // m

  void validate() const;
};

struct PseudorangeMeasurement {
  int sat_id = 0;
  double pseudorange = 0.0;                 // m
  EcefPosition sat_position = EcefPosition::Zero();
  bool is_biased = false;                   // simulation metadata only
  double injected_bias = 0.0;               // m
};

struct MeasurementEpoch {
  std::int64_t epoch_id = 0;
  double time = 0.0;
  std::vector<PseudorangeMeasurement> measurements;
  std::optional<EcefPosition> truth_position;
  std::string trace_id;

  std::size_t size() const { return measurements.size(); }
};

// One epoch of masked, noisy pseudoranges:
//   rho = |P - truth| + clock + N(0, sigma^2) + bias
// where min(M, Poisson(rate)) satellites picked without replacement carry a
// uniform bias from [bias_low, bias_high]. Throws NoVisibleSatellites when
// the mask leaves nothing.
MeasurementEpoch simulate_epoch(const EcefPosition& truth,
                                const std::vector<SatelliteState>& sats,
                                const SimNoiseConfig& noise, Rng& rng);

struct SimDatasetConfig {
  TrajectoryConfig trajectory;
  SimNoiseConfig noise;
  int n_planes = 6;
  int sats_per_plane = 4;
  std::string trace_id = "sim-000";
  std::uint64_t seed = 0;
};

// One epoch per trajectory sample; per-epoch RNG streams are split from
// (seed, epoch_id), so the result is deterministic.
std::vector<MeasurementEpoch> simulate_dataset(const SimDatasetConfig& cfg);

// Convenience wrapper: n_traces independent trajectories with trace ids
// "<prefix>-<k>", epoch ids contiguous across the whole set.
std::vector<MeasurementEpoch> simulate_traces(const SimDatasetConfig& base,
                                              int n_traces);

}  // namespace gnsscorr
