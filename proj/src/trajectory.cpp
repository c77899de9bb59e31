#include "gnsscorr/trajectory.hpp"

#include <cmath>

#include "gnsscorr/errors.hpp"
#include "gnsscorr/rng.hpp"

namespace gnsscorr {

void TrajectoryConfig::validate() const {
  if (duration <= 0.0) throw ConfigError("trajectory: duration must be > 0");
  if (dt <= 0.0 || dt > 1.0) throw ConfigError("trajectory: dt must be in (0, 1]");
  if (v_max <= 0.0) throw ConfigError("trajectory: v_max must be > 0");
  if (workspace_extent <= 0.0) {
    throw ConfigError("trajectory: workspace_extent must be > 0");
  }
}

namespace {

// One minimum-jerk segment in the horizontal NED plane; rest-to-rest, so
// peak speed is 1.875 * |p1 - p0| / duration at the midpoint.
struct Segment {
  double t_start = 0.0;
  double duration = 0.0;
  Eigen::Vector2d p0 = Eigen::Vector2d::Zero();
  Eigen::Vector2d p1 = Eigen::Vector2d::Zero();

  void eval(double t, Eigen::Vector2d& pos, Eigen::Vector2d& vel) const {
    const double tau = std::clamp((t - t_start) / duration, 0.0, 1.0);
    const double s = tau * tau * tau * (10.0 + tau * (-15.0 + 6.0 * tau));
    const double ds = tau * tau * (30.0 + tau * (-60.0 + 30.0 * tau));
    pos = p0 + (p1 - p0) * s;
    vel = (p1 - p0) * (ds / duration);
  }
};

}  // namespace

std::vector<TrajectorySample> simulate_trajectory(const TrajectoryConfig& cfg,
                                                  std::uint64_t seed) {
  cfg.validate();

  const EcefPosition origin_ecef = geodetic_to_ecef(cfg.origin);
  if (!is_receiver_class(origin_ecef)) {
    throw ConfigError("trajectory: origin is not a receiver-class position");
  }

  Rng rng(seed);
  const double extent = cfg.workspace_extent;
  const double cruise = 0.9 * cfg.v_max;

  std::vector<Segment> segments;
  Eigen::Vector2d prev(extent / 2.0, extent / 2.0);
  double t_cursor = 0.0;
  while (t_cursor < cfg.duration) {
    Eigen::Vector2d next(rng.uniform(0.0, extent), rng.uniform(0.0, extent));
    const double dist = (next - prev).norm();
    if (dist < 1.0) continue;
    Segment seg;
    seg.t_start = t_cursor;
    seg.duration = 1.875 * dist / cruise;
    seg.p0 = prev;
    seg.p1 = next;
    segments.push_back(seg);
    t_cursor += seg.duration;
    prev = next;
  }

  const Rotation3 ned_to_ecef = ned_rotation(cfg.origin).transpose();
  const int n_samples = static_cast<int>(std::floor(cfg.duration / cfg.dt + 1e-9)) + 1;

  std::vector<TrajectorySample> samples;
  samples.reserve(n_samples);
  std::size_t seg_idx = 0;
  for (int i = 0; i < n_samples; ++i) {
    const double t = i * cfg.dt;
    while (seg_idx + 1 < segments.size() &&
           t >= segments[seg_idx].t_start + segments[seg_idx].duration) {
      ++seg_idx;
    }
    Eigen::Vector2d pos, vel;
    segments[seg_idx].eval(t, pos, vel);

    const Vector3 ned(pos.x(), pos.y(), 0.0);
    const Vector3 vel_ned(vel.x(), vel.y(), 0.0);

    TrajectorySample sample;
    sample.time = t;
    sample.truth_position = origin_ecef + ned_to_ecef * ned;
    sample.truth_velocity = ned_to_ecef * vel_ned;
    samples.push_back(sample);
  }
  return samples;
}

std::vector<TrajectorySample> simulate_trajectory(double duration, double dt,
                                                  const GeodeticPosition& origin,
                                                  double v_max,
                                                  std::uint64_t seed) {
  TrajectoryConfig cfg;
  cfg.duration = duration;
  cfg.dt = dt;
  cfg.origin = origin;
  cfg.v_max = v_max;
  return simulate_trajectory(cfg, seed);
}

}  // namespace gnsscorr
