#pragma once

#include <optional>
#include <vector>

#include "mcfprof/error.hpp"
#include "mcfprof/geometry.hpp"

namespace mcfprof {

struct StepControl {
  double cfl = 0.5;
  double dt_min = 1e-14;
  /// Stop once max |A|^2 reaches this value.
  double A2_stop = 1e4;
  std::optional<double> t_end;
  /// Resample the profile when the longest/shortest segment ratio exceeds this.
  double resample_ratio = 1.1;

  void validate() const;
};

struct TimeStep {
  double dt = 0.0;
  /// The stability bound fell below dt_min and dt was raised to it.
  bool underflow = false;
};

/// Explicit step bound cfl * min(h^2 / (2n), 1 / (2 max|A|^2)).
TimeStep adaptive_dt(const FlowSnapshot& state, const StepControl& ctl);

/// Moves every node by dt * H along the inward normal. Throws
/// ErrorKind::neck_crossed when an interior node reaches the axis.
FlowSnapshot step_axisymmetric(const FlowSnapshot& state, double dt, double resample_ratio = 2.0);

/// One explicit step of u_t = sqrt(1+|Du|^2) div(Du / sqrt(1+|Du|^2)) with
/// frozen boundary values.
FlowSnapshot step_graph(const FlowSnapshot& state, double dt);

FlowSnapshot step(const FlowSnapshot& state, double dt, const StepControl& ctl);

enum class StopReason { curvature_threshold, extinction, t_end, step_underflow };
std::string_view to_string(StopReason reason) noexcept;

struct SingularEstimate {
  /// Native coordinates; on the symmetry axis for profiles.
  Vec3 x{0.0, 0.0, 0.0};
  double T = 0.0;
};

/// Per accepted step scalar summary (the time-series row).
struct StepRecord {
  double t = 0.0;
  double dt = 0.0;
  double max_H = 0.0;
  double min_H = 0.0;
  double max_A2 = 0.0;
  double max_A2_over_H2 = 0.0;
  double min_lambda1_over_H = 0.0;
  /// NaN when the surface has no waist.
  double neck_radius = 0.0;
  /// Index into Trajectory::snapshots, or -1.
  long snapshot = -1;
};

StepRecord summarize(const FlowSnapshot& snap, double dt);

struct RecordSchedule {
  std::vector<double> times;
  /// At each of these times record the snapshot and the next two steps, so
  /// centred time differences are available.
  std::vector<double> triplet_times;
  /// Record whenever max |A|^2 grows by this factor (geometric cascade
  /// accumulating at the singular time). Values <= 1 disable the cascade.
  double cascade_factor = 1.189207115002721;  // 2^(1/4)
  /// Additionally record every k-th step (0 disables).
  std::size_t stride = 0;
};

struct Trajectory {
  std::vector<FlowSnapshot> snapshots;
  std::vector<StepRecord> steps;
  StopReason stop_reason = StopReason::t_end;
  std::optional<SingularEstimate> singular;
  /// Indices of snapshots forming (before, centre, after) triples.
  std::vector<std::array<std::size_t, 3>> triplets;
  double initial_max_H = 0.0;
};

class InconclusiveRun : public Error {
 public:
  InconclusiveRun(const std::string& what, Trajectory partial)
      : Error(ErrorKind::inconclusive, what), partial_(std::move(partial)) {}
  const Trajectory& partial() const noexcept { return partial_; }

 private:
  Trajectory partial_;
};

Trajectory run_until(const FlowSnapshot& initial, const StepControl& ctl,
                     const RecordSchedule& schedule = {});

/// Affine fit of 1 / max|A|^2 against t over the final decade of max|A|^2;
/// the root is the singular time. The singular point is the centroid of the
/// near-maximal curvature nodes of the final snapshot, projected onto the
/// symmetry axis for profiles.
std::optional<SingularEstimate> estimate_singularity(const Trajectory& traj);

struct MeanConvexityReport {
  std::vector<double> t;
  std::vector<double> min_H;
  bool strictly_positive = true;
  bool scheme_failure = false;
};

/// Throws a precondition error when the first snapshot is not mean convex.
MeanConvexityReport verify_mean_convexity(const Trajectory& traj);

/// Minimum of r over interior local minima of a closed profile, min r of a
/// periodic one; NaN when there is no waist.
double neck_radius(const ProfileCurve& curve);
/// Node index of the waist, or size() when there is none.
std::size_t neck_node(const ProfileCurve& curve);

}  // namespace mcfprof
