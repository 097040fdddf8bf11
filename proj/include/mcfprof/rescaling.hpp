#pragma once

#include <optional>
#include <vector>

#include "mcfprof/error.hpp"
#include "mcfprof/flow.hpp"
#include "mcfprof/geometry.hpp"

namespace mcfprof {

/// Parabolic dilation (x, t) -> (a (x - x0), a^2 (t - t0)). x0 is given in
/// the native coordinates of the snapshot being dilated.
struct DilationParams {
  double a = 1.0;
  Vec3 x0{0.0, 0.0, 0.0};
  double t0 = 0.0;
};

/// Geometry and time mapped by the dilation; curvature is recomputed from the
/// mapped nodes. Profiles keep their symmetry axis: z -> a (z - z0), r -> a r,
/// and the new origin records where the dilation centre landed.
FlowSnapshot parabolic_dilate(const FlowSnapshot& snapshot, const DilationParams& d);

struct SpacetimePoint {
  Vec3 x{0.0, 0.0, 0.0};
  double t = 0.0;
};

struct BlowupTerm {
  DilationParams dilation;
  /// Index of the source snapshot carrying the centre point and its node.
  std::size_t source_snapshot = 0;
  std::size_t node = 0;
  /// Rescaled snapshots on the rescaled-time window, oldest first; the last
  /// one is at rescaled time 0.
  std::vector<FlowSnapshot> rescaled;
  /// Rescaled H at the origin node.
  double origin_H = 0.0;

  const FlowSnapshot& at_origin_time() const { return rescaled.back(); }
};

struct BlowupSequence {
  std::vector<BlowupTerm> terms;
  bool normalized = true;
  /// False when the scales a_k fail to increase strictly; the sequence is
  /// still built but is not a blow-up in the strict sense.
  bool scales_increasing = true;
};

/// Normalised blow-up: a_k = H(x_k, t_k) at each point, snapped to the
/// nearest node of the snapshot recorded at t_k. Each term rescales every
/// recorded snapshot with rescaled time in [-time_window, 0].
BlowupSequence normalized_blowup(const Trajectory& traj, const std::vector<SpacetimePoint>& points,
                                 double time_window = 1.0);

/// Waist nodes of recorded snapshots whose neck H is at least `min_H`, as
/// spacetime points, oldest first.
std::vector<SpacetimePoint> neck_points(const Trajectory& traj, double min_H);

enum class FitFamily { sphere, cylinder, plane };
std::string_view to_string(FitFamily family) noexcept;

struct FitResult {
  FitFamily family = FitFamily::sphere;
  double radius = 0.0;
  Vec3 center{0.0, 0.0, 0.0};
  Vec3 axis{0.0, 0.0, 0.0};
  /// RMS of signed normal distances.
  double rms = 0.0;
  std::size_t nodes_used = 0;
  int iterations = 0;
  bool converged = true;
};

class FitFailure : public Error {
 public:
  explicit FitFailure(FitResult best)
      : Error(ErrorKind::fit_failure, "model fit did not converge in 200 iterations"), best_(best) {}
  const FitResult& best() const noexcept { return best_; }

 private:
  FitResult best_;
};

/// Least-squares fit over nodes within `window` of the snapshot origin (all
/// nodes when absent). Profiles restrict sphere centres and cylinder axes to
/// the symmetry axis. Cylinders use m = n - 1 for profiles.
FitResult fit_model(const FlowSnapshot& snapshot, FitFamily family,
                    std::optional<double> window = std::nullopt);

struct ConvergenceReport {
  /// Entry k compares terms k and k+1 at rescaled time 0.
  std::vector<double> hausdorff;
  std::vector<double> normal_angle;
  bool cauchy = false;
};

/// Two-sided Hausdorff distance and largest normal-angle deviation between
/// consecutive terms, restricted to the ball of `window_radius` about the
/// origin. Profiles are compared in the meridian plane through the origin.
ConvergenceReport blowup_convergence_metric(const BlowupSequence& seq, double window_radius);

/// Two-sided Hausdorff distance between two snapshots in the ball of radius
/// `window_radius` about their origins.
double windowed_hausdorff(const FlowSnapshot& a, const FlowSnapshot& b, double window_radius,
                          double* max_normal_angle = nullptr);

}  // namespace mcfprof
