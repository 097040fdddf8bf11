#pragma once

#include <optional>
#include <vector>

#include "mcfprof/flow.hpp"
#include "mcfprof/geometry.hpp"
#include "mcfprof/rescaling.hpp"

namespace mcfprof {

/// Radius of the largest ball tangent at `node` from the inside (centre on
/// the inward normal), by bisection to spacing/10. Profiles only.
double inscribed_radius(const FlowSnapshot& snapshot, std::size_t node);

struct NoncollapseRecord {
  double t = 0.0;
  /// min over nodes of r * H.
  double kappa_min = 0.0;
  std::size_t argmin_node = 0;
  std::vector<double> r_field;
};

NoncollapseRecord noncollapsing_ratio(const FlowSnapshot& snapshot);

struct PinchingRecord {
  double t = 0.0;
  /// (H, lambda_1) per node.
  std::vector<std::pair<double, double>> samples;
  /// min over nodes of lambda_1 / H.
  double worst_ratio = 0.0;
};

struct PinchingBin {
  double H_lo = 0.0;
  double H_hi = 0.0;
  /// max(0, -min lambda_1) over samples in the bin.
  double envelope = 0.0;
  /// max over samples of max(0, -lambda_1) / H.
  double ratio = 0.0;
  std::size_t count = 0;
};

struct PinchingProfile {
  std::vector<PinchingRecord> records;
  /// Logarithmic bins in H, ascending.
  std::vector<PinchingBin> bins;
  double top_H = 0.0;
  /// Envelope ratio over [top_H/10, top_H] and over [top_H/100, top_H/10).
  double top_decade_ratio = 0.0;
  double lower_decade_ratio = 0.0;
};

PinchingProfile pinching_profile(const Trajectory& traj, int bins_per_decade = 4);

struct HarnackRecord {
  SpacetimePoint p;
  double R = 1.0;
  double H_p = 0.0;
  double sup_H = 0.0;
  double inf_H = 0.0;
  double delta_achieved = 0.0;
  std::size_t nodes_scanned = 0;
};

/// Scans every recorded node in the parabolic cube of size R / H(p) behind p.
HarnackRecord harnack_check(const Trajectory& traj, const SpacetimePoint& p, double R);

struct RatioSeries {
  std::vector<double> t;
  /// Node maximum of |A|^2 / H^2.
  std::vector<double> max_ratio;
  /// Node maximum refined by a parabola through the peak and its neighbours.
  std::vector<double> refined_max;
  /// Largest (increase of refined_max) / (elapsed time) between snapshots.
  double worst_growth_rate = 0.0;
  double tolerance_rate = 0.0;
  bool nonincreasing = true;
};

/// Tolerance per unit time is 10 h^2 with h the largest snapshot spacing.
RatioSeries ratio_A2_H2(const Trajectory& traj);

struct HEvolutionReport {
  double t = 0.0;
  double max_residual = 0.0;
  std::size_t samples = 0;
  std::size_t skipped = 0;
};

/// Residual of dH/dt = Delta H + H |A|^2 at the nodes of `mid`, with dH/dt
/// from the values of H where the normal line of each node meets `before`
/// and `after`. `stride` subsamples the nodes.
HEvolutionReport verify_H_evolution(const FlowSnapshot& before, const FlowSnapshot& mid,
                                    const FlowSnapshot& after, std::size_t stride = 1);

/// Same on every recorded triplet of the trajectory; reports the worst.
HEvolutionReport verify_H_evolution(const Trajectory& traj, std::size_t stride = 1);

struct ConvexityResult {
  bool pass = false;
  double min_lambda1 = 0.0;
  std::size_t node = 0;
};

/// Interior nodes only; optionally restricted to a ball about the origin.
ConvexityResult convexity_check(const FlowSnapshot& snapshot, double tol,
                                std::optional<double> window = std::nullopt);

struct DistanceScaling {
  std::vector<double> tau;
  std::vector<double> r;
  double slope = 0.0;
  double log_prefactor = 0.0;
  /// Extremes of r / sqrt(tau) over the final decade of tau.
  double band_min = 0.0;
  double band_max = 0.0;
  std::size_t final_decade_points = 0;
};

/// Distance from the singular point to snapshots at a geometric ladder of
/// times before the singular time, tau_j = tau_max * ratio^-j.
DistanceScaling singular_distance_scaling(const Trajectory& traj, double ladder_ratio = 4.0,
                                          std::optional<double> tau_max = std::nullopt);

}  // namespace mcfprof
