#pragma once

#include <cstdint>
#include <functional>

#include "mcfprof/geometry.hpp"

namespace mcfprof {

// Initial data: uniformly arclength-sampled generating curves and graph
// patches used by scenarios and tests.

ProfileCurve sphere_profile(double radius, int n, std::size_t nodes);
ProfileCurve cylinder_profile(double radius, double period, int n, std::size_t nodes);
/// Ellipse with semi-axis `a` along the axis of symmetry and `b` across it.
ProfileCurve ovaloid_profile(double a, double b, int n, std::size_t nodes);

struct DumbbellShape {
  double bulb_radius = 1.0;
  double neck_radius = 0.35;
  double neck_length = 2.0;
};

/// Two near-spherical bulbs joined by a neck whose waist sits at z = 0 with
/// radius `neck_radius`. The junctions are smoothed so the surface is
/// mean convex.
ProfileCurve dumbbell_profile(const DumbbellShape& shape, int n, std::size_t nodes);

/// r^2 as a function of z for the dumbbell (negative past the poles).
std::function<double(double)> dumbbell_radius_squared(const DumbbellShape& shape);

/// Closed profile through the axis from a symmetric squared-radius function
/// r^2 = f(z), positive on (-z_pole, z_pole).
ProfileCurve profile_from_radius_squared(const std::function<double(double)>& f, double z_pole,
                                         int n, std::size_t nodes);

/// Normal jitter of interior nodes, reproducible from `seed`.
ProfileCurve perturb_profile(const ProfileCurve& curve, double amplitude, std::uint64_t seed);

/// Uniform grid over [-half_width, half_width]^n.
GraphPatch make_patch(int n, double half_width, double h, bool interior_above,
                      const std::function<double(double, double)>& height);

GraphPatch plane_patch(int n, double half_width, double h, double level = 0.0);
/// u = t - log cos x1 on |x1| <= half_width (< pi/2), constant in x2.
GraphPatch grim_reaper_patch(int n, double half_width, double h, double t = 0.0);
/// Upper cap of the unit-radius sphere: enclosed region below the graph.
GraphPatch hemisphere_patch(double radius, double half_width, double h);

}  // namespace mcfprof
