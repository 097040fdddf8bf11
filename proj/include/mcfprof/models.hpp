#pragma once

#include <string_view>
#include <vector>

#include "mcfprof/error.hpp"
#include "mcfprof/geometry.hpp"

namespace mcfprof {

enum class ModelKind { sphere, cylinder, grim_reaper, bowl };

std::string_view to_string(ModelKind kind) noexcept;
ModelKind model_kind_from_string(std::string_view name);

/// Exact or ODE-computed reference flow. Translators move with unit speed
/// in the +u direction; shrinkers are centred at the origin.
struct ModelSolution {
  ModelKind kind = ModelKind::sphere;
  int n = 2;
  /// Sphere factor dimension of S^m x R^(n-m); ignored for other kinds.
  int m = 1;
  double R0 = 1.0;

  int effective_m() const noexcept { return kind == ModelKind::sphere ? n : m; }
  /// R0^2 / (2 m_eff); infinite for translators.
  double extinction_time() const;
  void validate() const;
};

/// sqrt(R0^2 - 2 m_eff t). Throws ErrorKind::extinct at or past extinction.
double shrinker_radius(const ModelSolution& model, double t);

/// t - log cos x1. Throws ErrorKind::domain for |x1| >= pi/2.
double grim_reaper_eval(double x1, double t);

/// Rotationally symmetric unit-speed translator u(r) with u(0) = u'(0) = 0.
struct BowlProfile {
  int n = 2;
  double h = 0.0;
  std::vector<double> r;
  std::vector<double> u;
  std::vector<double> du;
  /// Largest ODE residual over interior samples, measured with fourth-order
  /// differences of the stored samples.
  double max_residual = 0.0;

  /// Cubic Hermite evaluation; radius must lie within the sampled range.
  double eval(double radius) const;
};

BowlProfile bowl_soliton_profile(int n, double r_max, double h);

/// max |div(Du/W) - 1/W| over interior nodes, W = sqrt(1+|Du|^2), with the
/// divergence taken in conservative (half-node flux) form.
double translator_residual(const GraphPatch& patch);

struct ModelSampling {
  std::size_t nodes = 400;
  /// Period for cylinder profiles.
  double period = 1.0;
  /// Graph patches: grid spacing and half width of the box.
  double h = 1e-2;
  double half_width = 1.2;
};

/// Discrete snapshot of the model at time t: a profile for shrinkers, a
/// graph patch for translators.
FlowSnapshot model_snapshot(const ModelSolution& model, double t, const ModelSampling& sampling);

/// r * H on the exact model: n for spheres, m for cylinders.
double model_noncollapsing_constant(const ModelSolution& model);

}  // namespace mcfprof
