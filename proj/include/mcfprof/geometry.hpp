#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace mcfprof {

using Vec3 = std::array<double, 3>;

enum class Topology { closed_through_axis, periodic_in_z };

/// Generating curve of a hypersurface of revolution in R^(n+1), sampled in the
/// (z, r) half-plane. Nodes are ordered so that the enclosed region lies to
/// the right of the direction of travel: a closed curve runs from its lower
/// pole (smaller z) to its upper pole, a periodic curve runs toward +z.
class ProfileCurve {
 public:
  ProfileCurve() = default;
  /// Validates the node-level invariants and throws on violation.
  ProfileCurve(std::vector<double> z, std::vector<double> r, int n, Topology topology,
               double period = 0.0);

  std::size_t size() const noexcept { return z_.size(); }
  int n() const noexcept { return n_; }
  Topology topology() const noexcept { return topology_; }
  bool periodic() const noexcept { return topology_ == Topology::periodic_in_z; }
  double period() const noexcept { return period_; }

  std::span<const double> z() const noexcept { return z_; }
  std::span<const double> r() const noexcept { return r_; }

  /// Cumulative chord length at each node, starting at 0.
  std::vector<double> arclength() const;
  /// Total length; includes the closing segment for periodic curves.
  double length() const;
  /// Mean chord length between consecutive nodes.
  double mean_spacing() const;
  /// Longest over shortest segment.
  double spacing_ratio() const;

  /// Neighbour positions with the axis reflection (closed) or the period
  /// shift (periodic) applied at the ends.
  void prev_node(std::size_t i, double& z, double& r) const;
  void next_node(std::size_t i, double& z, double& r) const;

 private:
  std::vector<double> z_;
  std::vector<double> r_;
  int n_ = 2;
  Topology topology_ = Topology::closed_through_axis;
  double period_ = 0.0;
};

/// Height function over a uniform grid in R^n, n in {1, 2}. `interior_above`
/// selects which side of the graph is the enclosed region; the inward normal
/// points there.
struct GraphPatch {
  int n = 1;
  std::size_t nx = 0;
  std::size_t ny = 1;
  double x0 = 0.0;
  double y0 = 0.0;
  double h = 0.0;
  std::vector<double> u;
  bool interior_above = true;

  std::size_t size() const noexcept { return nx * ny; }
  std::size_t index(std::size_t i, std::size_t j) const noexcept { return j * nx + i; }
  double x(std::size_t i) const noexcept { return x0 + h * static_cast<double>(i); }
  double y(std::size_t j) const noexcept { return y0 + h * static_cast<double>(j); }
  bool on_boundary(std::size_t k) const noexcept;
  void validate() const;
};

struct CurvatureField {
  int n = 0;
  /// Node-major, ascending within each node: lambda[k*n + i].
  std::vector<double> lambda;
  std::vector<double> H;
  std::vector<double> A2;
  std::vector<double> Lambda_total;
  /// Inward unit normal. Profiles use (z, r, 0); graphs use ambient axes.
  std::vector<Vec3> normal;
  /// Nodes evaluated with one-sided stencils.
  std::vector<std::uint8_t> boundary;

  std::size_t size() const noexcept { return H.size(); }
  double lambda_min(std::size_t k) const { return lambda[k * static_cast<std::size_t>(n)]; }
  double lambda_max(std::size_t k) const {
    return lambda[k * static_cast<std::size_t>(n) + static_cast<std::size_t>(n) - 1];
  }
};

CurvatureField curvature_axisymmetric(const ProfileCurve& curve);
CurvatureField curvature_graph(const GraphPatch& patch);

/// Redistributes nodes uniformly in arclength by cubic Hermite interpolation.
/// `nodes == 0` keeps the node count. Throws a topology error when the curve
/// crosses itself.
ProfileCurve resample_arclength(const ProfileCurve& curve, std::size_t nodes = 0);

/// Same without the self-intersection scan; used inside the time loop where
/// embeddedness is checked separately at a lower cadence.
ProfileCurve resample_arclength_unchecked(const ProfileCurve& curve, std::size_t nodes = 0);

/// True when no two non-adjacent segments of the generating curve intersect.
bool is_embedded(const ProfileCurve& curve);

using Surface = std::variant<ProfileCurve, GraphPatch>;

/// A surface at one time with its curvature fields. `origin` is the ambient
/// reference point expressed in the surface's native coordinates ((z, r) for
/// profiles, (x, y, u) for graphs); it is the image of the dilation centre
/// after a parabolic rescaling and zero otherwise.
struct FlowSnapshot {
  Surface surface;
  double t = 0.0;
  CurvatureField curvature;
  Vec3 origin{0.0, 0.0, 0.0};

  bool is_profile() const noexcept { return std::holds_alternative<ProfileCurve>(surface); }
  const ProfileCurve& profile() const { return std::get<ProfileCurve>(surface); }
  const GraphPatch& graph() const { return std::get<GraphPatch>(surface); }
  int n() const;
  std::size_t size() const;
  /// Representative grid or node spacing.
  double spacing() const;
  /// Node position in native coordinates.
  Vec3 node(std::size_t k) const;
};

FlowSnapshot make_snapshot(Surface surface, double t, Vec3 origin = {0.0, 0.0, 0.0});
CurvatureField compute_curvature(const Surface& surface);

}  // namespace mcfprof
