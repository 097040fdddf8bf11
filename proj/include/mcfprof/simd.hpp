#pragma once

// Data-parallel inner kernels. Each kernel has a portable scalar reference
// and, on x86-64, an AVX2 variant chosen at runtime. Both variants perform the
// same IEEE operations in the same order, so their results are bit-identical.

#include <cstddef>
#include <string_view>

namespace mcfprof::simd {

struct Nearest {
  std::size_t index = 0;
  double dist2 = 0.0;
};

/// Three-point (circumcircle) curvature for a batch of node triples laid out
/// as six parallel arrays. Writes the signed curvature, positive when the
/// curve bends toward the right-hand normal (t_r, -t_z), and the unit normal
/// pointing to that side.
using MengerFn = void (*)(const double* z_prev, const double* r_prev, const double* z_cur,
                          const double* r_cur, const double* z_next, const double* r_next,
                          std::size_t count, double* kappa, double* normal_z, double* normal_r);

/// Index and squared distance of the point nearest to (pz, pr). Ties resolve
/// to the lowest index.
using NearestFn = Nearest (*)(double pz, double pr, const double* z, const double* r,
                              std::size_t count);

struct Kernels {
  std::string_view name;
  MengerFn menger;
  NearestFn nearest;
};

const Kernels& scalar_kernels() noexcept;

/// Null when the binary was built without the AVX2 translation unit or the
/// running CPU lacks AVX2.
const Kernels* avx2_kernels() noexcept;

/// Kernels used by the library. Chosen once: AVX2 when available, unless the
/// environment variable MCFPROF_SIMD is set to "scalar".
const Kernels& active_kernels() noexcept;

}  // namespace mcfprof::simd
