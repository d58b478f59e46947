#ifndef ATNQUANT_VOLUME_HPP
#define ATNQUANT_VOLUME_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "atnquant/errors.hpp"

namespace atnquant {

/// 4x4 homogeneous matrix, row-major. Used for voxel->world and
/// world->world maps, mm units.
using Mat4 = std::array<std::array<double, 4>, 4>;

Mat4 mat4_identity();
Mat4 mat4_mul(const Mat4& a, const Mat4& b);
Mat4 mat4_invert(const Mat4& m); // throws SingularTransform
Mat4 mat4_translation(double tx, double ty, double tz);
Mat4 mat4_scaling(double sx, double sy, double sz);
std::array<double, 3> mat4_apply(const Mat4& m, const std::array<double, 3>& p);
double mat4_det3(const Mat4& m); // determinant of the linear 3x3 part
bool mat4_close(const Mat4& a, const Mat4& b, double tol);

namespace detail {

template <typename T>
struct Grid {
  std::array<int, 3> dims{0, 0, 0};         // voxels, x/y/z
  std::array<double, 3> spacing{1, 1, 1};   // mm
  Mat4 affine = mat4_identity();            // voxel -> world, mm
  std::vector<T> data;                      // row-major, x fastest

  std::size_t voxel_count() const {
    return static_cast<std::size_t>(dims[0]) * static_cast<std::size_t>(dims[1]) *
           static_cast<std::size_t>(dims[2]);
  }
  std::size_t index(int x, int y, int z) const {
    return static_cast<std::size_t>(x) +
           static_cast<std::size_t>(dims[0]) *
               (static_cast<std::size_t>(y) +
                static_cast<std::size_t>(dims[1]) * static_cast<std::size_t>(z));
  }
  T& at(int x, int y, int z) { return data[index(x, y, z)]; }
  const T& at(int x, int y, int z) const { return data[index(x, y, z)]; }
  double voxel_volume_mm3() const { return spacing[0] * spacing[1] * spacing[2]; }
};

} // namespace detail

/// A 3D scalar grid. Voxel values carry 32-bit-real semantics after any
/// on-disk scaling has been applied.
struct VolumeImage : detail::Grid<float> {
  // QC metadata, populated by I/O and resampling.
  std::int64_t nan_replaced = 0;   // NaN voxels zeroed at load (non-strict mode)
  double oof_fraction = 0.0;       // fraction of voxels mapped outside the source
  std::vector<std::uint8_t> oof_mask; // per-voxel out-of-field flags; empty if none
};

/// Integer-labeled grid on the same geometry; 0 is background.
struct LabelVolume : detail::Grid<std::int32_t> {};

/// Dims must match exactly; spacing and affine within tolerance (mm scale).
template <typename A, typename B>
bool same_geometry(const A& a, const B& b, double tol = 1e-3) {
  if (a.dims != b.dims) return false;
  for (int i = 0; i < 3; ++i)
    if (std::abs(a.spacing[i] - b.spacing[i]) > tol) return false;
  return mat4_close(a.affine, b.affine, tol);
}

template <typename A, typename B>
void require_same_geometry(const A& a, const B& b, const char* what) {
  if (!same_geometry(a, b))
    fail(ErrorCode::geometry_mismatch, std::string(what) + ": volumes are not on the same grid");
}

} // namespace atnquant

#endif
