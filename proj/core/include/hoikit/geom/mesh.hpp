#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hoikit/common.hpp"

namespace hoikit::geom {

using Vec3 = Eigen::Vector3d;
using PointCloud = std::vector<Vec3>;

/// Triangle mesh: positions in meters, faces as 0-based vertex index triples.
struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;

  /// Throws std::invalid_argument on out-of-range face indices or non-finite
  /// coordinates.
  void validate() const;

  double face_area(int face) const;
  Vec3 centroid() const;
};

/// A fixed location on a mesh surface: face index plus barycentric weights.
/// Surface points stay meaningful while the underlying vertices deform, which
/// is how anchors track a posed body.
struct SurfacePoint {
  int face_index = 0;
  Vec3 barycentric = Vec3(1.0, 0.0, 0.0);

  bool valid_weights(double tol = 1e-9) const {
    return barycentric.minCoeff() >= 0.0 &&
           std::abs(barycentric.sum() - 1.0) < tol;
  }
};

/// Reads an ASCII OBJ. Only `v` and `f` records are honored; polygon faces
/// are fan-triangulated; normal/texcoord indices in `f` entries are ignored.
/// Throws std::runtime_error with the offending line number on parse errors,
/// non-finite coordinates, or out-of-range indices.
Mesh load_obj(const std::string& path);
Mesh parse_obj(std::istream& in, const std::string& name);

/// Writes `v x y z` / `f i j k` records with round-trip-exact doubles.
void save_obj(const Mesh& mesh, const std::string& path);
void write_obj(const Mesh& mesh, std::ostream& out);

/// Area-weighted uniform sampling of the mesh surface. Deterministic for a
/// fixed seed: face choice by cumulative-area inversion, position by the
/// square-root barycentric trick. Throws if the total surface area is zero.
std::vector<SurfacePoint> sample_surface(const Mesh& mesh, int count,
                                         std::uint64_t seed);

/// Position of a surface point under the mesh's current vertex positions.
Vec3 locate(const Mesh& mesh, const SurfacePoint& sp);

/// Batch version of locate().
std::vector<Vec3> locate_all(const Mesh& mesh,
                             const std::vector<SurfacePoint>& sps);

}  // namespace hoikit::geom
