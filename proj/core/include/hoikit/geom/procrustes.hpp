#pragma once

#include <Eigen/Core>

#include "hoikit/geom/mesh.hpp"

namespace hoikit::geom {

/// Similarity transform p -> scale * rotation * p + translation.
struct SimilarityTransform {
  double scale = 1.0;
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Vec3 translation = Vec3::Zero();

  Vec3 apply(const Vec3& p) const { return scale * (rotation * p) + translation; }
  PointCloud apply(const PointCloud& pts) const;
};

/// Least-squares similarity alignment of paired point sets: minimizes
/// sum_i || s*R*source_i + t - target_i ||^2 with det(R) = +1.
/// Requires equal sizes >= 3; throws std::invalid_argument on degenerate
/// (rank < 2) configurations.
SimilarityTransform procrustes_align(const PointCloud& source,
                                     const PointCloud& target);

/// Residual of a candidate transform, sum of squared distances.
double alignment_residual(const SimilarityTransform& t, const PointCloud& source,
                          const PointCloud& target);

}  // namespace hoikit::geom
