#include "hoikit/geom/procrustes.hpp"

#include <Eigen/Dense>

namespace hoikit::geom {

PointCloud SimilarityTransform::apply(const PointCloud& pts) const {
  PointCloud out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(apply(p));
  return out;
}

SimilarityTransform procrustes_align(const PointCloud& source,
                                     const PointCloud& target) {
  if (source.size() != target.size())
    throw std::invalid_argument("procrustes_align: point counts differ");
  const auto n = static_cast<Eigen::Index>(source.size());
  if (n < 3) throw std::invalid_argument("procrustes_align: need >= 3 points");

  Vec3 mu_s = Vec3::Zero(), mu_t = Vec3::Zero();
  for (Eigen::Index i = 0; i < n; ++i) {
    mu_s += source[static_cast<std::size_t>(i)];
    mu_t += target[static_cast<std::size_t>(i)];
  }
  mu_s /= static_cast<double>(n);
  mu_t /= static_cast<double>(n);

  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  double var_s = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vec3 ps = source[static_cast<std::size_t>(i)] - mu_s;
    const Vec3 pt = target[static_cast<std::size_t>(i)] - mu_t;
    cov += pt * ps.transpose();
    var_s += ps.squaredNorm();
  }
  cov /= static_cast<double>(n);
  var_s /= static_cast<double>(n);

  Eigen::JacobiSVD<Eigen::Matrix3d> svd(cov, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Vector3d sv = svd.singularValues();
  if (sv[1] <= 1e-12 * std::max(1.0, sv[0]))
    throw std::invalid_argument("procrustes_align: degenerate configuration (rank < 2)");

  // Umeyama: flip the smallest singular direction if needed to keep det +1.
  Eigen::Vector3d d = Eigen::Vector3d::Ones();
  if ((svd.matrixU() * svd.matrixV().transpose()).determinant() < 0.0) d[2] = -1.0;

  SimilarityTransform out;
  out.rotation = svd.matrixU() * d.asDiagonal() * svd.matrixV().transpose();
  out.scale = sv.dot(d) / var_s;
  out.translation = mu_t - out.scale * (out.rotation * mu_s);
  return out;
}

double alignment_residual(const SimilarityTransform& t, const PointCloud& source,
                          const PointCloud& target) {
  if (source.size() != target.size())
    throw std::invalid_argument("alignment_residual: point counts differ");
  double r = 0.0;
  for (std::size_t i = 0; i < source.size(); ++i)
    r += (t.apply(source[i]) - target[i]).squaredNorm();
  return r;
}

}  // namespace hoikit::geom
