#pragma once

#include <Eigen/Core>

namespace topreg {

/// A sampled point set with optional intrinsic coordinates and responses.
/// Matrices/vectors of size zero denote absent optional fields.
struct PointCloud {
  Eigen::MatrixXd points;          // n x D ambient coordinates
  Eigen::MatrixXd latent;          // n x d intrinsic parameters, optional
  Eigen::VectorXd clean_response;  // f*(X_i), optional
  Eigen::VectorXd response;        // Y_i, optional

  Eigen::Index size() const { return points.rows(); }
  Eigen::Index ambient_dim() const { return points.cols(); }

  bool has_latent() const { return latent.size() > 0; }
  bool has_clean() const { return clean_response.size() > 0; }
  bool has_response() const { return response.size() > 0; }
};

/// Throws std::invalid_argument if sizes are inconsistent or any
/// coordinate is non-finite.
void validate(const PointCloud& cloud);

}  // namespace topreg
