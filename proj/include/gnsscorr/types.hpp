#pragma once

#include <Eigen/Core>
#include <Eigen/Dense>

namespace gnsscorr {

using Scalar = double;

using Eigen::Index;

using Vector3 = Eigen::Matrix<Scalar, 3, 1>;
using Vector4 = Eigen::Matrix<Scalar, 4, 1>;
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;
using Matrix4 = Eigen::Matrix<Scalar, 4, 4>;
using MatrixX =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MatrixX4 = Eigen::Matrix<Scalar, Eigen::Dynamic, 4, Eigen::RowMajor>;

// ECEF position or free vector, meters.
using EcefPosition = Vector3;

// Local-frame vector: x=north, y=east, z=down (meters, or unitless for a
// line-of-sight direction).
using NedVector = Vector3;

}  // namespace gnsscorr
