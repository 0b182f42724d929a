// Copyright 2026 The pathmodel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

namespace pathmodel {

using Point3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Ordered sequence of 3-D points. Coordinates are in whatever unit the
/// source data uses; canonicalization makes them dimensionless.
using Polyline3 = std::vector<Point3>;

/// Principal-axis frame of a point set: `axes` holds one orthonormal
/// eigenvector per column, `eigenvalues` the matching variances in
/// descending order. det(axes) is always +1.
struct Basis3 {
    Mat3 axes = Mat3::Identity();
    Point3 eigenvalues = Point3::Zero();
};

Point3 centroid(const Polyline3& points);

/// Principal component analysis of a point set. Centers a copy of the
/// input, eigen-decomposes the sample covariance (divisor n-1) and applies
/// a deterministic sign convention: each eigenvector is flipped so that its
/// largest-magnitude component is positive (first component wins ties), and
/// the third axis is negated afterwards if the frame came out left-handed.
///
/// Throws std::invalid_argument for fewer than 2 points and
/// std::runtime_error ("degenerate: zero covariance") when all points
/// coincide.
Basis3 pca_basis(const Polyline3& points);

/// Euclidean distance from p to the segment [a, b]; a == b degenerates to
/// the distance to a.
double point_segment_distance(const Point3& p, const Point3& a, const Point3& b);

double triangle_area(const Point3& a, const Point3& b, const Point3& c);

/// Per-coordinate 1-D Gaussian smoothing, sigma measured in samples.
/// The kernel is truncated at radius ceil(3*sigma) and renormalized;
/// boundaries are handled by half-sample reflection (... c b a | a b c ...),
/// which keeps the per-coordinate sum exact. sigma == 0 returns the input
/// unchanged.
Polyline3 gaussian_smooth(const Polyline3& points, double sigma);

bool is_finite(const Point3& p);
bool is_finite_polyline(const Polyline3& points);

}  // namespace pathmodel
