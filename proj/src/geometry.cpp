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

#include "pathmodel/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace pathmodel {

bool is_finite(const Point3& p) {
    return std::isfinite(p.x()) && std::isfinite(p.y()) && std::isfinite(p.z());
}

bool is_finite_polyline(const Polyline3& points) {
    for (const Point3& p : points) {
        if (!is_finite(p)) return false;
    }
    return true;
}

Point3 centroid(const Polyline3& points) {
    if (points.empty()) throw std::invalid_argument("empty polyline");
    Point3 sum = Point3::Zero();
    for (const Point3& p : points) sum += p;
    return sum / static_cast<double>(points.size());
}

namespace {

Mat3 sample_covariance(const Polyline3& points, const Point3& mean) {
    Mat3 cov = Mat3::Zero();
    for (const Point3& p : points) {
        const Point3 d = p - mean;
        cov += d * d.transpose();
    }
    return cov / static_cast<double>(points.size() - 1);
}

// Flip v so its largest-magnitude component is positive; the first such
// component decides ties.
void apply_sign_convention(Eigen::Ref<Eigen::Vector3d> v) {
    int idx = 0;
    double best = std::abs(v[0]);
    for (int k = 1; k < 3; ++k) {
        if (std::abs(v[k]) > best) {
            best = std::abs(v[k]);
            idx = k;
        }
    }
    if (v[idx] < 0.0) v = -v;
}

}  // namespace

Basis3 pca_basis(const Polyline3& points) {
    if (points.size() < 2) throw std::invalid_argument("pca_basis: need at least 2 points");

    const Point3 mean = centroid(points);
    const Mat3 cov = sample_covariance(points, mean);

    double max_sq = 0.0;
    for (const Point3& p : points) max_sq = std::max(max_sq, p.squaredNorm());
    if (cov.trace() <= 1e-24 * (1.0 + max_sq)) {
        throw std::runtime_error("degenerate: zero covariance");
    }

    Eigen::SelfAdjointEigenSolver<Mat3> solver(cov);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("pca_basis: eigen decomposition failed");
    }

    Basis3 basis;
    // Solver orders eigenvalues ascending; we want descending.
    for (int i = 0; i < 3; ++i) {
        basis.eigenvalues[i] = std::max(solver.eigenvalues()[2 - i], 0.0);
        basis.axes.col(i) = solver.eigenvectors().col(2 - i);
    }
    for (int i = 0; i < 3; ++i) apply_sign_convention(basis.axes.col(i));
    if (basis.axes.determinant() < 0.0) basis.axes.col(2) = -basis.axes.col(2);
    return basis;
}

double point_segment_distance(const Point3& p, const Point3& a, const Point3& b) {
    const Point3 ab = b - a;
    const double len_sq = ab.squaredNorm();
    if (len_sq == 0.0) return (p - a).norm();
    double t = (p - a).dot(ab) / len_sq;
    t = std::clamp(t, 0.0, 1.0);
    return (p - (a + t * ab)).norm();
}

double triangle_area(const Point3& a, const Point3& b, const Point3& c) {
    return 0.5 * (b - a).cross(c - a).norm();
}

namespace {

// Half-sample reflection: ... p2 p1 p0 | p0 p1 p2 ... | p(n-1) ... repeated.
std::size_t reflect_index(long long i, std::size_t n) {
    const long long period = 2 * static_cast<long long>(n);
    long long j = i % period;
    if (j < 0) j += period;
    if (j >= static_cast<long long>(n)) j = period - 1 - j;
    return static_cast<std::size_t>(j);
}

}  // namespace

Polyline3 gaussian_smooth(const Polyline3& points, double sigma) {
    if (sigma < 0.0) throw std::invalid_argument("gaussian_smooth: negative sigma");
    if (points.empty()) throw std::invalid_argument("empty polyline");
    if (sigma == 0.0) return points;

    const int radius = static_cast<int>(std::ceil(3.0 * sigma));
    std::vector<double> kernel(2 * radius + 1);
    double norm = 0.0;
    for (int d = -radius; d <= radius; ++d) {
        const double w = std::exp(-0.5 * (d / sigma) * (d / sigma));
        kernel[static_cast<std::size_t>(d + radius)] = w;
        norm += w;
    }
    for (double& w : kernel) w /= norm;

    const std::size_t n = points.size();
    Polyline3 out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Point3 acc = Point3::Zero();
        for (int d = -radius; d <= radius; ++d) {
            const std::size_t j = reflect_index(static_cast<long long>(i) + d, n);
            acc += kernel[static_cast<std::size_t>(d + radius)] * points[j];
        }
        out[i] = acc;
    }
    return out;
}

}  // namespace pathmodel
