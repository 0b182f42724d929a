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

#include "pathmodel/canonical.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pathmodel {

namespace {

// Trace of the sample covariance (divisor n-1) of a centered set.
double centered_variance_trace(const Polyline3& centered) {
    double sum = 0.0;
    for (const Point3& p : centered) sum += p.squaredNorm();
    return sum / static_cast<double>(centered.size() - 1);
}

void validate_set(const Polyline3& set, std::size_t index) {
    const std::string where = "set " + std::to_string(index);
    if (set.size() < 2) throw std::invalid_argument("canonicalize: " + where + " has fewer than 2 points");
    if (!is_finite_polyline(set)) throw std::invalid_argument("canonicalize: " + where + " has non-finite coordinates");
}

}  // namespace

std::pair<std::vector<CanonicalSet>, Basis3> canonicalize_group(const std::vector<Polyline3>& sets) {
    if (sets.empty()) throw std::invalid_argument("canonicalize: no input sets");

    std::vector<Polyline3> centered(sets.size());
    std::vector<Point3> means(sets.size());
    std::vector<double> traces(sets.size());

    std::size_t total = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        validate_set(sets[i], i);
        means[i] = centroid(sets[i]);
        centered[i].reserve(sets[i].size());
        double max_sq = 0.0;
        for (const Point3& p : sets[i]) {
            centered[i].push_back(p - means[i]);
            max_sq = std::max(max_sq, p.squaredNorm());
        }
        traces[i] = centered_variance_trace(centered[i]);
        if (traces[i] <= 1e-24 * (1.0 + max_sq)) {
            throw std::runtime_error("canonicalize: degenerate set (zero variance): set " + std::to_string(i));
        }
        total += sets[i].size();
    }

    // Shared rotation from the pooled centered data.
    Polyline3 pooled;
    pooled.reserve(total);
    for (const Polyline3& c : centered) pooled.insert(pooled.end(), c.begin(), c.end());
    const Basis3 basis = pca_basis(pooled);
    const Mat3 rotation = basis.axes.transpose();

    std::vector<CanonicalSet> out(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const double scale = 1.0 / std::sqrt(traces[i]);
        out[i].params = CanonicalParams{means[i], rotation, scale};
        out[i].points.reserve(centered[i].size());
        for (const Point3& p : centered[i]) out[i].points.push_back(rotation * (scale * p));
    }
    return {std::move(out), basis};
}

CanonicalSet canonicalize_single(const Polyline3& demo) {
    auto [sets, basis] = canonicalize_group({demo});
    return std::move(sets.front());
}

Polyline3 decanonicalize(const Polyline3& points, const CanonicalParams& params) {
    if (!(params.scale > 0.0) || !std::isfinite(params.scale)) {
        throw std::invalid_argument("decanonicalize: scale must be positive and finite");
    }
    const Mat3 inverse_rotation = params.rotation.transpose();
    Polyline3 out;
    out.reserve(points.size());
    for (const Point3& p : points) {
        out.push_back(inverse_rotation * p / params.scale + params.centroid);
    }
    return out;
}

}  // namespace pathmodel
