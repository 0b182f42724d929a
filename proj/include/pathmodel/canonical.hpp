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

#include <vector>

#include "pathmodel/geometry.hpp"

namespace pathmodel {

/// Invertible similarity transform used to map a point set into its
/// canonical frame and back. `rotation` is applied to centered, scaled
/// points (its rows are the principal axes); `scale` is
/// 1/sqrt(total variance) so the canonical covariance trace is 1.
struct CanonicalParams {
    Point3 centroid = Point3::Zero();
    Mat3 rotation = Mat3::Identity();
    double scale = 1.0;
};

/// One point set in the canonical frame together with the transform that
/// produced it. The canonical points have zero centroid and unit
/// covariance trace.
struct CanonicalSet {
    Polyline3 points;
    CanonicalParams params;
};

/// Canonicalizes a group of teaching sets into one shared frame. The
/// rotation is computed once from the pooled per-set-centered points, so
/// corresponding keypoints of different sets stay comparable; centering
/// and variance normalization are per set.
///
/// The shared basis is returned alongside the canonical sets. Throws if
/// any set is degenerate (the message names the set index).
std::pair<std::vector<CanonicalSet>, Basis3> canonicalize_group(const std::vector<Polyline3>& sets);

/// Canonicalizes a single demonstration in its own frame
/// (one-element group).
CanonicalSet canonicalize_single(const Polyline3& demo);

/// Inverse of the canonical map: p -> rotation^T * p / scale + centroid.
Polyline3 decanonicalize(const Polyline3& points, const CanonicalParams& params);

}  // namespace pathmodel
