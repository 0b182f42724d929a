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

#include <cstddef>
#include <utility>

#include "pathmodel/canonical.hpp"
#include "pathmodel/decimate.hpp"
#include "pathmodel/model.hpp"

namespace pathmodel {

struct CorrectionResult {
    /// New keypoint sequence in demonstration coordinates.
    Polyline3 corrected;
    /// Inclusive range of replaced model keypoints.
    std::pair<std::size_t, std::size_t> redundant_range;
    /// RDP-decimated correction that was spliced in.
    Keypoints correction_keypoints;
};

/// Finds the inclusive range of model keypoints made redundant by a
/// correction whose decimated endpoints are `first_corr` and `last_corr`.
/// For each endpoint the closest model keypoint is located (ties to the
/// lower index); interior matches are refined by projecting the correction
/// endpoint onto the segment toward the next model keypoint and testing
/// whether the projection parameter falls strictly inside (0, 1). The two
/// indices are swapped if they come out crossed.
std::pair<std::size_t, std::size_t> locate_redundant_range(const Polyline3& model_kps,
                                                           const Point3& first_corr,
                                                           const Point3& last_corr);

/// Splices a demonstrated correction into a recognized model's keypoint
/// sequence: the model keypoint means are mapped into demonstration
/// coordinates with `demo_params`, the correction polyline (same frame as
/// the demonstration) is decimated with RDP, the redundant keypoint range
/// is located and replaced by the correction keypoints. Pass the winning
/// variant model from recognition so flipped or reversed frames line up.
CorrectionResult correct_path(const GaussianPathModel& model, const Polyline3& correction,
                              double rdp_epsilon, const CanonicalParams& demo_params);

}  // namespace pathmodel
