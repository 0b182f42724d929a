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
#include <vector>

#include "pathmodel/geometry.hpp"

namespace pathmodel {

/// Decimation result: a subsequence of the source polyline. Both endpoints
/// are always retained, indices are strictly increasing and
/// points[i] == source[source_indices[i]].
struct Keypoints {
    Polyline3 points;
    std::vector<std::size_t> source_indices;

    std::size_t size() const { return points.size(); }
};

/// Ramer-Douglas-Peucker decimation. A point survives when its distance to
/// the current segment strictly exceeds epsilon, so epsilon == 0 keeps
/// everything except exactly-collinear interior points. Epsilon is
/// interpreted in the units of the input; the pipeline runs it on
/// canonicalized (variance-normalized) data.
Keypoints rdp(const Polyline3& points, double epsilon);

/// Visvalingam-Whyatt decimation to an exact target count: repeatedly
/// removes the interior point whose triangle with its two surviving
/// neighbors has the smallest area (ties go to the smallest index),
/// recomputing neighbor areas after each removal. Endpoints are never
/// removed.
Keypoints vw(const Polyline3& points, std::size_t target_count);

}  // namespace pathmodel
