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

#include "pathmodel/decimate.hpp"

#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>

namespace pathmodel {

namespace {

void rdp_recurse(const Polyline3& points, std::size_t first, std::size_t last, double epsilon,
                 std::vector<std::size_t>& kept) {
    if (last - first < 2) return;

    std::size_t split = first;
    double max_dist = -1.0;
    for (std::size_t i = first + 1; i < last; ++i) {
        const double d = point_segment_distance(points[i], points[first], points[last]);
        if (d > max_dist) {
            max_dist = d;
            split = i;
        }
    }
    if (max_dist > epsilon) {
        rdp_recurse(points, first, split, epsilon, kept);
        kept.push_back(split);
        rdp_recurse(points, split, last, epsilon, kept);
    }
}

Keypoints gather(const Polyline3& points, std::vector<std::size_t> indices) {
    Keypoints out;
    out.source_indices = std::move(indices);
    out.points.reserve(out.source_indices.size());
    for (std::size_t idx : out.source_indices) out.points.push_back(points[idx]);
    return out;
}

struct HeapEntry {
    double area;
    std::size_t index;
    std::uint64_t version;

    bool operator>(const HeapEntry& other) const {
        if (area != other.area) return area > other.area;
        return index > other.index;
    }
};

}  // namespace

Keypoints rdp(const Polyline3& points, double epsilon) {
    if (points.size() < 2) throw std::invalid_argument("rdp: need at least 2 points");
    if (epsilon < 0.0) throw std::invalid_argument("rdp: negative epsilon");

    std::vector<std::size_t> kept;
    kept.push_back(0);
    rdp_recurse(points, 0, points.size() - 1, epsilon, kept);
    kept.push_back(points.size() - 1);
    return gather(points, std::move(kept));
}

Keypoints vw(const Polyline3& points, std::size_t target_count) {
    const std::size_t n = points.size();
    if (target_count < 2 || target_count > n) {
        throw std::invalid_argument("vw: target_count out of range [2, len]");
    }

    // Doubly linked list over indices; lazy-invalidation min-heap keyed by
    // (area, index) so equal areas resolve to the smallest index, matching
    // a full rescan.
    std::vector<std::size_t> prev(n), next(n);
    std::vector<double> area(n, std::numeric_limits<double>::infinity());
    std::vector<std::uint64_t> version(n, 0);
    std::vector<bool> alive(n, true);

    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<HeapEntry>> heap;
    for (std::size_t i = 0; i < n; ++i) {
        prev[i] = (i == 0) ? n : i - 1;
        next[i] = (i == n - 1) ? n : i + 1;
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        area[i] = triangle_area(points[i - 1], points[i], points[i + 1]);
        heap.push({area[i], i, 0});
    }

    std::size_t remaining = n;
    while (remaining > target_count) {
        const HeapEntry entry = heap.top();
        heap.pop();
        if (!alive[entry.index] || entry.version != version[entry.index]) continue;

        const std::size_t i = entry.index;
        alive[i] = false;
        --remaining;
        const std::size_t p = prev[i];
        const std::size_t q = next[i];
        next[p] = q;
        prev[q] = p;

        for (std::size_t j : {p, q}) {
            if (prev[j] == n || next[j] == n) continue;  // endpoint
            area[j] = triangle_area(points[prev[j]], points[j], points[next[j]]);
            ++version[j];
            heap.push({area[j], j, version[j]});
        }
    }

    std::vector<std::size_t> kept;
    kept.reserve(target_count);
    for (std::size_t i = 0; i != n; i = next[i]) kept.push_back(i);
    return gather(points, std::move(kept));
}

}  // namespace pathmodel
