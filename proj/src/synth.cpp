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

#include "pathmodel/synth.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace pathmodel {

std::string to_string(ShapeKind kind) {
    switch (kind) {
        case ShapeKind::parabola: return "parabola";
        case ShapeKind::rectangle: return "rectangle";
        case ShapeKind::quarter_circle: return "quarter_circle";
        case ShapeKind::spiral: return "spiral";
        case ShapeKind::half_circle: return "half_circle";
    }
    throw std::logic_error("unknown shape kind");
}

ShapeKind shape_kind_from_string(const std::string& name) {
    if (name == "parabola") return ShapeKind::parabola;
    if (name == "rectangle") return ShapeKind::rectangle;
    if (name == "quarter_circle") return ShapeKind::quarter_circle;
    if (name == "spiral") return ShapeKind::spiral;
    if (name == "half_circle") return ShapeKind::half_circle;
    throw std::invalid_argument("unknown shape kind: " + name);
}

namespace {

constexpr double kPi = std::numbers::pi;

Point3 rectangle_point(double s, double w, double h) {
    // Perimeter parameter s in [0, 2(w+h)], counter-clockwise from the
    // origin corner.
    if (s <= w) return {s, 0.0, 0.0};
    s -= w;
    if (s <= h) return {w, s, 0.0};
    s -= h;
    if (s <= w) return {w - s, h, 0.0};
    s -= w;
    return {0.0, h - s, 0.0};
}

}  // namespace

Polyline3 gen_shape(const ShapeSpec& spec) {
    if (spec.n_points < 2) throw std::invalid_argument("gen_shape: n_points must be >= 2");
    if (spec.radius <= 0.0 || spec.width <= 0.0 || spec.height <= 0.0 || spec.turns <= 0.0 ||
        spec.coeff <= 0.0 || spec.pitch < 0.0) {
        throw std::invalid_argument("gen_shape: size parameters must be positive");
    }

    const std::size_t n = spec.n_points;
    Polyline3 out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = static_cast<double>(i) / static_cast<double>(n - 1);  // [0, 1]
        switch (spec.kind) {
            case ShapeKind::parabola: {
                const double x = -1.0 + 2.0 * u;
                out.push_back({x, spec.coeff * x * x, 0.0});
                break;
            }
            case ShapeKind::rectangle: {
                const double perimeter = 2.0 * (spec.width + spec.height);
                out.push_back(rectangle_point(u * perimeter, spec.width, spec.height));
                break;
            }
            case ShapeKind::quarter_circle: {
                const double theta = u * 0.5 * kPi;
                out.push_back({spec.radius * std::cos(theta), spec.radius * std::sin(theta), 0.0});
                break;
            }
            case ShapeKind::spiral: {
                const double phi = u * spec.turns * 2.0 * kPi;
                const double r = spec.radius * u;
                out.push_back({r * std::cos(phi), r * std::sin(phi), spec.pitch * phi / (2.0 * kPi)});
                break;
            }
            case ShapeKind::half_circle: {
                const double theta = u * kPi;
                out.push_back({spec.radius * std::cos(theta), spec.radius * std::sin(theta), 0.0});
                break;
            }
        }
    }
    return out;
}

namespace {

// Standard normal draws from mt19937_64 via Box-Muller. Implemented by
// hand because std::normal_distribution's stream is not specified by the
// standard and differs between library implementations.
class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t seed) : engine_(seed) {}

    double operator()() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();        // [0, 1)
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * kPi * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace

Polyline3 add_noise(const Polyline3& points, const NoiseSpec& noise) {
    if (noise.sigma < 0.0) throw std::invalid_argument("add_noise: negative sigma");
    if (noise.sigma == 0.0) return points;

    NormalSampler sample(noise.seed);
    Polyline3 out;
    out.reserve(points.size());
    for (const Point3& p : points) {
        out.push_back({p.x() + noise.sigma * sample(), p.y() + noise.sigma * sample(),
                       p.z() + noise.sigma * sample()});
    }
    return out;
}

double relative_sigma(const Polyline3& points, double fraction) {
    if (points.empty()) throw std::invalid_argument("empty polyline");
    if (fraction < 0.0) throw std::invalid_argument("relative_sigma: negative fraction");
    Point3 lo = points.front();
    Point3 hi = points.front();
    for (const Point3& p : points) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
    }
    return fraction * (hi - lo).norm();
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index) {
    // splitmix64 over base_seed + index increments.
    std::uint64_t z = base_seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace pathmodel
