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

#include <doctest.h>

#include "pathmodel/decimate.hpp"
#include "pathmodel/tune.hpp"
#include "support/shapes.hpp"

using namespace pathmodel;

namespace {

std::vector<GaussianPathModel> other_shape_models() {
    BuildParams params;
    params.rdp_epsilon = 0.05;
    std::vector<GaussianPathModel> models;
    for (const char* name : {"parabola", "zigzag"}) {
        for (const auto& shape : testshapes::library_shapes()) {
            if (shape.name == name) {
                models.push_back(
                    build_model(testshapes::teaching_sets(shape.generate(150), 4, 0.02, 21), name, params));
            }
        }
    }
    return models;
}

}  // namespace

TEST_CASE("tune_epsilon single grid point selects it") {
    const auto teaching = testshapes::teaching_sets(testshapes::u_channel(150), 4, 0.02, 31);
    const Polyline3 demo = testshapes::u_channel(150);

    const TuneCurve curve = tune_epsilon(teaching, demo, other_shape_models(), {0.05}, 2.0);
    REQUIRE(curve.epsilons.size() == 1);
    CHECK(curve.selected_epsilon == 0.05);
    CHECK(curve.valid[0]);
    CHECK(curve.correct_scores[0] > curve.best_incorrect_scores[0]);
}

TEST_CASE("tune_epsilon selects the exact argmax with ties to the smaller epsilon") {
    const auto teaching = testshapes::teaching_sets(testshapes::u_channel(150), 4, 0.02, 32);
    const Polyline3 demo = testshapes::u_channel(150);
    const std::vector<double> grid{0.02, 0.05, 0.1, 0.2, 0.4};

    const TuneCurve curve = tune_epsilon(teaching, demo, other_shape_models(), grid, 2.0);
    REQUIRE(curve.epsilons.size() == grid.size());

    double best = -1e300;
    double best_eps = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!curve.valid[i]) continue;
        const double diff = curve.correct_scores[i] - curve.best_incorrect_scores[i];
        if (diff > best) {  // strict: first (smallest) epsilon wins ties
            best = diff;
            best_eps = curve.epsilons[i];
        }
    }
    CHECK(curve.selected_epsilon == best_eps);
}

TEST_CASE("keypoint counts are non-increasing along the ascending grid") {
    const auto teaching = testshapes::teaching_sets(testshapes::s_curve(150), 4, 0.02, 33);
    const std::vector<double> grid{0.01, 0.05, 0.1, 0.3};

    std::size_t previous = SIZE_MAX;
    for (double epsilon : grid) {
        BuildParams params;
        params.rdp_epsilon = epsilon;
        const GaussianPathModel model = build_model(teaching, "s", params);
        CHECK(model.keypoint_count() <= previous);
        previous = model.keypoint_count();
    }
}

TEST_CASE("tune_epsilon is deterministic") {
    const auto teaching = testshapes::teaching_sets(testshapes::u_channel(120), 4, 0.02, 35);
    const Polyline3 demo = testshapes::u_channel(120);
    const auto others = other_shape_models();
    const std::vector<double> grid{0.03, 0.08, 0.2};

    const TuneCurve a = tune_epsilon(teaching, demo, others, grid, 2.0);
    const TuneCurve b = tune_epsilon(teaching, demo, others, grid, 2.0);
    CHECK(a.selected_epsilon == b.selected_epsilon);
    CHECK(a.correct_scores == b.correct_scores);
    CHECK(a.best_incorrect_scores == b.best_incorrect_scores);
}

TEST_CASE("tune_epsilon validates its inputs") {
    const auto teaching = testshapes::teaching_sets(testshapes::u_channel(80), 4, 0.02, 34);
    const Polyline3 demo = testshapes::u_channel(80);
    const auto others = other_shape_models();

    CHECK_THROWS_AS(tune_epsilon(teaching, demo, others, {}, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(tune_epsilon(teaching, demo, others, {0.2, 0.1}, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(tune_epsilon(teaching, demo, {}, {0.1}, 2.0), std::invalid_argument);
}
