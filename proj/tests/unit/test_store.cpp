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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "pathmodel/store.hpp"
#include "pathmodel/synth.hpp"
#include "support/shapes.hpp"

using namespace pathmodel;

namespace {

class TempDir {
public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() /
                ("pathmodel_test_" + std::to_string(std::rand()) + std::to_string(std::rand()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }

    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

ModelLibrary tiny_library() {
    BuildParams params;
    params.rdp_epsilon = 0.05;
    ModelLibrary library;
    library.add(build_model(testshapes::teaching_sets(testshapes::zigzag(80), 4, 0.02, 1), "zigzag", params));
    library.add(build_model(testshapes::teaching_sets(testshapes::l_bend(80), 4, 0.02, 2), "l_bend", params));
    return library;
}

}  // namespace

TEST_CASE("path set roundtrip is exact") {
    TempDir dir;
    ShapeSpec spec;
    spec.kind = ShapeKind::spiral;
    spec.n_points = 64;

    PathSetFile file;
    file.label = "spiral";
    file.sets.push_back(gen_shape(spec));
    file.sets.push_back(add_noise(file.sets[0], {0.01, 5}));

    const std::string path = dir.file("sets.json");
    save_path_set(path, file);
    const PathSetFile loaded = load_path_set(path);

    CHECK(loaded.label == "spiral");
    REQUIRE(loaded.sets.size() == 2);
    for (std::size_t s = 0; s < 2; ++s) {
        REQUIRE(loaded.sets[s].size() == file.sets[s].size());
        for (std::size_t i = 0; i < file.sets[s].size(); ++i) {
            CHECK((loaded.sets[s][i] - file.sets[s][i]).cwiseAbs().maxCoeff() <= 1e-12);
        }
    }
}

TEST_CASE("path set schema violations are typed errors") {
    TempDir dir;
    const std::string path = dir.file("bad.json");

    write_file(path, R"({"format_version": 1, "label": "x", "sets": [[[0, 0, 0]]]})");
    CHECK_THROWS_AS(load_path_set(path), LoadError);
    CHECK_THROWS_WITH(load_path_set(path), doctest::Contains("set length < 2"));

    write_file(path, R"({"format_version": 1, "label": "x", "sets": [[[0, 0, 0], [1, null, 0]]]})");
    CHECK_THROWS_AS(load_path_set(path), LoadError);

    write_file(path, R"({"format_version": 2, "label": "x", "sets": []})");
    CHECK_THROWS_WITH_AS(load_path_set(path), doctest::Contains("unknown format_version"), LoadError);

    write_file(path, "{not json");
    CHECK_THROWS_AS(load_path_set(path), LoadError);

    CHECK_THROWS_AS(load_path_set(dir.file("missing.json")), LoadError);
}

TEST_CASE("NaN coordinates are rejected on save and load") {
    TempDir dir;
    PathSetFile file;
    file.label = "bad";
    file.sets.push_back({{0, 0, 0}, {std::nan(""), 0, 0}});
    CHECK_THROWS_AS(save_path_set(dir.file("nan.json"), file), std::invalid_argument);

    // JSON has no NaN literal; a null in its place must be rejected too.
    write_file(dir.file("null.json"),
               R"({"format_version": 1, "label": "x", "sets": [[[0, 0, 0], [null, 0, 0]]]})");
    CHECK_THROWS_AS(load_path_set(dir.file("null.json")), LoadError);
}

TEST_CASE("library roundtrip preserves all numeric fields") {
    TempDir dir;
    const ModelLibrary library = tiny_library();
    const std::string path = dir.file("lib.json");
    save_library(path, library);
    const ModelLibrary loaded = load_library(path);

    CHECK(loaded.filter_sigma == library.filter_sigma);
    REQUIRE(loaded.models.size() == library.models.size());
    for (std::size_t m = 0; m < library.models.size(); ++m) {
        const GaussianPathModel& a = library.models[m];
        const GaussianPathModel& b = loaded.models[m];
        CHECK(a.name == b.name);
        CHECK(a.rdp_epsilon == b.rdp_epsilon);
        CHECK(a.teaching_set_count == b.teaching_set_count);
        REQUIRE(a.keypoint_count() == b.keypoint_count());
        for (std::size_t i = 0; i < a.keypoint_count(); ++i) {
            CHECK((a.keypoints[i].mu - b.keypoints[i].mu).cwiseAbs().maxCoeff() <= 1e-12);
            CHECK((a.keypoints[i].sigma - b.keypoints[i].sigma).cwiseAbs().maxCoeff() <= 1e-12);
        }
    }
}

TEST_CASE("library schema violations are typed errors") {
    TempDir dir;
    const std::string path = dir.file("lib.json");

    write_file(path, R"({"format_version": 1, "filter_sigma": 2.0, "models": []})");
    CHECK_THROWS_WITH_AS(load_library(path), doctest::Contains("empty library"), LoadError);

    const std::string asymmetric = R"({
      "format_version": 1, "filter_sigma": 2.0,
      "models": [{
        "name": "m", "rdp_epsilon": 0.05, "keypoint_count": 2, "teaching_set_count": 4,
        "variant": {"flip_axis": "none", "reversed": false},
        "keypoints": [
          {"mu": [0, 0, 0], "sigma": [[1, 0.5, 0], [0, 1, 0], [0, 0, 1]]},
          {"mu": [1, 0, 0], "sigma": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}
        ]
      }]
    })";
    write_file(path, asymmetric);
    CHECK_THROWS_WITH_AS(load_library(path), doctest::Contains("asymmetric covariance"), LoadError);

    const std::string variant_persisted = R"({
      "format_version": 1, "filter_sigma": 2.0,
      "models": [{
        "name": "m", "rdp_epsilon": 0.05, "keypoint_count": 2, "teaching_set_count": 4,
        "variant": {"flip_axis": "x", "reversed": false},
        "keypoints": [
          {"mu": [0, 0, 0], "sigma": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]},
          {"mu": [1, 0, 0], "sigma": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}
        ]
      }]
    })";
    write_file(path, variant_persisted);
    CHECK_THROWS_WITH_AS(load_library(path), doctest::Contains("only base models"), LoadError);

    const std::string count_mismatch = R"({
      "format_version": 1, "filter_sigma": 2.0,
      "models": [{
        "name": "m", "rdp_epsilon": 0.05, "keypoint_count": 3, "teaching_set_count": 4,
        "variant": {"flip_axis": "none", "reversed": false},
        "keypoints": [
          {"mu": [0, 0, 0], "sigma": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]},
          {"mu": [1, 0, 0], "sigma": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}
        ]
      }]
    })";
    write_file(path, count_mismatch);
    CHECK_THROWS_WITH_AS(load_library(path), doctest::Contains("keypoint_count"), LoadError);
}

TEST_CASE("matrix and tune CSV writers") {
    TempDir dir;
    ConfusionMatrix matrix;
    matrix.model_names = {"a", "b"};
    matrix.demo_labels = {"d1", "d2"};
    matrix.scores = {{1.5, -2.0}, {0.25, 3.0}};
    matrix.best_model_per_demo = {"a", "b"};

    const std::string path = dir.file("matrix.csv");
    write_matrix_csv(path, matrix);
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "model,d1,d2");
    std::getline(in, line);
    CHECK(line == "a,1.5,-2");
    std::getline(in, line);
    CHECK(line == "b,0.25,3");
    std::getline(in, line);
    CHECK(line == "best,a,b");

    TuneCurve curve;
    curve.epsilons = {0.1, 0.2};
    curve.correct_scores = {5.0, 4.0};
    curve.best_incorrect_scores = {1.0, 2.0};
    curve.valid = {true, true};
    curve.selected_epsilon = 0.1;
    const std::string tune_path = dir.file("curve.csv");
    write_tune_csv(tune_path, curve);
    std::ifstream tin(tune_path);
    std::getline(tin, line);
    CHECK(line == "epsilon,correct,best_incorrect,difference");
    std::getline(tin, line);
    CHECK(line == "0.1,5,1,4");
}

TEST_CASE("saving is deterministic byte for byte") {
    TempDir dir;
    const ModelLibrary library = tiny_library();
    save_library(dir.file("a.json"), library);
    save_library(dir.file("b.json"), library);

    std::ifstream a(dir.file("a.json")), b(dir.file("b.json"));
    const std::string text_a((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
    const std::string text_b((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
    CHECK(text_a == text_b);
    CHECK(!text_a.empty());
}
