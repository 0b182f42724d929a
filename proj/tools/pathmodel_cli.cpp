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

// Command-line front end for the path model pipeline. Every subcommand is
// a thin adapter over the library; all numeric work happens there.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "pathmodel/correct.hpp"
#include "pathmodel/model.hpp"
#include "pathmodel/recognize.hpp"
#include "pathmodel/store.hpp"
#include "pathmodel/synth.hpp"
#include "pathmodel/tune.hpp"

namespace {

enum class LogLevel { quiet = 0, info = 1, debug = 2 };

LogLevel log_level() {
    static const LogLevel level = [] {
        const char* env = std::getenv("PATHMODEL_LOG");
        if (env == nullptr) return LogLevel::info;
        const std::string value(env);
        if (value == "quiet") return LogLevel::quiet;
        if (value == "debug") return LogLevel::debug;
        return LogLevel::info;
    }();
    return level;
}

void log_info(const std::string& message) {
    if (log_level() >= LogLevel::info) std::cerr << message << "\n";
}

void log_debug(const std::string& message) {
    if (log_level() >= LogLevel::debug) std::cerr << message << "\n";
}

pathmodel::Polyline3 load_single_demo(const std::string& path) {
    const pathmodel::PathSetFile file = pathmodel::load_path_set(path);
    if (file.sets.size() != 1) {
        throw std::runtime_error(path + ": expected exactly one set in a demonstration file, found " +
                                 std::to_string(file.sets.size()));
    }
    return file.sets.front();
}

std::vector<double> parse_grid(const std::string& text) {
    // a:b:step, inclusive of both ends where the step lands on them.
    const auto first = text.find(':');
    const auto second = text.find(':', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos) {
        throw std::runtime_error("grid must be a:b:step");
    }
    const double a = std::stod(text.substr(0, first));
    const double b = std::stod(text.substr(first + 1, second - first - 1));
    const double step = std::stod(text.substr(second + 1));
    if (!(step > 0.0) || b < a) throw std::runtime_error("grid must satisfy a <= b and step > 0");
    std::vector<double> grid;
    for (double e = a; e <= b + 0.5 * step; e += step) grid.push_back(e);
    return grid;
}

int run_gen(const std::string& shape, std::size_t sets, std::size_t points, double noise_rel,
            std::uint64_t seed, const std::string& out) {
    pathmodel::ShapeSpec spec;
    spec.kind = pathmodel::shape_kind_from_string(shape);
    spec.n_points = points;
    const pathmodel::Polyline3 base = pathmodel::gen_shape(spec);
    const double sigma = pathmodel::relative_sigma(base, noise_rel);

    pathmodel::PathSetFile file;
    file.label = shape;
    for (std::size_t i = 0; i < sets; ++i) {
        file.sets.push_back(pathmodel::add_noise(base, {sigma, pathmodel::derive_seed(seed, i)}));
    }
    pathmodel::save_path_set(out, file);
    log_info("wrote " + std::to_string(sets) + " set(s) of " + std::to_string(points) + " points to " + out);
    return 0;
}

int run_build(const std::vector<std::string>& inputs, double epsilon, double filter_sigma,
              const std::string& name, const std::string& out) {
    std::vector<pathmodel::Polyline3> sets;
    for (const std::string& path : inputs) {
        pathmodel::PathSetFile file = pathmodel::load_path_set(path);
        log_debug(path + ": " + std::to_string(file.sets.size()) + " teaching set(s)");
        for (pathmodel::Polyline3& s : file.sets) sets.push_back(std::move(s));
    }

    pathmodel::BuildParams params;
    params.rdp_epsilon = epsilon;
    params.filter_sigma = filter_sigma;
    const pathmodel::GaussianPathModel model = pathmodel::build_model(sets, name, params);

    pathmodel::ModelLibrary library;
    if (std::filesystem::exists(out)) {
        library = pathmodel::load_library(out);
        if (library.filter_sigma != filter_sigma) {
            throw std::runtime_error(out + ": library filter_sigma " +
                                     pathmodel::format_double(library.filter_sigma) +
                                     " does not match --filter-sigma " + pathmodel::format_double(filter_sigma));
        }
    } else {
        library.filter_sigma = filter_sigma;
    }
    library.add(model);
    pathmodel::save_library(out, library);
    log_info("added model '" + name + "' (" + std::to_string(model.keypoint_count()) + " keypoints) to " + out);
    return 0;
}

void print_result(const pathmodel::RecognitionResult& result) {
    std::cout << "rank,model,variant,score\n";
    for (std::size_t i = 0; i < result.ranked.size(); ++i) {
        const pathmodel::ScoredCandidate& entry = result.ranked[i];
        std::cout << (i + 1) << ',' << entry.name << ',' << pathmodel::variant_label(entry.variant) << ','
                  << (entry.scored ? pathmodel::format_double(entry.score) : "-inf") << '\n';
    }
    std::cout << "best: " << result.best().name << " (" << pathmodel::variant_label(result.best().variant)
              << ")\n";
}

int run_recognize(const std::string& lib_path, const std::string& demo_path, const std::string& report) {
    const pathmodel::ModelLibrary library = pathmodel::load_library(lib_path);
    const pathmodel::Polyline3 demo = load_single_demo(demo_path);
    const pathmodel::RecognitionResult result = pathmodel::recognize(demo, library);
    print_result(result);
    if (!report.empty()) {
        pathmodel::save_recognition_report(report, result);
        log_info("wrote report to " + report);
    }
    return 0;
}

int run_decanon(const std::string& lib_path, const std::string& demo_path, const std::string& model_name,
                const std::string& out) {
    const pathmodel::ModelLibrary full = pathmodel::load_library(lib_path);
    const pathmodel::GaussianPathModel* model = full.find(model_name);
    if (model == nullptr) throw std::runtime_error(lib_path + ": no model named '" + model_name + "'");

    pathmodel::ModelLibrary single;
    single.filter_sigma = full.filter_sigma;
    single.add(*model);

    const pathmodel::Polyline3 demo = load_single_demo(demo_path);
    const pathmodel::RecognitionResult result = pathmodel::recognize(demo, single);
    const pathmodel::ScoredCandidate& best = result.best();
    log_debug("best variant: " + pathmodel::variant_label(best.variant));

    pathmodel::Polyline3 means;
    for (const pathmodel::GaussianPathModel& candidate : single.candidates()) {
        if (candidate.variant == best.variant) {
            for (const pathmodel::KeypointGaussian& kp : candidate.keypoints) means.push_back(kp.mu);
        }
    }
    pathmodel::PathSetFile file;
    file.label = model_name;
    file.sets.push_back(pathmodel::decanonicalize(means, result.demo_params));
    pathmodel::save_path_set(out, file);
    log_info("wrote keypoints of '" + model_name + "' in demonstration coordinates to " + out);
    return 0;
}

int run_correct(const std::string& lib_path, const std::string& demo_path, const std::string& correction_path,
                double epsilon, const std::string& out) {
    const pathmodel::ModelLibrary library = pathmodel::load_library(lib_path);
    const pathmodel::Polyline3 demo = load_single_demo(demo_path);
    const pathmodel::Polyline3 correction = load_single_demo(correction_path);

    const pathmodel::RecognitionResult result = pathmodel::recognize(demo, library);
    const pathmodel::ScoredCandidate& best = result.best();
    log_info("recognized '" + best.name + "' (" + pathmodel::variant_label(best.variant) + ")");

    const pathmodel::GaussianPathModel* base = library.find(best.name);
    const pathmodel::GaussianPathModel* winner = nullptr;
    std::vector<pathmodel::GaussianPathModel> variants = pathmodel::make_variants(*base);
    for (const pathmodel::GaussianPathModel& v : variants) {
        if (v.variant == best.variant) winner = &v;
    }

    const pathmodel::CorrectionResult corrected =
        pathmodel::correct_path(*winner, correction, epsilon, result.demo_params);
    log_debug("replaced keypoints [" + std::to_string(corrected.redundant_range.first) + ", " +
              std::to_string(corrected.redundant_range.second) + "]");

    pathmodel::PathSetFile file;
    file.label = best.name + "_corrected";
    file.sets.push_back(corrected.corrected);
    pathmodel::save_path_set(out, file);
    log_info("wrote corrected path (" + std::to_string(corrected.corrected.size()) + " keypoints) to " + out);
    return 0;
}

int run_tune(const std::string& teach_path, const std::string& demo_path, const std::string& lib_path,
             const std::string& grid_text, const std::string& out) {
    const pathmodel::PathSetFile teach = pathmodel::load_path_set(teach_path);
    const pathmodel::Polyline3 demo = load_single_demo(demo_path);
    const pathmodel::ModelLibrary library = pathmodel::load_library(lib_path);
    const std::vector<double> grid = parse_grid(grid_text);

    const pathmodel::TuneCurve curve =
        pathmodel::tune_epsilon(teach.sets, demo, library.models, grid, library.filter_sigma);
    pathmodel::write_tune_csv(out, curve);
    std::cout << "selected_epsilon: " << pathmodel::format_double(curve.selected_epsilon) << "\n";
    log_info("wrote tolerance sweep to " + out);
    return 0;
}

int run_matrix(const std::string& lib_path, const std::vector<std::string>& demo_paths, const std::string& out) {
    const pathmodel::ModelLibrary library = pathmodel::load_library(lib_path);
    std::vector<std::pair<std::string, pathmodel::Polyline3>> demos;
    for (const std::string& path : demo_paths) {
        pathmodel::PathSetFile file = pathmodel::load_path_set(path);
        if (file.sets.size() != 1) {
            throw std::runtime_error(path + ": expected exactly one set in a demonstration file");
        }
        demos.emplace_back(file.label, std::move(file.sets.front()));
    }
    const pathmodel::ConfusionMatrix matrix = pathmodel::confusion_matrix(demos, library);
    pathmodel::write_matrix_csv(out, matrix);
    for (std::size_t col = 0; col < matrix.demo_labels.size(); ++col) {
        log_debug(matrix.demo_labels[col] + " -> " + matrix.best_model_per_demo[col]);
    }
    log_info("wrote " + std::to_string(matrix.model_names.size()) + "x" +
             std::to_string(matrix.demo_labels.size()) + " score matrix to " + out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gaussian path models: build, recognize, correct and tune 3-D path shapes"};
    app.require_subcommand(1);

    // gen
    std::string gen_shape, gen_out;
    std::size_t gen_sets = 8, gen_points = 200;
    double gen_noise_rel = 0.02;
    std::uint64_t gen_seed = 0;
    CLI::App* gen = app.add_subcommand("gen", "Generate synthetic teaching or demonstration sets");
    gen->add_option("--shape", gen_shape, "parabola|rectangle|quarter_circle|spiral|half_circle")->required();
    gen->add_option("--sets", gen_sets, "Number of sets");
    gen->add_option("--points", gen_points, "Points per set");
    gen->add_option("--noise-rel", gen_noise_rel, "Noise sigma as a fraction of the bounding-box diagonal");
    gen->add_option("--seed", gen_seed, "Base RNG seed");
    gen->add_option("--out", gen_out, "Output path-set JSON")->required();

    // build
    std::vector<std::string> build_in;
    std::string build_name, build_out;
    double build_epsilon = 0.0, build_filter_sigma = pathmodel::kDefaultFilterSigma;
    CLI::App* build = app.add_subcommand("build", "Build a Gaussian path model from teaching sets");
    build->add_option("--in", build_in, "Teaching path-set JSON file(s)")->required()->expected(-1);
    build->add_option("--epsilon", build_epsilon, "RDP tolerance in canonical units")->required();
    build->add_option("--filter-sigma", build_filter_sigma, "Gaussian filter width in samples");
    build->add_option("--name", build_name, "Model name")->required();
    build->add_option("--out", build_out, "Library JSON (created or appended to)")->required();

    // recognize
    std::string rec_lib, rec_demo, rec_report;
    CLI::App* rec = app.add_subcommand("recognize", "Rank library models against a demonstration");
    rec->add_option("--lib", rec_lib, "Library JSON")->required();
    rec->add_option("--demo", rec_demo, "Demonstration path-set JSON (single set)")->required();
    rec->add_option("--report", rec_report, "Optional JSON report output");

    // decanon
    std::string dec_lib, dec_demo, dec_model, dec_out;
    CLI::App* dec = app.add_subcommand("decanon", "Map a model's keypoints into demonstration coordinates");
    dec->add_option("--lib", dec_lib, "Library JSON")->required();
    dec->add_option("--demo", dec_demo, "Demonstration path-set JSON (single set)")->required();
    dec->add_option("--model", dec_model, "Model name")->required();
    dec->add_option("--out", dec_out, "Output path-set JSON")->required();

    // correct
    std::string cor_lib, cor_demo, cor_corr, cor_out;
    double cor_epsilon = 0.0;
    CLI::App* cor = app.add_subcommand("correct", "Splice a demonstrated correction into a recognized model");
    cor->add_option("--lib", cor_lib, "Library JSON")->required();
    cor->add_option("--demo", cor_demo, "Demonstration path-set JSON (single set)")->required();
    cor->add_option("--correction", cor_corr, "Correction path-set JSON (single set, demo frame)")->required();
    cor->add_option("--epsilon", cor_epsilon, "RDP tolerance for the correction")->required();
    cor->add_option("--out", cor_out, "Output path-set JSON")->required();

    // tune
    std::string tune_teach, tune_demo, tune_lib, tune_grid, tune_out;
    CLI::App* tune = app.add_subcommand("tune", "Sweep the RDP tolerance against a library of other models");
    tune->add_option("--teach", tune_teach, "Teaching path-set JSON (>= 4 sets)")->required();
    tune->add_option("--demo", tune_demo, "Demonstration path-set JSON (single set)")->required();
    tune->add_option("--lib", tune_lib, "Library JSON with the other (incorrect) models")->required();
    tune->add_option("--grid", tune_grid, "Epsilon grid a:b:step")->required();
    tune->add_option("--out", tune_out, "Output CSV")->required();

    // matrix
    std::string mat_lib, mat_out;
    std::vector<std::string> mat_demos;
    CLI::App* mat = app.add_subcommand("matrix", "Score a batch of demonstrations against a library");
    mat->add_option("--lib", mat_lib, "Library JSON")->required();
    mat->add_option("--demos", mat_demos, "Demonstration path-set JSON file(s)")->required()->expected(-1);
    mat->add_option("--out", mat_out, "Output CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) return run_gen(gen_shape, gen_sets, gen_points, gen_noise_rel, gen_seed, gen_out);
        if (build->parsed()) return run_build(build_in, build_epsilon, build_filter_sigma, build_name, build_out);
        if (rec->parsed()) return run_recognize(rec_lib, rec_demo, rec_report);
        if (dec->parsed()) return run_decanon(dec_lib, dec_demo, dec_model, dec_out);
        if (cor->parsed()) return run_correct(cor_lib, cor_demo, cor_corr, cor_epsilon, cor_out);
        if (tune->parsed()) return run_tune(tune_teach, tune_demo, tune_lib, tune_grid, tune_out);
        if (mat->parsed()) return run_matrix(mat_lib, mat_demos, mat_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
