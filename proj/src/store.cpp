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

#include "pathmodel/store.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace pathmodel {

using nlohmann::json;

namespace {

json load_json(const std::string& file_path) {
    std::ifstream in(file_path);
    if (!in) throw LoadError("cannot open file: " + file_path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw LoadError(file_path + ": " + e.what());
    }
}

void write_text(const std::string& file_path, const std::string& text) {
    std::ofstream out(file_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file for writing: " + file_path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + file_path);
}

double finite_number(const json& j, const std::string& where) {
    if (!j.is_number()) throw LoadError(where + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw LoadError(where + ": non-finite value");
    return v;
}

Point3 read_triple(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3) throw LoadError(where + ": expected [x, y, z]");
    return {finite_number(j[0], where), finite_number(j[1], where), finite_number(j[2], where)};
}

void check_version(const json& j, const std::string& where) {
    if (!j.contains("format_version")) throw LoadError(where + ": missing format_version");
    if (!j["format_version"].is_number_integer() || j["format_version"].get<int>() != 1) {
        throw LoadError(where + ": unknown format_version");
    }
}

json triple_to_json(const Point3& p) { return json::array({p.x(), p.y(), p.z()}); }

}  // namespace

void save_path_set(const std::string& file_path, const PathSetFile& data) {
    if (data.format_version != 1) throw std::invalid_argument("save_path_set: unknown format_version");
    json sets = json::array();
    for (std::size_t i = 0; i < data.sets.size(); ++i) {
        const Polyline3& set = data.sets[i];
        if (set.size() < 2) throw std::invalid_argument("save_path_set: set length < 2");
        if (!is_finite_polyline(set)) throw std::invalid_argument("save_path_set: non-finite value");
        json points = json::array();
        for (const Point3& p : set) points.push_back(triple_to_json(p));
        sets.push_back(std::move(points));
    }
    const json j = {{"format_version", 1}, {"label", data.label}, {"sets", std::move(sets)}};
    write_text(file_path, j.dump(2) + "\n");
}

PathSetFile load_path_set(const std::string& file_path) {
    const json j = load_json(file_path);
    check_version(j, file_path);

    PathSetFile data;
    if (!j.contains("label") || !j["label"].is_string()) throw LoadError(file_path + ": missing label");
    data.label = j["label"].get<std::string>();
    if (!j.contains("sets") || !j["sets"].is_array()) throw LoadError(file_path + ": missing sets");

    for (std::size_t s = 0; s < j["sets"].size(); ++s) {
        const json& set_json = j["sets"][s];
        const std::string where = file_path + ": sets[" + std::to_string(s) + "]";
        if (!set_json.is_array()) throw LoadError(where + ": expected an array of points");
        if (set_json.size() < 2) throw LoadError(where + ": set length < 2");
        Polyline3 set;
        set.reserve(set_json.size());
        for (std::size_t p = 0; p < set_json.size(); ++p) {
            set.push_back(read_triple(set_json[p], where + "[" + std::to_string(p) + "]"));
        }
        data.sets.push_back(std::move(set));
    }
    return data;
}

void save_library(const std::string& file_path, const ModelLibrary& library) {
    json models = json::array();
    for (const GaussianPathModel& m : library.models) {
        if (!m.variant.is_base()) throw std::invalid_argument("save_library: variants are not persisted");
        json keypoints = json::array();
        for (const KeypointGaussian& kp : m.keypoints) {
            json rows = json::array();
            for (int r = 0; r < 3; ++r) {
                rows.push_back(json::array({kp.sigma(r, 0), kp.sigma(r, 1), kp.sigma(r, 2)}));
            }
            keypoints.push_back({{"mu", triple_to_json(kp.mu)}, {"sigma", std::move(rows)}});
        }
        models.push_back({{"name", m.name},
                          {"rdp_epsilon", m.rdp_epsilon},
                          {"keypoint_count", m.keypoint_count()},
                          {"teaching_set_count", m.teaching_set_count},
                          {"variant", {{"flip_axis", to_string(m.variant.flip)}, {"reversed", m.variant.reversed}}},
                          {"keypoints", std::move(keypoints)}});
    }
    const json j = {{"format_version", 1}, {"filter_sigma", library.filter_sigma}, {"models", std::move(models)}};
    write_text(file_path, j.dump(2) + "\n");
}

namespace {

Mat3 read_sigma(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3) throw LoadError(where + ": expected a 3x3 matrix");
    Mat3 sigma;
    for (int r = 0; r < 3; ++r) {
        if (!j[static_cast<std::size_t>(r)].is_array() || j[static_cast<std::size_t>(r)].size() != 3) {
            throw LoadError(where + ": expected a 3x3 matrix");
        }
        for (int c = 0; c < 3; ++c) {
            sigma(r, c) = finite_number(j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], where);
        }
    }
    if ((sigma - sigma.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw LoadError(where + ": asymmetric covariance");
    }
    const Eigen::LLT<Mat3> llt(sigma);
    if (llt.info() != Eigen::Success) throw LoadError(where + ": covariance not positive definite");
    return sigma;
}

}  // namespace

ModelLibrary load_library(const std::string& file_path) {
    const json j = load_json(file_path);
    check_version(j, file_path);

    ModelLibrary library;
    if (!j.contains("filter_sigma")) throw LoadError(file_path + ": missing filter_sigma");
    library.filter_sigma = finite_number(j["filter_sigma"], file_path + ": filter_sigma");
    if (library.filter_sigma < 0.0) throw LoadError(file_path + ": filter_sigma must be >= 0");

    if (!j.contains("models") || !j["models"].is_array()) throw LoadError(file_path + ": missing models");
    if (j["models"].empty()) throw LoadError(file_path + ": empty library");

    for (std::size_t i = 0; i < j["models"].size(); ++i) {
        const json& mj = j["models"][i];
        const std::string where = file_path + ": models[" + std::to_string(i) + "]";
        GaussianPathModel m;
        if (!mj.contains("name") || !mj["name"].is_string()) throw LoadError(where + ": missing name");
        m.name = mj["name"].get<std::string>();
        if (!mj.contains("rdp_epsilon")) throw LoadError(where + ": missing rdp_epsilon");
        m.rdp_epsilon = finite_number(mj["rdp_epsilon"], where + ".rdp_epsilon");
        if (!mj.contains("teaching_set_count") || !mj["teaching_set_count"].is_number_unsigned()) {
            throw LoadError(where + ": missing teaching_set_count");
        }
        m.teaching_set_count = mj["teaching_set_count"].get<std::size_t>();

        if (!mj.contains("variant") || !mj["variant"].is_object()) throw LoadError(where + ": missing variant");
        const json& vj = mj["variant"];
        if (!vj.contains("flip_axis") || !vj["flip_axis"].is_string() || !vj.contains("reversed") ||
            !vj["reversed"].is_boolean()) {
            throw LoadError(where + ": malformed variant");
        }
        try {
            m.variant.flip = flip_axis_from_string(vj["flip_axis"].get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw LoadError(where + ": " + e.what());
        }
        m.variant.reversed = vj["reversed"].get<bool>();
        if (!m.variant.is_base()) throw LoadError(where + ": only base models may be persisted");

        if (!mj.contains("keypoints") || !mj["keypoints"].is_array()) throw LoadError(where + ": missing keypoints");
        for (std::size_t k = 0; k < mj["keypoints"].size(); ++k) {
            const json& kj = mj["keypoints"][k];
            const std::string kwhere = where + ".keypoints[" + std::to_string(k) + "]";
            if (!kj.is_object() || !kj.contains("mu") || !kj.contains("sigma")) {
                throw LoadError(kwhere + ": expected {mu, sigma}");
            }
            KeypointGaussian kp;
            kp.mu = read_triple(kj["mu"], kwhere + ".mu");
            kp.sigma = read_sigma(kj["sigma"], kwhere + ".sigma");
            m.keypoints.push_back(std::move(kp));
        }
        if (m.keypoint_count() < 2) throw LoadError(where + ": fewer than 2 keypoints");
        if (!mj.contains("keypoint_count") || !mj["keypoint_count"].is_number_unsigned() ||
            mj["keypoint_count"].get<std::size_t>() != m.keypoint_count()) {
            throw LoadError(where + ": keypoint_count does not match keypoints");
        }
        try {
            library.add(std::move(m));
        } catch (const std::invalid_argument& e) {
            throw LoadError(where + ": " + e.what());
        }
    }
    return library;
}

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

void write_matrix_csv(const std::string& file_path, const ConfusionMatrix& matrix) {
    std::ostringstream out;
    out << "model";
    for (const std::string& label : matrix.demo_labels) out << ',' << label;
    out << '\n';
    for (std::size_t row = 0; row < matrix.model_names.size(); ++row) {
        out << matrix.model_names[row];
        for (double score : matrix.scores[row]) out << ',' << format_double(score);
        out << '\n';
    }
    out << "best";
    for (const std::string& name : matrix.best_model_per_demo) out << ',' << name;
    out << '\n';
    write_text(file_path, out.str());
}

void write_tune_csv(const std::string& file_path, const TuneCurve& curve) {
    std::ostringstream out;
    out << "epsilon,correct,best_incorrect,difference\n";
    for (std::size_t i = 0; i < curve.epsilons.size(); ++i) {
        const double diff = curve.correct_scores[i] - curve.best_incorrect_scores[i];
        out << format_double(curve.epsilons[i]) << ',' << format_double(curve.correct_scores[i]) << ','
            << format_double(curve.best_incorrect_scores[i]) << ',' << format_double(diff) << '\n';
    }
    write_text(file_path, out.str());
}

void save_recognition_report(const std::string& file_path, const RecognitionResult& result) {
    json ranked = json::array();
    for (const ScoredCandidate& entry : result.ranked) {
        json e = {{"model", entry.name},
                  {"variant", variant_label(entry.variant)},
                  {"scored", entry.scored}};
        // JSON has no -inf literal; unscored candidates carry null.
        if (entry.scored) e["score"] = entry.score;
        else e["score"] = nullptr;
        ranked.push_back(std::move(e));
    }
    const CanonicalParams& p = result.demo_params;
    json rotation = json::array();
    for (int r = 0; r < 3; ++r) {
        rotation.push_back(json::array({p.rotation(r, 0), p.rotation(r, 1), p.rotation(r, 2)}));
    }
    const json j = {{"format_version", 1},
                    {"best", {{"model", result.best().name}, {"variant", variant_label(result.best().variant)}}},
                    {"ranked", std::move(ranked)},
                    {"demo_params",
                     {{"centroid", triple_to_json(p.centroid)}, {"rotation", std::move(rotation)}, {"scale", p.scale}}}};
    write_text(file_path, j.dump(2) + "\n");
}

}  // namespace pathmodel
