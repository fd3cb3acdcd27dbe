// Copyright 2026 the Nightbeam Authors
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

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "nightbeam/pipeline.hpp"
#include "nightbeam/scenario.hpp"

namespace nightbeam {

/// Malformed scenario or trace file. `line` is 1-based; 0 means the problem
/// is not tied to a single line (e.g. unexpected end of file).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}

    [[nodiscard]] int line() const noexcept { return line_; }

private:
    int line_;
};

constexpr int kScenarioFormatVersion = 1;

// Scenario files are UTF-8 JSON lines: a header record, then one frame record
// and one truth record per frame. Numbers round-trip exactly (shortest
// representation that parses back to the same 64-bit float).

inline void save_scenario(const Scenario& scenario, std::ostream& out) {
    nlohmann::json header = {{"version", kScenarioFormatVersion},
                             {"name", scenario.name},
                             {"frame_rate_hz", scenario.frame_rate_hz},
                             {"vehicle_width_m", scenario.vehicle_width_m},
                             {"seed", scenario.seed}};
    out << header.dump() << '\n';
    for (std::size_t i = 0; i < scenario.frames.size(); ++i) {
        const PointCloudFrame& frame = scenario.frames[i];
        nlohmann::json points = nlohmann::json::array();
        for (const Point3& p : frame.points) points.push_back({p.x, p.y, p.z});
        nlohmann::json frame_rec = {{"frame_id", frame.frame_id},
                                    {"t", frame.timestamp},
                                    {"ego", {frame.ego_translation.x, frame.ego_translation.y}},
                                    {"points", std::move(points)}};
        out << frame_rec.dump() << '\n';

        nlohmann::json objects = nlohmann::json::array();
        if (i < scenario.truth.size()) {
            for (const TruthObject& obj : scenario.truth[i].objects) {
                objects.push_back({{"label", obj.label},
                                   {"pos", {obj.pos.x, obj.pos.y, obj.pos.z}},
                                   {"dangerous", obj.dangerous}});
            }
        }
        nlohmann::json truth_rec = {{"frame_id", frame.frame_id}, {"objects", std::move(objects)}};
        out << truth_rec.dump() << '\n';
    }
}

inline void save_scenario(const Scenario& scenario, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    save_scenario(scenario, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

namespace detail {

inline nlohmann::json parse_line(const std::string& line, int line_no) {
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) throw ParseError(line_no, "malformed JSON record");
    if (!j.is_object()) throw ParseError(line_no, "expected a JSON object");
    return j;
}

inline double require_finite(const nlohmann::json& j, const char* field, int line_no) {
    if (!j.is_number()) throw ParseError(line_no, std::string(field) + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ParseError(line_no, std::string(field) + ": must be finite");
    return v;
}

}  // namespace detail

inline Scenario load_scenario(std::istream& in) {
    std::string line;
    int line_no = 0;

    if (!std::getline(in, line)) throw ParseError(0, "empty scenario file");
    ++line_no;
    nlohmann::json header = detail::parse_line(line, line_no);
    if (!header.contains("version") || !header["version"].is_number_integer()) {
        throw ParseError(line_no, "header missing integer 'version'");
    }
    if (header["version"].get<int>() != kScenarioFormatVersion) {
        throw ParseError(line_no, "unsupported scenario format version " +
                                      header["version"].dump() + " (expected " +
                                      std::to_string(kScenarioFormatVersion) + ")");
    }
    for (const char* field : {"name", "frame_rate_hz", "vehicle_width_m", "seed"}) {
        if (!header.contains(field)) {
            throw ParseError(line_no, std::string("header missing '") + field + "'");
        }
    }

    Scenario scenario;
    scenario.name = header["name"].get<std::string>();
    scenario.frame_rate_hz = detail::require_finite(header["frame_rate_hz"], "frame_rate_hz", line_no);
    scenario.vehicle_width_m =
        detail::require_finite(header["vehicle_width_m"], "vehicle_width_m", line_no);
    scenario.seed = header["seed"].get<std::uint64_t>();
    if (!(scenario.frame_rate_hz > 0.0)) throw ParseError(line_no, "frame_rate_hz: must be > 0");

    std::int64_t prev_frame_id = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json frame_rec = detail::parse_line(line, line_no);
        if (!frame_rec.contains("frame_id") || !frame_rec.contains("t") ||
            !frame_rec.contains("points") || !frame_rec.contains("ego")) {
            throw ParseError(line_no, "frame record needs frame_id, t, ego, points");
        }
        PointCloudFrame frame;
        frame.frame_id = frame_rec["frame_id"].get<std::int64_t>();
        frame.timestamp = detail::require_finite(frame_rec["t"], "t", line_no);
        if (frame.frame_id <= prev_frame_id) {
            throw ParseError(line_no, "frame_id must be strictly increasing");
        }
        const double expected_t = static_cast<double>(frame.frame_id) / scenario.frame_rate_hz;
        if (frame.timestamp != expected_t) {
            throw ParseError(line_no, "t must equal frame_id / frame_rate_hz");
        }
        const auto& ego = frame_rec["ego"];
        if (!ego.is_array() || ego.size() != 2) throw ParseError(line_no, "ego: expected [dx, dy]");
        frame.ego_translation = {detail::require_finite(ego[0], "ego[0]", line_no),
                                 detail::require_finite(ego[1], "ego[1]", line_no)};
        for (const auto& pt : frame_rec["points"]) {
            if (!pt.is_array() || pt.size() != 3) {
                throw ParseError(line_no, "points: expected [x, y, z] triples");
            }
            frame.points.push_back({detail::require_finite(pt[0], "point.x", line_no),
                                    detail::require_finite(pt[1], "point.y", line_no),
                                    detail::require_finite(pt[2], "point.z", line_no)});
        }

        if (!std::getline(in, line)) {
            throw ParseError(line_no, "truncated file: frame record without truth record");
        }
        ++line_no;
        nlohmann::json truth_rec = detail::parse_line(line, line_no);
        if (!truth_rec.contains("frame_id") || !truth_rec.contains("objects")) {
            throw ParseError(line_no, "truth record needs frame_id and objects");
        }
        if (truth_rec["frame_id"].get<std::int64_t>() != frame.frame_id) {
            throw ParseError(line_no, "truth record frame_id does not match its frame");
        }
        TruthFrame truth;
        truth.frame_id = frame.frame_id;
        for (const auto& obj : truth_rec["objects"]) {
            if (!obj.contains("label") || !obj.contains("pos") || !obj.contains("dangerous")) {
                throw ParseError(line_no, "truth object needs label, pos, dangerous");
            }
            const auto& pos = obj["pos"];
            if (!pos.is_array() || pos.size() != 3) {
                throw ParseError(line_no, "truth pos: expected [x, y, z]");
            }
            truth.objects.push_back({obj["label"].get<std::string>(),
                                     {detail::require_finite(pos[0], "pos.x", line_no),
                                      detail::require_finite(pos[1], "pos.y", line_no),
                                      detail::require_finite(pos[2], "pos.z", line_no)},
                                     obj["dangerous"].get<bool>()});
        }

        prev_frame_id = frame.frame_id;
        scenario.frames.push_back(std::move(frame));
        scenario.truth.push_back(std::move(truth));
    }
    return scenario;
}

inline Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    return load_scenario(in);
}

// Trace files use the same JSON-lines style: header record, one record per
// frame, a light-transition record, and a closing summary record.

inline void write_trace(const ScenarioTrace& trace, std::ostream& out) {
    nlohmann::json header = {{"record", "header"},
                             {"version", kScenarioFormatVersion},
                             {"scenario", trace.scenario_name},
                             {"frame_rate_hz", trace.frame_rate_hz},
                             {"duration_s", trace.duration_s}};
    out << header.dump() << '\n';
    for (const TraceFrame& frame : trace.frames) {
        nlohmann::json tracks = nlohmann::json::array();
        for (const TrackedObject& t : frame.tracks) {
            nlohmann::json rec = {{"id", t.track_id},
                                  {"pos", {t.position.x, t.position.y, t.position.z}},
                                  {"vel", {t.velocity.x, t.velocity.y, t.velocity.z}},
                                  {"speed", t.speed},
                                  {"age", t.age_frames}};
            rec["yaw"] = t.yaw ? nlohmann::json(t.yaw->value()) : nlohmann::json(nullptr);
            tracks.push_back(std::move(rec));
        }
        nlohmann::json verdicts = nlohmann::json::array();
        for (const DangerVerdict& v : frame.verdicts) {
            verdicts.push_back({{"track", v.track_id},
                                {"dangerous", v.dangerous},
                                {"section", to_string(v.section)},
                                {"distance_m", v.distance_m},
                                {"threshold_m", v.threshold_m},
                                {"facing", v.facing}});
        }
        nlohmann::json rec = {{"record", "frame"},
                              {"frame_id", frame.frame_id},
                              {"t", frame.timestamp},
                              {"light_on", frame.light_on},
                              {"tracks", std::move(tracks)},
                              {"verdicts", std::move(verdicts)}};
        out << rec.dump() << '\n';
    }
    nlohmann::json transitions = nlohmann::json::array();
    for (const LightTransition& tr : trace.light_transitions) {
        transitions.push_back({{"t", tr.timestamp}, {"on", tr.on}});
    }
    out << nlohmann::json{{"record", "light"}, {"transitions", std::move(transitions)}}.dump()
        << '\n';
    out << nlohmann::json{{"record", "summary"},
                          {"light_on_time_s", trace.light_on_time_s},
                          {"duration_s", trace.duration_s}}
               .dump()
        << '\n';
}

inline void write_trace(const ScenarioTrace& trace, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_trace(trace, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace nightbeam
