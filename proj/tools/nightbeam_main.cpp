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

// Command-line front end: scenario generation, pipeline playback with
// metrics and energy accounting, the randomized danger-rate sweep, and the
// standalone energy calculator. All numeric output on stdout is deterministic
// for a fixed seed; timing diagnostics go to stderr.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nightbeam/nightbeam.hpp"

namespace {

using nightbeam::BeamSetting;
using nightbeam::DangerPolicy;

std::string fixed(double value, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, value);
    return buf;
}

std::string percent(const std::optional<double>& ratio) {
    if (!ratio) return "undefined";
    return fixed(*ratio * 100.0, 2) + "%";
}

nlohmann::json json_or_null(const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

void print_energy_table(const nightbeam::EnergyReport& report, BeamSetting beam, bool jsonl) {
    if (jsonl) {
        nlohmann::json rows = nlohmann::json::array();
        for (const nightbeam::EnergyRow& row : report.rows) {
            rows.push_back({{"headlight", row.headlight},
                            {"watts", json_or_null(row.watts)},
                            {"on_wh", json_or_null(row.on_wh)},
                            {"baseline_wh", json_or_null(row.baseline_wh)}});
        }
        nlohmann::json rec = {{"record", "energy"},
                              {"beam", beam == BeamSetting::High ? "high" : "low"},
                              {"on_time_s", report.on_time_s},
                              {"total_time_s", report.total_time_s},
                              {"fraction_saved", report.fraction_saved},
                              {"rows", std::move(rows)}};
        std::cout << rec.dump() << '\n';
        return;
    }
    std::cout << "energy (" << (beam == BeamSetting::High ? "high" : "low")
              << " beam, on " << fixed(report.on_time_s, 3) << " s of "
              << fixed(report.total_time_s, 3) << " s, saved "
              << fixed(report.fraction_saved * 100.0, 2) << "%)\n";
    std::cout << "  headlight            watts      on Wh   always-on Wh\n";
    for (const nightbeam::EnergyRow& row : report.rows) {
        if (!row.watts) {
            std::printf("  %-18s     n/a\n", row.headlight.c_str());
            continue;
        }
        std::printf("  %-18s %7.1f %10.4f %14.4f\n", row.headlight.c_str(), *row.watts,
                    *row.on_wh, *row.baseline_wh);
    }
}

struct GenOptions {
    std::string preset{"approach"};
    std::string output;
    std::uint64_t seed{1};
    std::optional<double> duration_s;
    std::optional<double> frame_rate_hz;
    std::optional<double> vehicle_width_m;
    std::optional<double> reaction_time_s;
};

int cmd_gen(const GenOptions& opt) {
    nightbeam::ScenarioSpec spec = nightbeam::scenario_preset(opt.preset, opt.seed);
    if (opt.duration_s) spec.duration_s = *opt.duration_s;
    if (opt.frame_rate_hz) spec.frame_rate_hz = *opt.frame_rate_hz;
    if (opt.vehicle_width_m) spec.vehicle_width_m = *opt.vehicle_width_m;
    if (opt.reaction_time_s) spec.truth_reaction_time_s = *opt.reaction_time_s;
    const nightbeam::Scenario scenario = nightbeam::generate_scenario(spec);
    nightbeam::save_scenario(scenario, opt.output);
    std::cerr << "wrote " << opt.output << ": " << scenario.frames.size() << " frames, "
              << spec.actors.size() << " actor(s)\n";
    return 0;
}

struct RunOptions {
    std::string scenario_path;
    nightbeam::DetectorConfig detector;
    nightbeam::DangerConfig danger;
    double tau_s{3.0};
    double matching_radius{1.0};
    BeamSetting beam{BeamSetting::High};
    bool jsonl{false};
    std::string trace_path;
};

int cmd_run(const RunOptions& opt) {
    const auto started = std::chrono::steady_clock::now();
    const nightbeam::Scenario scenario = nightbeam::load_scenario(opt.scenario_path);
    const nightbeam::ScenarioTrace trace =
        nightbeam::run_pipeline(scenario, opt.detector, opt.danger, opt.tau_s);
    const nightbeam::ConfusionMatrix cm =
        nightbeam::score_trace(trace, scenario, opt.matching_radius);
    const nightbeam::MetricsReport metrics = nightbeam::compute_metrics(cm);
    const nightbeam::EnergyReport energy = nightbeam::energy_report(
        trace.light_on_time_s, trace.duration_s, nightbeam::EnergyModel::standard(), opt.beam);

    if (!opt.trace_path.empty()) nightbeam::write_trace(trace, opt.trace_path);

    const char* policy = opt.danger.policy == DangerPolicy::Current ? "current" : "legacy";
    if (opt.jsonl) {
        std::cout << nlohmann::json{{"record", "run"},
                                    {"scenario", scenario.name},
                                    {"frames", scenario.frames.size()},
                                    {"frame_rate_hz", scenario.frame_rate_hz},
                                    {"duration_s", trace.duration_s},
                                    {"policy", policy},
                                    {"reaction_time_s", opt.danger.reaction_time_s},
                                    {"vehicle_width_m", opt.danger.vehicle_width_w},
                                    {"tau_s", opt.tau_s}}
                         .dump()
                  << '\n';
        std::cout << nlohmann::json{{"record", "confusion"},
                                    {"tp", cm.tp},
                                    {"fp", cm.fp},
                                    {"fn", cm.fn},
                                    {"tn", cm.tn},
                                    {"episodes", cm.total()}}
                         .dump()
                  << '\n';
        std::cout << nlohmann::json{{"record", "metrics"},
                                    {"precision", json_or_null(metrics.precision)},
                                    {"recall", json_or_null(metrics.recall)},
                                    {"accuracy", json_or_null(metrics.accuracy)},
                                    {"f1", json_or_null(metrics.f1)}}
                         .dump()
                  << '\n';
        std::cout << nlohmann::json{{"record", "light"},
                                    {"on_time_s", trace.light_on_time_s},
                                    {"duration_s", trace.duration_s},
                                    {"transitions", trace.light_transitions.size()}}
                         .dump()
                  << '\n';
    } else {
        std::cout << "scenario        " << scenario.name << "\n";
        std::cout << "frames          " << scenario.frames.size() << " @ "
                  << fixed(scenario.frame_rate_hz, 1) << " Hz (" << fixed(trace.duration_s, 3)
                  << " s)\n";
        std::cout << "policy          " << policy << "\n";
        std::cout << "reaction time   " << fixed(opt.danger.reaction_time_s, 3) << " s\n";
        std::cout << "vehicle width   " << fixed(opt.danger.vehicle_width_w, 3) << " m\n";
        std::cout << "tau             " << fixed(opt.tau_s, 3) << " s\n";
        std::cout << "\n";
        std::cout << "confusion       tp=" << cm.tp << " fp=" << cm.fp << " fn=" << cm.fn
                  << " tn=" << cm.tn << " (episodes=" << cm.total() << ")\n";
        std::cout << "precision       " << percent(metrics.precision) << "\n";
        std::cout << "recall          " << percent(metrics.recall) << "\n";
        std::cout << "accuracy        " << percent(metrics.accuracy) << "\n";
        std::cout << "f1              " << percent(metrics.f1) << "\n";
        std::cout << "\n";
        std::cout << "light on        " << fixed(trace.light_on_time_s, 3) << " s of "
                  << fixed(trace.duration_s, 3) << " s ("
                  << trace.light_transitions.size() << " transitions)\n";
    }
    print_energy_table(energy, opt.beam, opt.jsonl);

    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started);
    std::cerr << "pipeline wall time: " << fixed(elapsed.count(), 3) << " s\n";
    return 0;
}

struct McOptions {
    nightbeam::McConfig cfg;
    DangerPolicy policy{DangerPolicy::Current};
    bool jsonl{false};
};

int cmd_montecarlo(const McOptions& opt) {
    const auto started = std::chrono::steady_clock::now();
    const nightbeam::McResult result = nightbeam::run_simulation(opt.cfg, opt.policy);
    std::optional<double> analytic;
    if (opt.cfg.alpha == 1.0) analytic = nightbeam::analytic_p_danger(opt.cfg.n, 1.0);
    std::optional<double> oracle;
    if (opt.cfg.n <= 10000) oracle = nightbeam::brute_force_p_danger(opt.cfg.n, opt.cfg.alpha);

    if (opt.jsonl) {
        for (std::size_t i = 0; i < result.averages.size(); ++i) {
            std::cout << nlohmann::json{{"record", "load"},
                                        {"load", i + 1},
                                        {"mean_dangerous_fraction", result.averages[i]}}
                             .dump()
                      << '\n';
        }
        std::cout << nlohmann::json{{"record", "summary"},
                                    {"grand_mean", result.grand_mean},
                                    {"analytic", json_or_null(analytic)},
                                    {"brute_force", json_or_null(oracle)},
                                    {"n", opt.cfg.n},
                                    {"alpha", opt.cfg.alpha},
                                    {"num_trials", opt.cfg.num_trials},
                                    {"max_load", opt.cfg.max_load},
                                    {"seed", opt.cfg.seed}}
                         .dump()
                  << '\n';
    } else {
        std::cout << "load  mean_dangerous_fraction\n";
        for (std::size_t i = 0; i < result.averages.size(); ++i) {
            std::printf("%4zu  %.6f\n", i + 1, result.averages[i]);
        }
        std::cout << "\n";
        std::cout << "grand mean   " << fixed(result.grand_mean, 6) << "\n";
        std::cout << "analytic     " << (analytic ? fixed(*analytic, 6) : "n/a (alpha != 1)")
                  << "\n";
        std::cout << "brute force  " << (oracle ? fixed(*oracle, 6) : "n/a (n too large)")
                  << "\n";
    }
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started);
    std::cerr << "simulation wall time: " << fixed(elapsed.count(), 3) << " s\n";
    return 0;
}

struct EnergyOptions {
    std::string scenario;  // worst|average|best, or empty for explicit times
    std::optional<double> on_time_s;
    std::optional<double> total_time_s;
    BeamSetting beam{BeamSetting::High};
    bool jsonl{false};
};

int cmd_energy(const EnergyOptions& opt) {
    double on_s = 0.0;
    double total_s = 0.0;
    if (!opt.scenario.empty()) {
        const nightbeam::EnergyScenario& s = nightbeam::energy_scenario(opt.scenario);
        on_s = s.on_h * 3600.0;
        total_s = s.total_h * 3600.0;
        if (!opt.jsonl) std::cout << "scenario        " << s.name << "\n";
    } else {
        if (!opt.on_time_s || !opt.total_time_s) {
            throw std::invalid_argument("energy: provide --scenario or both --on-time and --total-time");
        }
        on_s = *opt.on_time_s;
        total_s = *opt.total_time_s;
    }
    const nightbeam::EnergyReport report =
        nightbeam::energy_report(on_s, total_s, nightbeam::EnergyModel::standard(), opt.beam);
    print_energy_table(report, opt.beam, opt.jsonl);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LiDAR danger-gated headlight control, simulated on a virtual clock"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a scenario file from a preset");
    gen_cmd->add_option("--preset", gen.preset, "scenario preset")
        ->check(CLI::IsMember(nightbeam::scenario_preset_names()))
        ->capture_default_str();
    gen_cmd->add_option("-o,--output", gen.output, "output scenario path (JSON lines)")
        ->required();
    gen_cmd->add_option("--seed", gen.seed, "generator seed")
        ->envname("NIGHTBEAM_SEED")
        ->capture_default_str();
    gen_cmd->add_option("--duration", gen.duration_s, "override duration, seconds");
    gen_cmd->add_option("--rate", gen.frame_rate_hz, "override frame rate, Hz");
    gen_cmd->add_option("--width", gen.vehicle_width_m, "override vehicle width, meters");
    gen_cmd->add_option("--reaction-time", gen.reaction_time_s,
                        "override ground-truth reaction time, seconds");

    RunOptions run;
    std::string run_policy{"current"};
    std::string run_beam{"high"};
    CLI::App* run_cmd = app.add_subcommand("run", "play a scenario through the full pipeline");
    run_cmd->add_option("scenario", run.scenario_path, "scenario file to play")->required();
    run_cmd->add_option("--policy", run_policy, "danger policy")
        ->check(CLI::IsMember({"current", "legacy"}))
        ->capture_default_str();
    run_cmd->add_option("--reaction-time", run.danger.reaction_time_s, "reaction time, seconds")
        ->capture_default_str();
    run_cmd->add_option("--width", run.danger.vehicle_width_w, "vehicle width, meters")
        ->capture_default_str();
    run_cmd->add_option("--tau", run.tau_s, "light timer, seconds")->capture_default_str();
    run_cmd->add_option("--cluster-radius", run.detector.cluster_radius, "clustering radius, m")
        ->capture_default_str();
    run_cmd->add_option("--min-cluster-points", run.detector.min_cluster_points,
                        "minimum points per cluster")
        ->capture_default_str();
    run_cmd->add_option("--max-match-displacement", run.detector.max_match_displacement,
                        "association gate, m")
        ->capture_default_str();
    run_cmd->add_option("--process-noise", run.detector.process_noise, "filter process noise")
        ->capture_default_str();
    run_cmd->add_option("--measurement-noise-pos", run.detector.measurement_noise_pos,
                        "position measurement noise")
        ->capture_default_str();
    run_cmd->add_option("--measurement-noise-vel", run.detector.measurement_noise_vel,
                        "velocity measurement noise")
        ->capture_default_str();
    run_cmd->add_option("--matching-radius", run.matching_radius,
                        "truth-to-prediction matching radius, m")
        ->capture_default_str();
    run_cmd->add_option("--beam", run_beam, "beam setting for the energy table")
        ->check(CLI::IsMember({"high", "low"}))
        ->capture_default_str();
    run_cmd->add_option("--trace", run.trace_path, "write the full trace to this path");
    run_cmd->add_flag("--jsonl", run.jsonl, "machine-readable line-delimited output");

    McOptions mc;
    std::string mc_policy{"current"};
    CLI::App* mc_cmd = app.add_subcommand("montecarlo", "randomized danger-rate sweep");
    mc_cmd->add_option("--n", mc.cfg.n, "distance/speed range bound")->capture_default_str();
    mc_cmd->add_option("--alpha", mc.cfg.alpha, "reaction time, seconds")->capture_default_str();
    mc_cmd->add_option("--trials", mc.cfg.num_trials, "trials per load")->capture_default_str();
    mc_cmd->add_option("--max-load", mc.cfg.max_load, "highest box count per trial")
        ->capture_default_str();
    mc_cmd->add_option("--seed", mc.cfg.seed, "simulation seed")
        ->envname("NIGHTBEAM_SEED")
        ->capture_default_str();
    mc_cmd->add_option("--policy", mc_policy, "danger policy")
        ->check(CLI::IsMember({"current", "legacy"}))
        ->capture_default_str();
    mc_cmd->add_flag("--jsonl", mc.jsonl, "machine-readable line-delimited output");

    EnergyOptions energy;
    std::string energy_beam{"high"};
    CLI::App* energy_cmd = app.add_subcommand("energy", "headlight energy calculator");
    energy_cmd->add_option("--scenario", energy.scenario, "duty-cycle preset")
        ->check(CLI::IsMember({"worst", "average", "best"}));
    energy_cmd->add_option("--on-time", energy.on_time_s, "lamp on-time, seconds");
    energy_cmd->add_option("--total-time", energy.total_time_s, "window length, seconds");
    energy_cmd->add_option("--beam", energy_beam, "beam setting")
        ->check(CLI::IsMember({"high", "low"}))
        ->capture_default_str();
    energy_cmd->add_flag("--jsonl", energy.jsonl, "machine-readable line-delimited output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    run.danger.policy = run_policy == "legacy" ? DangerPolicy::Legacy : DangerPolicy::Current;
    run.beam = run_beam == "low" ? BeamSetting::Low : BeamSetting::High;
    mc.policy = mc_policy == "legacy" ? DangerPolicy::Legacy : DangerPolicy::Current;
    energy.beam = energy_beam == "low" ? BeamSetting::Low : BeamSetting::High;

    try {
        if (gen_cmd->parsed()) return cmd_gen(gen);
        if (run_cmd->parsed()) return cmd_run(run);
        if (mc_cmd->parsed()) return cmd_montecarlo(mc);
        if (energy_cmd->parsed()) return cmd_energy(energy);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
