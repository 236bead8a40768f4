// cogsim command-line front end. Talks to the simulator exclusively
// through the C API in cogsim.h.

#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "cogsim.h"

namespace {

struct ConfigDeleter {
    void operator()(cogsim_config* c) const { cogsim_config_free(c); }
};
struct ResultDeleter {
    void operator()(cogsim_result* r) const { cogsim_result_free(r); }
};
using ConfigPtr = std::unique_ptr<cogsim_config, ConfigDeleter>;
using ResultPtr = std::unique_ptr<cogsim_result, ResultDeleter>;

int report(cogsim_status status) {
    std::fprintf(stderr, "error: %s: %s\n", cogsim_status_name(status),
                 cogsim_last_error());
    return static_cast<int>(status);
}

ConfigPtr load_config_or_default(const std::string& path, cogsim_status* status) {
    cogsim_config* cfg = nullptr;
    *status = path.empty() ? cogsim_config_default(&cfg)
                           : cogsim_config_load(path.c_str(), &cfg);
    return ConfigPtr(cfg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cogsim - streaming cognitive-agent simulator"};
    app.set_version_flag("--version", cogsim_version());
    app.require_subcommand(1);

    std::string config_path;
    std::string stimuli_path;
    std::string out_dir = "out";
    std::string traces_path;
    std::string out_file;
    bool support = false;
    std::size_t steps = 360;
    unsigned seed = 2007;

    auto add_config = [&](CLI::App* cmd) {
        cmd->add_option("-c,--config", config_path,
                        "config file (built-in defaults when omitted)");
    };

    CLI::App* run = app.add_subcommand("run", "run one agent over a stimulus stream");
    add_config(run);
    run->add_option("-s,--stimuli", stimuli_path, "stimulus stream file")
        ->required();
    run->add_flag("--support", support, "enable info-incompleteness support");
    run->add_option("-o,--out", out_dir, "output directory");

    CLI::App* paired = app.add_subcommand(
        "paired", "run the stream twice, without and with support");
    add_config(paired);
    paired->add_option("-s,--stimuli", stimuli_path, "stimulus stream file")
        ->required();
    paired->add_option("-o,--out", out_dir, "output directory");

    CLI::App* stats = app.add_subcommand(
        "stats", "recompute summary.json from a saved traces.csv");
    stats->add_option("-t,--traces", traces_path, "traces.csv file")->required();
    stats->add_option("-o,--out", out_file, "summary output path")
        ->default_val("summary.json");

    CLI::App* calibrate = app.add_subcommand(
        "calibrate", "suggest S_b/P_b/A_b bounds from a stream");
    add_config(calibrate);
    calibrate->add_option("-s,--stimuli", stimuli_path, "stimulus stream file")
        ->required();

    CLI::App* export_graphs = app.add_subcommand(
        "export-graphs", "run a stream and dump the consciousness graphs");
    add_config(export_graphs);
    export_graphs->add_option("-s,--stimuli", stimuli_path, "stimulus stream file")
        ->required();
    export_graphs->add_flag("--support", support,
                            "enable info-incompleteness support");
    export_graphs->add_option("-o,--out", out_dir, "output directory");

    CLI::App* synth = app.add_subcommand(
        "synth", "generate the deterministic synthetic episode");
    add_config(synth);
    synth->add_option("-n,--steps", steps, "number of steps")->default_val(360);
    synth->add_option("--seed", seed, "generator seed")->default_val(2007);
    synth->add_option("-o,--out", out_file, "episode output path")
        ->default_val("episode.csv");

    CLI11_PARSE(app, argc, argv);

    cogsim_status status = COGSIM_OK;
    ConfigPtr cfg = load_config_or_default(config_path, &status);
    if (status != COGSIM_OK) return report(status);

    if (run->parsed()) {
        cogsim_result* raw = nullptr;
        status = cogsim_run_file(cfg.get(), stimuli_path.c_str(),
                                 support ? 1 : 0, &raw);
        ResultPtr result(raw);
        if (status != COGSIM_OK) return report(status);
        status = cogsim_result_save(result.get(), out_dir.c_str());
        if (status != COGSIM_OK) return report(status);
        std::printf("wrote %zu steps to %s\n",
                    cogsim_result_steps(result.get()), out_dir.c_str());
        return 0;
    }

    if (paired->parsed()) {
        cogsim_result* raw_no = nullptr;
        cogsim_result* raw_with = nullptr;
        status = cogsim_paired_file(cfg.get(), stimuli_path.c_str(), &raw_no,
                                    &raw_with);
        ResultPtr no_support(raw_no), with_support(raw_with);
        if (status != COGSIM_OK) return report(status);
        const std::string no_dir = out_dir + "/no_support";
        const std::string with_dir = out_dir + "/with_support";
        if ((status = cogsim_result_save(no_support.get(), no_dir.c_str())) !=
            COGSIM_OK)
            return report(status);
        if ((status = cogsim_result_save(with_support.get(), with_dir.c_str())) !=
            COGSIM_OK)
            return report(status);
        const std::string delta_path = out_dir + "/delta.csv";
        status = cogsim_write_delta_report(no_support.get(), with_support.get(),
                                           delta_path.c_str());
        if (status != COGSIM_OK) return report(status);
        std::printf("wrote paired runs (%zu steps) to %s\n",
                    cogsim_result_steps(no_support.get()), out_dir.c_str());
        return 0;
    }

    if (stats->parsed()) {
        status = cogsim_stats_file(traces_path.c_str(), out_file.c_str());
        if (status != COGSIM_OK) return report(status);
        std::printf("wrote %s\n", out_file.c_str());
        return 0;
    }

    if (calibrate->parsed()) {
        double s_b = 0.0, p_b = 0.0, a_b = 0.0;
        status = cogsim_calibrate_file(cfg.get(), stimuli_path.c_str(), &s_b,
                                       &p_b, &a_b);
        if (status != COGSIM_OK) return report(status);
        std::printf("S_b = %.17g\nP_b = %.17g\nA_b = %.17g\n", s_b, p_b, a_b);
        return 0;
    }

    if (export_graphs->parsed()) {
        cogsim_result* raw = nullptr;
        status = cogsim_run_file(cfg.get(), stimuli_path.c_str(),
                                 support ? 1 : 0, &raw);
        ResultPtr result(raw);
        if (status != COGSIM_OK) return report(status);
        status = cogsim_result_save_graphs(result.get(), out_dir.c_str());
        if (status != COGSIM_OK) return report(status);
        std::printf("wrote graph files to %s\n", out_dir.c_str());
        return 0;
    }

    if (synth->parsed()) {
        status = cogsim_synthesize_episode(cfg.get(), steps, seed,
                                           out_file.c_str());
        if (status != COGSIM_OK) return report(status);
        std::printf("wrote %zu-step episode to %s\n", steps, out_file.c_str());
        return 0;
    }

    return 0;
}
