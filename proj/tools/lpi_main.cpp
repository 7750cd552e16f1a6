// SPDX-License-Identifier: Apache-2.0
#include <cinttypes>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lpi/lpi.h"

namespace
{
enum Exit : int
{
    exit_ok = 0,
    exit_usage = 1,
    exit_parse = 2,
    exit_validation = 3,
    exit_numerical = 4,
    exit_sampling = 5,
    exit_io = 6,
    exit_verify = 7,
    exit_argument = 8,
    exit_internal = 9,
};

int exit_code(lpi_status s)
{
    switch (s)
    {
        case LPI_OK:
            return exit_ok;
        case LPI_ERR_INVALID_ARGUMENT:
            return exit_argument;
        case LPI_ERR_PARSE:
            return exit_parse;
        case LPI_ERR_VALIDATION:
            return exit_validation;
        case LPI_ERR_NUMERICAL:
            return exit_numerical;
        case LPI_ERR_SAMPLING:
            return exit_sampling;
        case LPI_ERR_IO:
            return exit_io;
        case LPI_ERR_INTERNAL:
            return exit_internal;
    }
    return exit_internal;
}

int report_failure(lpi_status s)
{
    std::fprintf(stderr, "lpi: %s: %s\n", lpi_status_string(s), lpi_last_error());
    return exit_code(s);
}

struct Source
{
    std::string preset;
    std::string config;
};

struct RunOptions
{
    Source source;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> iterations;
    unsigned threads = 1;
    std::string out_dir = "out";
    bool emit_samples = false;
    bool no_files = false;
};

void add_source(CLI::App* cmd, Source& src)
{
    auto* preset = cmd->add_option("-p,--preset", src.preset, "named preset (fig2a fig2b fig2c fig3 fig4)");
    auto* config = cmd->add_option("-c,--config", src.config, "config file")->check(CLI::ExistingFile);
    preset->excludes(config);
    config->excludes(preset);
}

lpi_status load(Source const& src, lpi_scenario** out)
{
    if (!src.preset.empty())
        return lpi_scenario_load_preset(src.preset.c_str(), out);
    return lpi_scenario_load_config_file(src.config.c_str(), out);
}

void print_run(lpi_result const* result, std::size_t i, bool histogram)
{
    std::printf("%s\n", lpi_result_run_name(result, i));
    if (histogram)
    {
        std::size_t peaks = 0;
        int bimodal = 0;
        lpi_result_peak_count(result, i, &peaks);
        lpi_result_bimodal(result, i, &bimodal);
        std::printf("  peaks: %zu", peaks);
        for (std::size_t k = 0; k < peaks; ++k)
        {
            double loc = 0;
            lpi_result_peak_location(result, i, k, &loc);
            std::printf("%s%.4f", k == 0 ? " at " : ", ", loc);
        }
        std::printf("%s\n", bimodal ? " (bimodal)" : "");
    }
    double t[4] = {};
    lpi_result_timings(result, i, t);
    std::printf("  time: dynamics %.3f s, spectrum %.3f s, monte-carlo %.3f s, total %.3f s\n",
                t[0], t[1], t[2], t[3]);
    std::size_t files = 0;
    lpi_result_file_count(result, i, &files);
    for (std::size_t f = 0; f < files; ++f)
    {
        char const* path = nullptr;
        lpi_result_file_path(result, i, f, &path);
        std::printf("  wrote %s\n", path);
    }
}

int do_run(RunOptions const& opt, bool monte_carlo)
{
    lpi_scenario* scenario = nullptr;
    if (auto s = load(opt.source, &scenario); s != LPI_OK)
        return report_failure(s);
    std::unique_ptr<lpi_scenario, decltype(&lpi_scenario_free)> guard(scenario, lpi_scenario_free);

    if (opt.seed)
        lpi_scenario_set_seed(scenario, *opt.seed);
    if (opt.iterations)
    {
        if (auto s = lpi_scenario_set_iterations(scenario, *opt.iterations); s != LPI_OK)
            return report_failure(s);
    }
    lpi_scenario_set_threads(scenario, opt.threads);
    lpi_scenario_set_emit_samples(scenario, opt.emit_samples ? 1 : 0);

    lpi_result* result = nullptr;
    char const* dir = opt.no_files ? nullptr : opt.out_dir.c_str();
    lpi_status const s = monte_carlo ? lpi_scenario_execute(scenario, dir, &result)
                                     : lpi_scenario_spectrum(scenario, dir, &result);
    if (s != LPI_OK)
        return report_failure(s);
    for (std::size_t i = 0; i < lpi_result_run_count(result); ++i)
        print_run(result, i, monte_carlo);
    lpi_result_free(result);
    return exit_ok;
}

int do_verify()
{
    lpi_verify_result* r = nullptr;
    if (auto s = lpi_verify_run(&r); s != LPI_OK)
        return report_failure(s);
    bool all = true;
    for (std::size_t i = 0; i < lpi_verify_count(r); ++i)
    {
        bool const ok = lpi_verify_passed(r, i) != 0;
        all = all && ok;
        std::printf("%-24s %s  %s\n", lpi_verify_name(r, i), ok ? "PASS" : "FAIL",
                    lpi_verify_detail(r, i));
    }
    lpi_verify_free(r);
    return all ? exit_ok : exit_verify;
}

int do_config(Source const& src)
{
    lpi_scenario* scenario = nullptr;
    if (auto s = load(src, &scenario); s != LPI_OK)
        return report_failure(s);
    std::size_t n = 0;
    lpi_scenario_run_count(scenario, &n);
    for (std::size_t i = 0; i < n; ++i)
    {
        char const* text = nullptr;
        lpi_scenario_render_config(scenario, i, &text);
        std::printf("%s%s", i ? "\n" : "", text);
    }
    lpi_scenario_free(scenario);
    return exit_ok;
}
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Pulsed-laser interference simulator"};
    app.set_version_flag("--version", std::string(lpi_version()));
    app.require_subcommand(1);

    RunOptions run_opt;
    auto* run = app.add_subcommand("run", "simulate, sample the interferometer and write outputs");
    add_source(run, run_opt.source);
    run->add_option("-s,--seed", run_opt.seed, "override the Monte-Carlo seed");
    run->add_option("-n,--iterations", run_opt.iterations, "override the Monte-Carlo draw count")
        ->check(CLI::PositiveNumber);
    run->add_option("-j,--threads", run_opt.threads, "worker threads, 0 for all cores")
        ->capture_default_str();
    run->add_option("-o,--out-dir", run_opt.out_dir, "output directory")->capture_default_str();
    run->add_flag("--emit-samples", run_opt.emit_samples, "also write every sample");
    run->add_flag("--no-files", run_opt.no_files, "print the summary only");

    RunOptions spec_opt;
    auto* spectrum = app.add_subcommand("spectrum", "laser dynamics and spectrum only");
    add_source(spectrum, spec_opt.source);
    spectrum->add_option("-o,--out-dir", spec_opt.out_dir, "output directory")->capture_default_str();
    spectrum->add_flag("--no-files", spec_opt.no_files, "print the summary only");

    auto* verify = app.add_subcommand("verify", "check the pipeline against closed-form results");

    Source config_src;
    auto* config = app.add_subcommand("config", "print the full config of a preset or file");
    add_source(config, config_src);

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    for (Source const* src : {&run_opt.source, &spec_opt.source, &config_src})
    {
        bool const active = (src == &run_opt.source && *run) || (src == &spec_opt.source && *spectrum)
                            || (src == &config_src && *config);
        if (active && src->preset.empty() && src->config.empty())
        {
            std::fprintf(stderr, "lpi: one of --preset or --config is required\n");
            return exit_usage;
        }
    }

    if (*run)
        return do_run(run_opt, true);
    if (*spectrum)
        return do_run(spec_opt, false);
    if (*verify)
        return do_verify();
    if (*config)
        return do_config(config_src);
    return exit_usage;
}
