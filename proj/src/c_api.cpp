// SPDX-License-Identifier: Apache-2.0
#include "lpi/lpi.h"

#include <algorithm>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <thread>
#include <vector>

#include "lpi/error.hpp"
#include "lpi/scenario.hpp"

struct lpi_scenario
{
    std::vector<lpi::ScenarioConfig> runs;
    mutable std::vector<std::string> rendered;
};

struct lpi_result
{
    struct Run
    {
        lpi::RunReport report;
        std::string metadata;
        std::vector<std::string> files;
    };
    std::vector<Run> runs;
};

struct lpi_verify_result
{
    std::vector<lpi::VerifyResult> checks;
};

namespace
{
thread_local std::string last_error;

lpi_status status_of(lpi::ErrorKind kind)
{
    using lpi::ErrorKind;
    switch (kind)
    {
        case ErrorKind::ParseError:
            return LPI_ERR_PARSE;
        case ErrorKind::ValidationError:
        case ErrorKind::InsufficientWarmup:
            return LPI_ERR_VALIDATION;
        case ErrorKind::NonFiniteState:
        case ErrorKind::DomainError:
        case ErrorKind::NonuniformGrid:
            return LPI_ERR_NUMERICAL;
        case ErrorKind::ShiftTooLarge:
        case ErrorKind::ZeroDenominator:
            return LPI_ERR_SAMPLING;
        case ErrorKind::Io:
            return LPI_ERR_IO;
        case ErrorKind::InvalidArgument:
            return LPI_ERR_INVALID_ARGUMENT;
    }
    return LPI_ERR_INTERNAL;
}

lpi_status fail(lpi_status status, std::string message)
{
    last_error = std::move(message);
    return status;
}

template<class F>
lpi_status guarded(F&& body)
{
    last_error.clear();
    try
    {
        body();
        return LPI_OK;
    }
    catch (lpi::Error const& e)
    {
        return fail(status_of(e.kind()),
                    std::string(lpi::to_string(e.kind())) + ": " + e.what());
    }
    catch (std::bad_alloc const&)
    {
        return fail(LPI_ERR_INTERNAL, "out of memory");
    }
    catch (std::exception const& e)
    {
        return fail(LPI_ERR_INTERNAL, e.what());
    }
    catch (...)
    {
        return fail(LPI_ERR_INTERNAL, "unknown exception");
    }
}

lpi_status null_argument(char const* what)
{
    return fail(LPI_ERR_INVALID_ARGUMENT, std::string("null argument: ") + what);
}

lpi_scenario* make_scenario(std::vector<lpi::ScenarioConfig> runs)
{
    auto* s = new lpi_scenario;
    s->runs = std::move(runs);
    s->rendered.resize(s->runs.size());
    return s;
}

bool valid_run(lpi_result const* r, size_t index)
{
    return r && index < r->runs.size();
}

lpi_status bad_index()
{
    return fail(LPI_ERR_INVALID_ARGUMENT, "run index out of range");
}

lpi_status execute(lpi_scenario const* scenario, char const* out_dir, lpi_result** out,
                   bool monte_carlo)
{
    if (!scenario)
        return null_argument("scenario");
    if (!out)
        return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        auto result = std::make_unique<lpi_result>();
        for (lpi::ScenarioConfig const& config : scenario->runs)
        {
            lpi_result::Run run;
            run.report = monte_carlo ? lpi::run_scenario(config) : lpi::run_spectrum_only(config);
            run.metadata = lpi::report_metadata_json(run.report);
            if (out_dir)
            {
                for (auto const& p : lpi::write_outputs(run.report, out_dir).paths)
                    run.files.push_back(p.string());
            }
            result->runs.push_back(std::move(run));
        }
        *out = result.release();
    });
}
}  // namespace

extern "C" {

char const* lpi_version(void)
{
    return "0.1.0";
}

char const* lpi_status_string(lpi_status status)
{
    switch (status)
    {
        case LPI_OK:
            return "ok";
        case LPI_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case LPI_ERR_PARSE:
            return "parse error";
        case LPI_ERR_VALIDATION:
            return "validation error";
        case LPI_ERR_NUMERICAL:
            return "numerical error";
        case LPI_ERR_SAMPLING:
            return "sampling error";
        case LPI_ERR_IO:
            return "i/o error";
        case LPI_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

char const* lpi_last_error(void)
{
    return last_error.c_str();
}

lpi_status lpi_scenario_load_preset(char const* name, lpi_scenario** out)
{
    if (!name)
        return null_argument("name");
    if (!out)
        return null_argument("out");
    *out = nullptr;
    return guarded([&] { *out = make_scenario(lpi::preset_runs(name)); });
}

lpi_status lpi_scenario_load_config_file(char const* path, lpi_scenario** out)
{
    if (!path)
        return null_argument("path");
    if (!out)
        return null_argument("out");
    *out = nullptr;
    return guarded([&] { *out = make_scenario({lpi::load_config_file(path)}); });
}

lpi_status lpi_scenario_load_config_text(char const* text, lpi_scenario** out)
{
    if (!text)
        return null_argument("text");
    if (!out)
        return null_argument("out");
    *out = nullptr;
    return guarded([&] { *out = make_scenario({lpi::parse_config(text)}); });
}

void lpi_scenario_free(lpi_scenario* scenario)
{
    delete scenario;
}

lpi_status lpi_scenario_run_count(lpi_scenario const* scenario, size_t* count)
{
    if (!scenario || !count)
        return null_argument(!scenario ? "scenario" : "count");
    *count = scenario->runs.size();
    return LPI_OK;
}

lpi_status lpi_scenario_run_name(lpi_scenario const* scenario, size_t index, char const** name)
{
    if (!scenario || !name)
        return null_argument(!scenario ? "scenario" : "name");
    if (index >= scenario->runs.size())
        return bad_index();
    *name = scenario->runs[index].name.c_str();
    return LPI_OK;
}

lpi_status lpi_scenario_set_seed(lpi_scenario* scenario, uint64_t seed)
{
    if (!scenario)
        return null_argument("scenario");
    for (auto& run : scenario->runs)
        run.mc.seed = seed;
    return LPI_OK;
}

lpi_status lpi_scenario_set_iterations(lpi_scenario* scenario, uint64_t iterations)
{
    if (!scenario)
        return null_argument("scenario");
    if (iterations == 0)
        return fail(LPI_ERR_INVALID_ARGUMENT, "iterations must be positive");
    for (auto& run : scenario->runs)
        run.mc.iterations = static_cast<std::size_t>(iterations);
    return LPI_OK;
}

lpi_status lpi_scenario_set_threads(lpi_scenario* scenario, unsigned threads)
{
    if (!scenario)
        return null_argument("scenario");
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    for (auto& run : scenario->runs)
        run.mc.threads = threads;
    return LPI_OK;
}

lpi_status lpi_scenario_set_emit_samples(lpi_scenario* scenario, int enabled)
{
    if (!scenario)
        return null_argument("scenario");
    for (auto& run : scenario->runs)
        run.outputs.emit_samples = enabled != 0;
    return LPI_OK;
}

lpi_status lpi_scenario_render_config(lpi_scenario const* scenario, size_t index,
                                      char const** text)
{
    if (!scenario || !text)
        return null_argument(!scenario ? "scenario" : "text");
    if (index >= scenario->runs.size())
        return bad_index();
    return guarded([&] {
        auto& slot = scenario->rendered[index];
        slot = lpi::render_config(scenario->runs[index]);
        *text = slot.c_str();
    });
}

lpi_status lpi_scenario_execute(lpi_scenario const* scenario, char const* out_dir,
                                lpi_result** out)
{
    return execute(scenario, out_dir, out, true);
}

lpi_status lpi_scenario_spectrum(lpi_scenario const* scenario, char const* out_dir,
                                 lpi_result** out)
{
    return execute(scenario, out_dir, out, false);
}

void lpi_result_free(lpi_result* result)
{
    delete result;
}

size_t lpi_result_run_count(lpi_result const* result)
{
    return result ? result->runs.size() : 0;
}

char const* lpi_result_run_name(lpi_result const* result, size_t index)
{
    return valid_run(result, index) ? result->runs[index].report.config.name.c_str() : nullptr;
}

lpi_status lpi_result_peak_count(lpi_result const* result, size_t index, size_t* count)
{
    if (!count)
        return null_argument("count");
    if (!valid_run(result, index))
        return bad_index();
    *count = result->runs[index].report.peaks.size();
    return LPI_OK;
}

lpi_status lpi_result_peak_location(lpi_result const* result, size_t index, size_t peak,
                                    double* location)
{
    if (!location)
        return null_argument("location");
    if (!valid_run(result, index))
        return bad_index();
    auto const& peaks = result->runs[index].report.peaks;
    if (peak >= peaks.size())
        return fail(LPI_ERR_INVALID_ARGUMENT, "peak index out of range");
    *location = peaks[peak].location;
    return LPI_OK;
}

lpi_status lpi_result_bimodal(lpi_result const* result, size_t index, int* bimodal)
{
    if (!bimodal)
        return null_argument("bimodal");
    if (!valid_run(result, index))
        return bad_index();
    *bimodal = result->runs[index].report.bimodal() ? 1 : 0;
    return LPI_OK;
}

lpi_status lpi_result_timings(lpi_result const* result, size_t index, double out[4])
{
    if (!out)
        return null_argument("out");
    if (!valid_run(result, index))
        return bad_index();
    auto const& t = result->runs[index].report.timings;
    out[0] = t.dynamics;
    out[1] = t.spectrum;
    out[2] = t.monte_carlo;
    out[3] = t.total;
    return LPI_OK;
}

lpi_status lpi_result_metadata_json(lpi_result const* result, size_t index, char const** json)
{
    if (!json)
        return null_argument("json");
    if (!valid_run(result, index))
        return bad_index();
    *json = result->runs[index].metadata.c_str();
    return LPI_OK;
}

lpi_status lpi_result_file_count(lpi_result const* result, size_t index, size_t* count)
{
    if (!count)
        return null_argument("count");
    if (!valid_run(result, index))
        return bad_index();
    *count = result->runs[index].files.size();
    return LPI_OK;
}

lpi_status lpi_result_file_path(lpi_result const* result, size_t index, size_t file,
                                char const** path)
{
    if (!path)
        return null_argument("path");
    if (!valid_run(result, index))
        return bad_index();
    auto const& files = result->runs[index].files;
    if (file >= files.size())
        return fail(LPI_ERR_INVALID_ARGUMENT, "file index out of range");
    *path = files[file].c_str();
    return LPI_OK;
}

lpi_status lpi_verify_run(lpi_verify_result** out)
{
    if (!out)
        return null_argument("out");
    *out = nullptr;
    return guarded([&] {
        auto r = std::make_unique<lpi_verify_result>();
        r->checks = lpi::run_verification();
        *out = r.release();
    });
}

void lpi_verify_free(lpi_verify_result* result)
{
    delete result;
}

size_t lpi_verify_count(lpi_verify_result const* result)
{
    return result ? result->checks.size() : 0;
}

char const* lpi_verify_name(lpi_verify_result const* result, size_t index)
{
    return result && index < result->checks.size() ? result->checks[index].name.c_str() : nullptr;
}

int lpi_verify_passed(lpi_verify_result const* result, size_t index)
{
    return result && index < result->checks.size() && result->checks[index].passed ? 1 : 0;
}

char const* lpi_verify_detail(lpi_verify_result const* result, size_t index)
{
    return result && index < result->checks.size() ? result->checks[index].detail.c_str()
                                                   : nullptr;
}

}  // extern "C"
