#pragma once

#include <string>

#include <json.hpp>

#include "concord/obstruct.hpp"
#include "concord/spectrum.hpp"

namespace concord::cli {

/// Session-wide option defaults; per-job "options" objects override them.
struct Defaults {
    SearchBounds bounds;
    long degree_limit = kDefaultDegreeLimit;
};

/// Runs one job document {"command": ..., "payload": ..., "options": {...}}
/// and returns the structured report. Commands: alexander, obstruct, wheel,
/// clover, family. Throws invalid_input_error / resource_limit_error.
nlohmann::json run_job(const nlohmann::json& job, const Defaults& defaults = {});

/// Runs a list of jobs in input order, aborting on the first error.
nlohmann::json run_batch(const nlohmann::json& jobs, const Defaults& defaults = {});

/// Human-readable rendering of one structured report.
std::string render_text(const nlohmann::json& result);
std::string render_batch_text(const nlohmann::json& results);

nlohmann::json spectrum_to_json(const UnitCircleSpectrum& spec);

} // namespace concord::cli
