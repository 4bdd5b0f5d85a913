#pragma once

#include "lightstore/core.hpp"
#include "lightstore/scenarios.hpp"

#include <filesystem>
#include <span>
#include <string>

namespace lightstore {

inline constexpr const char* kRunCsvHeader = "t_prime,re_eps1,im_eps1,re_eps3,im_eps3";
inline constexpr const char* kSummaryCsvHeader =
    "theta,peak_amp_1,peak_amp_3,released_energy_1,released_energy_3,residual_coherence_norm";

/// Output time series at z = L, one row per recorded step, %.17g.
std::string format_run_csv(const ScenarioResult& r);

/// One row per run; thetas and results are matched by index.
std::string format_summary_csv(std::span<const double> thetas, std::span<const ScenarioResult> results);

/// Per-run file name inside a sweep directory, in summary row order.
std::string run_file_name(std::size_t index);

void write_text(const std::filesystem::path& path, const std::string& content);

} // namespace lightstore
