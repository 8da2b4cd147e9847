#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <string>

#include "nomaee/montecarlo.hpp"
#include "nomaee/optimizer.hpp"

namespace nomaee {

/// Exact header emitted for every sweep CSV.
inline constexpr const char* kSweepCsvHeader =
    "strategy,sweep_value,mean_ee,stderr_ee,feasible_fraction,trials,seed";

/// Shortest-round-trip decimal with up to 17 significant digits, '.' decimal
/// point, locale-independent.
std::string format_double(double v);

/// RFC-4180 field quoting (only when the value needs it).
std::string csv_escape(const std::string& field);

/// Writes header plus one line per record, LF endings.
void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records);

/// Serializes the spec plus tool provenance; enough to reproduce the file.
std::string experiment_metadata_json(const ExperimentSpec& spec,
                                     const std::string& command);

/// Records as a JSON array (same fields as the CSV columns).
std::string sweep_records_json(std::span<const SweepRecord> records);

/// Writes the CSV (or JSON, per format) and a .meta.json sidecar next to it.
/// Returns the sidecar path. Throws std::system_error on I/O failure.
std::filesystem::path write_sweep_outputs(const std::filesystem::path& output,
                                          std::string_view format,
                                          std::span<const SweepRecord> records,
                                          const ExperimentSpec& spec,
                                          const std::string& command);

}  // namespace nomaee
