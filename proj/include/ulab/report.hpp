#pragma once

// Serialization of protocol records, figure tables and lab reports.
//
// JSON records are emitted one object per line.  CSV tables carry a header
// row followed by comma-separated doubles at 17 significant digits, LF line
// endings.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ulab/diffraction.hpp"
#include "ulab/landau_pollak.hpp"
#include "ulab/protocol.hpp"

namespace ulab::report {

using Json = nlohmann::json;

/// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "ULAB_OUTPUT_DIR";

std::filesystem::path default_output_dir();

/// %.17g
std::string format_double(double v);

Json to_json(const MeasurementRecord& record);
MeasurementRecord record_from_json(const Json& j);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

std::string to_csv(const Table& table);
/// One JSON object per row keyed by the header.
std::string to_json_lines(const Table& table);

/// Writes via a temporary sibling and rename.  Throws std::runtime_error
/// naming the path on failure.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

/// Rows (k, sd_x, sd_p, product) for k = 1..kmax_rows.
Table kennard_table(int kmax_rows);

struct FigureConfig {
  ProtocolParams params{};
  int samples = 1001;
  int spectrum_kmax = 1600;  ///< fig3 extends past the cutoff
};

struct FigureSet {
  Table fig1;  ///< x, |psi_{n,1}|^2
  Table fig2;  ///< x, |phi_l0|^2
  Table fig3;  ///< k, |a_{l0,k}|^2
  Table fig4;  ///< x, |truncated reconstruction|^2
};

FigureSet make_figures(const FigureConfig& config);

/// Writes fig1.csv .. fig4.csv into dir; returns the written paths.
std::vector<std::filesystem::path> write_figures(
    const FigureSet& figures, const std::filesystem::path& dir);

Json landau_pollak_json(const lp::ProjectorPair& pair);
Json diffraction_json(const diffraction::DiffractionSetup& setup);

}  // namespace ulab::report
