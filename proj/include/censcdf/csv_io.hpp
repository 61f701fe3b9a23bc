#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "censcdf/model_cdf.hpp"
#include "censcdf/sample.hpp"

namespace censcdf {

// Header-first CSV with numeric payload. Ingestion failures throw
// std::runtime_error whose message carries "file:line:".
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::size_t column_index(const std::string& name) const;  // throws if absent
  bool has_column(const std::string& name) const;
};

CsvTable read_csv(const std::filesystem::path& path);
void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows);

// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

// Sample file: columns y, delta, x (and optionally id). delta entries must
// be 0 or 1.
struct SampleFile {
  CensoredSample sample;
  std::vector<double> ids;  // empty when the file has no id column
};
SampleFile read_sample_csv(const std::filesystem::path& path);
void write_sample_csv(const std::filesystem::path& path,
                      const CensoredSample& sample,
                      const std::vector<double>& ids = {});

// Population covariate file for estimation: columns id, x covering the
// whole population. Combined with a sample file carrying ids, yields the
// frame for the model estimator.
PopulationFrame read_population_frame(const std::filesystem::path& sample_path,
                                      const std::filesystem::path& population_path);

// Census population file for design-based studies: columns y, delta, x for
// every unit.
CensoredSample read_census_csv(const std::filesystem::path& path);

}  // namespace censcdf
