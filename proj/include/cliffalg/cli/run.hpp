#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cliffalg/exactla/rational.hpp"
#include "cliffalg/report.hpp"

namespace cliffalg::cli {

enum class Command { maximal, minimal, toric, verify_all };
enum class OutputFormat { json, csv, text };

std::string to_string(Command c);
std::string to_string(OutputFormat f);

struct RunConfig {
  Command command = Command::verify_all;
  int n = 2;
  int degree_cap = 6;
  std::optional<std::string> family_path;
  std::optional<exactla::Rational> q;
  OutputFormat output_format = OutputFormat::json;
  std::uint64_t seed = 0;
  // 0 keeps the OpenMP default
  int threads = 0;
  // elapsed_ms is reported as 0 when false, so output is byte-stable
  bool timing = true;
};

// Throws InvalidInput on n < 1, degree_cap < 1 or a minimal run without a
// family file.
void validate(const RunConfig& config);

struct Report {
  RunConfig config;
  Suite records;
  double elapsed_ms = 0;

  bool failed() const;
};

// Runs the suite for the command. Configuration and input errors become
// failed records; the run itself does not throw.
Report run(const RunConfig& config);

}  // namespace cliffalg::cli
