#pragma once

#include <string>

#include "cliffalg/cli/run.hpp"

namespace cliffalg::cli {

inline constexpr int kSchemaVersion = 1;

// {schema_version, command, config, records[], elapsed_ms}
std::string to_json(const Report& report);
// One record per row: name, status, expected, observed, anchor.
std::string to_csv(const Report& report);
std::string to_text(const Report& report);
std::string render(const Report& report);

}  // namespace cliffalg::cli
