#pragma once

#include <optional>
#include <string>

#include "milreg/io/json.hpp"

namespace milreg::io {

const char* tool_version();

// Command-line overrides applied on top of the job's grid and tori.
struct Overrides {
  std::optional<int> N;
  std::optional<double> delta;
  std::optional<int> R;
  std::optional<int> threads;
};

struct Report {
  Json json;
  std::string csv;  // empty unless the task produces rows
};

// Validates and runs one job. Throws SchemaError for malformed input and
// DomainError from the modules.
Report run_job(const Json& job, const Overrides& overrides = {});

// {error, detail} bodies for the three failure classes.
Json error_json(const std::string& error, const std::string& detail);

}  // namespace milreg::io
