#pragma once

#include <string>
#include <vector>

#include "dml/parallel.hpp"

namespace dml::cli {

struct Check {
  std::string suite;
  std::string name;
  double measured;
  double bound;
  bool passed;
};

struct VerifyOptions {
  double mertens_x = 1e5;
  Exec exec{};
};

/// Module names accepted by run_suite, in the order `verify all` runs them.
const std::vector<std::string>& suite_names();

/// Runs one module's invariant checks. Throws std::invalid_argument for an
/// unknown module.
std::vector<Check> run_suite(const std::string& module, const VerifyOptions& opt);

}  // namespace dml::cli
