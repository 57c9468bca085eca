#pragma once

#include <span>
#include <string>
#include <vector>

#include "sasaki/cli/config.hpp"
#include "sasaki/models/catalog.hpp"

namespace sasaki::cli {

// Exit-code contract of the command line tool.
enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,      // a check failed, or a proved dichotomy was violated
  kExitUsage = 2,     // unknown model or suite, invalid flag values
  kExitNumeric = 3,   // derivative budget, singular values, generation failure
};

const std::vector<std::string>& suite_names();

// Runs one suite on a resolved model. Suites that need a contact structure
// (or the Heisenberg chart) report a single not-applicable check on models
// without one. Throws InvalidArgument for unknown suite names.
SuiteReport run_suite(const std::string& suite, const models::ModelInstance& model,
                      std::span<const fields::Point> points, double tolerance, std::uint64_t seed);

// "pass", "fail" or "not-applicable" (a precondition failed, or nothing in
// the suite applies to the model).
std::string status_of(const SuiteReport& report);

struct CommandResult {
  int exit_code = kExitPass;
  std::string output;      // report in the requested format
  std::string diagnostic;  // error text for stderr, empty on success
};

CommandResult cmd_verify(const RunConfig& config);
// Every suite on every model of models::matrix_selectors(config.n_max),
// with the tag → model coverage table. Errors are recorded per cell. Exit 0
// iff no cell fails or errors.
CommandResult cmd_report_matrix(const RunConfig& config);
// Catalog families with their selector parameters.
CommandResult cmd_list_models();

std::string render_text(const VerificationReport& report);

}  // namespace sasaki::cli
