#pragma once

#include <functional>
#include <iosfwd>

#include "opsplit/config.hpp"

namespace opsplit {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,       // verification failure or iteration did not converge
  kExitConfig = 2,
  kExitNumerical = 3,
};

// Each command writes its files under config.out and a short summary to `log`.
int run_verify(const RunConfig& config, std::ostream& log);
int run_iterate(const RunConfig& config, std::ostream& log);  // trace.csv
int run_report(const RunConfig& config, std::ostream& log);   // closed_forms.tsv

// Runs `body`, mapping library errors to exit codes with a diagnostic on `err`.
int guarded(const std::function<int()>& body, std::ostream& err);

}  // namespace opsplit
