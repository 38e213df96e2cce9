#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "exhauster/reduction.hpp"

namespace exh {

// Stable key: value renderings used by the command line.
std::string format_certificate(const Exhauster& ex, const DiscardResult& result);
std::string format_report(const Exhauster& ex, const MinimalityReport& report);
std::string format_reduction(const Exhauster& original, const ReductionResult& result);

/// Runs one command line (args excludes the program name).
/// Exit codes: 0 success / discardable / minimal, 1 retained / not minimal,
/// 2 usage, input or index errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace exh
