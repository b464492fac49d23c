// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vanetstat/config.hpp"
#include "vanetstat/report.hpp"

namespace vanetstat {

//! Link probability used by an analysis: given, or integrated from the channel.
struct LinkProbability
{
    Rational exact;
    double value = 0;
    bool derived = false;
};

LinkProbability link_probability(RunConfig const& cfg);

//! Closed-form PMFs and moments (exact arithmetic up to kExactVehicleLimit).
Report analyze_report(RunConfig const& cfg);
//! Monte Carlo tables; with cfg.compare also analytic columns and TV distances.
Report simulate_report(RunConfig const& cfg);
//! Brute-force enumeration tables (n <= 16).
Report oracle_report(RunConfig const& cfg);
//! Analytic, empirical and (for n <= 16) oracle columns with TV distances.
Report compare_report(RunConfig const& cfg);

//! Write the report where cfg says (file(s) or `out`).
void emit_report(Report const& report, RunConfig const& cfg, std::ostream& out);

/*!
 * Command-line entry point. `args` excludes the program name. Returns the
 * process exit code: 0 on success, 2 for configuration errors, 1 otherwise.
 */
int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace vanetstat
