// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wlsq::cli {

// Unknown flags and unparsable values count as invalid configuration (2).
enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitNumerical = 3,
  kExitStatistical = 4,
};

inline constexpr const char* kSweepHeader[] = {"swept_value", "regime", "e_clean", "e_noise",
                                               "var_noise", "e_total", "mc_mean", "mc_stderr",
                                               "z_score", "error"};

// Entry point shared by the binary and the tests. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wlsq::cli
