// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#include <iostream>
#include <string>
#include <vector>

#include "wlsq/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wlsq::cli::run(args, std::cout, std::cerr);
}
