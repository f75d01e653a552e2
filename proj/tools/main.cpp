// Copyright 2026 The galois-words Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return galois::cli::run(argc, argv, {std::cin, std::cout, std::cerr});
}
