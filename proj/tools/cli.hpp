// Copyright 2026 The galois-words Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GALOIS_TOOLS_CLI_HPP
#define GALOIS_TOOLS_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "galois/alt_order.hpp"

namespace galois::cli {

enum class Format { Text, Json, Csv };

// Exit statuses shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotGalois = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitNotPrimitive = 3;
inline constexpr int kExitOracleMismatch = 4;

// Size guards for --oracle (the oracles are quadratic, cubic, exponential).
inline constexpr std::size_t kOracleCheckLimit = 4096;
inline constexpr std::size_t kOracleRotateLimit = 256;

struct Options {
  std::vector<std::string> inputs;  // empty or "-" means stdin
  Format format = Format::Text;
  int index_base = 0;
  bool emit_text = false;
  bool stream = false;
  bool pre = false;
  bool unchecked = false;
  bool oracle = false;
  int repeat = 5;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

/// Per-file row of the stats/compare tables. Times are microseconds.
struct RunReport {
  std::string file;
  std::size_t alphabet_size = 0;
  std::size_t input_size = 0;
  std::size_t galois_factor_count = 0;
  double galois_time_us = 0;
  std::size_t lyndon_factor_count = 0;
  double lyndon_time_us = 0;
};

/// Reads a whole file ("-" for the input stream) as raw bytes.
std::optional<std::vector<Symbol>> read_input(const std::string& path, std::istream& in,
                                              std::string& error);

/// Times one factorization of each kind; `repeat` > 1 reports medians.
RunReport measure(const std::string& name, Word data, int repeat);

int cmd_check(const Options& opt, Streams io);
int cmd_factorize(const Options& opt, Streams io);
int cmd_rotate(const Options& opt, Streams io);
int cmd_stats(const Options& opt, Streams io);
int cmd_compare(const Options& opt, Streams io);

/// Parses argv and dispatches; returns the process exit status.
int run(int argc, const char* const* argv, Streams io);

}  // namespace galois::cli

#endif  // GALOIS_TOOLS_CLI_HPP
