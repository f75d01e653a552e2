// Copyright 2026 The galois-words Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "galois/error.hpp"
#include "galois/galois.hpp"
#include "galois/lyndon.hpp"
#include "galois/oracles.hpp"

namespace galois::cli {
namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

std::string display_name(const std::string& path) { return path == "-" ? "<stdin>" : path; }

const std::string& single_input(const Options& opt) {
  static const std::string kStdin = "-";
  return opt.inputs.empty() ? kStdin : opt.inputs.front();
}

// Bytes -> JSON string. Each byte becomes the code point of the same value
// (Latin-1), so arbitrary binary factors survive as valid JSON.
std::string latin1(Word w) {
  std::string s;
  s.reserve(w.size());
  for (const Symbol b : w) {
    if (b < 0x80) {
      s.push_back(static_cast<char>(b));
    } else {
      s.push_back(static_cast<char>(0xC0 | (b >> 6)));
      s.push_back(static_cast<char>(0x80 | (b & 0x3F)));
    }
  }
  return s;
}

// Text-mode rendering of factor bytes: control bytes and backslash escaped.
std::string escaped(Word w) {
  std::string s;
  for (const Symbol b : w) {
    switch (b) {
      case '\n': s += "\\n"; break;
      case '\t': s += "\\t"; break;
      case '\r': s += "\\r"; break;
      case '\\': s += "\\\\"; break;
      default:
        if (b < 0x20 || b == 0x7F) {
          std::array<char, 5> buf{};
          std::snprintf(buf.data(), buf.size(), "\\x%02X", b);
          s += buf.data();
        } else {
          s.push_back(static_cast<char>(b));
        }
    }
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (const char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

double elapsed_us(Clock::time_point since) {
  return std::chrono::duration<double, std::micro>(Clock::now() - since).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? v[m] : (v[m - 1] + v[m]) / 2;
}

std::size_t alphabet_size(Word w) {
  std::array<bool, 256> seen{};
  for (const Symbol b : w) seen[b] = true;
  return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
}

class FactorWriter {
 public:
  FactorWriter(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {
    if (opt_.format == Format::Csv) out_ << (opt_.emit_text ? "start,length,text\n" : "start,length\n");
  }

  void write(FactorSpan span, Word text) {
    const std::size_t start = span.start - 1 + static_cast<std::size_t>(opt_.index_base);
    switch (opt_.format) {
      case Format::Text:
        out_ << start << ' ' << span.length;
        if (opt_.emit_text) out_ << ' ' << escaped(text);
        out_ << '\n';
        break;
      case Format::Json: {
        json rec = {{"start", start}, {"length", span.length}};
        if (opt_.emit_text) rec["text"] = latin1(text);
        out_ << rec.dump() << '\n';
        break;
      }
      case Format::Csv:
        out_ << start << ',' << span.length;
        if (opt_.emit_text) out_ << ',' << csv_field(std::string(as_chars(text)));
        out_ << '\n';
        break;
    }
  }

 private:
  const Options& opt_;
  std::ostream& out_;
};

bool oracle_matches_factorization(Word data, const Factorization& got, std::ostream& err) {
  if (data.size() > oracle::kMaxFactorizeLength) {
    err << "oracle: skipped (input longer than " << oracle::kMaxFactorizeLength << ")\n";
    return true;
  }
  if (oracle::oracle_factorize(data) == got) return true;
  err << "oracle: factorization mismatch\n";
  return false;
}

void write_report_header(const Options& opt, std::ostream& out, bool compare) {
  if (opt.format == Format::Csv) {
    out << "file,sigma,size";
    if (compare) out << ",repeat";
    out << (compare ? ",galois_factors,galois_median_us,lyndon_factors,lyndon_median_us,error\n"
                    : ",galois_factors,galois_us,lyndon_factors,lyndon_us,error\n");
  } else if (opt.format == Format::Text) {
    out << std::left << std::setw(24) << "file" << std::right << std::setw(6) << "sigma"
        << std::setw(12) << "size";
    if (compare) out << std::setw(8) << "repeat";
    out << std::setw(10) << "galois#" << std::setw(14) << (compare ? "galois_med_us" : "galois_us")
        << std::setw(10) << "lyndon#" << std::setw(14) << (compare ? "lyndon_med_us" : "lyndon_us")
        << '\n';
  }
}

void write_report(const Options& opt, std::ostream& out, const RunReport& r, bool compare) {
  switch (opt.format) {
    case Format::Text:
      out << std::left << std::setw(24) << r.file << std::right << std::setw(6)
          << r.alphabet_size << std::setw(12) << r.input_size;
      if (compare) out << std::setw(8) << opt.repeat;
      out << std::fixed << std::setprecision(1) << std::setw(10) << r.galois_factor_count
          << std::setw(14) << r.galois_time_us << std::setw(10) << r.lyndon_factor_count
          << std::setw(14) << r.lyndon_time_us << '\n';
      out << std::defaultfloat;
      break;
    case Format::Json: {
      json rec = {{"file", r.file},
                  {"sigma", r.alphabet_size},
                  {"size", r.input_size},
                  {"galois_factors", r.galois_factor_count},
                  {"lyndon_factors", r.lyndon_factor_count}};
      rec[compare ? "galois_median_us" : "galois_us"] = r.galois_time_us;
      rec[compare ? "lyndon_median_us" : "lyndon_us"] = r.lyndon_time_us;
      if (compare) rec["repeat"] = opt.repeat;
      out << rec.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << csv_field(r.file) << ',' << r.alphabet_size << ',' << r.input_size;
      if (compare) out << ',' << opt.repeat;
      out << ',' << r.galois_factor_count << ',' << r.galois_time_us << ','
          << r.lyndon_factor_count << ',' << r.lyndon_time_us << ",\n";
      break;
  }
}

void write_error_row(const Options& opt, std::ostream& out, const std::string& file,
                     const std::string& error, bool compare) {
  switch (opt.format) {
    case Format::Text:
      out << std::left << std::setw(24) << file << std::right << "  error: " << error << '\n';
      break;
    case Format::Json:
      out << json{{"file", file}, {"error", error}}.dump() << '\n';
      break;
    case Format::Csv:
      out << csv_field(file) << (compare ? ",,,,,,,," : ",,,,,,,") << csv_field(error) << '\n';
      break;
  }
}

int report_files(const Options& opt, Streams io, bool compare) {
  if (opt.inputs.empty()) {
    io.err << "error: no input files\n";
    return kExitIo;
  }
  write_report_header(opt, io.out, compare);
  int status = kExitOk;
  for (const std::string& path : opt.inputs) {
    std::string error;
    const auto data = read_input(path, io.in, error);
    if (!data) {
      io.err << "error: " << error << '\n';
      write_error_row(opt, io.out, display_name(path), error, compare);
      status = kExitIo;
      continue;
    }
    write_report(opt, io.out, measure(display_name(path), Word{*data}, compare ? opt.repeat : 1),
                 compare);
  }
  return status;
}

}  // namespace

std::optional<std::vector<Symbol>> read_input(const std::string& path, std::istream& in,
                                              std::string& error) {
  if (path == "-") {
    std::vector<Symbol> data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (in.bad()) {
      error = "failed to read standard input";
      return std::nullopt;
    }
    return data;
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    error = "cannot open '" + path + "'";
    return std::nullopt;
  }
  std::vector<Symbol> data{std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
  if (file.bad()) {
    error = "failed to read '" + path + "'";
    return std::nullopt;
  }
  return data;
}

RunReport measure(const std::string& name, Word data, int repeat) {
  RunReport r;
  r.file = name;
  r.alphabet_size = alphabet_size(data);
  r.input_size = data.size();
  std::vector<double> galois_us, lyndon_us;
  for (int k = 0; k < std::max(repeat, 1); ++k) {
    std::size_t count = 0;
    auto t0 = Clock::now();
    factorize_each(data, [&count](FactorSpan) { ++count; });
    galois_us.push_back(elapsed_us(t0));
    r.galois_factor_count = count;

    t0 = Clock::now();
    r.lyndon_factor_count = lyndon::duval_count(data);
    lyndon_us.push_back(elapsed_us(t0));
  }
  r.galois_time_us = median(std::move(galois_us));
  r.lyndon_time_us = median(std::move(lyndon_us));
  return r;
}

int cmd_check(const Options& opt, Streams io) {
  std::string error;
  const auto data = read_input(single_input(opt), io.in, error);
  if (!data) {
    io.err << "error: " << error << '\n';
    return kExitIo;
  }
  const Word w{*data};
  const bool galois = is_galois(w);
  const bool pre = opt.pre && is_pre_galois(w);

  if (opt.oracle) {
    if (w.size() > kOracleCheckLimit) {
      io.err << "oracle: skipped (input longer than " << kOracleCheckLimit << ")\n";
    } else if (oracle::oracle_is_galois(w) != galois ||
               (opt.pre && oracle::oracle_is_pre_galois(w) != pre)) {
      io.err << "oracle: detection mismatch\n";
      return kExitOracleMismatch;
    }
  }

  switch (opt.format) {
    case Format::Text:
      io.out << "galois: " << bool_str(galois) << '\n';
      if (opt.pre) io.out << "pre-galois: " << bool_str(pre) << '\n';
      break;
    case Format::Json: {
      json rec = {{"galois", galois}};
      if (opt.pre) rec["pre_galois"] = pre;
      io.out << rec.dump() << '\n';
      break;
    }
    case Format::Csv:
      io.out << (opt.pre ? "galois,pre_galois\n" : "galois\n") << bool_str(galois);
      if (opt.pre) io.out << ',' << bool_str(pre);
      io.out << '\n';
      break;
  }
  return galois ? kExitOk : kExitNotGalois;
}

int cmd_factorize(const Options& opt, Streams io) {
  const std::string& path = single_input(opt);
  FactorWriter writer(opt, io.out);

  if (!opt.stream) {
    std::string error;
    const auto data = read_input(path, io.in, error);
    if (!data) {
      io.err << "error: " << error << '\n';
      return kExitIo;
    }
    const Word w{*data};
    const Factorization f = factorize(w);
    if (opt.oracle && !oracle_matches_factorization(w, f, io.err)) return kExitOracleMismatch;
    for (const FactorSpan& s : f.factors) writer.write(s, w.subspan(s.start - 1, s.length));
    return kExitOk;
  }

  // Push path: bytes are fed one at a time as they are read and spans are
  // written as soon as the factorizer releases them.
  std::ifstream file;
  std::istream* src = &io.in;
  if (path != "-") {
    file.open(path, std::ios::binary);
    if (!file) {
      io.err << "error: cannot open '" << path << "'\n";
      return kExitIo;
    }
    src = &file;
  }
  const bool keep = opt.emit_text || opt.oracle;
  std::vector<Symbol> seen;
  Factorization all;
  Factorizer f;
  const auto flush = [&](const std::vector<FactorSpan>& spans) {
    for (const FactorSpan& s : spans) {
      if (opt.oracle) all.factors.push_back(s);
      writer.write(s, keep ? Word{seen}.subspan(s.start - 1, s.length) : Word{});
    }
  };
  std::array<char, 1 << 16> buf{};
  while (*src) {
    src->read(buf.data(), buf.size());
    const auto got = src->gcount();
    for (std::streamsize k = 0; k < got; ++k) {
      const auto z = static_cast<Symbol>(buf[static_cast<std::size_t>(k)]);
      if (keep) seen.push_back(z);
      flush(f.push(z));
    }
  }
  if (src->bad()) {
    io.err << "error: failed to read '" << display_name(path) << "'\n";
    return kExitIo;
  }
  flush(f.finish());
  if (opt.oracle) {
    all.total = seen.size();
    if (!oracle_matches_factorization(Word{seen}, all, io.err)) return kExitOracleMismatch;
  }
  return kExitOk;
}

int cmd_rotate(const Options& opt, Streams io) {
  std::string error;
  const auto data = read_input(single_input(opt), io.in, error);
  if (!data) {
    io.err << "error: " << error << '\n';
    return kExitIo;
  }
  const Word w{*data};
  if (w.empty()) {
    io.err << "error: cannot rotate an empty word\n";
    return kExitIo;
  }
  std::size_t r = 0;
  try {
    r = galois_rotation(w, opt.unchecked ? RotationMode::Unchecked : RotationMode::Validated);
  } catch (const NotPrimitive&) {
    io.err << "error: input is not primitive\n";
    return kExitNotPrimitive;
  }
  if (opt.oracle) {
    if (w.size() > kOracleRotateLimit) {
      io.err << "oracle: skipped (input longer than " << kOracleRotateLimit << ")\n";
    } else if (is_primitive(w) && oracle::oracle_rotation(w) != r) {
      io.err << "oracle: rotation mismatch\n";
      return kExitOracleMismatch;
    }
  }
  const std::size_t index = r - 1 + static_cast<std::size_t>(opt.index_base);
  const std::vector<Symbol> rotated = opt.emit_text ? rotate_word(w, r) : std::vector<Symbol>{};
  switch (opt.format) {
    case Format::Text:
      io.out << index << '\n';
      if (opt.emit_text) io.out << escaped(Word{rotated}) << '\n';
      break;
    case Format::Json: {
      json rec = {{"index", index}};
      if (opt.emit_text) rec["text"] = latin1(Word{rotated});
      io.out << rec.dump() << '\n';
      break;
    }
    case Format::Csv:
      io.out << (opt.emit_text ? "index,text\n" : "index\n") << index;
      if (opt.emit_text) io.out << ',' << csv_field(std::string(as_chars(Word{rotated})));
      io.out << '\n';
      break;
  }
  return kExitOk;
}

int cmd_stats(const Options& opt, Streams io) { return report_files(opt, io, false); }

int cmd_compare(const Options& opt, Streams io) {
  if (opt.repeat < 1) {
    io.err << "error: --repeat must be at least 1\n";
    return kExitIo;
  }
  return report_files(opt, io, true);
}

int run(int argc, const char* const* argv, Streams io) {
  CLI::App app{"Galois words: detection, factorization and rotation"};
  app.require_subcommand(1, 1);
  Options opt;

  const std::map<std::string, Format> formats{
      {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("files", opt.inputs, "Input files, '-' for stdin");
    sub->add_option("--format", opt.format, "Output format: text, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--index-base", opt.index_base, "Reported index base (0 or 1)")
        ->check(CLI::IsMember({0, 1}));
    sub->add_flag("--emit-text", opt.emit_text, "Also print factor / rotation bytes");
    sub->add_flag("--stream", opt.stream, "Feed the push-based factorizer byte by byte");
    sub->add_flag("--pre", opt.pre, "Also report pre-Galois status");
    sub->add_flag("--unchecked", opt.unchecked, "Skip the primitivity check of rotate");
    sub->add_option("--repeat", opt.repeat, "Timed repetitions for compare")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--oracle", opt.oracle, "Cross-check against brute-force oracles")
        ->group("");
  };

  struct Command {
    const char* name;
    const char* help;
    int (*fn)(const Options&, Streams);
  };
  const std::array<Command, 5> commands{{
      {"check", "Exit 0 if the input is a Galois word, 1 if not", cmd_check},
      {"factorize", "Print the Galois factorization as start/length pairs", cmd_factorize},
      {"rotate", "Print the start of the Galois rotation", cmd_rotate},
      {"stats", "Galois and Lyndon factor counts and times per file", cmd_stats},
      {"compare", "Median Galois vs Lyndon factorization times per file", cmd_compare},
  }};
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub);
    subs.emplace_back(sub, &c);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? kExitOk : kExitIo;
  }
  for (const auto& [sub, cmd] : subs)
    if (sub->parsed()) return cmd->fn(opt, io);
  return kExitIo;
}

}  // namespace galois::cli
