// Copyright 2026 The tardy Authors
// SPDX-License-Identifier: Apache-2.0

#include "tardy/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "tardy/errors.hpp"

namespace tardy {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> fields;
};

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      if (j > i) line.fields.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.fields.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

std::uint64_t parse_value(std::string_view field, std::size_t line, const char* name, bool allow_zero) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec == std::errc::result_out_of_range) fail(line, std::string(name) + " does not fit in 64 bits");
  if (ec != std::errc{} || end != field.data() + field.size()) {
    fail(line, std::string(name) + " is not a decimal integer: '" + std::string(field) + "'");
  }
  if (value == 0 && !allow_zero) fail(line, std::string(name) + " must be positive");
  return value;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError("missing header line 'm n'");
  const Line& header = lines.front();
  if (header.fields.size() != 2) fail(header.number, "header must be 'm n'");
  const std::uint64_t m = parse_value(header.fields[0], header.number, "machine count", false);
  const std::uint64_t n = parse_value(header.fields[1], header.number, "job count", true);
  if (m > std::numeric_limits<unsigned>::max()) fail(header.number, "machine count too large");
  if (n != lines.size() - 1) {
    throw ParseError("header declares " + std::to_string(n) + " jobs but " +
                     std::to_string(lines.size() - 1) + " job lines follow");
  }
  Instance inst(static_cast<unsigned>(m));
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.fields.size() != 2) fail(line.number, "job line must be 'p d'");
    const std::uint64_t p = parse_value(line.fields[0], line.number, "processing time", false);
    const std::uint64_t d = parse_value(line.fields[1], line.number, "due date", false);
    try {
      inst.add_job(p, d);
    } catch (const ContractViolation&) {
      fail(line.number, "total processing time does not fit in 64 bits");
    }
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << inst.machines() << ' ' << inst.size() << '\n';
  for (const Job& j : inst.jobs()) out << j.processing << ' ' << j.due << '\n';
  return out.str();
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return parse_instance(buffer.str());
}

}  // namespace tardy
