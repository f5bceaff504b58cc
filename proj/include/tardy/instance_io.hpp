// Copyright 2026 The tardy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "tardy/instance.hpp"

namespace tardy {

/// Parses the text instance format: a header line "m n" followed by n lines
/// "p d". Everything after '#' on a line is ignored, as are blank lines.
/// Values are positive decimal integers that fit in 64 bits (n may be 0).
/// Throws ParseError naming the offending line.
Instance parse_instance(std::string_view text);

/// Canonical text form: "m n\n" then one "p d\n" per job, in stored order.
std::string serialize_instance(const Instance& inst);

/// Reads and parses a file. Throws IoError if it cannot be read.
Instance read_instance_file(const std::string& path);

}  // namespace tardy
