#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "afpkit/types.hpp"

namespace afpkit {

/// Shortest round-trip decimal form with 17 significant digits, so reruns
/// produce byte-identical artifacts.
std::string format17(double v);

/// Comma-joined format17 of the entries.
std::string csv_row(const Vector& v);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace afpkit
