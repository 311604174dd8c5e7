#pragma once

#include <filesystem>
#include <string>

#include "vqge/complex_matrix.hpp"

namespace vqge {

// Pencil matrices travel between runs as UTF-8 text: first line "rows cols",
// then one row per line with whitespace-separated "re,im" entries. Values are
// written in shortest round-trip decimal form, so write+read is bit-faithful.

std::string format_matrix(const ComplexMatrix& m);
void write_matrix(const std::filesystem::path& path, const ComplexMatrix& m);

/// Parses the text format. ParseError messages name the offending 1-based line.
ComplexMatrix parse_matrix(const std::string& text);
ComplexMatrix read_matrix(const std::filesystem::path& path);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);
double parse_double(const std::string& s);

}  // namespace vqge
