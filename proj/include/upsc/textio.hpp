#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace upsc {

/// Scientific notation, 12 significant digits. All CSV output goes through
/// this so emitted files are byte-stable across runs and worker counts.
std::string sci12(double value);

/// Shortest decimal form that reparses to the identical double ("%.17g"
/// with trailing-zero trimming). Used for parameter snapshots.
std::string full_precision(double value);

/// Strict double parser: the whole field must be consumed.
double parse_double(std::string_view text, const std::string& context);

/// Split one CSV line on commas. No quoting rules; fields are numeric or
/// bare identifiers in every format this tool reads.
std::vector<std::string> split_csv_line(std::string_view line);

std::string read_text_file(const std::filesystem::path& path);

/// Writes with "\n" line endings regardless of platform.
void write_text_file(const std::filesystem::path& path, std::string_view content);

/// FNV-1a 64-bit digest of a file's bytes, as 16 hex chars.
std::string file_digest(const std::filesystem::path& path);

} // namespace upsc
