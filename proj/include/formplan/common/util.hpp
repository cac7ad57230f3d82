// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace formplan::util {

std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::string to_lower(std::string_view s);
bool starts_with(std::string_view s, std::string_view prefix);
bool contains_ci(std::string_view haystack, std::string_view needle);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

/// FNV-1a 64-bit over raw bytes, rendered as 16 hex digits. Stable across
/// platforms; used for cassette fingerprints.
std::string fnv1a_hex(std::string_view bytes);

std::optional<std::string> read_file(const std::filesystem::path& path);
bool write_file(const std::filesystem::path& path, std::string_view content);

/// Root of the bundled assets/ tree. Honors FORMPLAN_ASSETS, then falls back
/// to the source-tree path baked in at configure time.
std::filesystem::path asset_root();

/// Monotonic seconds, for stage timing.
double now_seconds();

} // namespace formplan::util
