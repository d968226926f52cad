#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace epcx::app {

/// Git blob object id: SHA-1 of "blob <size>\0" followed by the content.
[[nodiscard]] std::string git_blob_sha1(std::string_view content);

/// Writes `content` to `path`, creating parent directories. Throws IoError.
void write_file(const std::filesystem::path& path, std::string_view content);

/// Reads a whole file. Throws IoError.
[[nodiscard]] std::string read_file(const std::filesystem::path& path);

}  // namespace epcx::app
