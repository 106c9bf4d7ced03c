#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace contrarith {

/// Lowercase hex SHA-256 digest of a byte string.
std::string sha256_hex(std::string_view data);

/// Digest of a file's contents. Throws LoadError when the file can't be read.
std::string sha256_file(const std::filesystem::path& path);

} // namespace contrarith
