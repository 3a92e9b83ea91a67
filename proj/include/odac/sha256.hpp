#pragma once

#include <string>
#include <string_view>

namespace odac {

/// SHA-256 of the bytes, as a lowercase hex string.
std::string sha256_hex(std::string_view data);

}  // namespace odac
