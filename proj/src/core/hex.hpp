// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eai {

// Lowercase hex without prefix.
std::string to_hex(std::span<const uint8_t> bytes);

// Lowercase hex with "0x" prefix.
std::string to_hex0x(std::span<const uint8_t> bytes);

// Accepts upper or lower case, with or without "0x". Requires an even digit
// count; returns nullopt on any non-hex character.
std::optional<std::vector<uint8_t>> from_hex(std::string_view text);

// Decodes exactly `out.size()` bytes into `out`; false on length or digit
// mismatch.
bool from_hex_exact(std::string_view text, std::span<uint8_t> out);

} // namespace eai
