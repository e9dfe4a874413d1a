// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

#include "core/keccak.hpp"

namespace eai {

// Whole-file read/write. Both throw Error(kIo) naming the path.
std::string slurp_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

// Streaming Keccak-256 over the file contents. Throws Error(kIo).
Digest file_digest(const std::string& path);

// Owner read/write only; used for signer key files. Throws Error(kIo).
void restrict_file_mode(const std::string& path);

// "YYYY-MM-DDTHH:MM:SSZ".
std::string iso8601_utc(int64_t unix_seconds);
std::string now_iso8601_utc();
int64_t unix_now();

} // namespace eai
