// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace eai {

using Digest = std::array<uint8_t, 32>;

// Keccak-256 as used by the EVM ecosystem: 1088-bit rate, 0x01 domain padding.
// This is the original Keccak submission, not NIST SHA3-256.
class Keccak256 {
  public:
    Keccak256() = default;

    void update(std::span<const uint8_t> data);
    void update(const uint8_t* data, size_t size) { update(std::span<const uint8_t>(data, size)); }
    Digest finish();

  private:
    void absorb_block();

    std::array<uint64_t, 25> state_{};
    std::array<uint8_t, 136> block_{};
    size_t block_fill_ = 0;
};

Digest keccak256(std::span<const uint8_t> data);
Digest keccak256(std::string_view data);

} // namespace eai
