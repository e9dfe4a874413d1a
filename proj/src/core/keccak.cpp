// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/keccak.hpp"

#include <bit>
#include <cstring>

namespace eai {

namespace {

constexpr uint64_t kRoundConstants[24] = {
    0x0000000000000001ull, 0x0000000000008082ull, 0x800000000000808aull,
    0x8000000080008000ull, 0x000000000000808bull, 0x0000000080000001ull,
    0x8000000080008081ull, 0x8000000000008009ull, 0x000000000000008aull,
    0x0000000000000088ull, 0x0000000080008009ull, 0x000000008000000aull,
    0x000000008000808bull, 0x800000000000008bull, 0x8000000000008089ull,
    0x8000000000008003ull, 0x8000000000008002ull, 0x8000000000000080ull,
    0x000000000000800aull, 0x800000008000000aull, 0x8000000080008081ull,
    0x8000000000008080ull, 0x0000000080000001ull, 0x8000000080008008ull,
};

// Rotation offsets in lane index order (index = x + 5y).
constexpr int kRho[25] = {
    0,  1,  62, 28, 27, //
    36, 44, 6,  55, 20, //
    3,  10, 43, 25, 39, //
    41, 45, 15, 21, 8,  //
    18, 2,  61, 56, 14, //
};

void keccak_f1600(std::array<uint64_t, 25>& a) {
    for (int round = 0; round < 24; ++round) {
        // theta
        uint64_t c[5];
        for (int x = 0; x < 5; ++x)
            c[x] = a[static_cast<size_t>(x)] ^ a[static_cast<size_t>(x + 5)] ^
                   a[static_cast<size_t>(x + 10)] ^ a[static_cast<size_t>(x + 15)] ^
                   a[static_cast<size_t>(x + 20)];
        for (int x = 0; x < 5; ++x) {
            uint64_t d = c[(x + 4) % 5] ^ std::rotl(c[(x + 1) % 5], 1);
            for (int y = 0; y < 5; ++y) a[static_cast<size_t>(x + 5 * y)] ^= d;
        }
        // rho + pi
        uint64_t b[25];
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y) {
                int src = x + 5 * y;
                int dst = y + 5 * ((2 * x + 3 * y) % 5);
                b[dst] = std::rotl(a[static_cast<size_t>(src)], kRho[src]);
            }
        // chi
        for (int y = 0; y < 5; ++y)
            for (int x = 0; x < 5; ++x)
                a[static_cast<size_t>(x + 5 * y)] =
                    b[x + 5 * y] ^ (~b[(x + 1) % 5 + 5 * y] & b[(x + 2) % 5 + 5 * y]);
        // iota
        a[0] ^= kRoundConstants[round];
    }
}

} // namespace

void Keccak256::update(std::span<const uint8_t> data) {
    while (!data.empty()) {
        size_t take = std::min(data.size(), block_.size() - block_fill_);
        std::memcpy(block_.data() + block_fill_, data.data(), take);
        block_fill_ += take;
        data = data.subspan(take);
        if (block_fill_ == block_.size()) absorb_block();
    }
}

void Keccak256::absorb_block() {
    for (size_t i = 0; i < block_.size() / 8; ++i) {
        uint64_t lane;
        std::memcpy(&lane, block_.data() + 8 * i, 8); // little-endian host assumed
        state_[i] ^= lane;
    }
    keccak_f1600(state_);
    block_fill_ = 0;
}

Digest Keccak256::finish() {
    // Multi-rate padding with the Keccak 0x01 domain byte.
    block_[block_fill_] = 0x01;
    std::memset(block_.data() + block_fill_ + 1, 0, block_.size() - block_fill_ - 1);
    block_[block_.size() - 1] |= 0x80;
    block_fill_ = block_.size();
    absorb_block();

    Digest out;
    std::memcpy(out.data(), state_.data(), out.size());
    return out;
}

Digest keccak256(std::span<const uint8_t> data) {
    Keccak256 h;
    h.update(data);
    return h.finish();
}

Digest keccak256(std::string_view data) {
    return keccak256(std::span<const uint8_t>(
        reinterpret_cast<const uint8_t*>(data.data()), data.size()));
}

} // namespace eai
