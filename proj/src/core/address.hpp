// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eai {

// 20-byte account identifier. Canonical text form is lowercase hex with a
// "0x" prefix; parsing accepts mixed case.
struct Address {
    std::array<uint8_t, 20> bytes{};

    static std::optional<Address> try_parse(std::string_view text);
    static Address from_bytes(std::span<const uint8_t> b);

    std::string to_string() const;

    auto operator<=>(const Address&) const = default;
};

struct AddressHash {
    size_t operator()(const Address& a) const noexcept {
        // Mix all twenty bytes: address populations can share long prefixes
        // (zero padding, vanity prefixes), which must not collapse buckets.
        uint64_t lo = 0, mid = 0;
        uint32_t hi = 0;
        std::memcpy(&lo, a.bytes.data(), 8);
        std::memcpy(&mid, a.bytes.data() + 8, 8);
        std::memcpy(&hi, a.bytes.data() + 16, 4);
        uint64_t h = lo * 0x9e3779b97f4a7c15ull;
        h ^= (mid + 0x9e3779b97f4a7c15ull) * 0xbf58476d1ce4e5b9ull;
        h ^= (hi + 0x94d049bb133111ebull) * 0x2545f4914f6cdd1dull;
        h ^= h >> 29;
        h *= 0xbf58476d1ce4e5b9ull;
        h ^= h >> 32;
        return static_cast<size_t>(h);
    }
};

enum class ListRole { kExchange, kExploiter, kExclusion };

const char* list_role_name(ListRole role);

// Deduplicated, canonicalized address set with ordered membership queries.
class AddressList {
  public:
    AddressList() = default;
    AddressList(ListRole role, std::vector<Address> members);

    ListRole role() const { return role_; }
    const std::vector<Address>& members() const { return members_; }
    size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(const Address& a) const;

  private:
    ListRole role_ = ListRole::kExchange;
    std::vector<Address> members_; // sorted, unique
};

} // namespace eai
