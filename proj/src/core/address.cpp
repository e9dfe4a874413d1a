// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/address.hpp"

#include <algorithm>

#include "core/hex.hpp"

namespace eai {

std::optional<Address> Address::try_parse(std::string_view text) {
    if (!text.starts_with("0x") && !text.starts_with("0X")) return std::nullopt;
    Address a;
    if (!from_hex_exact(text, a.bytes)) return std::nullopt;
    return a;
}

Address Address::from_bytes(std::span<const uint8_t> b) {
    Address a;
    std::copy_n(b.begin(), std::min<size_t>(b.size(), 20), a.bytes.begin());
    return a;
}

std::string Address::to_string() const {
    return to_hex0x(bytes);
}

const char* list_role_name(ListRole role) {
    switch (role) {
    case ListRole::kExchange: return "exchange";
    case ListRole::kExploiter: return "exploiter";
    case ListRole::kExclusion: return "exclusion";
    }
    return "unknown";
}

AddressList::AddressList(ListRole role, std::vector<Address> members)
    : role_(role), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool AddressList::contains(const Address& a) const {
    return std::binary_search(members_.begin(), members_.end(), a);
}

} // namespace eai
