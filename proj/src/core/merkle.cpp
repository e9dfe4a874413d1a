// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/merkle.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

#include "core/error.hpp"
#include "core/hex.hpp"

namespace eai {

Digest merkle_leaf_hash(const Address& address) {
    uint8_t buf[1 + 20];
    buf[0] = 0x00;
    std::copy(address.bytes.begin(), address.bytes.end(), buf + 1);
    return keccak256(std::span<const uint8_t>(buf, sizeof buf));
}

Digest merkle_node_hash(const Digest& a, const Digest& b) {
    const Digest& lo = b < a ? b : a;
    const Digest& hi = b < a ? a : b;
    uint8_t buf[1 + 32 + 32];
    buf[0] = 0x01;
    std::copy(lo.begin(), lo.end(), buf + 1);
    std::copy(hi.begin(), hi.end(), buf + 33);
    return keccak256(std::span<const uint8_t>(buf, sizeof buf));
}

std::string MerkleProof::to_json() const {
    nlohmann::ordered_json j;
    j["address"] = address.to_string();
    auto& sib = j["siblings"] = nlohmann::ordered_json::array();
    for (const Digest& d : siblings) sib.push_back(to_hex0x(d));
    j["root"] = to_hex0x(root);
    return j.dump(2) + "\n";
}

MerkleProof MerkleProof::from_json(std::string_view text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object() || !j.contains("address") || !j.contains("siblings") ||
        !j.contains("root") || !j["address"].is_string() || !j["siblings"].is_array() ||
        !j["root"].is_string())
        throw Error(ErrorCode::kMalformedRow, "proof JSON needs address, siblings, root");

    MerkleProof proof;
    auto addr = Address::try_parse(j["address"].get<std::string>());
    if (!addr) throw Error(ErrorCode::kMalformedRow, "proof JSON: bad address");
    proof.address = *addr;
    for (const auto& s : j["siblings"]) {
        if (!s.is_string()) throw Error(ErrorCode::kMalformedRow, "proof JSON: bad sibling");
        auto bytes = from_hex(s.get<std::string>());
        if (!bytes || bytes->size() != 32)
            throw Error(ErrorCode::kMalformedRow, "proof JSON: sibling is not a 32-byte digest");
        Digest d;
        std::copy(bytes->begin(), bytes->end(), d.begin());
        proof.siblings.push_back(d);
    }
    auto root = from_hex(j["root"].get<std::string>());
    if (!root || root->size() != 32)
        throw Error(ErrorCode::kMalformedRow, "proof JSON: root is not a 32-byte digest");
    std::copy(root->begin(), root->end(), proof.root.begin());
    return proof;
}

bool verify_proof(const Digest& root, const MerkleProof& proof) {
    Digest h = merkle_leaf_hash(proof.address);
    for (const Digest& sibling : proof.siblings) h = merkle_node_hash(h, sibling);
    return h == root;
}

MerkleRegistry MerkleRegistry::build(std::span<const Address> addresses) {
    MerkleRegistry reg;
    reg.leaves_.assign(addresses.begin(), addresses.end());
    std::sort(reg.leaves_.begin(), reg.leaves_.end());
    reg.leaves_.erase(std::unique(reg.leaves_.begin(), reg.leaves_.end()), reg.leaves_.end());
    if (reg.leaves_.empty()) throw Error(ErrorCode::kEmptySet, "registry needs at least one address");

    std::vector<Digest> level;
    level.reserve(reg.leaves_.size());
    for (const Address& a : reg.leaves_) level.push_back(merkle_leaf_hash(a));
    reg.levels_.push_back(level);
    while (level.size() > 1) {
        std::vector<Digest> next;
        next.reserve((level.size() + 1) / 2);
        size_t i = 0;
        for (; i + 1 < level.size(); i += 2) next.push_back(merkle_node_hash(level[i], level[i + 1]));
        if (i < level.size()) next.push_back(level[i]); // odd node carries up
        reg.levels_.push_back(next);
        level = std::move(next);
    }
    return reg;
}

bool MerkleRegistry::contains(const Address& address) const {
    return std::binary_search(leaves_.begin(), leaves_.end(), address);
}

MerkleProof MerkleRegistry::prove(const Address& address) const {
    auto it = std::lower_bound(leaves_.begin(), leaves_.end(), address);
    if (it == leaves_.end() || !(*it == address))
        throw Error(ErrorCode::kNotMember, "address is not a registry leaf: " + address.to_string());

    MerkleProof proof;
    proof.address = address;
    proof.root = root();
    size_t index = static_cast<size_t>(it - leaves_.begin());
    for (size_t lvl = 0; lvl + 1 < levels_.size(); ++lvl) {
        size_t sibling = index ^ 1;
        if (sibling < levels_[lvl].size()) proof.siblings.push_back(levels_[lvl][sibling]);
        index /= 2;
    }
    return proof;
}

MerkleRegistry MerkleRegistry::update(std::span<const Address> add,
                                      std::span<const Address> remove) const {
    std::vector<Address> next = leaves_;
    for (const Address& a : remove) {
        auto it = std::lower_bound(next.begin(), next.end(), a);
        if (it == next.end() || !(*it == a))
            throw Error(ErrorCode::kNotMember, "cannot remove non-member: " + a.to_string());
        next.erase(it);
    }
    for (const Address& a : add) {
        auto it = std::lower_bound(next.begin(), next.end(), a);
        if (it != next.end() && *it == a)
            throw Error(ErrorCode::kAlreadyMember, "cannot add existing member: " + a.to_string());
        next.insert(it, a);
    }
    return build(next);
}

std::string MerkleRegistry::to_text() const {
    std::string out;
    for (const Address& a : leaves_) {
        out += a.to_string();
        out += '\n';
    }
    return out;
}

} // namespace eai
