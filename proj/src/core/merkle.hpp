// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/address.hpp"
#include "core/keccak.hpp"

namespace eai {

// Hashing contract: leaf = H(0x00 ‖ address bytes); internal = H(0x01 ‖ lo ‖ hi)
// where (lo, hi) is the byte-wise sorted pair of children; an unpaired node at
// any level carries up unchanged. Sorted-pair folding removes direction bits
// from proofs; the 0x00/0x01 prefixes stop leaf/node splicing.
Digest merkle_leaf_hash(const Address& address);
Digest merkle_node_hash(const Digest& a, const Digest& b);

struct MerkleProof {
    Address address;
    std::vector<Digest> siblings; // leaf-to-root order
    Digest root{};                // root the proof was issued against

    std::string to_json() const;
    // Error(kMalformedRow) on missing fields or bad hex.
    static MerkleProof from_json(std::string_view text);
};

// Recompute from the leaf hash through sorted-pair folding; never throws.
bool verify_proof(const Digest& root, const MerkleProof& proof);

class MerkleRegistry {
  public:
    // Deduplicates and sorts ascending by byte value. Error(kEmptySet).
    static MerkleRegistry build(std::span<const Address> addresses);

    const std::vector<Address>& leaves() const { return leaves_; }
    const Digest& root() const { return levels_.back().front(); }
    // ceil(log2(n)) for n >= 2, 0 for n == 1.
    uint32_t depth() const { return static_cast<uint32_t>(levels_.size() - 1); }
    bool contains(const Address& address) const;

    MerkleProof prove(const Address& address) const; // Error(kNotMember)

    // Equivalent to a rebuild over leaves ∪ add ∖ remove.
    // Error(kAlreadyMember) if add hits a leaf, Error(kNotMember) if remove misses.
    MerkleRegistry update(std::span<const Address> add, std::span<const Address> remove) const;

    // Registry file form: sorted newline-delimited addresses.
    std::string to_text() const;

  private:
    MerkleRegistry() = default;

    std::vector<Address> leaves_;        // strictly increasing
    std::vector<std::vector<Digest>> levels_; // levels_[0] = leaf hashes; back() = {root}
};

} // namespace eai
