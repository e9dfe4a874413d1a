// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "core/address.hpp"
#include "core/ingest.hpp"

namespace eai {

struct GraphStats {
    uint64_t node_count = 0;
    uint64_t edge_count = 0;
    uint64_t total_volume_micro = 0; // aggregate USD over retained edges
};

struct GraphBuildOptions {
    uint64_t threshold_micro = 10 * static_cast<uint64_t>(Usd::kScale); // $10 edge rule
    bool direct_only = false;
    std::optional<std::string> token; // keep only this token's transfers
    uint8_t id_width = 4;             // bytes per node id in memory and cache: 4 or 8
};

// Immutable directed transfer graph. An edge (u, v) exists iff the summed
// USD amount of retained u->v transfers meets the threshold; self-transfers
// never form edges. Node ids are dense and assigned in first-appearance
// order over the retained records, so identical input yields an identical
// graph byte-for-byte.
class TransactionGraph {
  public:
    static TransactionGraph build(std::span<const TransferRecord> records,
                                  const GraphBuildOptions& options = {});

    // Binary cache, magic "EAIG1". Little-endian layout:
    //   u8 id_width, u64 node_count, u64 edge_count,
    //   address table (20 bytes x node_count, id order),
    //   adjacency offsets ((node_count + 1) x u64),
    //   targets (edge_count x id_width),
    //   edge totals (edge_count x u64 micro-USD).
    static TransactionGraph load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

    uint64_t node_count() const { return addresses_.size(); }
    uint64_t edge_count() const { return totals_.size(); }
    uint8_t id_width() const { return id_width_; }
    GraphStats stats() const;

    std::optional<uint64_t> find(const Address& a) const;
    const Address& address_of(uint64_t id) const; // Error(kOutOfRange)

    uint64_t degree(uint64_t id) const;
    // Successor ids, sorted ascending.
    std::vector<uint64_t> neighbors(uint64_t id) const; // Error(kOutOfRange)
    // Aggregated totals aligned with neighbors(id).
    std::vector<uint64_t> edge_totals(uint64_t id) const;

    template <class Fn>
    void for_each_neighbor(uint64_t id, Fn&& fn) const {
        for (uint64_t e = offsets_[id]; e < offsets_[id + 1]; ++e) fn(target_at(e));
    }

    // Predecessor ids, sorted ascending; the reverse adjacency is built on
    // first use and cached.
    std::vector<uint64_t> predecessors(uint64_t id) const;

  private:
    uint64_t target_at(uint64_t e) const {
        return id_width_ == 4 ? targets32_[e] : targets64_[e];
    }
    void rebuild_index();
    void ensure_reverse() const;

    uint8_t id_width_ = 4;
    std::vector<Address> addresses_; // id order
    std::unordered_map<Address, uint64_t, AddressHash> index_;
    std::vector<uint64_t> offsets_; // node_count + 1
    std::vector<uint32_t> targets32_;
    std::vector<uint64_t> targets64_;
    std::vector<uint64_t> totals_; // micro-USD per edge

    struct ReverseCache {
        std::once_flag once;
        std::vector<uint64_t> offsets;
        std::vector<uint64_t> targets;
    };
    std::unique_ptr<ReverseCache> reverse_ = std::make_unique<ReverseCache>();
};

} // namespace eai
