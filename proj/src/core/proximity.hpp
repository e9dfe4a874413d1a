// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <vector>

#include "core/address.hpp"
#include "core/graph.hpp"

namespace eai {

// Sentinel for "unreachable or deeper than max_hops". Table output renders it
// as the literal "<max_hops>+".
inline constexpr uint32_t kBeyond = UINT32_MAX;

// Per-node exchange distance from a capped multi-source BFS that walks the
// direction funds flow (exchange -> recipient). Distance 0 is the exchange
// set itself; 1 means the wallet received funds directly from an exchange.
class DistanceMap {
  public:
    // Exclusion-list members are removed from the source set only; they stay
    // in the graph and may be reached like any other node. Throws
    // Error(kNoSources) if no exchange address survives (absent from the
    // graph or excluded).
    static DistanceMap compute(std::shared_ptr<const TransactionGraph> graph,
                               const AddressList& exchanges,
                               const AddressList* exclusions,
                               uint32_t max_hops = 5,
                               unsigned threads = 1);

    uint32_t max_hops() const { return max_hops_; }
    uint64_t source_count() const { return source_count_; }
    uint64_t node_count() const { return dist_.size(); }
    const TransactionGraph& graph() const { return *graph_; }

    uint32_t at_id(uint64_t id) const; // Error(kOutOfRange)
    uint32_t at(const Address& a) const; // Error(kUnknownAddress)

    bool is_eai(const Address& a) const { return at(a) <= 1; }
    bool within_hops_of_eai(const Address& a, uint32_t k) const;
    // min(d(sender), d(receiver)) under 0 < 1 < ... < max_hops < Beyond.
    uint32_t txn_distance(const Address& sender, const Address& receiver) const;
    bool txn_is_eai(const Address& sender, const Address& receiver) const;

    // CSV rows `address,distance` in node-id order, "<max_hops>+" for Beyond.
    void export_csv(std::ostream& out) const;

    std::string distance_label(uint32_t d) const;

  private:
    std::shared_ptr<const TransactionGraph> graph_;
    std::vector<uint32_t> dist_;
    uint32_t max_hops_ = 5;
    uint64_t source_count_ = 0;
};

} // namespace eai
