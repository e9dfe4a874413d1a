// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "core/graph.hpp"
#include "core/ingest.hpp"
#include "core/proximity.hpp"

// Reference implementations written from the data contracts alone, used to
// cross-check the production code. They favor obviousness over speed: plain
// maps, one BFS per source, exhaustive walks on tiny graphs.
namespace eai::test {

struct OracleGraph {
    std::vector<Address> nodes; // first-appearance order over retained records
    std::map<std::pair<uint64_t, uint64_t>, uint64_t> edges; // pair -> micro total

    uint64_t volume_micro() const;
    // Successor lists indexed by node id, sorted ascending.
    std::vector<std::vector<uint64_t>> adjacency() const;
};

// Endpoints of every record passing the direct/token filters are interned
// (so self-transfer-only and sub-threshold-only endpoints stay nodes); sums
// are per ordered pair excluding self-transfers; pairs below the threshold
// are dropped after summation.
OracleGraph aggregate_oracle(std::span<const TransferRecord> records,
                             const GraphBuildOptions& options = {});

// Min over one independently capped BFS per surviving source. Nodes not
// reached within max_hops hold kBeyond. Excluded sources are skipped but
// remain reachable nodes.
std::vector<uint32_t> distance_oracle(const OracleGraph& g,
                                      const std::vector<Address>& sources,
                                      const std::vector<Address>& exclusions,
                                      uint32_t max_hops);

// Exhaustive enumeration of every walk of length <= max_hops from each
// surviving source; minimum arrival step per node. Only viable for graphs of
// a dozen-odd nodes, where it double-checks distance_oracle by brute force.
std::vector<uint32_t> walk_distance_oracle(const OracleGraph& g,
                                           const std::vector<Address>& sources,
                                           const std::vector<Address>& exclusions,
                                           uint32_t max_hops);

struct ReplayEntry {
    uint64_t peak_micro = 0;
    uint64_t final_micro = 0;
};

// Reference balance replay: records in (ordering_key, input position) order,
// debit before credit per record, debits clamped at zero, peak tracked on
// credits only.
std::unordered_map<Address, ReplayEntry, AddressHash> replay_oracle(
    std::span<const TransferRecord> records);

// Deterministic random transfer batch over index_addr(0 .. node_span - 1).
// Tokens rotate across {USDT, USDC, WETH}, one record in four is non-direct,
// and self-transfers occur naturally, so the batch exercises every build
// filter.
std::vector<TransferRecord> random_records(std::mt19937_64& rng, uint32_t node_span,
                                           size_t count, uint64_t max_micro);

// Random ledger script obeying the flag-propagation preconditions: exchange
// flags are set before any transfer, every address is funded, transfers are
// balance-valid and unsuppressed, and every exchange sends at least once (so
// each one is a graph node).
struct ScriptCase {
    std::string script;
    std::vector<Address> addresses;
    std::vector<Address> exchanges;
    std::vector<TransferRecord> transfers; // transfer ops only, script order
};

ScriptCase random_ledger_script(std::mt19937_64& rng, uint32_t address_count,
                                uint32_t exchange_count, size_t transfer_count);

} // namespace eai::test
