// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/address.hpp"
#include "core/ingest.hpp"
#include "core/proximity.hpp"

namespace eai {

// Balance replay over the transfer stream: +amount on receipt, -amount on
// send, clamped at zero when a send exceeds the known balance (partial
// extracts make that unavoidable; each clamp bumps `underflow_warnings`).
struct BalanceSummary {
    struct Entry {
        uint64_t max_lifetime_micro = 0; // running maximum over the replay
        uint64_t final_micro = 0;
    };
    std::unordered_map<Address, Entry, AddressHash> per_address;
    uint64_t underflow_warnings = 0;
};

// Records are replayed in (ordering_key, input position) order; the input
// need not be pre-sorted. Within one record the debit applies before the
// credit.
BalanceSummary max_lifetime_balances(std::span<const TransferRecord> records);

// Half-open lower-inclusive USD intervals: [e0,e1), [e1,e2), ..., [ek,inf).
// An amount exactly on a boundary lands in the upper bucket.
class BucketSpec {
  public:
    explicit BucketSpec(std::vector<uint64_t> edges_micro); // Error(kBucketOverlap)

    static BucketSpec wallet_default(); // 10, 1k, 100k, 10m
    static BucketSpec txn_default();    // 10, 2k, 100k, 10m

    size_t count() const { return edges_micro_.size(); }
    uint64_t lower_bound_micro() const { return edges_micro_.front(); }
    // nullopt when below the first edge.
    std::optional<size_t> bucket_of(uint64_t micro) const;
    // Compact label such as "10-1k" or "10m+".
    std::string label(size_t bucket) const;

  private:
    std::vector<uint64_t> edges_micro_; // strictly increasing, nonempty
};

enum class CellKind { kCount, kVolume };

// Rows are amount buckets, columns are distances 0..max_hops plus a final
// "<max_hops>+" column holding Beyond.
struct DistanceTable {
    CellKind kind = CellKind::kCount;
    uint32_t max_hops = 5;
    std::vector<std::string> row_labels;
    std::vector<std::vector<uint64_t>> cells; // counts, or micro-USD sums

    size_t columns() const { return static_cast<size_t>(max_hops) + 2; }
    uint64_t total() const;
    void write_csv(std::ostream& out) const;
    void write_text(std::ostream& out) const;
};

struct AnalyticsOptions {
    // Restrict the wallet population to this list when present (externally
    // owned accounts cannot be told apart from contracts using transfer data
    // alone, so the filter is an input).
    const AddressList* eoa_filter = nullptr;
};

// One cell increment per address with max lifetime balance at or above the
// first bucket edge. Addresses absent from the distance map count as Beyond.
DistanceTable wallet_distance_table(const DistanceMap& dm, const BalanceSummary& balances,
                                    const BucketSpec& buckets,
                                    const AnalyticsOptions& options = {});

// One cell increment (or USD sum) per wallet-to-wallet transfer at or above
// the first bucket edge, keyed by min(d(sender), d(receiver)).
DistanceTable txn_distance_table(const DistanceMap& dm, std::span<const TransferRecord> records,
                                 const BucketSpec& buckets, CellKind kind);

// Percentages are per-mille-accurate integers in tenths of a percent
// (556 == 55.6%), rounded half-up.
uint64_t pct_tenths(uint64_t numerator, uint64_t denominator);
std::string format_pct_tenths(uint64_t tenths);

struct SummaryStats {
    uint64_t wallet_population = 0; // wallets with max balance >= threshold
    uint64_t txn_population = 0;    // direct transfers with amount >= min_amount
    uint64_t pct_eai_tenths = 0;
    uint64_t pct_within_one_hop_tenths = 0;
    uint64_t pct_txn_eai_tenths = 0;
};

// Error(kEmptyPopulation) if either population is empty.
SummaryStats summary_stats(const DistanceMap& dm, const BalanceSummary& balances,
                           std::span<const TransferRecord> records,
                           uint64_t wallet_threshold_micro, uint64_t min_txn_micro,
                           const AnalyticsOptions& options = {});

struct ExploiterReport {
    uint32_t max_hops = 5;
    std::vector<uint64_t> histogram; // distances 0..max_hops then Beyond; found addresses only
    uint64_t found = 0;
    uint64_t not_found = 0; // treated as Beyond in the percentages
    uint64_t pct_non_eai_tenths = 0; // share with d >= 2 or Beyond
    uint64_t pct_beyond_tenths = 0;
    std::vector<uint64_t> baseline; // same histogram over every graph node
};

ExploiterReport exploiter_report(const DistanceMap& dm, const AddressList& exploiters);

} // namespace eai
