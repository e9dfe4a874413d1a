// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/analytics.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <ostream>

#include "core/error.hpp"

namespace eai {

BalanceSummary max_lifetime_balances(std::span<const TransferRecord> records) {
    std::vector<size_t> order(records.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return records[a].ordering_key < records[b].ordering_key;
    });

    BalanceSummary summary;
    for (size_t idx : order) {
        const TransferRecord& rec = records[idx];
        uint64_t amount = static_cast<uint64_t>(rec.amount.micro());

        auto& sender = summary.per_address[rec.from];
        if (sender.final_micro < amount) {
            sender.final_micro = 0;
            ++summary.underflow_warnings;
        } else {
            sender.final_micro -= amount;
        }

        auto& receiver = summary.per_address[rec.to];
        receiver.final_micro += amount;
        receiver.max_lifetime_micro = std::max(receiver.max_lifetime_micro, receiver.final_micro);
    }
    return summary;
}

BucketSpec::BucketSpec(std::vector<uint64_t> edges_micro) : edges_micro_(std::move(edges_micro)) {
    if (edges_micro_.empty())
        throw Error(ErrorCode::kBucketOverlap, "bucket spec needs at least one edge");
    for (size_t i = 1; i < edges_micro_.size(); ++i)
        if (edges_micro_[i] <= edges_micro_[i - 1])
            throw Error(ErrorCode::kBucketOverlap, "bucket edges must be strictly increasing");
}

BucketSpec BucketSpec::wallet_default() {
    constexpr uint64_t k = 1'000'000; // micro per dollar
    return BucketSpec({10 * k, 1'000 * k, 100'000 * k, 10'000'000 * k});
}

BucketSpec BucketSpec::txn_default() {
    constexpr uint64_t k = 1'000'000;
    return BucketSpec({10 * k, 2'000 * k, 100'000 * k, 10'000'000 * k});
}

std::optional<size_t> BucketSpec::bucket_of(uint64_t micro) const {
    if (micro < edges_micro_.front()) return std::nullopt;
    // upper_bound gives the first edge strictly above, so boundary values
    // land in the upper bucket.
    auto it = std::upper_bound(edges_micro_.begin(), edges_micro_.end(), micro);
    return static_cast<size_t>(it - edges_micro_.begin()) - 1;
}

namespace {

std::string compact_usd(uint64_t micro) {
    constexpr uint64_t kScale = 1'000'000;
    if (micro % kScale != 0) return format_micro_usd(micro);
    uint64_t dollars = micro / kScale;
    if (dollars >= 1'000'000 && dollars % 1'000'000 == 0)
        return std::to_string(dollars / 1'000'000) + "m";
    if (dollars >= 1'000 && dollars % 1'000 == 0) return std::to_string(dollars / 1'000) + "k";
    return std::to_string(dollars);
}

} // namespace

std::string BucketSpec::label(size_t bucket) const {
    if (bucket + 1 == edges_micro_.size()) return compact_usd(edges_micro_[bucket]) + "+";
    return compact_usd(edges_micro_[bucket]) + "-" + compact_usd(edges_micro_[bucket + 1]);
}

uint64_t DistanceTable::total() const {
    uint64_t t = 0;
    for (const auto& row : cells)
        for (uint64_t c : row) t += c;
    return t;
}

void DistanceTable::write_csv(std::ostream& out) const {
    out << "bucket";
    for (uint32_t d = 0; d <= max_hops; ++d) out << ',' << d;
    out << ',' << max_hops << "+\n";
    for (size_t r = 0; r < cells.size(); ++r) {
        out << row_labels[r];
        for (uint64_t c : cells[r]) {
            out << ',';
            if (kind == CellKind::kVolume)
                out << format_micro_usd(c);
            else
                out << c;
        }
        out << '\n';
    }
}

void DistanceTable::write_text(std::ostream& out) const {
    std::vector<std::string> headers{"bucket"};
    for (uint32_t d = 0; d <= max_hops; ++d) headers.push_back(std::to_string(d));
    headers.push_back(std::to_string(max_hops) + "+");

    std::vector<std::vector<std::string>> rows;
    for (size_t r = 0; r < cells.size(); ++r) {
        std::vector<std::string> row{row_labels[r]};
        for (uint64_t c : cells[r])
            row.push_back(kind == CellKind::kVolume ? format_micro_usd(c) : std::to_string(c));
        rows.push_back(std::move(row));
    }

    std::vector<size_t> widths(headers.size());
    for (size_t c = 0; c < headers.size(); ++c) {
        widths[c] = headers[c].size();
        for (const auto& row : rows) widths[c] = std::max(widths[c], row[c].size());
    }
    auto emit = [&](const std::vector<std::string>& row) {
        for (size_t c = 0; c < row.size(); ++c)
            out << (c == 0 ? "" : "  ") << std::setw(static_cast<int>(widths[c]))
                << (c == 0 ? std::left : std::right) << row[c];
        out << '\n';
    };
    emit(headers);
    for (const auto& row : rows) emit(row);
}

namespace {

DistanceTable make_table(const BucketSpec& buckets, uint32_t max_hops, CellKind kind) {
    DistanceTable t;
    t.kind = kind;
    t.max_hops = max_hops;
    for (size_t b = 0; b < buckets.count(); ++b) {
        t.row_labels.push_back(buckets.label(b));
        t.cells.emplace_back(static_cast<size_t>(max_hops) + 2, 0);
    }
    return t;
}

size_t distance_column(uint32_t d, uint32_t max_hops) {
    return d == kBeyond ? static_cast<size_t>(max_hops) + 1 : static_cast<size_t>(d);
}

uint32_t distance_or_beyond(const DistanceMap& dm, const Address& a) {
    auto id = dm.graph().find(a);
    return id ? dm.at_id(*id) : kBeyond;
}

} // namespace

DistanceTable wallet_distance_table(const DistanceMap& dm, const BalanceSummary& balances,
                                    const BucketSpec& buckets, const AnalyticsOptions& options) {
    DistanceTable table = make_table(buckets, dm.max_hops(), CellKind::kCount);
    for (const auto& [addr, entry] : balances.per_address) {
        if (options.eoa_filter && !options.eoa_filter->contains(addr)) continue;
        auto bucket = buckets.bucket_of(entry.max_lifetime_micro);
        if (!bucket) continue;
        uint32_t d = distance_or_beyond(dm, addr);
        ++table.cells[*bucket][distance_column(d, dm.max_hops())];
    }
    return table;
}

DistanceTable txn_distance_table(const DistanceMap& dm, std::span<const TransferRecord> records,
                                 const BucketSpec& buckets, CellKind kind) {
    DistanceTable table = make_table(buckets, dm.max_hops(), kind);
    for (const TransferRecord& rec : records) {
        if (!rec.direct) continue;
        uint64_t amount = static_cast<uint64_t>(rec.amount.micro());
        auto bucket = buckets.bucket_of(amount);
        if (!bucket) continue;
        uint32_t d = std::min(distance_or_beyond(dm, rec.from), distance_or_beyond(dm, rec.to));
        uint64_t& cell = table.cells[*bucket][distance_column(d, dm.max_hops())];
        cell += kind == CellKind::kVolume ? amount : 1;
    }
    return table;
}

uint64_t pct_tenths(uint64_t numerator, uint64_t denominator) {
    // round half-up of numerator/denominator in tenths of a percent
    return (2 * numerator * 1000 + denominator) / (2 * denominator);
}

std::string format_pct_tenths(uint64_t tenths) {
    return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
}

SummaryStats summary_stats(const DistanceMap& dm, const BalanceSummary& balances,
                           std::span<const TransferRecord> records,
                           uint64_t wallet_threshold_micro, uint64_t min_txn_micro,
                           const AnalyticsOptions& options) {
    SummaryStats s;
    uint64_t eai = 0;
    uint64_t near = 0;
    for (const auto& [addr, entry] : balances.per_address) {
        if (entry.max_lifetime_micro < wallet_threshold_micro) continue;
        if (options.eoa_filter && !options.eoa_filter->contains(addr)) continue;
        ++s.wallet_population;
        uint32_t d = distance_or_beyond(dm, addr);
        if (d <= 1) ++eai;
        if (d != kBeyond && d <= 2) ++near; // within one hop of an EAI
    }
    if (s.wallet_population == 0)
        throw Error(ErrorCode::kEmptyPopulation, "no wallet reaches the balance threshold");

    uint64_t txn_eai = 0;
    for (const TransferRecord& rec : records) {
        if (!rec.direct || static_cast<uint64_t>(rec.amount.micro()) < min_txn_micro) continue;
        ++s.txn_population;
        uint32_t d = std::min(distance_or_beyond(dm, rec.from), distance_or_beyond(dm, rec.to));
        if (d <= 1) ++txn_eai;
    }
    if (s.txn_population == 0)
        throw Error(ErrorCode::kEmptyPopulation, "no transfer reaches the amount threshold");

    s.pct_eai_tenths = pct_tenths(eai, s.wallet_population);
    s.pct_within_one_hop_tenths = pct_tenths(near, s.wallet_population);
    s.pct_txn_eai_tenths = pct_tenths(txn_eai, s.txn_population);
    return s;
}

ExploiterReport exploiter_report(const DistanceMap& dm, const AddressList& exploiters) {
    ExploiterReport report;
    report.max_hops = dm.max_hops();
    report.histogram.assign(static_cast<size_t>(dm.max_hops()) + 2, 0);
    report.baseline.assign(static_cast<size_t>(dm.max_hops()) + 2, 0);

    uint64_t non_eai = 0;
    uint64_t beyond = 0;
    for (const Address& a : exploiters.members()) {
        auto id = dm.graph().find(a);
        if (!id) {
            ++report.not_found; // counted as Beyond below
            ++non_eai;
            ++beyond;
            continue;
        }
        ++report.found;
        uint32_t d = dm.at_id(*id);
        ++report.histogram[distance_column(d, dm.max_hops())];
        if (d > 1) ++non_eai; // kBeyond compares greater than any hop count
        if (d == kBeyond) ++beyond;
    }

    uint64_t total = report.found + report.not_found;
    if (total > 0) {
        report.pct_non_eai_tenths = pct_tenths(non_eai, total);
        report.pct_beyond_tenths = pct_tenths(beyond, total);
    }

    for (uint64_t id = 0; id < dm.node_count(); ++id)
        ++report.baseline[distance_column(dm.at_id(id), dm.max_hops())];
    return report;
}

} // namespace eai
