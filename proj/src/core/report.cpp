// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/report.hpp"

#include <sstream>

#include "core/usd.hpp"

namespace eai {

namespace {

nlohmann::ordered_json meta_envelope(std::string_view kind, const ReportMeta& meta) {
    nlohmann::ordered_json j;
    j["report"] = std::string(kind);
    j["generated_at"] = meta.generated_at;
    auto& digests = j["input_digests"] = nlohmann::ordered_json::object();
    for (const auto& [path, digest] : meta.input_digests) digests[path] = digest;
    j["parameters"] = meta.parameters;
    return j;
}

nlohmann::ordered_json histogram_object(const std::vector<uint64_t>& values, uint32_t max_hops) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    std::vector<std::string> cols = distance_columns(max_hops);
    for (size_t i = 0; i < cols.size() && i < values.size(); ++i) j[cols[i]] = values[i];
    return j;
}

} // namespace

std::vector<std::string> distance_columns(uint32_t max_hops) {
    std::vector<std::string> cols;
    for (uint32_t d = 0; d <= max_hops; ++d) cols.push_back(std::to_string(d));
    cols.push_back(std::to_string(max_hops) + "+");
    return cols;
}

nlohmann::ordered_json distance_table_json(std::string_view kind, const DistanceTable& table,
                                           const ReportMeta& meta) {
    nlohmann::ordered_json j = meta_envelope(kind, meta);
    j["cell_kind"] = table.kind == CellKind::kVolume ? "volume" : "count";
    j["max_hops"] = table.max_hops;
    j["columns"] = distance_columns(table.max_hops);
    auto& rows = j["rows"] = nlohmann::ordered_json::array();
    for (size_t r = 0; r < table.cells.size(); ++r) {
        nlohmann::ordered_json row;
        row["bucket"] = table.row_labels[r];
        auto& cells = row["cells"] = nlohmann::ordered_json::array();
        for (uint64_t c : table.cells[r]) {
            if (table.kind == CellKind::kVolume)
                cells.push_back(format_micro_usd(c));
            else
                cells.push_back(c);
        }
        rows.push_back(std::move(row));
    }
    if (table.kind == CellKind::kVolume)
        j["total_usd"] = format_micro_usd(table.total());
    else
        j["total"] = table.total();
    return j;
}

nlohmann::ordered_json exploiter_json(const ExploiterReport& report, const ReportMeta& meta) {
    nlohmann::ordered_json j = meta_envelope("exploiters", meta);
    j["max_hops"] = report.max_hops;
    j["found"] = report.found;
    j["not_found"] = report.not_found;
    j["histogram"] = histogram_object(report.histogram, report.max_hops);
    j["baseline"] = histogram_object(report.baseline, report.max_hops);
    j["pct_non_eai"] = format_pct_tenths(report.pct_non_eai_tenths);
    j["pct_beyond"] = format_pct_tenths(report.pct_beyond_tenths);
    return j;
}

std::string exploiter_csv(const ExploiterReport& report) {
    std::ostringstream out;
    out << "distance,exploiters,baseline\n";
    std::vector<std::string> cols = distance_columns(report.max_hops);
    for (size_t i = 0; i < cols.size(); ++i)
        out << cols[i] << ',' << report.histogram[i] << ',' << report.baseline[i] << '\n';
    return out.str();
}

std::string exploiter_text(const ExploiterReport& report) {
    std::ostringstream out;
    out << "exploiter distances (found " << report.found << ", not found " << report.not_found
        << "; unknown addresses count as " << report.max_hops << "+)\n";
    std::vector<std::string> cols = distance_columns(report.max_hops);
    for (size_t i = 0; i < cols.size(); ++i)
        out << "  d=" << cols[i] << (cols[i].size() < 2 ? " " : "") << " exploiters "
            << report.histogram[i] << "  baseline " << report.baseline[i] << '\n';
    out << "  non-EAI " << format_pct_tenths(report.pct_non_eai_tenths) << "%  beyond "
        << format_pct_tenths(report.pct_beyond_tenths) << "%\n";
    return out.str();
}

nlohmann::ordered_json summary_json(const SummaryStats& stats, const ReportMeta& meta) {
    nlohmann::ordered_json j = meta_envelope("summary_stats", meta);
    j["wallet_population"] = stats.wallet_population;
    j["txn_population"] = stats.txn_population;
    j["pct_eai"] = format_pct_tenths(stats.pct_eai_tenths);
    j["pct_within_one_hop_of_eai"] = format_pct_tenths(stats.pct_within_one_hop_tenths);
    j["pct_txn_eai"] = format_pct_tenths(stats.pct_txn_eai_tenths);
    return j;
}

std::string summary_csv(const SummaryStats& stats) {
    std::ostringstream out;
    out << "metric,value\n";
    out << "wallet_population," << stats.wallet_population << '\n';
    out << "txn_population," << stats.txn_population << '\n';
    out << "pct_eai," << format_pct_tenths(stats.pct_eai_tenths) << '\n';
    out << "pct_within_one_hop_of_eai," << format_pct_tenths(stats.pct_within_one_hop_tenths)
        << '\n';
    out << "pct_txn_eai," << format_pct_tenths(stats.pct_txn_eai_tenths) << '\n';
    return out.str();
}

std::string summary_text(const SummaryStats& stats) {
    std::ostringstream out;
    out << "wallets above threshold: " << stats.wallet_population << '\n';
    out << "transfers above threshold: " << stats.txn_population << '\n';
    out << "EAI wallets: " << format_pct_tenths(stats.pct_eai_tenths) << "%\n";
    out << "within one hop of an EAI: " << format_pct_tenths(stats.pct_within_one_hop_tenths)
        << "%\n";
    out << "transfers involving an EAI: " << format_pct_tenths(stats.pct_txn_eai_tenths) << "%\n";
    return out.str();
}

} // namespace eai
