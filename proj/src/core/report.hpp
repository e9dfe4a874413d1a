// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "core/analytics.hpp"

namespace eai {

// Provenance attached to every JSON report. `input_digests` holds
// (path, Keccak-256 hex) pairs for each input file consumed by the run;
// `generated_at` is the only field allowed to differ between identical runs.
struct ReportMeta {
    std::string generated_at;
    std::vector<std::pair<std::string, std::string>> input_digests;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
};

// `kind` names the report (e.g. "wallet_distance", "txn_distance").
// Volume cells are rendered as 6-decimal USD strings, counts as integers.
nlohmann::ordered_json distance_table_json(std::string_view kind, const DistanceTable& table,
                                           const ReportMeta& meta);

nlohmann::ordered_json exploiter_json(const ExploiterReport& report, const ReportMeta& meta);
std::string exploiter_csv(const ExploiterReport& report);
std::string exploiter_text(const ExploiterReport& report);

nlohmann::ordered_json summary_json(const SummaryStats& stats, const ReportMeta& meta);
std::string summary_csv(const SummaryStats& stats);
std::string summary_text(const SummaryStats& stats);

// Distance column labels "0".."<max_hops>" then "<max_hops>+".
std::vector<std::string> distance_columns(uint32_t max_hops);

} // namespace eai
