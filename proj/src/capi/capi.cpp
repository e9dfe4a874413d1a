// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "eai/eai.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <thread>

#include "core/analytics.hpp"
#include "core/attest.hpp"
#include "core/error.hpp"
#include "core/gas.hpp"
#include "core/graph.hpp"
#include "core/hex.hpp"
#include "core/ingest.hpp"
#include "core/io_util.hpp"
#include "core/ledger.hpp"
#include "core/merkle.hpp"
#include "core/proximity.hpp"
#include "core/report.hpp"
#include "core/usd.hpp"

struct eai_transfers {
    eai::ParseResult result;
};
struct eai_address_list {
    eai::AddressList list;
};
struct eai_graph {
    std::shared_ptr<const eai::TransactionGraph> graph;
};
struct eai_distances {
    eai::DistanceMap map;
};
struct eai_balances {
    eai::BalanceSummary summary;
};
struct eai_table {
    eai::DistanceTable table;
};
struct eai_summary {
    eai::SummaryStats stats;
};
struct eai_exploiters {
    eai::ExploiterReport report;
};
struct eai_merkle {
    eai::MerkleRegistry registry;
};
struct eai_signer {
    eai::Signer signer;
};
struct eai_ledger {
    eai::SimLedger ledger;
};
struct eai_gas_params {
    eai::CostParams params;
};

namespace {

thread_local std::string g_last_error;

eai_status status_of(eai::ErrorCode code) {
    using eai::ErrorCode;
    switch (code) {
        case ErrorCode::kInvalidArgument: return EAI_ERR_INVALID_ARGUMENT;
        case ErrorCode::kMalformedRow: return EAI_ERR_MALFORMED_ROW;
        case ErrorCode::kIo: return EAI_ERR_IO;
        case ErrorCode::kCapacityExceeded: return EAI_ERR_CAPACITY_EXCEEDED;
        case ErrorCode::kOutOfRange: return EAI_ERR_OUT_OF_RANGE;
        case ErrorCode::kNoSources: return EAI_ERR_NO_SOURCES;
        case ErrorCode::kUnknownAddress: return EAI_ERR_UNKNOWN_ADDRESS;
        case ErrorCode::kBucketOverlap: return EAI_ERR_BUCKET_OVERLAP;
        case ErrorCode::kEmptyPopulation: return EAI_ERR_EMPTY_POPULATION;
        case ErrorCode::kEmptySet: return EAI_ERR_EMPTY_SET;
        case ErrorCode::kNotMember: return EAI_ERR_NOT_MEMBER;
        case ErrorCode::kAlreadyMember: return EAI_ERR_ALREADY_MEMBER;
        case ErrorCode::kOverflow: return EAI_ERR_OVERFLOW;
        case ErrorCode::kInsufficientBalance: return EAI_ERR_INSUFFICIENT_BALANCE;
        case ErrorCode::kDegenerateFit: return EAI_ERR_DEGENERATE_FIT;
        case ErrorCode::kUnsupportedCombination: return EAI_ERR_UNSUPPORTED_COMBINATION;
    }
    return EAI_ERR_INTERNAL;
}

template <class Fn>
eai_status guarded(Fn&& fn) {
    try {
        fn();
        return EAI_OK;
    } catch (const eai::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return EAI_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return EAI_ERR_INTERNAL;
    }
}

[[noreturn]] void fail(eai::ErrorCode code, const std::string& message) {
    throw eai::Error(code, message);
}

void require(bool ok, const char* what) {
    if (!ok) fail(eai::ErrorCode::kInvalidArgument, what);
}

eai::Address parse_address_arg(const char* text) {
    require(text != nullptr, "address is null");
    auto a = eai::Address::try_parse(text);
    if (!a) fail(eai::ErrorCode::kInvalidArgument, std::string("bad address '") + text + "'");
    return *a;
}

eai::Usd parse_usd_arg(const char* text, const char* what) {
    require(text != nullptr, what);
    auto v = eai::Usd::try_parse(text);
    if (!v)
        fail(eai::ErrorCode::kInvalidArgument,
             std::string("bad USD amount '") + text + "' for " + what);
    return *v;
}

char* dup_string(std::string_view s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size());
    out[s.size()] = '\0';
    return out;
}

void copy_to_buf(std::string_view s, char* buf, size_t capacity, const char* what) {
    require(buf != nullptr, what);
    if (s.size() + 1 > capacity)
        fail(eai::ErrorCode::kCapacityExceeded, std::string(what) + " does not fit the buffer");
    std::memcpy(buf, s.data(), s.size());
    buf[s.size()] = '\0';
}

eai::ListRole role_of(eai_list_role role) {
    switch (role) {
        case EAI_ROLE_EXCHANGE: return eai::ListRole::kExchange;
        case EAI_ROLE_EXPLOITER: return eai::ListRole::kExploiter;
        case EAI_ROLE_EXCLUSION: return eai::ListRole::kExclusion;
    }
    fail(eai::ErrorCode::kInvalidArgument, "unknown list role");
}

eai::TransferFormat format_of(eai_transfer_format format) {
    switch (format) {
        case EAI_FORMAT_CSV: return eai::TransferFormat::kCsv;
        case EAI_FORMAT_JSONL: return eai::TransferFormat::kJsonl;
    }
    fail(eai::ErrorCode::kInvalidArgument, "unknown transfer format");
}

eai::BucketSpec make_buckets(const char* const* edges_usd, size_t count, bool wallet) {
    if (edges_usd == nullptr || count == 0)
        return wallet ? eai::BucketSpec::wallet_default() : eai::BucketSpec::txn_default();
    std::vector<uint64_t> micro;
    micro.reserve(count);
    for (size_t i = 0; i < count; ++i)
        micro.push_back(static_cast<uint64_t>(parse_usd_arg(edges_usd[i], "bucket edge").micro()));
    return eai::BucketSpec(std::move(micro));
}

eai::ReportMeta make_meta(const char* const* input_paths, size_t input_count,
                          const char* parameters_json) {
    eai::ReportMeta meta;
    meta.generated_at = eai::now_iso8601_utc();
    for (size_t i = 0; i < input_count; ++i) {
        require(input_paths != nullptr && input_paths[i] != nullptr, "input path is null");
        std::string path = input_paths[i];
        meta.input_digests.emplace_back(path, eai::to_hex0x(eai::file_digest(path)));
    }
    if (parameters_json != nullptr) {
        auto j = nlohmann::ordered_json::parse(parameters_json, nullptr,
                                               /*allow_exceptions=*/false);
        if (j.is_discarded() || !j.is_object())
            fail(eai::ErrorCode::kInvalidArgument, "parameters_json must be a JSON object");
        meta.parameters = std::move(j);
    }
    return meta;
}

std::string render_table(const eai::DistanceTable& table, eai_render_format format,
                         const char* kind, const char* const* input_paths, size_t input_count,
                         const char* parameters_json) {
    std::ostringstream out;
    switch (format) {
        case EAI_RENDER_JSON:
            return eai::distance_table_json(kind ? kind : "distance_table", table,
                                            make_meta(input_paths, input_count, parameters_json))
                       .dump(2) +
                   "\n";
        case EAI_RENDER_CSV:
            table.write_csv(out);
            return out.str();
        case EAI_RENDER_TEXT:
            table.write_text(out);
            return out.str();
    }
    fail(eai::ErrorCode::kInvalidArgument, "unknown render format");
}

} // namespace

extern "C" {

const char* eai_last_error(void) { return g_last_error.c_str(); }

const char* eai_version(void) { return EAI_TOOLKIT_VERSION; }

void eai_string_free(char* s) { std::free(s); }

/* ------------------------------------------------------------------ */

eai_status eai_transfers_parse(const char* data, size_t size, eai_transfer_format format,
                               int strict, eai_transfers** out) {
    return guarded([&] {
        require(data != nullptr || size == 0, "data is null");
        require(out != nullptr, "out is null");
        std::istringstream in{size == 0 ? std::string() : std::string(data, size)};
        auto handle = std::make_unique<eai_transfers>();
        handle->result = eai::parse_transfers(in, format_of(format), strict != 0);
        *out = handle.release();
    });
}

eai_status eai_transfers_parse_file(const char* path, eai_transfer_format format, int strict,
                                    eai_transfers** out) {
    return guarded([&] {
        require(path != nullptr, "path is null");
        require(out != nullptr, "out is null");
        std::ifstream in(path, std::ios::binary);
        if (!in) fail(eai::ErrorCode::kIo, std::string("cannot open ") + path);
        auto handle = std::make_unique<eai_transfers>();
        handle->result = eai::parse_transfers(in, format_of(format), strict != 0);
        *out = handle.release();
    });
}

size_t eai_transfers_count(const eai_transfers* t) { return t ? t->result.records.size() : 0; }

size_t eai_transfers_issue_count(const eai_transfers* t) {
    return t ? t->result.issues.size() : 0;
}

size_t eai_transfers_data_rows(const eai_transfers* t) { return t ? t->result.data_rows : 0; }

eai_status eai_transfers_get(const eai_transfers* t, size_t index, eai_transfer_view* out) {
    return guarded([&] {
        require(t != nullptr && out != nullptr, "null argument");
        if (index >= t->result.records.size())
            fail(eai::ErrorCode::kOutOfRange, "record index out of range");
        const eai::TransferRecord& rec = t->result.records[index];
        out->ordering_key = rec.ordering_key;
        copy_to_buf(rec.from.to_string(), out->from, sizeof out->from, "from");
        copy_to_buf(rec.to.to_string(), out->to, sizeof out->to, "to");
        copy_to_buf(rec.amount.to_string(), out->amount_usd, sizeof out->amount_usd, "amount");
        copy_to_buf(rec.token, out->token, sizeof out->token, "token");
        out->direct = rec.direct ? 1 : 0;
    });
}

eai_status eai_transfers_issue(const eai_transfers* t, size_t index, uint64_t* line_out,
                               char** message_out) {
    return guarded([&] {
        require(t != nullptr, "null argument");
        if (index >= t->result.issues.size())
            fail(eai::ErrorCode::kOutOfRange, "issue index out of range");
        const eai::ParseIssue& issue = t->result.issues[index];
        if (line_out) *line_out = issue.line;
        if (message_out) *message_out = dup_string(issue.message);
    });
}

void eai_transfers_free(eai_transfers* t) { delete t; }

/* ------------------------------------------------------------------ */

eai_status eai_address_list_parse(const char* text, eai_list_role role, eai_address_list** out) {
    return guarded([&] {
        require(text != nullptr && out != nullptr, "null argument");
        std::istringstream in{std::string(text)};
        auto handle = std::make_unique<eai_address_list>();
        handle->list = eai::parse_address_list(in, role_of(role));
        *out = handle.release();
    });
}

eai_status eai_address_list_parse_file(const char* path, eai_list_role role,
                                       eai_address_list** out) {
    return guarded([&] {
        require(path != nullptr && out != nullptr, "null argument");
        std::ifstream in(path, std::ios::binary);
        if (!in) fail(eai::ErrorCode::kIo, std::string("cannot open ") + path);
        auto handle = std::make_unique<eai_address_list>();
        handle->list = eai::parse_address_list(in, role_of(role));
        *out = handle.release();
    });
}

size_t eai_address_list_count(const eai_address_list* l) { return l ? l->list.size() : 0; }

eai_status eai_address_list_get(const eai_address_list* l, size_t index,
                                char out[EAI_ADDRESS_BUF]) {
    return guarded([&] {
        require(l != nullptr, "null argument");
        if (index >= l->list.size()) fail(eai::ErrorCode::kOutOfRange, "index out of range");
        copy_to_buf(l->list.members()[index].to_string(), out, EAI_ADDRESS_BUF, "address");
    });
}

eai_status eai_address_list_contains(const eai_address_list* l, const char* address, int* out) {
    return guarded([&] {
        require(l != nullptr && out != nullptr, "null argument");
        *out = l->list.contains(parse_address_arg(address)) ? 1 : 0;
    });
}

void eai_address_list_free(eai_address_list* l) { delete l; }

/* ------------------------------------------------------------------ */

eai_status eai_graph_build(const eai_transfers* t, const char* threshold_usd, int direct_only,
                           const char* token_filter, int id_width, eai_graph** out) {
    return guarded([&] {
        require(t != nullptr && out != nullptr, "null argument");
        eai::GraphBuildOptions options;
        if (threshold_usd != nullptr)
            options.threshold_micro =
                static_cast<uint64_t>(parse_usd_arg(threshold_usd, "threshold").micro());
        options.direct_only = direct_only != 0;
        if (token_filter != nullptr) options.token = std::string(token_filter);
        require(id_width == 4 || id_width == 8, "id_width must be 4 or 8");
        options.id_width = static_cast<uint8_t>(id_width);
        auto graph = std::make_shared<eai::TransactionGraph>(
            eai::TransactionGraph::build(t->result.records, options));
        *out = new eai_graph{std::move(graph)};
    });
}

eai_status eai_graph_save(const eai_graph* g, const char* path) {
    return guarded([&] {
        require(g != nullptr && path != nullptr, "null argument");
        g->graph->save(path);
    });
}

eai_status eai_graph_load(const char* path, eai_graph** out) {
    return guarded([&] {
        require(path != nullptr && out != nullptr, "null argument");
        auto graph =
            std::make_shared<eai::TransactionGraph>(eai::TransactionGraph::load(path));
        *out = new eai_graph{std::move(graph)};
    });
}

uint64_t eai_graph_node_count(const eai_graph* g) { return g ? g->graph->node_count() : 0; }

uint64_t eai_graph_edge_count(const eai_graph* g) { return g ? g->graph->edge_count() : 0; }

eai_status eai_graph_total_volume(const eai_graph* g, char out[32]) {
    return guarded([&] {
        require(g != nullptr, "null argument");
        copy_to_buf(eai::format_micro_usd(g->graph->stats().total_volume_micro), out, 32,
                    "volume");
    });
}

eai_status eai_graph_node_id(const eai_graph* g, const char* address, uint64_t* id_out,
                             int* found_out) {
    return guarded([&] {
        require(g != nullptr && found_out != nullptr, "null argument");
        auto id = g->graph->find(parse_address_arg(address));
        *found_out = id.has_value() ? 1 : 0;
        if (id && id_out) *id_out = *id;
    });
}

eai_status eai_graph_address_of(const eai_graph* g, uint64_t id, char out[EAI_ADDRESS_BUF]) {
    return guarded([&] {
        require(g != nullptr, "null argument");
        copy_to_buf(g->graph->address_of(id).to_string(), out, EAI_ADDRESS_BUF, "address");
    });
}

eai_status eai_graph_degree(const eai_graph* g, uint64_t id, uint64_t* out) {
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        *out = g->graph->degree(id);
    });
}

eai_status eai_graph_neighbors(const eai_graph* g, uint64_t id, uint64_t* buf, size_t capacity,
                               size_t* written) {
    return guarded([&] {
        require(g != nullptr && written != nullptr, "null argument");
        std::vector<uint64_t> ids = g->graph->neighbors(id);
        *written = ids.size();
        if (buf == nullptr) return;
        size_t n = std::min(capacity, ids.size());
        std::memcpy(buf, ids.data(), n * sizeof(uint64_t));
    });
}

void eai_graph_free(eai_graph* g) { delete g; }

/* ------------------------------------------------------------------ */

eai_status eai_distances_compute(const eai_graph* g, const eai_address_list* exchanges,
                                 const eai_address_list* exclusions, uint32_t max_hops,
                                 unsigned threads, eai_distances** out) {
    return guarded([&] {
        require(g != nullptr && exchanges != nullptr && out != nullptr, "null argument");
        require(max_hops >= 1, "max_hops must be at least 1");
        if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
        *out = new eai_distances{eai::DistanceMap::compute(
            g->graph, exchanges->list, exclusions ? &exclusions->list : nullptr, max_hops,
            threads)};
    });
}

uint32_t eai_distances_max_hops(const eai_distances* d) { return d ? d->map.max_hops() : 0; }

uint64_t eai_distances_source_count(const eai_distances* d) {
    return d ? d->map.source_count() : 0;
}

eai_status eai_distances_of(const eai_distances* d, const char* address, uint32_t* out) {
    return guarded([&] {
        require(d != nullptr && out != nullptr, "null argument");
        *out = d->map.at(parse_address_arg(address));
    });
}

eai_status eai_distances_of_id(const eai_distances* d, uint64_t id, uint32_t* out) {
    return guarded([&] {
        require(d != nullptr && out != nullptr, "null argument");
        *out = d->map.at_id(id);
    });
}

eai_status eai_distances_is_eai(const eai_distances* d, const char* address, int* out) {
    return guarded([&] {
        require(d != nullptr && out != nullptr, "null argument");
        *out = d->map.is_eai(parse_address_arg(address)) ? 1 : 0;
    });
}

eai_status eai_distances_within_hops_of_eai(const eai_distances* d, const char* address,
                                            uint32_t k, int* out) {
    return guarded([&] {
        require(d != nullptr && out != nullptr, "null argument");
        *out = d->map.within_hops_of_eai(parse_address_arg(address), k) ? 1 : 0;
    });
}

eai_status eai_distances_txn(const eai_distances* d, const char* sender, const char* receiver,
                             uint32_t* distance_out, int* is_eai_out) {
    return guarded([&] {
        require(d != nullptr, "null argument");
        eai::Address s = parse_address_arg(sender);
        eai::Address r = parse_address_arg(receiver);
        if (distance_out) *distance_out = d->map.txn_distance(s, r);
        if (is_eai_out) *is_eai_out = d->map.txn_is_eai(s, r) ? 1 : 0;
    });
}

eai_status eai_distances_csv(const eai_distances* d, char** out) {
    return guarded([&] {
        require(d != nullptr && out != nullptr, "null argument");
        std::ostringstream s;
        d->map.export_csv(s);
        *out = dup_string(s.str());
    });
}

void eai_distances_free(eai_distances* d) { delete d; }

/* ------------------------------------------------------------------ */

eai_status eai_balances_compute(const eai_transfers* t, eai_balances** out) {
    return guarded([&] {
        require(t != nullptr && out != nullptr, "null argument");
        *out = new eai_balances{eai::max_lifetime_balances(t->result.records)};
    });
}

uint64_t eai_balances_underflow_warnings(const eai_balances* b) {
    return b ? b->summary.underflow_warnings : 0;
}

uint64_t eai_balances_address_count(const eai_balances* b) {
    return b ? b->summary.per_address.size() : 0;
}

eai_status eai_balances_get(const eai_balances* b, const char* address,
                            char max_lifetime_usd[32], char final_usd[32], int* found_out) {
    return guarded([&] {
        require(b != nullptr && found_out != nullptr, "null argument");
        auto it = b->summary.per_address.find(parse_address_arg(address));
        *found_out = it != b->summary.per_address.end() ? 1 : 0;
        if (!*found_out) return;
        if (max_lifetime_usd)
            copy_to_buf(eai::format_micro_usd(it->second.max_lifetime_micro), max_lifetime_usd,
                        32, "max balance");
        if (final_usd)
            copy_to_buf(eai::format_micro_usd(it->second.final_micro), final_usd, 32,
                        "final balance");
    });
}

void eai_balances_free(eai_balances* b) { delete b; }

/* ------------------------------------------------------------------ */

eai_status eai_wallet_table(const eai_distances* d, const eai_balances* b,
                            const char* const* bucket_edges_usd, size_t bucket_count,
                            const eai_address_list* eoa_filter, eai_table** out) {
    return guarded([&] {
        require(d != nullptr && b != nullptr && out != nullptr, "null argument");
        eai::AnalyticsOptions options;
        if (eoa_filter) options.eoa_filter = &eoa_filter->list;
        *out = new eai_table{eai::wallet_distance_table(
            d->map, b->summary, make_buckets(bucket_edges_usd, bucket_count, true), options)};
    });
}

eai_status eai_txn_table(const eai_distances* d, const eai_transfers* t,
                         const char* const* bucket_edges_usd, size_t bucket_count, int volume,
                         eai_table** out) {
    return guarded([&] {
        require(d != nullptr && t != nullptr && out != nullptr, "null argument");
        *out = new eai_table{eai::txn_distance_table(
            d->map, t->result.records, make_buckets(bucket_edges_usd, bucket_count, false),
            volume ? eai::CellKind::kVolume : eai::CellKind::kCount)};
    });
}

size_t eai_table_rows(const eai_table* t) { return t ? t->table.cells.size() : 0; }

size_t eai_table_cols(const eai_table* t) { return t ? t->table.columns() : 0; }

eai_status eai_table_cell(const eai_table* t, size_t row, size_t col, uint64_t* out) {
    return guarded([&] {
        require(t != nullptr && out != nullptr, "null argument");
        if (row >= t->table.cells.size() || col >= t->table.columns())
            fail(eai::ErrorCode::kOutOfRange, "cell index out of range");
        *out = t->table.cells[row][col];
    });
}

eai_status eai_table_row_label(const eai_table* t, size_t row, char out[64]) {
    return guarded([&] {
        require(t != nullptr, "null argument");
        if (row >= t->table.row_labels.size())
            fail(eai::ErrorCode::kOutOfRange, "row index out of range");
        copy_to_buf(t->table.row_labels[row], out, 64, "label");
    });
}

eai_status eai_table_render(const eai_table* t, eai_render_format format, const char* kind,
                            const char* const* input_paths, size_t input_count,
                            const char* parameters_json, char** out) {
    return guarded([&] {
        require(t != nullptr && out != nullptr, "null argument");
        *out = dup_string(
            render_table(t->table, format, kind, input_paths, input_count, parameters_json));
    });
}

void eai_table_free(eai_table* t) { delete t; }

/* ------------------------------------------------------------------ */

eai_status eai_summary_compute(const eai_distances* d, const eai_balances* b,
                               const eai_transfers* t, const char* wallet_threshold_usd,
                               const char* min_txn_usd, const eai_address_list* eoa_filter,
                               eai_summary** out) {
    return guarded([&] {
        require(d != nullptr && b != nullptr && t != nullptr && out != nullptr, "null argument");
        uint64_t wallet_micro = static_cast<uint64_t>(
            parse_usd_arg(wallet_threshold_usd ? wallet_threshold_usd : "10000",
                          "wallet threshold")
                .micro());
        uint64_t txn_micro = static_cast<uint64_t>(
            parse_usd_arg(min_txn_usd ? min_txn_usd : "2000", "txn threshold").micro());
        eai::AnalyticsOptions options;
        if (eoa_filter) options.eoa_filter = &eoa_filter->list;
        *out = new eai_summary{eai::summary_stats(d->map, b->summary, t->result.records,
                                                  wallet_micro, txn_micro, options)};
    });
}

uint64_t eai_summary_wallet_population(const eai_summary* s) {
    return s ? s->stats.wallet_population : 0;
}

uint64_t eai_summary_txn_population(const eai_summary* s) {
    return s ? s->stats.txn_population : 0;
}

uint64_t eai_summary_pct_eai_tenths(const eai_summary* s) {
    return s ? s->stats.pct_eai_tenths : 0;
}

uint64_t eai_summary_pct_within_one_hop_tenths(const eai_summary* s) {
    return s ? s->stats.pct_within_one_hop_tenths : 0;
}

uint64_t eai_summary_pct_txn_eai_tenths(const eai_summary* s) {
    return s ? s->stats.pct_txn_eai_tenths : 0;
}

eai_status eai_summary_render(const eai_summary* s, eai_render_format format,
                              const char* const* input_paths, size_t input_count,
                              const char* parameters_json, char** out) {
    return guarded([&] {
        require(s != nullptr && out != nullptr, "null argument");
        switch (format) {
            case EAI_RENDER_JSON:
                *out = dup_string(
                    eai::summary_json(s->stats, make_meta(input_paths, input_count,
                                                          parameters_json))
                        .dump(2) +
                    "\n");
                return;
            case EAI_RENDER_CSV: *out = dup_string(eai::summary_csv(s->stats)); return;
            case EAI_RENDER_TEXT: *out = dup_string(eai::summary_text(s->stats)); return;
        }
        fail(eai::ErrorCode::kInvalidArgument, "unknown render format");
    });
}

void eai_summary_free(eai_summary* s) { delete s; }

/* ------------------------------------------------------------------ */

eai_status eai_exploiters_compute(const eai_distances* d, const eai_address_list* exploiters,
                                  eai_exploiters** out) {
    return guarded([&] {
        require(d != nullptr && exploiters != nullptr && out != nullptr, "null argument");
        *out = new eai_exploiters{eai::exploiter_report(d->map, exploiters->list)};
    });
}

uint32_t eai_exploiters_max_hops(const eai_exploiters* e) { return e ? e->report.max_hops : 0; }

uint64_t eai_exploiters_found(const eai_exploiters* e) { return e ? e->report.found : 0; }

uint64_t eai_exploiters_not_found(const eai_exploiters* e) { return e ? e->report.not_found : 0; }

uint64_t eai_exploiters_pct_non_eai_tenths(const eai_exploiters* e) {
    return e ? e->report.pct_non_eai_tenths : 0;
}

uint64_t eai_exploiters_pct_beyond_tenths(const eai_exploiters* e) {
    return e ? e->report.pct_beyond_tenths : 0;
}

eai_status eai_exploiters_histogram(const eai_exploiters* e, int baseline, uint64_t* buf,
                                    size_t capacity, size_t* written) {
    return guarded([&] {
        require(e != nullptr && written != nullptr, "null argument");
        const std::vector<uint64_t>& h = baseline ? e->report.baseline : e->report.histogram;
        *written = h.size();
        if (buf == nullptr) return;
        size_t n = std::min(capacity, h.size());
        std::memcpy(buf, h.data(), n * sizeof(uint64_t));
    });
}

eai_status eai_exploiters_render(const eai_exploiters* e, eai_render_format format,
                                 const char* const* input_paths, size_t input_count,
                                 const char* parameters_json, char** out) {
    return guarded([&] {
        require(e != nullptr && out != nullptr, "null argument");
        switch (format) {
            case EAI_RENDER_JSON:
                *out = dup_string(
                    eai::exploiter_json(e->report, make_meta(input_paths, input_count,
                                                             parameters_json))
                        .dump(2) +
                    "\n");
                return;
            case EAI_RENDER_CSV: *out = dup_string(eai::exploiter_csv(e->report)); return;
            case EAI_RENDER_TEXT: *out = dup_string(eai::exploiter_text(e->report)); return;
        }
        fail(eai::ErrorCode::kInvalidArgument, "unknown render format");
    });
}

void eai_exploiters_free(eai_exploiters* e) { delete e; }

/* ------------------------------------------------------------------ */

eai_status eai_merkle_build(const eai_address_list* addresses, eai_merkle** out) {
    return guarded([&] {
        require(addresses != nullptr && out != nullptr, "null argument");
        *out = new eai_merkle{eai::MerkleRegistry::build(addresses->list.members())};
    });
}

eai_status eai_merkle_root(const eai_merkle* m, char out[EAI_HEX32_BUF]) {
    return guarded([&] {
        require(m != nullptr, "null argument");
        copy_to_buf(eai::to_hex0x(m->registry.root()), out, EAI_HEX32_BUF, "root");
    });
}

uint32_t eai_merkle_tree_depth(const eai_merkle* m) { return m ? m->registry.depth() : 0; }

uint64_t eai_merkle_leaf_count(const eai_merkle* m) {
    return m ? m->registry.leaves().size() : 0;
}

eai_status eai_merkle_leaf(const eai_merkle* m, uint64_t index, char out[EAI_ADDRESS_BUF]) {
    return guarded([&] {
        require(m != nullptr, "null argument");
        if (index >= m->registry.leaves().size())
            fail(eai::ErrorCode::kOutOfRange, "leaf index out of range");
        copy_to_buf(m->registry.leaves()[static_cast<size_t>(index)].to_string(), out,
                    EAI_ADDRESS_BUF, "leaf");
    });
}

eai_status eai_merkle_prove(const eai_merkle* m, const char* address, char** proof_json) {
    return guarded([&] {
        require(m != nullptr && proof_json != nullptr, "null argument");
        *proof_json = dup_string(m->registry.prove(parse_address_arg(address)).to_json());
    });
}

eai_status eai_merkle_verify(const char* proof_json, const char* root_hex, int* valid) {
    return guarded([&] {
        require(proof_json != nullptr && valid != nullptr, "null argument");
        eai::MerkleProof proof = eai::MerkleProof::from_json(proof_json);
        eai::Digest root = proof.root;
        if (root_hex != nullptr) {
            auto bytes = eai::from_hex(root_hex);
            if (!bytes || bytes->size() != 32)
                fail(eai::ErrorCode::kInvalidArgument, "root must be 32 bytes of hex");
            std::copy(bytes->begin(), bytes->end(), root.begin());
        }
        *valid = eai::verify_proof(root, proof) ? 1 : 0;
    });
}

eai_status eai_merkle_update(const eai_merkle* m, const eai_address_list* add,
                             const eai_address_list* remove, eai_merkle** out) {
    return guarded([&] {
        require(m != nullptr && out != nullptr, "null argument");
        static const std::vector<eai::Address> kNone;
        const std::vector<eai::Address>& adds = add ? add->list.members() : kNone;
        const std::vector<eai::Address>& removes = remove ? remove->list.members() : kNone;
        *out = new eai_merkle{m->registry.update(adds, removes)};
    });
}

void eai_merkle_free(eai_merkle* m) { delete m; }

/* ------------------------------------------------------------------ */

eai_status eai_signer_generate(eai_signer** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = new eai_signer{eai::Signer::generate()};
    });
}

eai_status eai_signer_from_seed_hex(const char* seed_hex, eai_signer** out) {
    return guarded([&] {
        require(seed_hex != nullptr && out != nullptr, "null argument");
        auto bytes = eai::from_hex(seed_hex);
        if (!bytes || bytes->size() != 32)
            fail(eai::ErrorCode::kInvalidArgument, "seed must be 32 bytes of hex");
        eai::Signer::Seed seed;
        std::copy(bytes->begin(), bytes->end(), seed.begin());
        *out = new eai_signer{eai::Signer::from_seed(seed)};
    });
}

eai_status eai_signer_load(const char* path, eai_signer** out) {
    return guarded([&] {
        require(path != nullptr && out != nullptr, "null argument");
        *out = new eai_signer{eai::Signer::load_key_file(path)};
    });
}

eai_status eai_signer_save(const eai_signer* s, const char* path) {
    return guarded([&] {
        require(s != nullptr && path != nullptr, "null argument");
        s->signer.save_key_file(path);
    });
}

eai_status eai_signer_public_key_hex(const eai_signer* s, char out[EAI_HEX32_BUF]) {
    return guarded([&] {
        require(s != nullptr, "null argument");
        copy_to_buf("0x" + eai::to_hex(std::span<const uint8_t>(s->signer.public_key().data(),
                                                                s->signer.public_key().size())),
                    out, EAI_HEX32_BUF, "public key");
    });
}

eai_status eai_signer_fingerprint_hex(const eai_signer* s, char out[19]) {
    return guarded([&] {
        require(s != nullptr, "null argument");
        auto fp = s->signer.fingerprint();
        copy_to_buf("0x" + eai::to_hex(std::span<const uint8_t>(fp.data(), fp.size())), out, 19,
                    "fingerprint");
    });
}

eai_status eai_attest_sign(const eai_signer* s, const char* address, int is_eai,
                           uint64_t ttl_seconds, uint64_t nonce, int64_t now,
                           char** attestation_json) {
    return guarded([&] {
        require(s != nullptr && attestation_json != nullptr, "null argument");
        uint64_t at = now < 0 ? static_cast<uint64_t>(eai::unix_now())
                              : static_cast<uint64_t>(now);
        eai::Attestation att =
            s->signer.sign(parse_address_arg(address), is_eai != 0, ttl_seconds, nonce, at);
        *attestation_json = dup_string(att.to_json());
    });
}

eai_status eai_attest_verify(const char* public_key_hex, const char* attestation_json,
                             int64_t now, eai_attest_result* result) {
    return guarded([&] {
        require(public_key_hex != nullptr && attestation_json != nullptr && result != nullptr,
                "null argument");
        auto bytes = eai::from_hex(public_key_hex);
        if (!bytes || bytes->size() != 32)
            fail(eai::ErrorCode::kInvalidArgument, "public key must be 32 bytes of hex");
        eai::Signer::PublicKey key;
        std::copy(bytes->begin(), bytes->end(), key.begin());
        eai::Attestation att = eai::Attestation::from_json(attestation_json);
        uint64_t at = now < 0 ? static_cast<uint64_t>(eai::unix_now())
                              : static_cast<uint64_t>(now);
        switch (eai::verify_attestation(key, att, at)) {
            case eai::AttestationStatus::kValid: *result = EAI_ATTEST_VALID; break;
            case eai::AttestationStatus::kExpired: *result = EAI_ATTEST_EXPIRED; break;
            case eai::AttestationStatus::kBadSignature:
                *result = EAI_ATTEST_BAD_SIGNATURE;
                break;
        }
    });
}

void eai_signer_free(eai_signer* s) { delete s; }

/* ------------------------------------------------------------------ */

eai_status eai_ledger_new(eai_ledger** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = new eai_ledger{};
    });
}

eai_status eai_ledger_mint(eai_ledger* l, const char* to, const char* amount_usd) {
    return guarded([&] {
        require(l != nullptr, "null argument");
        l->ledger.mint(parse_address_arg(to),
                       eai::u256(parse_usd_arg(amount_usd, "amount").micro()));
    });
}

eai_status eai_ledger_set_exchange(eai_ledger* l, const char* address, int flag) {
    return guarded([&] {
        require(l != nullptr, "null argument");
        l->ledger.set_exchange(parse_address_arg(address), flag != 0);
    });
}

eai_status eai_ledger_transfer(eai_ledger* l, const char* from, const char* to,
                               const char* amount_usd, int suppress_flag) {
    return guarded([&] {
        require(l != nullptr, "null argument");
        l->ledger.transfer(parse_address_arg(from), parse_address_arg(to),
                           eai::u256(parse_usd_arg(amount_usd, "amount").micro()),
                           suppress_flag != 0);
    });
}

eai_status eai_ledger_is_eai(const eai_ledger* l, const char* address, int* out) {
    return guarded([&] {
        require(l != nullptr && out != nullptr, "null argument");
        *out = l->ledger.is_eai_flag(parse_address_arg(address)) ? 1 : 0;
    });
}

eai_status eai_ledger_is_exchange(const eai_ledger* l, const char* address, int* out) {
    return guarded([&] {
        require(l != nullptr && out != nullptr, "null argument");
        *out = l->ledger.is_exchange_flag(parse_address_arg(address)) ? 1 : 0;
    });
}

eai_status eai_ledger_balance(const eai_ledger* l, const char* address, char** out) {
    return guarded([&] {
        require(l != nullptr && out != nullptr, "null argument");
        eai::u256 micro = l->ledger.balance(parse_address_arg(address));
        eai::u256 whole = micro / eai::Usd::kScale;
        eai::u256 frac = micro % eai::Usd::kScale;
        std::string f = frac.str();
        *out = dup_string(whole.str() + "." + std::string(6 - f.size(), '0') + f);
    });
}

eai_status eai_ledger_run_script(eai_ledger* l, const char* script_csv, uint64_t* ops_applied) {
    return guarded([&] {
        require(l != nullptr && script_csv != nullptr, "null argument");
        eai::ScriptOutcome outcome = eai::run_ledger_script(l->ledger, script_csv);
        if (ops_applied) *ops_applied = outcome.ops_applied;
    });
}

eai_status eai_ledger_run_script_file(eai_ledger* l, const char* path, uint64_t* ops_applied) {
    return guarded([&] {
        require(l != nullptr && path != nullptr, "null argument");
        eai::ScriptOutcome outcome = eai::run_ledger_script(l->ledger, eai::slurp_file(path));
        if (ops_applied) *ops_applied = outcome.ops_applied;
    });
}

uint64_t eai_ledger_event_count(const eai_ledger* l) { return l ? l->ledger.events().size() : 0; }

uint64_t eai_ledger_account_count(const eai_ledger* l) {
    return l ? l->ledger.account_count() : 0;
}

eai_status eai_ledger_state_json(const eai_ledger* l, char** out) {
    return guarded([&] {
        require(l != nullptr && out != nullptr, "null argument");
        *out = dup_string(l->ledger.state_json());
    });
}

void eai_ledger_free(eai_ledger* l) { delete l; }

/* ------------------------------------------------------------------ */

eai_status eai_gas_params_default(eai_gas_params** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = new eai_gas_params{eai::CostParams::defaults()};
    });
}

eai_status eai_gas_params_from_json(const char* json, eai_gas_params** out) {
    return guarded([&] {
        require(json != nullptr && out != nullptr, "null argument");
        *out = new eai_gas_params{eai::CostParams::from_json(json)};
    });
}

eai_status eai_gas_params_load(const char* path, eai_gas_params** out) {
    return guarded([&] {
        require(path != nullptr && out != nullptr, "null argument");
        *out = new eai_gas_params{eai::CostParams::from_json(eai::slurp_file(path))};
    });
}

eai_status eai_gas_params_json(const eai_gas_params* p, char** out) {
    return guarded([&] {
        require(p != nullptr && out != nullptr, "null argument");
        *out = dup_string(p->params.to_json());
    });
}

eai_status eai_gas_estimate(const eai_gas_params* p, const char* method, const char* op,
                            uint64_t n, uint64_t k, uint64_t* gas_out, char usd_out[32]) {
    return guarded([&] {
        require(p != nullptr && method != nullptr && op != nullptr, "null argument");
        eai::CostEstimate est = eai::estimate(eai::parse_registry_method(method),
                                              eai::parse_gas_op(op), n, k, p->params);
        if (gas_out) *gas_out = est.gas;
        if (usd_out) copy_to_buf(eai::format_usd_cents(est.usd), usd_out, 32, "usd");
    });
}

eai_status eai_gas_table(const eai_gas_params* p, char** out) {
    return guarded([&] {
        require(p != nullptr && out != nullptr, "null argument");
        *out = dup_string(eai::cost_table_text(p->params));
    });
}

eai_status eai_gas_fit_merkle(const uint64_t* sizes, const uint64_t* gas, size_t count,
                              double* base_out, double* per_hash_out) {
    return guarded([&] {
        require(sizes != nullptr && gas != nullptr && base_out != nullptr &&
                    per_hash_out != nullptr,
                "null argument");
        std::vector<std::pair<uint64_t, uint64_t>> samples;
        samples.reserve(count);
        for (size_t i = 0; i < count; ++i) samples.emplace_back(sizes[i], gas[i]);
        auto [base, per_hash] = eai::fit_merkle_check_params(samples);
        *base_out = base;
        *per_hash_out = per_hash;
    });
}

eai_status eai_gas_merkle_depth(uint64_t n, uint32_t* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = eai::merkle_depth(n);
    });
}

void eai_gas_params_free(eai_gas_params* p) { delete p; }

} // extern "C"
