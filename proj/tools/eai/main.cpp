// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0
//
// Pipeline front end: ingest -> graph -> distances -> reports, plus the
// Merkle registry, attestation, ledger simulation, and cost-model
// subcommands. All work happens behind the C API in eai/eai.h.

#include <CLI11.hpp>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eai/eai.h"

namespace {

// Exit contract: 0 success, 1 validation failure, 2 I/O failure.
struct CliError {
    int exit_code;
    std::string message;
};

int exit_code_of(eai_status status) { return status == EAI_ERR_IO ? 2 : 1; }

void check(eai_status status) {
    if (status != EAI_OK) throw CliError{exit_code_of(status), eai_last_error()};
}

template <class T, void (*FreeFn)(T*)>
class Handle {
  public:
    Handle() = default;
    ~Handle() { FreeFn(ptr_); }
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    Handle(Handle&& other) noexcept : ptr_(other.ptr_) { other.ptr_ = nullptr; }
    Handle& operator=(Handle&& other) noexcept {
        std::swap(ptr_, other.ptr_);
        return *this;
    }

    T** out() {
        FreeFn(ptr_);
        ptr_ = nullptr;
        return &ptr_;
    }
    T* get() const { return ptr_; }
    operator T*() const { return ptr_; }

  private:
    T* ptr_ = nullptr;
};

using TransfersHandle = Handle<eai_transfers, eai_transfers_free>;
using AddressListHandle = Handle<eai_address_list, eai_address_list_free>;
using GraphHandle = Handle<eai_graph, eai_graph_free>;
using DistancesHandle = Handle<eai_distances, eai_distances_free>;
using BalancesHandle = Handle<eai_balances, eai_balances_free>;
using TableHandle = Handle<eai_table, eai_table_free>;
using SummaryHandle = Handle<eai_summary, eai_summary_free>;
using ExploitersHandle = Handle<eai_exploiters, eai_exploiters_free>;
using MerkleHandle = Handle<eai_merkle, eai_merkle_free>;
using SignerHandle = Handle<eai_signer, eai_signer_free>;
using LedgerHandle = Handle<eai_ledger, eai_ledger_free>;
using GasParamsHandle = Handle<eai_gas_params, eai_gas_params_free>;

class CString {
  public:
    CString() = default;
    ~CString() { eai_string_free(ptr_); }
    CString(const CString&) = delete;
    CString& operator=(const CString&) = delete;

    char** out() {
        eai_string_free(ptr_);
        ptr_ = nullptr;
        return &ptr_;
    }
    const char* get() const { return ptr_ ? ptr_ : ""; }

  private:
    char* ptr_ = nullptr;
};

// --config: flat JSON object consulted for every option the command line
// leaves unset. Keys are long option names minus dashes, '-' -> '_'
// (--max-hops -> max_hops).
class ConfigFile {
  public:
    void load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw CliError{2, "cannot open config " + path};
        std::stringstream buf;
        buf << in.rdbuf();
        json_ = nlohmann::json::parse(buf.str(), nullptr, /*allow_exceptions=*/false);
        if (json_.is_discarded() || !json_.is_object())
            throw CliError{1, "config " + path + ": expected a JSON object"};
    }

    template <class T>
    void fill(const CLI::App& cmd, const std::string& flag, T& value) const {
        if (json_.is_null() || cmd.count(flag) > 0) return;
        std::string key = flag.substr(flag.find_first_not_of('-'));
        for (char& c : key)
            if (c == '-') c = '_';
        if (!json_.contains(key)) return;
        try {
            value = json_.at(key).get<T>();
        } catch (const nlohmann::json::exception&) {
            throw CliError{1, "config key '" + key + "' has the wrong type"};
        }
    }

  private:
    nlohmann::json json_;
};

// Every leaf command owns a --config option; the runner loads it lazily.
struct CommonArgs {
    std::string config_path;
    std::string out_path;
    ConfigFile config;

    void attach(CLI::App* cmd, bool with_out = true) {
        cmd->add_option("--config", config_path,
                        "JSON config file; command-line flags win");
        if (with_out)
            cmd->add_option("--out", out_path, "output file (default: stdout)");
    }

    void resolve(const CLI::App& cmd) {
        config.fill(cmd, "--config", config_path); // no-op; keeps key reserved
        if (!config_path.empty()) config.load(config_path);
        config.fill(cmd, "--out", out_path);
    }
};

void write_output(const std::string& out_path, std::string_view contents) {
    if (out_path.empty()) {
        std::cout << contents << std::flush;
        return;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw CliError{2, "cannot open " + out_path};
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw CliError{2, "cannot write " + out_path};
}

std::string read_line_from(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError{2, "cannot open " + path};
    std::string line;
    std::getline(in, line);
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' '))
        line.pop_back();
    return line;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{2, "cannot open " + path};
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

eai_transfer_format parse_format(const std::string& name) {
    if (name == "csv") return EAI_FORMAT_CSV;
    if (name == "jsonl") return EAI_FORMAT_JSONL;
    throw CliError{1, "unknown transfer format '" + name + "' (want csv|jsonl)"};
}

eai_render_format parse_render(const std::string& name) {
    if (name == "json") return EAI_RENDER_JSON;
    if (name == "csv") return EAI_RENDER_CSV;
    if (name == "text") return EAI_RENDER_TEXT;
    throw CliError{1, "unknown output format '" + name + "' (want json|csv|text)"};
}

std::vector<const char*> to_cstrs(const std::vector<std::string>& v) {
    std::vector<const char*> out;
    out.reserve(v.size());
    for (const std::string& s : v) out.push_back(s.c_str());
    return out;
}

std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v != nullptr && *v != '\0' ? std::string(v) : fallback;
}

// ------------------------------------------------------------------
// Shared pipeline plumbing for distance-dependent commands.

struct PipelineArgs {
    std::string graph_path;
    std::string transfers_path;
    std::string transfers_format = "csv";
    std::string exchanges_path;
    std::string exclusions_path;
    uint32_t max_hops = 5;
    unsigned threads = 0; // 0 = all cores

    void attach(CLI::App* cmd, bool needs_transfers) {
        cmd->add_option("--graph", graph_path, "graph cache file")->required();
        auto* t = cmd->add_option("--transfers", transfers_path, "transfer records file");
        if (needs_transfers) t->required();
        cmd->add_option("--transfers-format", transfers_format, "csv or jsonl");
        cmd->add_option("--exchanges", exchanges_path, "exchange address list")->required();
        cmd->add_option("--exclusions", exclusions_path,
                        "addresses removed from the BFS source set");
        cmd->add_option("--max-hops", max_hops, "BFS hop cap (default 5)");
        cmd->add_option("--threads", threads, "worker threads (default: all cores)");
    }

    void resolve(const CLI::App& cmd, const ConfigFile& config) {
        config.fill(cmd, "--graph", graph_path);
        config.fill(cmd, "--transfers", transfers_path);
        config.fill(cmd, "--transfers-format", transfers_format);
        config.fill(cmd, "--exchanges", exchanges_path);
        config.fill(cmd, "--exclusions", exclusions_path);
        config.fill(cmd, "--max-hops", max_hops);
        config.fill(cmd, "--threads", threads);
    }
};

struct Pipeline {
    GraphHandle graph;
    AddressListHandle exchanges;
    AddressListHandle exclusions;
    DistancesHandle distances;
    TransfersHandle transfers;
    std::vector<std::string> input_paths;
};

Pipeline open_pipeline(const PipelineArgs& args) {
    Pipeline p;
    check(eai_graph_load(args.graph_path.c_str(), p.graph.out()));
    p.input_paths.push_back(args.graph_path);
    check(eai_address_list_parse_file(args.exchanges_path.c_str(), EAI_ROLE_EXCHANGE,
                                      p.exchanges.out()));
    p.input_paths.push_back(args.exchanges_path);
    if (!args.exclusions_path.empty()) {
        check(eai_address_list_parse_file(args.exclusions_path.c_str(), EAI_ROLE_EXCLUSION,
                                          p.exclusions.out()));
        p.input_paths.push_back(args.exclusions_path);
    }
    check(eai_distances_compute(p.graph, p.exchanges, p.exclusions.get(), args.max_hops,
                                args.threads, p.distances.out()));
    if (!args.transfers_path.empty()) {
        check(eai_transfers_parse_file(args.transfers_path.c_str(),
                                       parse_format(args.transfers_format), /*strict=*/1,
                                       p.transfers.out()));
        p.input_paths.push_back(args.transfers_path);
    }
    return p;
}

nlohmann::ordered_json base_parameters(const PipelineArgs& args) {
    nlohmann::ordered_json j;
    j["max_hops"] = args.max_hops;
    return j;
}

// ------------------------------------------------------------------
// graph build

struct GraphBuildArgs {
    CommonArgs common;
    std::string transfers_path;
    std::string format = "csv";
    bool lenient = false;
    std::string threshold;
    bool direct_only = false;
    std::string token;
    int id_width = 4;

    void run(const CLI::App& cmd) {
        common.resolve(cmd);
        const ConfigFile& config = common.config;
        config.fill(cmd, "--transfers", transfers_path);
        config.fill(cmd, "--format", format);
        config.fill(cmd, "--lenient", lenient);
        config.fill(cmd, "--threshold", threshold);
        config.fill(cmd, "--direct-only", direct_only);
        config.fill(cmd, "--token", token);
        config.fill(cmd, "--id-width", id_width);
        if (common.out_path.empty()) throw CliError{1, "graph build requires --out"};

        TransfersHandle transfers;
        check(eai_transfers_parse_file(transfers_path.c_str(), parse_format(format),
                                       lenient ? 0 : 1, transfers.out()));
        for (size_t i = 0; i < eai_transfers_issue_count(transfers); ++i) {
            uint64_t line = 0;
            CString message;
            check(eai_transfers_issue(transfers, i, &line, message.out()));
            std::cerr << "warning: " << transfers_path << ":" << line << ": " << message.get()
                      << "\n";
        }
        GraphHandle graph;
        check(eai_graph_build(transfers, threshold.empty() ? nullptr : threshold.c_str(),
                              direct_only ? 1 : 0, token.empty() ? nullptr : token.c_str(),
                              id_width, graph.out()));
        check(eai_graph_save(graph, common.out_path.c_str()));
        char volume[32];
        check(eai_graph_total_volume(graph, volume));
        std::cout << "nodes " << eai_graph_node_count(graph) << "\n"
                  << "edges " << eai_graph_edge_count(graph) << "\n"
                  << "volume_usd " << volume << "\n";
    }
};

// ------------------------------------------------------------------
// graph stats

struct GraphStatsArgs {
    CommonArgs common;
    std::string graph_path;

    void run(const CLI::App& cmd) {
        common.resolve(cmd);
        common.config.fill(cmd, "--graph", graph_path);
        GraphHandle graph;
        check(eai_graph_load(graph_path.c_str(), graph.out()));
        char volume[32];
        check(eai_graph_total_volume(graph, volume));
        std::ostringstream text;
        text << "nodes " << eai_graph_node_count(graph) << "\n"
             << "edges " << eai_graph_edge_count(graph) << "\n"
             << "volume_usd " << volume << "\n";
        write_output(common.out_path, text.str());
    }
};

// ------------------------------------------------------------------
// distances

struct DistancesArgs {
    CommonArgs common;
    PipelineArgs pipeline;

    void run(const CLI::App& cmd) {
        common.resolve(cmd);
        pipeline.resolve(cmd, common.config);
        Pipeline p = open_pipeline(pipeline);
        CString csv;
        check(eai_distances_csv(p.distances, csv.out()));
        write_output(common.out_path, csv.get());
    }
};

// ------------------------------------------------------------------
// report wallets / report txns

struct WalletReportArgs {
    CommonArgs common;
    PipelineArgs pipeline;
    std::vector<std::string> buckets;
    std::string eoa_filter_path;
    std::string format = "json";

    void run(const CLI::App& cmd) {
        common.resolve(cmd);
        pipeline.resolve(cmd, common.config);
        common.config.fill(cmd, "--buckets", buckets);
        common.config.fill(cmd, "--eoa-filter", eoa_filter_path);
        common.config.fill(cmd, "--format", format);

        Pipeline p = open_pipeline(pipeline);
        BalancesHandle balances;
        check(eai_balances_compute(p.transfers, balances.out()));
        AddressListHandle eoa_filter;
        if (!eoa_filter_path.empty()) {
            check(eai_address_list_parse_file(eoa_filter_path.c_str(), EAI_ROLE_EXCLUSION,
                                              eoa_filter.out()));
            p.input_paths.push_back(eoa_filter_path);
        }
        std::vector<const char*> edges = to_cstrs(buckets);
        TableHandle table;
        check(eai_wallet_table(p.distances, balances, edges.empty() ? nullptr : edges.data(),
                               edges.size(), eoa_filter.get(), table.out()));

        nlohmann::ordered_json params = base_parameters(pipeline);
        if (!buckets.empty()) params["buckets_usd"] = buckets;
        std::vector<const char*> paths = to_cstrs(p.input_paths);
        CString rendered;
        check(eai_table_render(table, parse_render(format), "wallet_distance", paths.data(),
                               paths.size(), params.dump().c_str(), rendered.out()));
        write_output(common.out_path, rendered.get());
    }
};

struct TxnReportArgs {
    CommonArgs common;
    PipelineArgs pipeline;
    std::vector<std::string> buckets;
    bool volume = false;
    std::string format = "json";

    void run(const CLI::App& cmd) {
        common.resolve(cmd);
        pipeline.resolve(cmd, common.config);
        common.config.fill(cmd, "--buckets", buckets);
        common.config.fill(cmd, "--volume", volume);
        common.config.fill(cmd, "--format", format);

        Pipeline p = open_pipeline(pipeline);
        std::vector<const char*> edges = to_cstrs(buckets);
        TableHandle table;
        check(eai_txn_table(p.distances, p.transfers, edges.empty() ? nullptr : edges.data(),
                            edges.size(), volume ? 1 : 0, table.out()));

        nlohmann::ordered_json params = base_parameters(pipeline);
        if (!buckets.empty()) params["buckets_usd"] = buckets;
        params["volume"] = volume;
        std::vector<const char*> paths = to_cstrs(p.input_paths);
        CString rendered;
        check(eai_table_render(table, parse_render(format),
                               volume ? "txn_volume_distance" : "txn_distance", paths.data(),
                               paths.size(), params.dump().c_str(), rendered.out()));
        write_output(common.out_path, rendered.get());
    }
};

// ------------------------------------------------------------------
// report exploiters

struct ExploiterReportArgs {
    CommonArgs common;
    PipelineArgs pipeline;
    std::string exploiters_path;
    std::string format = "json";

    void run(const CLI::App& cmd) {
        common.resolve(cmd);
        pipeline.resolve(cmd, common.config);
        common.config.fill(cmd, "--exploiters", exploiters_path);
        common.config.fill(cmd, "--format", format);

        Pipeline p = open_pipeline(pipeline);
        AddressListHandle exploiters;
        check(eai_address_list_parse_file(exploiters_path.c_str(), EAI_ROLE_EXPLOITER,
                                          exploiters.out()));
        p.input_paths.push_back(exploiters_path);
        ExploitersHandle report;
        check(eai_exploiters_compute(p.distances, exploiters, report.out()));

        nlohmann::ordered_json params = base_parameters(pipeline);
        std::vector<const char*> paths = to_cstrs(p.input_paths);
        CString rendered;
        check(eai_exploiters_render(report, parse_render(format), paths.data(), paths.size(),
                                    params.dump().c_str(), rendered.out()));
        write_output(common.out_path, rendered.get());
    }
};

// ------------------------------------------------------------------
// stats

struct StatsArgs {
    CommonArgs common;
    PipelineArgs pipeline;
    std::string wallet_threshold;
    std::string min_txn;
    std::string eoa_filter_path;
    std::string format = "json";

    void run(const CLI::App& cmd) {
        common.resolve(cmd);
        pipeline.resolve(cmd, common.config);
        common.config.fill(cmd, "--wallet-threshold", wallet_threshold);
        common.config.fill(cmd, "--min-txn", min_txn);
        common.config.fill(cmd, "--eoa-filter", eoa_filter_path);
        common.config.fill(cmd, "--format", format);

        Pipeline p = open_pipeline(pipeline);
        BalancesHandle balances;
        check(eai_balances_compute(p.transfers, balances.out()));
        AddressListHandle eoa_filter;
        if (!eoa_filter_path.empty()) {
            check(eai_address_list_parse_file(eoa_filter_path.c_str(), EAI_ROLE_EXCLUSION,
                                              eoa_filter.out()));
            p.input_paths.push_back(eoa_filter_path);
        }
        SummaryHandle summary;
        check(eai_summary_compute(p.distances, balances, p.transfers,
                                  wallet_threshold.empty() ? nullptr : wallet_threshold.c_str(),
                                  min_txn.empty() ? nullptr : min_txn.c_str(), eoa_filter.get(),
                                  summary.out()));

        nlohmann::ordered_json params = base_parameters(pipeline);
        if (!wallet_threshold.empty()) params["wallet_threshold_usd"] = wallet_threshold;
        if (!min_txn.empty()) params["min_txn_usd"] = min_txn;
        std::vector<const char*> paths = to_cstrs(p.input_paths);
        CString rendered;
        check(eai_summary_render(summary, parse_render(format), paths.data(), paths.size(),
                                 params.dump().c_str(), rendered.out()));
        write_output(common.out_path, rendered.get());
    }
};

// ------------------------------------------------------------------
// merkle build / prove / verify

MerkleHandle build_registry(const std::string& addresses_path) {
    AddressListHandle addresses;
    check(eai_address_list_parse_file(addresses_path.c_str(), EAI_ROLE_EXCLUSION,
                                      addresses.out()));
    MerkleHandle tree;
    check(eai_merkle_build(addresses, tree.out()));
    return tree;
}

struct MerkleBuildArgs {
    CommonArgs common;
    std::string addresses_path;

    void run(const CLI::App& cmd) {
        common.resolve(cmd);
        common.config.fill(cmd, "--addresses", addresses_path);
        if (common.out_path.empty()) throw CliError{1, "merkle build requires --out"};

        MerkleHandle tree = build_registry(addresses_path);
        std::ostringstream text;
        for (uint64_t i = 0; i < eai_merkle_leaf_count(tree); ++i) {
            char address[EAI_ADDRESS_BUF];
            check(eai_merkle_leaf(tree, i, address));
            text << address << "\n";
        }
        char root[EAI_HEX32_BUF];
        check(eai_merkle_root(tree, root));
        write_output(common.out_path, text.str());
        write_output(common.out_path + ".root", std::string(root) + "\n");
        std::cout << "root " << root << "\n"
                  << "leaves " << eai_merkle_leaf_count(tree) << "\n"
                  << "depth " << eai_merkle_tree_depth(tree) << "\n";
    }
};

struct MerkleProveArgs {
    CommonArgs common;
    std::string addresses_path;
    std::string address;

    void run(const CLI::App& cmd) {
        common.resolve(cmd);
        common.config.fill(cmd, "--addresses", addresses_path);
        common.config.fill(cmd, "--address", address);

        MerkleHandle tree = build_registry(addresses_path);
        CString proof;
        check(eai_merkle_prove(tree, address.c_str(), proof.out()));
        write_output(common.out_path, proof.get());
    }
};

struct MerkleVerifyArgs {
    CommonArgs common;
    std::string proof_path;
    std::string root_hex;
    std::string root_file;
    int* exit_status = nullptr;

    void run(const CLI::App& cmd) {
        common.resolve(cmd);
        common.config.fill(cmd, "--proof", proof_path);
        common.config.fill(cmd, "--root", root_hex);
        common.config.fill(cmd, "--root-file", root_file);
        if (!root_file.empty()) {
            if (!root_hex.empty()) throw CliError{1, "--root and --root-file are exclusive"};
            root_hex = read_line_from(root_file);
        }

        std::string proof = slurp(proof_path);
        int valid = 0;
        check(eai_merkle_verify(proof.c_str(), root_hex.empty() ? nullptr : root_hex.c_str(),
                                &valid));
        std::cout << (valid ? "valid" : "invalid") << "\n";
        if (!valid) *exit_status = 1;
    }
};

// ------------------------------------------------------------------
// attest keygen / sign / verify

struct AttestKeygenArgs {
    CommonArgs common;

    void run(const CLI::App& cmd) {
        common.resolve(cmd);
        if (common.out_path.empty()) throw CliError{1, "attest keygen requires --out"};
        SignerHandle signer;
        check(eai_signer_generate(signer.out()));
        check(eai_signer_save(signer, common.out_path.c_str()));
        char pubkey[EAI_HEX32_BUF];
        char fingerprint[19];
        check(eai_signer_public_key_hex(signer, pubkey));
        check(eai_signer_fingerprint_hex(signer, fingerprint));
        std::cout << "public_key " << pubkey << "\n"
                  << "fingerprint " << fingerprint << "\n";
    }
};

struct AttestSignArgs {
    CommonArgs common;
    std::string key_path;
    std::string address;
    bool is_eai = true;
    uint64_t ttl = 86400;
    std::string nonce_hex;
    int64_t now = -1;

    void run(const CLI::App& cmd) {
        common.resolve(cmd);
        const ConfigFile& config = common.config;
        config.fill(cmd, "--key", key_path);
        config.fill(cmd, "--address", address);
        config.fill(cmd, "--is-eai", is_eai);
        config.fill(cmd, "--ttl", ttl);
        config.fill(cmd, "--nonce", nonce_hex);
        config.fill(cmd, "--now", now);
        if (key_path.empty()) key_path = env_or("EAI_SIGNER_KEY_PATH", "");
        if (key_path.empty())
            throw CliError{1, "no signing key: pass --key or set EAI_SIGNER_KEY_PATH"};

        uint64_t nonce = 0;
        if (nonce_hex.empty()) {
            std::random_device rd;
            nonce = (static_cast<uint64_t>(rd()) << 32) | rd();
        } else {
            try {
                nonce = std::stoull(nonce_hex, nullptr, 0);
            } catch (const std::exception&) {
                throw CliError{1, "bad --nonce '" + nonce_hex + "'"};
            }
        }

        SignerHandle signer;
        check(eai_signer_load(key_path.c_str(), signer.out()));
        CString attestation;
        check(eai_attest_sign(signer, address.c_str(), is_eai ? 1 : 0, ttl, nonce, now,
                              attestation.out()));
        write_output(common.out_path, attestation.get());
    }
};

struct AttestVerifyArgs {
    CommonArgs common;
    std::string attestation_path;
    std::string pubkey_hex;
    std::string key_path;
    int64_t now = -1;
    int* exit_status = nullptr;

    void run(const CLI::App& cmd) {
        common.resolve(cmd);
        const ConfigFile& config = common.config;
        config.fill(cmd, "--attestation", attestation_path);
        config.fill(cmd, "--pubkey", pubkey_hex);
        config.fill(cmd, "--key", key_path);
        config.fill(cmd, "--now", now);
        if (pubkey_hex.empty()) {
            if (key_path.empty()) key_path = env_or("EAI_SIGNER_KEY_PATH", "");
            if (key_path.empty())
                throw CliError{1, "no verifying key: pass --pubkey, --key, or set "
                                  "EAI_SIGNER_KEY_PATH"};
            SignerHandle signer;
            check(eai_signer_load(key_path.c_str(), signer.out()));
            char buf[EAI_HEX32_BUF];
            check(eai_signer_public_key_hex(signer, buf));
            pubkey_hex = buf;
        }

        std::string attestation = slurp(attestation_path);
        eai_attest_result result = EAI_ATTEST_BAD_SIGNATURE;
        check(eai_attest_verify(pubkey_hex.c_str(), attestation.c_str(), now, &result));
        switch (result) {
            case EAI_ATTEST_VALID: std::cout << "valid\n"; break;
            case EAI_ATTEST_EXPIRED: std::cout << "expired\n"; break;
            case EAI_ATTEST_BAD_SIGNATURE: std::cout << "bad_signature\n"; break;
        }
        if (result != EAI_ATTEST_VALID) *exit_status = 1;
    }
};

// ------------------------------------------------------------------
// ledger simulate

struct LedgerArgs {
    CommonArgs common;
    std::string script_path;

    void run(const CLI::App& cmd) {
        common.resolve(cmd);
        common.config.fill(cmd, "--script", script_path);
        LedgerHandle ledger;
        check(eai_ledger_new(ledger.out()));
        uint64_t applied = 0;
        check(eai_ledger_run_script_file(ledger, script_path.c_str(), &applied));
        CString state;
        check(eai_ledger_state_json(ledger, state.out()));
        write_output(common.out_path, state.get());
        std::cerr << "applied " << applied << " ops; " << eai_ledger_account_count(ledger)
                  << " accounts\n";
    }
};

// ------------------------------------------------------------------
// gas estimate / table

GasParamsHandle load_gas_params(const std::string& params_path) {
    GasParamsHandle params;
    if (params_path.empty())
        check(eai_gas_params_default(params.out()));
    else
        check(eai_gas_params_load(params_path.c_str(), params.out()));
    return params;
}

struct GasEstimateArgs {
    CommonArgs common;
    std::string method;
    std::string op;
    uint64_t n = 0;
    uint64_t k = 0;
    std::string params_path;

    void run(const CLI::App& cmd) {
        common.resolve(cmd);
        const ConfigFile& config = common.config;
        config.fill(cmd, "--method", method);
        config.fill(cmd, "--op", op);
        config.fill(cmd, "--n", n);
        config.fill(cmd, "--k", k);
        config.fill(cmd, "--params", params_path);

        GasParamsHandle params = load_gas_params(params_path);
        uint64_t gas = 0;
        char usd[32];
        check(eai_gas_estimate(params, method.c_str(), op.c_str(), n, k, &gas, usd));
        nlohmann::ordered_json j;
        j["method"] = method;
        j["op"] = op;
        if (n > 0) j["n"] = n;
        if (k > 0) j["k"] = k;
        j["gas"] = gas;
        j["usd"] = usd;
        write_output(common.out_path, j.dump(2) + "\n");
    }
};

struct GasTableArgs {
    CommonArgs common;
    std::string params_path;

    void run(const CLI::App& cmd) {
        common.resolve(cmd);
        common.config.fill(cmd, "--params", params_path);
        GasParamsHandle params = load_gas_params(params_path);
        CString table;
        check(eai_gas_table(params, table.out()));
        write_output(common.out_path, table.get());
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"transaction-graph exchange-proximity analytics and EAI registry toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", []() { return std::string(eai_version()); });
    int exit_status = 0;

    // graph
    auto* graph = app.add_subcommand("graph", "build and inspect transaction graphs");
    graph->require_subcommand(1);
    auto graph_build = std::make_shared<GraphBuildArgs>();
    {
        auto* cmd = graph->add_subcommand("build", "aggregate transfers into a graph cache");
        cmd->add_option("--transfers", graph_build->transfers_path, "transfer records file")
            ->required();
        cmd->add_option("--format", graph_build->format, "csv or jsonl");
        cmd->add_flag("--lenient", graph_build->lenient,
                      "skip malformed rows instead of failing");
        cmd->add_option("--threshold", graph_build->threshold,
                        "minimum aggregated USD per edge (default 10)");
        cmd->add_flag("--direct-only", graph_build->direct_only,
                      "keep wallet-to-wallet transfers only");
        cmd->add_option("--token", graph_build->token, "keep one token tag");
        cmd->add_option("--id-width", graph_build->id_width, "node id bytes: 4 or 8");
        graph_build->common.attach(cmd);
        cmd->callback([graph_build, cmd] { graph_build->run(*cmd); });
    }
    auto graph_stats = std::make_shared<GraphStatsArgs>();
    {
        auto* cmd = graph->add_subcommand("stats", "print graph cache statistics");
        cmd->add_option("--graph", graph_stats->graph_path, "graph cache file")->required();
        graph_stats->common.attach(cmd);
        cmd->callback([graph_stats, cmd] { graph_stats->run(*cmd); });
    }

    // distances
    auto distances = std::make_shared<DistancesArgs>();
    {
        auto* cmd = app.add_subcommand("distances", "per-address EAI distances as CSV");
        distances->pipeline.attach(cmd, /*needs_transfers=*/false);
        distances->common.attach(cmd);
        cmd->callback([distances, cmd] { distances->run(*cmd); });
    }

    // report
    auto* report = app.add_subcommand("report", "distance-bucket reports");
    report->require_subcommand(1);
    auto wallets = std::make_shared<WalletReportArgs>();
    {
        auto* cmd = report->add_subcommand("wallets",
                                           "wallet counts by balance bucket and distance");
        wallets->pipeline.attach(cmd, /*needs_transfers=*/true);
        cmd->add_option("--buckets", wallets->buckets, "ascending USD bucket lower bounds")
            ->delimiter(',');
        cmd->add_option("--eoa-filter", wallets->eoa_filter_path,
                        "restrict the population to these addresses");
        cmd->add_option("--format", wallets->format, "json, csv, or text");
        wallets->common.attach(cmd);
        cmd->callback([wallets, cmd] { wallets->run(*cmd); });
    }
    auto txns = std::make_shared<TxnReportArgs>();
    {
        auto* cmd = report->add_subcommand("txns",
                                           "transfer counts by size bucket and distance");
        txns->pipeline.attach(cmd, /*needs_transfers=*/true);
        cmd->add_option("--buckets", txns->buckets, "ascending USD bucket lower bounds")
            ->delimiter(',');
        cmd->add_flag("--volume", txns->volume, "sum USD volume instead of counting");
        cmd->add_option("--format", txns->format, "json, csv, or text");
        txns->common.attach(cmd);
        cmd->callback([txns, cmd] { txns->run(*cmd); });
    }
    auto exploiters = std::make_shared<ExploiterReportArgs>();
    {
        auto* cmd = report->add_subcommand("exploiters",
                                           "distance histogram for a labelled address set");
        exploiters->pipeline.attach(cmd, /*needs_transfers=*/false);
        cmd->add_option("--exploiters", exploiters->exploiters_path, "labelled address list")
            ->required();
        cmd->add_option("--format", exploiters->format, "json, csv, or text");
        exploiters->common.attach(cmd);
        cmd->callback([exploiters, cmd] { exploiters->run(*cmd); });
    }

    // stats
    auto stats = std::make_shared<StatsArgs>();
    {
        auto* cmd = app.add_subcommand("stats", "headline summary statistics");
        stats->pipeline.attach(cmd, /*needs_transfers=*/true);
        cmd->add_option("--wallet-threshold", stats->wallet_threshold,
                        "max-lifetime-balance cutoff in USD (default 10000)");
        cmd->add_option("--min-txn", stats->min_txn,
                        "minimum transfer size in USD (default 2000)");
        cmd->add_option("--eoa-filter", stats->eoa_filter_path,
                        "restrict the wallet population to these addresses");
        cmd->add_option("--format", stats->format, "json, csv, or text");
        stats->common.attach(cmd);
        cmd->callback([stats, cmd] { stats->run(*cmd); });
    }

    // merkle
    auto* merkle = app.add_subcommand("merkle", "Merkle membership registry");
    merkle->require_subcommand(1);
    auto merkle_build = std::make_shared<MerkleBuildArgs>();
    {
        auto* cmd = merkle->add_subcommand("build",
                                           "canonical registry file plus .root sidecar");
        cmd->add_option("--addresses", merkle_build->addresses_path, "member address list")
            ->required();
        merkle_build->common.attach(cmd);
        cmd->callback([merkle_build, cmd] { merkle_build->run(*cmd); });
    }
    auto merkle_prove = std::make_shared<MerkleProveArgs>();
    {
        auto* cmd = merkle->add_subcommand("prove", "membership proof JSON for one address");
        cmd->add_option("--addresses", merkle_prove->addresses_path, "member address list")
            ->required();
        cmd->add_option("--address", merkle_prove->address, "member to prove")->required();
        merkle_prove->common.attach(cmd);
        cmd->callback([merkle_prove, cmd] { merkle_prove->run(*cmd); });
    }
    auto merkle_verify = std::make_shared<MerkleVerifyArgs>();
    merkle_verify->exit_status = &exit_status;
    {
        auto* cmd = merkle->add_subcommand("verify",
                                           "check a proof; exit 0 only when it binds");
        cmd->add_option("--proof", merkle_verify->proof_path, "proof JSON file")->required();
        cmd->add_option("--root", merkle_verify->root_hex,
                        "expected root (default: the proof's embedded root)");
        cmd->add_option("--root-file", merkle_verify->root_file, "read the root from a file");
        merkle_verify->common.attach(cmd, /*with_out=*/false);
        cmd->callback([merkle_verify, cmd] { merkle_verify->run(*cmd); });
    }

    // attest
    auto* attest = app.add_subcommand("attest", "signed EAI-status attestations");
    attest->require_subcommand(1);
    auto keygen = std::make_shared<AttestKeygenArgs>();
    {
        auto* cmd = attest->add_subcommand("keygen", "generate an Ed25519 signing key");
        keygen->common.attach(cmd);
        cmd->callback([keygen, cmd] { keygen->run(*cmd); });
    }
    auto sign = std::make_shared<AttestSignArgs>();
    {
        auto* cmd = attest->add_subcommand("sign", "sign an attestation for one address");
        cmd->add_option("--key", sign->key_path,
                        "signing key file (default: $EAI_SIGNER_KEY_PATH)");
        cmd->add_option("--address", sign->address, "subject address")->required();
        cmd->add_option("--is-eai", sign->is_eai, "attested status (default true)");
        cmd->add_option("--ttl", sign->ttl, "validity in seconds (default 86400)");
        cmd->add_option("--nonce", sign->nonce_hex, "replay nonce (default: random)");
        cmd->add_option("--now", sign->now, "issue time override, unix seconds");
        sign->common.attach(cmd);
        cmd->callback([sign, cmd] { sign->run(*cmd); });
    }
    auto verify = std::make_shared<AttestVerifyArgs>();
    verify->exit_status = &exit_status;
    {
        auto* cmd = attest->add_subcommand("verify",
                                           "check an attestation; exit 0 only when valid");
        cmd->add_option("--attestation", verify->attestation_path, "attestation JSON file")
            ->required();
        cmd->add_option("--pubkey", verify->pubkey_hex, "verifying key, 32-byte hex");
        cmd->add_option("--key", verify->key_path,
                        "derive the verifying key from this seed file");
        cmd->add_option("--now", verify->now, "verification time override, unix seconds");
        verify->common.attach(cmd, /*with_out=*/false);
        cmd->callback([verify, cmd] { verify->run(*cmd); });
    }

    // ledger
    auto* ledger = app.add_subcommand("ledger", "bit-packed ledger simulation");
    ledger->require_subcommand(1);
    auto simulate = std::make_shared<LedgerArgs>();
    {
        auto* cmd = ledger->add_subcommand("simulate",
                                           "replay a script and dump the final state");
        cmd->add_option("--script", simulate->script_path, "script CSV file")->required();
        simulate->common.attach(cmd);
        cmd->callback([simulate, cmd] { simulate->run(*cmd); });
    }

    // gas
    auto* gas = app.add_subcommand("gas", "registry cost model");
    gas->require_subcommand(1);
    auto estimate = std::make_shared<GasEstimateArgs>();
    {
        auto* cmd = gas->add_subcommand("estimate", "gas and USD for one operation");
        cmd->add_option("--method", estimate->method, "onchain, offchain, or merkle")
            ->required();
        cmd->add_option("--op", estimate->op, "is_eai, transfer, or add_addresses")
            ->required();
        cmd->add_option("--n", estimate->n, "registry size (Merkle checks)");
        cmd->add_option("--k", estimate->k, "addresses added");
        cmd->add_option("--params", estimate->params_path, "cost parameter JSON file");
        estimate->common.attach(cmd);
        cmd->callback([estimate, cmd] { estimate->run(*cmd); });
    }
    auto table = std::make_shared<GasTableArgs>();
    {
        auto* cmd = gas->add_subcommand("table", "method comparison at calibration sizes");
        cmd->add_option("--params", table->params_path, "cost parameter JSON file");
        table->common.attach(cmd);
        cmd->callback([table, cmd] { table->run(*cmd); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << app.help() << std::flush;
        return 1;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    }
    return exit_status;
}
