/* Copyright 2026 The EAI Toolkit Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the EAI toolkit: transfer ingestion, transaction-graph
 * construction, exchange-proximity (EAI distance) analysis, distance/balance
 * reporting, Merkle membership registries, signed attestations, a bit-packed
 * ledger simulation, and a calibrated registry cost model.
 *
 * Conventions:
 *  - Every fallible call returns eai_status; EAI_OK is 0. On failure,
 *    eai_last_error() returns a thread-local human-readable message.
 *  - Objects are opaque handles created by the new, parse, build, and
 *    compute functions and released with the matching free function.
 *    Handles are immutable after creation except eai_ledger.
 *  - Addresses are "0x"-prefixed 40-digit hex strings; buffers of
 *    EAI_ADDRESS_BUF bytes hold one with its terminator.
 *  - USD amounts are decimal strings with up to six fractional digits
 *    ("10", "9.999999"); outputs always carry six ("50.000000").
 *  - char** outputs are heap strings owned by the caller; release them with
 *    eai_string_free.
 */

#ifndef EAI_H_
#define EAI_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EAI_API __declspec(dllexport)
#else
#define EAI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* ------------------------------------------------------------------ */
/* Status and utilities                                                */

typedef enum eai_status {
    EAI_OK = 0,
    EAI_ERR_INVALID_ARGUMENT = 1,
    EAI_ERR_MALFORMED_ROW = 2,
    EAI_ERR_IO = 3,
    EAI_ERR_CAPACITY_EXCEEDED = 4,
    EAI_ERR_OUT_OF_RANGE = 5,
    EAI_ERR_NO_SOURCES = 6,
    EAI_ERR_UNKNOWN_ADDRESS = 7,
    EAI_ERR_BUCKET_OVERLAP = 8,
    EAI_ERR_EMPTY_POPULATION = 9,
    EAI_ERR_EMPTY_SET = 10,
    EAI_ERR_NOT_MEMBER = 11,
    EAI_ERR_ALREADY_MEMBER = 12,
    EAI_ERR_OVERFLOW = 13,
    EAI_ERR_INSUFFICIENT_BALANCE = 14,
    EAI_ERR_DEGENERATE_FIT = 15,
    EAI_ERR_UNSUPPORTED_COMBINATION = 16,
    EAI_ERR_INTERNAL = 17
} eai_status;

/* 0x + 40 hex digits + NUL. */
#define EAI_ADDRESS_BUF 43
/* 0x + 64 hex digits + NUL (32-byte digests and public keys). */
#define EAI_HEX32_BUF 67
/* Distance value for "unreachable or beyond max_hops". */
#define EAI_DISTANCE_BEYOND UINT32_MAX

/* Message for the most recent failure on this thread; never NULL. */
EAI_API const char* eai_last_error(void);

/* Library version, "major.minor.patch". */
EAI_API const char* eai_version(void);

/* Releases any char* output produced by this library. NULL is a no-op. */
EAI_API void eai_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Transfer records                                                    */

typedef struct eai_transfers eai_transfers;

typedef enum eai_transfer_format {
    EAI_FORMAT_CSV = 0,
    EAI_FORMAT_JSONL = 1
} eai_transfer_format;

typedef struct eai_transfer_view {
    uint64_t ordering_key;
    char from[EAI_ADDRESS_BUF];
    char to[EAI_ADDRESS_BUF];
    char amount_usd[32];
    char token[32];
    int direct; /* 1 = wallet-to-wallet */
} eai_transfer_view;

/* strict != 0: the first malformed row fails the parse. Otherwise malformed
 * rows are collected as issues and skipped. */
EAI_API eai_status eai_transfers_parse(const char* data, size_t size, eai_transfer_format format,
                                       int strict, eai_transfers** out);
EAI_API eai_status eai_transfers_parse_file(const char* path, eai_transfer_format format,
                                            int strict, eai_transfers** out);
EAI_API size_t eai_transfers_count(const eai_transfers* t);
EAI_API size_t eai_transfers_issue_count(const eai_transfers* t);
EAI_API size_t eai_transfers_data_rows(const eai_transfers* t);
EAI_API eai_status eai_transfers_get(const eai_transfers* t, size_t index,
                                     eai_transfer_view* out);
EAI_API eai_status eai_transfers_issue(const eai_transfers* t, size_t index, uint64_t* line_out,
                                       char** message_out);
EAI_API void eai_transfers_free(eai_transfers* t);

/* ------------------------------------------------------------------ */
/* Address lists                                                       */

typedef struct eai_address_list eai_address_list;

typedef enum eai_list_role {
    EAI_ROLE_EXCHANGE = 0,
    EAI_ROLE_EXPLOITER = 1,
    EAI_ROLE_EXCLUSION = 2
} eai_list_role;

/* One address per line; '#' lines and blank lines are ignored. */
EAI_API eai_status eai_address_list_parse(const char* text, eai_list_role role,
                                          eai_address_list** out);
EAI_API eai_status eai_address_list_parse_file(const char* path, eai_list_role role,
                                               eai_address_list** out);
EAI_API size_t eai_address_list_count(const eai_address_list* l);
EAI_API eai_status eai_address_list_get(const eai_address_list* l, size_t index,
                                        char out[EAI_ADDRESS_BUF]);
EAI_API eai_status eai_address_list_contains(const eai_address_list* l, const char* address,
                                             int* out);
EAI_API void eai_address_list_free(eai_address_list* l);

/* ------------------------------------------------------------------ */
/* Transaction graph                                                   */

typedef struct eai_graph eai_graph;

/* threshold_usd: minimum aggregated USD for a directed edge (default "10"
 * when NULL). direct_only != 0 keeps wallet-to-wallet transfers only.
 * token_filter: keep a single token tag, or NULL for all. id_width: 4 or 8
 * bytes per node id. */
EAI_API eai_status eai_graph_build(const eai_transfers* t, const char* threshold_usd,
                                   int direct_only, const char* token_filter, int id_width,
                                   eai_graph** out);
/* Binary cache with magic "EAIG1"; load validates the layout. */
EAI_API eai_status eai_graph_save(const eai_graph* g, const char* path);
EAI_API eai_status eai_graph_load(const char* path, eai_graph** out);
EAI_API uint64_t eai_graph_node_count(const eai_graph* g);
EAI_API uint64_t eai_graph_edge_count(const eai_graph* g);
/* Sum of retained aggregated edge amounts, six-decimal USD. */
EAI_API eai_status eai_graph_total_volume(const eai_graph* g, char out[32]);
/* found_out = 0 and *id_out untouched when the address is not a node. */
EAI_API eai_status eai_graph_node_id(const eai_graph* g, const char* address, uint64_t* id_out,
                                     int* found_out);
EAI_API eai_status eai_graph_address_of(const eai_graph* g, uint64_t id,
                                        char out[EAI_ADDRESS_BUF]);
EAI_API eai_status eai_graph_degree(const eai_graph* g, uint64_t id, uint64_t* out);
/* Writes up to capacity successor ids (sorted ascending); *written reports
 * the full count. Call with capacity 0 to size a buffer. */
EAI_API eai_status eai_graph_neighbors(const eai_graph* g, uint64_t id, uint64_t* buf,
                                       size_t capacity, size_t* written);
EAI_API void eai_graph_free(eai_graph* g);

/* ------------------------------------------------------------------ */
/* EAI distances                                                       */

typedef struct eai_distances eai_distances;

/* Multi-source BFS from the exchange list along transfer direction, capped
 * at max_hops. Exclusion-list members are removed from the source set only.
 * threads = 0 picks the hardware concurrency. The result shares the graph's
 * storage and keeps it alive; freeing the graph handle early is safe. */
EAI_API eai_status eai_distances_compute(const eai_graph* g, const eai_address_list* exchanges,
                                         const eai_address_list* exclusions, uint32_t max_hops,
                                         unsigned threads, eai_distances** out);
EAI_API uint32_t eai_distances_max_hops(const eai_distances* d);
EAI_API uint64_t eai_distances_source_count(const eai_distances* d);
/* *out is a hop count or EAI_DISTANCE_BEYOND. */
EAI_API eai_status eai_distances_of(const eai_distances* d, const char* address, uint32_t* out);
EAI_API eai_status eai_distances_of_id(const eai_distances* d, uint64_t id, uint32_t* out);
EAI_API eai_status eai_distances_is_eai(const eai_distances* d, const char* address, int* out);
/* within k extra hops of an EAI: distance <= 1 + k and not Beyond. */
EAI_API eai_status eai_distances_within_hops_of_eai(const eai_distances* d, const char* address,
                                                    uint32_t k, int* out);
/* Transaction distance min(d(sender), d(receiver)) and EAI involvement. */
EAI_API eai_status eai_distances_txn(const eai_distances* d, const char* sender,
                                     const char* receiver, uint32_t* distance_out,
                                     int* is_eai_out);
/* CSV rows "address,distance" in node-id order; "<max_hops>+" for Beyond. */
EAI_API eai_status eai_distances_csv(const eai_distances* d, char** out);
EAI_API void eai_distances_free(eai_distances* d);

/* ------------------------------------------------------------------ */
/* Balance replay                                                      */

typedef struct eai_balances eai_balances;

/* Replays transfers in (ordering_key, input order): debit sender, credit
 * receiver, clamp at zero on underflow (counted, not fatal). */
EAI_API eai_status eai_balances_compute(const eai_transfers* t, eai_balances** out);
EAI_API uint64_t eai_balances_underflow_warnings(const eai_balances* b);
EAI_API uint64_t eai_balances_address_count(const eai_balances* b);
/* found_out = 0 when the address never appears in the records. */
EAI_API eai_status eai_balances_get(const eai_balances* b, const char* address,
                                    char max_lifetime_usd[32], char final_usd[32],
                                    int* found_out);
EAI_API void eai_balances_free(eai_balances* b);

/* ------------------------------------------------------------------ */
/* Distance tables and reports                                         */

typedef struct eai_table eai_table;

typedef enum eai_render_format {
    EAI_RENDER_JSON = 0,
    EAI_RENDER_CSV = 1,
    EAI_RENDER_TEXT = 2
} eai_render_format;

/* bucket_edges_usd: ascending lower bucket bounds as USD strings, or NULL
 * with bucket_count 0 for the defaults (wallet: 10/1k/100k/10m, txn:
 * 10/2k/100k/10m). Buckets are half-open and lower-inclusive; the last is
 * open-ended. eoa_filter restricts the wallet population when non-NULL. */
EAI_API eai_status eai_wallet_table(const eai_distances* d, const eai_balances* b,
                                    const char* const* bucket_edges_usd, size_t bucket_count,
                                    const eai_address_list* eoa_filter, eai_table** out);
/* volume != 0 sums USD instead of counting transfers. Only direct transfers
 * at or above the first bucket edge participate. */
EAI_API eai_status eai_txn_table(const eai_distances* d, const eai_transfers* t,
                                 const char* const* bucket_edges_usd, size_t bucket_count,
                                 int volume, eai_table** out);
EAI_API size_t eai_table_rows(const eai_table* t);
EAI_API size_t eai_table_cols(const eai_table* t);
/* Raw cell: a count, or a micro-USD sum for volume tables. */
EAI_API eai_status eai_table_cell(const eai_table* t, size_t row, size_t col, uint64_t* out);
EAI_API eai_status eai_table_row_label(const eai_table* t, size_t row, char out[64]);
/* kind: report name embedded in JSON output (e.g. "wallet_distance").
 * input_paths: files hashed into the JSON provenance block; parameters_json:
 * a JSON object echoed into the report, or NULL. CSV/text renders ignore the
 * provenance arguments. */
EAI_API eai_status eai_table_render(const eai_table* t, eai_render_format format,
                                    const char* kind, const char* const* input_paths,
                                    size_t input_count, const char* parameters_json, char** out);
EAI_API void eai_table_free(eai_table* t);

/* ------------------------------------------------------------------ */
/* Summary statistics                                                  */

typedef struct eai_summary eai_summary;

/* Percentages are integers in tenths of a percent, rounded half-up
 * (556 = 55.6%). Thresholds default to "10000" and "2000" when NULL. */
EAI_API eai_status eai_summary_compute(const eai_distances* d, const eai_balances* b,
                                       const eai_transfers* t,
                                       const char* wallet_threshold_usd, const char* min_txn_usd,
                                       const eai_address_list* eoa_filter, eai_summary** out);
EAI_API uint64_t eai_summary_wallet_population(const eai_summary* s);
EAI_API uint64_t eai_summary_txn_population(const eai_summary* s);
EAI_API uint64_t eai_summary_pct_eai_tenths(const eai_summary* s);
EAI_API uint64_t eai_summary_pct_within_one_hop_tenths(const eai_summary* s);
EAI_API uint64_t eai_summary_pct_txn_eai_tenths(const eai_summary* s);
EAI_API eai_status eai_summary_render(const eai_summary* s, eai_render_format format,
                                      const char* const* input_paths, size_t input_count,
                                      const char* parameters_json, char** out);
EAI_API void eai_summary_free(eai_summary* s);

/* ------------------------------------------------------------------ */
/* Exploiter comparison                                                */

typedef struct eai_exploiters eai_exploiters;

EAI_API eai_status eai_exploiters_compute(const eai_distances* d,
                                          const eai_address_list* exploiters,
                                          eai_exploiters** out);
EAI_API uint32_t eai_exploiters_max_hops(const eai_exploiters* e);
EAI_API uint64_t eai_exploiters_found(const eai_exploiters* e);
/* Addresses absent from the graph; they count as Beyond in percentages. */
EAI_API uint64_t eai_exploiters_not_found(const eai_exploiters* e);
/* Share with distance >= 2 or Beyond, tenths of a percent. */
EAI_API uint64_t eai_exploiters_pct_non_eai_tenths(const eai_exploiters* e);
EAI_API uint64_t eai_exploiters_pct_beyond_tenths(const eai_exploiters* e);
/* Histogram over distances 0..max_hops then Beyond (max_hops + 2 buckets);
 * baseline != 0 selects the all-nodes comparison histogram. */
EAI_API eai_status eai_exploiters_histogram(const eai_exploiters* e, int baseline, uint64_t* buf,
                                            size_t capacity, size_t* written);
EAI_API eai_status eai_exploiters_render(const eai_exploiters* e, eai_render_format format,
                                         const char* const* input_paths, size_t input_count,
                                         const char* parameters_json, char** out);
EAI_API void eai_exploiters_free(eai_exploiters* e);

/* ------------------------------------------------------------------ */
/* Merkle membership registry                                          */

typedef struct eai_merkle eai_merkle;

/* Leaves are deduplicated and sorted ascending by byte value.
 * leaf = Keccak-256(0x00 || address); parent = Keccak-256(0x01 || lo || hi)
 * over the byte-wise sorted child pair; unpaired nodes carry up. */
EAI_API eai_status eai_merkle_build(const eai_address_list* addresses, eai_merkle** out);
EAI_API eai_status eai_merkle_root(const eai_merkle* m, char out[EAI_HEX32_BUF]);
EAI_API uint32_t eai_merkle_tree_depth(const eai_merkle* m);
EAI_API uint64_t eai_merkle_leaf_count(const eai_merkle* m);
EAI_API eai_status eai_merkle_leaf(const eai_merkle* m, uint64_t index,
                                   char out[EAI_ADDRESS_BUF]);
/* Proof JSON: {"address": "0x..", "siblings": ["0x.."], "root": "0x.."}. */
EAI_API eai_status eai_merkle_prove(const eai_merkle* m, const char* address, char** proof_json);
/* root_hex NULL verifies against the proof's embedded root. Malformed JSON
 * fails the call; a well-formed proof that does not bind sets *valid = 0. */
EAI_API eai_status eai_merkle_verify(const char* proof_json, const char* root_hex, int* valid);
/* Rebuild semantics: equals building from leaves + add - remove. */
EAI_API eai_status eai_merkle_update(const eai_merkle* m, const eai_address_list* add,
                                     const eai_address_list* remove, eai_merkle** out);
EAI_API void eai_merkle_free(eai_merkle* m);

/* ------------------------------------------------------------------ */
/* Signed attestations                                                 */

typedef struct eai_signer eai_signer;

typedef enum eai_attest_result {
    EAI_ATTEST_VALID = 0,
    EAI_ATTEST_EXPIRED = 1,
    EAI_ATTEST_BAD_SIGNATURE = 2
} eai_attest_result;

EAI_API eai_status eai_signer_generate(eai_signer** out);
EAI_API eai_status eai_signer_from_seed_hex(const char* seed_hex, eai_signer** out);
/* Key file: one line of 32-byte seed hex. Saved files are mode 0600. */
EAI_API eai_status eai_signer_load(const char* path, eai_signer** out);
EAI_API eai_status eai_signer_save(const eai_signer* s, const char* path);
EAI_API eai_status eai_signer_public_key_hex(const eai_signer* s, char out[EAI_HEX32_BUF]);
/* First 8 bytes of Keccak-256(public key), as 0x-prefixed hex. */
EAI_API eai_status eai_signer_fingerprint_hex(const eai_signer* s, char out[19]);
/* Ed25519 signature over Keccak-256("EAI-ATTEST-V1" || address || status
 * byte || expires_at(8,BE) || nonce(8,BE)); expires_at = now + ttl_seconds.
 * now < 0 uses the wall clock. Returns the attestation as JSON. */
EAI_API eai_status eai_attest_sign(const eai_signer* s, const char* address, int is_eai,
                                   uint64_t ttl_seconds, uint64_t nonce, int64_t now,
                                   char** attestation_json);
/* bad_signature dominates expired; valid requires now < expires_at. */
EAI_API eai_status eai_attest_verify(const char* public_key_hex, const char* attestation_json,
                                     int64_t now, eai_attest_result* result);
EAI_API void eai_signer_free(eai_signer* s);

/* ------------------------------------------------------------------ */
/* Ledger simulation                                                   */

typedef struct eai_ledger eai_ledger;

EAI_API eai_status eai_ledger_new(eai_ledger** out);
EAI_API eai_status eai_ledger_mint(eai_ledger* l, const char* to, const char* amount_usd);
/* Marking an exchange also sets its EAI flag; clearing leaves EAI set. */
EAI_API eai_status eai_ledger_set_exchange(eai_ledger* l, const char* address, int flag);
/* A transfer from an exchange-flagged sender marks the recipient EAI unless
 * suppress_flag is set. Fails without touching state on insufficient
 * balance. */
EAI_API eai_status eai_ledger_transfer(eai_ledger* l, const char* from, const char* to,
                                       const char* amount_usd, int suppress_flag);
EAI_API eai_status eai_ledger_is_eai(const eai_ledger* l, const char* address, int* out);
EAI_API eai_status eai_ledger_is_exchange(const eai_ledger* l, const char* address, int* out);
/* Balance as six-decimal USD; unknown addresses read as zero. */
EAI_API eai_status eai_ledger_balance(const eai_ledger* l, const char* address, char** out);
/* Script CSV rows: op,from,to,amount[,suppress_flag] with op one of
 * mint | transfer | set_exchange. mint and set_exchange leave `from` empty
 * and name their target in `to`; set_exchange carries 0/1 in `amount`.
 * Strict: the first bad row or failed op aborts with its line number. */
EAI_API eai_status eai_ledger_run_script(eai_ledger* l, const char* script_csv,
                                         uint64_t* ops_applied);
EAI_API eai_status eai_ledger_run_script_file(eai_ledger* l, const char* path,
                                              uint64_t* ops_applied);
EAI_API uint64_t eai_ledger_event_count(const eai_ledger* l);
EAI_API uint64_t eai_ledger_account_count(const eai_ledger* l);
/* JSON object keyed by address: {"balance", "is_eai", "is_exchange"}. */
EAI_API eai_status eai_ledger_state_json(const eai_ledger* l, char** out);
EAI_API void eai_ledger_free(eai_ledger* l);

/* ------------------------------------------------------------------ */
/* Registry cost model                                                 */

typedef struct eai_gas_params eai_gas_params;

EAI_API eai_status eai_gas_params_default(eai_gas_params** out);
EAI_API eai_status eai_gas_params_from_json(const char* json, eai_gas_params** out);
EAI_API eai_status eai_gas_params_load(const char* path, eai_gas_params** out);
EAI_API eai_status eai_gas_params_json(const eai_gas_params* p, char** out);
/* method: onchain | offchain | merkle. op: is_eai | transfer |
 * add_addresses. n: registry size (Merkle checks); k: addresses added. usd
 * is the gas cost at the configured gas price and ETH price, formatted to
 * cents. */
EAI_API eai_status eai_gas_estimate(const eai_gas_params* p, const char* method, const char* op,
                                    uint64_t n, uint64_t k, uint64_t* gas_out, char usd_out[32]);
/* Cost comparison across all methods at the calibration registry sizes. */
EAI_API eai_status eai_gas_table(const eai_gas_params* p, char** out);
/* Least-squares fit of check gas = base + per_hash * ceil(log2 n) from
 * (sizes[i], gas[i]) samples; needs two distinct depths. */
EAI_API eai_status eai_gas_fit_merkle(const uint64_t* sizes, const uint64_t* gas, size_t count,
                                      double* base_out, double* per_hash_out);
/* ceil(log2(n)) for n >= 2, 0 for n == 1. */
EAI_API eai_status eai_gas_merkle_depth(uint64_t n, uint32_t* out);
EAI_API void eai_gas_params_free(eai_gas_params* p);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EAI_H_ */
