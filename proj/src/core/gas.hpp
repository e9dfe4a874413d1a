// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>

namespace eai {

enum class RegistryMethod { kOnchain, kOffchain, kMerkle };
enum class GasOp { kIsEai, kTransfer, kAddAddresses };

// Error(kInvalidArgument) on unknown names; used by the CLI and C API.
RegistryMethod parse_registry_method(std::string_view name);
GasOp parse_gas_op(std::string_view name);
const char* registry_method_name(RegistryMethod method);
const char* gas_op_name(GasOp op);

// Parametric per-operation cost model. The Merkle is_eai cost is linear in
// proof depth; base/per-hash come from a least-squares fit over the three
// calibration registry sizes (500 / 30,000 / 2,250,000) and ship as
// defaults. Transfers carry two is_eai checks (sender and receiver), so each
// method exposes its own base transfer cost.
struct CostParams {
    uint64_t onchain_check_gas = 612;
    uint64_t offchain_check_gas = 6'757;
    double merkle_check_base_gas = 0;     // fitted; see defaults()
    double merkle_check_per_hash_gas = 0; // fitted; see defaults()
    uint64_t base_transfer_gas_onchain = 54'809;
    uint64_t base_transfer_gas_offchain = 51'598;
    uint64_t base_transfer_gas_merkle = 62'959;
    uint64_t registry_add_per_address_gas = 0; // derived from USD at load; see defaults()
    uint64_t merkle_update_gas = 26'785;
    double eth_price_usd = 2'400.0;
    double gas_price_gwei = 20.0;

    static CostParams defaults();
    static CostParams from_json(std::string_view text); // Error(kMalformedRow)
    std::string to_json() const;
};

struct CostEstimate {
    uint64_t gas = 0;
    double usd = 0; // gas × gas_price × eth_price, display-rounded to cents
};

// ceil(log2(n)) for n >= 2, 0 for n == 1. Error(kInvalidArgument) for n == 0.
uint32_t merkle_depth(uint64_t n);

// is_eai: per-method check cost (merkle = base + per_hash × depth(n)).
// transfer: method base + 2 × is_eai.
// add_addresses(k): onchain k × per-address, merkle flat update, offchain 0.
// Error(kUnsupportedCombination) when k == 0 for add_addresses.
CostEstimate estimate(RegistryMethod method, GasOp op, uint64_t n, uint64_t k,
                      const CostParams& params);

// Least-squares fit of gas ≈ base + per_hash × depth(n) over (n, gas)
// samples. Error(kDegenerateFit) without two distinct depths.
std::pair<double, double> fit_merkle_check_params(
    std::span<const std::pair<uint64_t, uint64_t>> samples);

// Cost comparison across all three methods at the calibration sizes.
std::string cost_table_text(const CostParams& params);

std::string format_usd_cents(double usd);

} // namespace eai
