// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/gas.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <sstream>

#include "core/error.hpp"

namespace eai {

namespace {

// Measured Merkle is_eai costs used to calibrate the linear-in-depth model.
constexpr std::array<std::pair<uint64_t, uint64_t>, 3> kMerkleCalibration{{
    {500, 6'283},
    {30'000, 8'214},
    {2'250'000, 10'135},
}};

constexpr double kOnchainAddUsd = 2.30; // published per-address registry cost

double gas_to_usd(double gas, const CostParams& p) {
    return gas * p.gas_price_gwei * 1e-9 * p.eth_price_usd;
}

} // namespace

RegistryMethod parse_registry_method(std::string_view name) {
    if (name == "onchain") return RegistryMethod::kOnchain;
    if (name == "offchain") return RegistryMethod::kOffchain;
    if (name == "merkle") return RegistryMethod::kMerkle;
    throw Error(ErrorCode::kInvalidArgument, "unknown method '" + std::string(name) +
                                                 "' (want onchain|offchain|merkle)");
}

GasOp parse_gas_op(std::string_view name) {
    if (name == "is_eai") return GasOp::kIsEai;
    if (name == "transfer") return GasOp::kTransfer;
    if (name == "add_addresses") return GasOp::kAddAddresses;
    throw Error(ErrorCode::kInvalidArgument,
                "unknown op '" + std::string(name) + "' (want is_eai|transfer|add_addresses)");
}

const char* registry_method_name(RegistryMethod method) {
    switch (method) {
        case RegistryMethod::kOnchain: return "onchain";
        case RegistryMethod::kOffchain: return "offchain";
        case RegistryMethod::kMerkle: return "merkle";
    }
    return "unknown";
}

const char* gas_op_name(GasOp op) {
    switch (op) {
        case GasOp::kIsEai: return "is_eai";
        case GasOp::kTransfer: return "transfer";
        case GasOp::kAddAddresses: return "add_addresses";
    }
    return "unknown";
}

CostParams CostParams::defaults() {
    CostParams p;
    auto [base, per_hash] = fit_merkle_check_params(kMerkleCalibration);
    p.merkle_check_base_gas = base;
    p.merkle_check_per_hash_gas = per_hash;
    p.registry_add_per_address_gas = static_cast<uint64_t>(
        std::llround(kOnchainAddUsd / (p.gas_price_gwei * 1e-9 * p.eth_price_usd)));
    return p;
}

CostParams CostParams::from_json(std::string_view text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object())
        throw Error(ErrorCode::kMalformedRow, "params JSON: not an object");
    CostParams p = defaults();
    auto read_u64 = [&](const char* key, uint64_t& out) {
        if (!j.contains(key)) return;
        if (!j[key].is_number_unsigned())
            throw Error(ErrorCode::kMalformedRow, std::string("params JSON: bad ") + key);
        out = j[key].get<uint64_t>();
    };
    auto read_double = [&](const char* key, double& out) {
        if (!j.contains(key)) return;
        if (!j[key].is_number())
            throw Error(ErrorCode::kMalformedRow, std::string("params JSON: bad ") + key);
        double v = j[key].get<double>();
        if (v < 0) throw Error(ErrorCode::kMalformedRow, std::string("params JSON: negative ") + key);
        out = v;
    };
    read_u64("onchain_check_gas", p.onchain_check_gas);
    read_u64("offchain_check_gas", p.offchain_check_gas);
    read_double("merkle_check_base_gas", p.merkle_check_base_gas);
    read_double("merkle_check_per_hash_gas", p.merkle_check_per_hash_gas);
    read_u64("base_transfer_gas_onchain", p.base_transfer_gas_onchain);
    read_u64("base_transfer_gas_offchain", p.base_transfer_gas_offchain);
    read_u64("base_transfer_gas_merkle", p.base_transfer_gas_merkle);
    read_u64("registry_add_per_address_gas", p.registry_add_per_address_gas);
    read_u64("merkle_update_gas", p.merkle_update_gas);
    read_double("eth_price_usd", p.eth_price_usd);
    read_double("gas_price_gwei", p.gas_price_gwei);
    return p;
}

std::string CostParams::to_json() const {
    nlohmann::ordered_json j;
    j["onchain_check_gas"] = onchain_check_gas;
    j["offchain_check_gas"] = offchain_check_gas;
    j["merkle_check_base_gas"] = merkle_check_base_gas;
    j["merkle_check_per_hash_gas"] = merkle_check_per_hash_gas;
    j["base_transfer_gas_onchain"] = base_transfer_gas_onchain;
    j["base_transfer_gas_offchain"] = base_transfer_gas_offchain;
    j["base_transfer_gas_merkle"] = base_transfer_gas_merkle;
    j["registry_add_per_address_gas"] = registry_add_per_address_gas;
    j["merkle_update_gas"] = merkle_update_gas;
    j["eth_price_usd"] = eth_price_usd;
    j["gas_price_gwei"] = gas_price_gwei;
    return j.dump(2) + "\n";
}

uint32_t merkle_depth(uint64_t n) {
    if (n == 0) throw Error(ErrorCode::kInvalidArgument, "registry size must be positive");
    uint32_t depth = 0;
    uint64_t capacity = 1;
    while (capacity < n) {
        capacity *= 2;
        ++depth;
    }
    return depth;
}

namespace {

uint64_t check_gas(RegistryMethod method, uint64_t n, const CostParams& p) {
    switch (method) {
        case RegistryMethod::kOnchain: return p.onchain_check_gas;
        case RegistryMethod::kOffchain: return p.offchain_check_gas;
        case RegistryMethod::kMerkle:
            return static_cast<uint64_t>(std::llround(
                p.merkle_check_base_gas + p.merkle_check_per_hash_gas * merkle_depth(n)));
    }
    throw Error(ErrorCode::kUnsupportedCombination, "unknown method");
}

uint64_t base_transfer_gas(RegistryMethod method, const CostParams& p) {
    switch (method) {
        case RegistryMethod::kOnchain: return p.base_transfer_gas_onchain;
        case RegistryMethod::kOffchain: return p.base_transfer_gas_offchain;
        case RegistryMethod::kMerkle: return p.base_transfer_gas_merkle;
    }
    throw Error(ErrorCode::kUnsupportedCombination, "unknown method");
}

} // namespace

CostEstimate estimate(RegistryMethod method, GasOp op, uint64_t n, uint64_t k,
                      const CostParams& params) {
    uint64_t gas = 0;
    switch (op) {
        case GasOp::kIsEai:
            gas = check_gas(method, n, params);
            break;
        case GasOp::kTransfer:
            gas = base_transfer_gas(method, params) + 2 * check_gas(method, n, params);
            break;
        case GasOp::kAddAddresses:
            if (k == 0)
                throw Error(ErrorCode::kUnsupportedCombination,
                            "add_addresses needs a positive address count");
            switch (method) {
                case RegistryMethod::kOnchain:
                    if (params.registry_add_per_address_gas != 0 &&
                        k > UINT64_MAX / params.registry_add_per_address_gas)
                        throw Error(ErrorCode::kOverflow, "add_addresses gas overflows");
                    gas = k * params.registry_add_per_address_gas;
                    break;
                case RegistryMethod::kOffchain: gas = 0; break; // no onchain cost
                case RegistryMethod::kMerkle: gas = params.merkle_update_gas; break;
            }
            break;
    }
    return {gas, gas_to_usd(static_cast<double>(gas), params)};
}

std::pair<double, double> fit_merkle_check_params(
    std::span<const std::pair<uint64_t, uint64_t>> samples) {
    if (samples.size() < 2)
        throw Error(ErrorCode::kDegenerateFit, "fit needs at least two samples");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [n, gas] : samples) {
        double x = merkle_depth(n);
        double y = static_cast<double>(gas);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double count = static_cast<double>(samples.size());
    double denom = count * sxx - sx * sx;
    if (denom == 0) throw Error(ErrorCode::kDegenerateFit, "fit needs two distinct depths");
    double per_hash = (count * sxy - sx * sy) / denom;
    double base = (sy - per_hash * sx) / count;
    return {base, per_hash};
}

std::string format_usd_cents(double usd) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", usd);
    return buf;
}

std::string cost_table_text(const CostParams& params) {
    std::ostringstream out;
    auto row = [&](const std::string& size, RegistryMethod m, uint64_t n) {
        CostEstimate check = estimate(m, GasOp::kIsEai, n, 0, params);
        CostEstimate xfer = estimate(m, GasOp::kTransfer, n, 0, params);
        char line[160];
        std::snprintf(line, sizeof line, "%-14s %-9s %10llu %9s %13llu %11s\n", size.c_str(),
                      registry_method_name(m), static_cast<unsigned long long>(check.gas),
                      ("$" + format_usd_cents(check.usd)).c_str(),
                      static_cast<unsigned long long>(xfer.gas),
                      ("$" + format_usd_cents(xfer.usd)).c_str());
        out << line;
    };
    out << "registry size  method     isEAI gas   isEAI $  transfer gas  transfer $\n";
    row("-", RegistryMethod::kOnchain, 1);
    row("-", RegistryMethod::kOffchain, 1);
    for (const auto& [n, _] : kMerkleCalibration) row(std::to_string(n), RegistryMethod::kMerkle, n);
    return out.str();
}

} // namespace eai
