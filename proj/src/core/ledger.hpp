// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/address.hpp"

namespace eai {

using u256 = boost::multiprecision::uint256_t;

// One 256-bit account word: bit 255 = EAI flag, bit 254 = exchange flag,
// bits 0..253 = balance in micro-USD. Flag and balance reads never interfere.
struct PackedAccount {
    static constexpr unsigned kEaiBit = 255;
    static constexpr unsigned kExchangeBit = 254;

    u256 word = 0;

    static u256 balance_mask() { return (u256(1) << kExchangeBit) - 1; }

    bool is_eai() const { return bit_test(word, kEaiBit); }
    bool is_exchange() const { return bit_test(word, kExchangeBit); }
    u256 balance() const { return word & balance_mask(); }

    void set_eai(bool v) { v ? bit_set(word, kEaiBit) : bit_unset(word, kEaiBit); }
    void set_exchange(bool v) { v ? bit_set(word, kExchangeBit) : bit_unset(word, kExchangeBit); }
    // Caller guarantees the value fits below bit 254.
    void set_balance(const u256& v) { word = (word & ~balance_mask()) | v; }
};

// Append-only record of every state change, in execution order.
struct LedgerEvent {
    enum class Kind { kMint, kTransfer, kSetExchange };

    Kind kind = Kind::kMint;
    Address from{};       // transfer only
    Address to{};         // mint/transfer recipient, or set_exchange target
    u256 amount = 0;      // micro-USD; flag value (0/1) for set_exchange
    bool suppress_flag = false; // transfer only: skip EAI propagation
};

// ERC-20-style single-writer ledger with dynamic EAI flagging: a transfer
// from an exchange-flagged sender marks the recipient EAI. Flags are sticky;
// the only clearing operation is set_exchange(addr, false) on bit 254.
class SimLedger {
  public:
    void mint(const Address& to, const u256& amount);        // Error(kOverflow)
    // Marking an address as an exchange also marks it EAI (distance-0 nodes
    // are EAIs); clearing exchange status leaves the EAI flag set.
    void set_exchange(const Address& addr, bool flag);
    // Error(kInsufficientBalance); state untouched on error.
    void transfer(const Address& from, const Address& to, const u256& amount,
                  bool suppress_flag = false);

    bool is_eai_flag(const Address& addr) const;     // unknown address reads as zero word
    bool is_exchange_flag(const Address& addr) const;
    u256 balance(const Address& addr) const;

    const std::vector<LedgerEvent>& events() const { return events_; }
    size_t account_count() const { return accounts_.size(); }

    // Per-address {balance, is_eai, is_exchange}, keyed by address, sorted.
    std::string state_json() const;

  private:
    const PackedAccount* find(const Address& addr) const;

    std::unordered_map<Address, PackedAccount, AddressHash> accounts_;
    std::vector<LedgerEvent> events_;
};

// Script rows: `op,from,to,amount[,suppress_flag]` with op in
// {mint, transfer, set_exchange}; mint/set_exchange leave `from` empty and
// name their target in `to`; set_exchange carries the flag (0/1) in `amount`.
struct ScriptOutcome {
    size_t ops_applied = 0;
};

// Strict replay: the first bad row or failed operation throws with its line
// number. Error(kMalformedRow, kOverflow, kInsufficientBalance).
ScriptOutcome run_ledger_script(SimLedger& ledger, std::string_view script_csv);

} // namespace eai
