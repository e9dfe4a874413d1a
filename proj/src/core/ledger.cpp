// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/ledger.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>

#include "core/error.hpp"
#include "core/usd.hpp"

namespace eai {

namespace {

std::string format_micro_u256(const u256& micro) {
    u256 whole = micro / Usd::kScale;
    u256 frac = micro % Usd::kScale;
    std::string f = frac.str();
    return whole.str() + "." + std::string(6 - f.size(), '0') + f;
}

} // namespace

void SimLedger::mint(const Address& to, const u256& amount) {
    const u256 limit = u256(1) << PackedAccount::kExchangeBit;
    const PackedAccount* existing = find(to);
    u256 prior = existing ? existing->balance() : u256(0);
    if (amount >= limit || prior + amount >= limit)
        throw Error(ErrorCode::kOverflow, "mint would spill into the flag bits");
    accounts_[to].set_balance(prior + amount);
    events_.push_back({LedgerEvent::Kind::kMint, Address{}, to, amount, false});
}

void SimLedger::set_exchange(const Address& addr, bool flag) {
    PackedAccount& acct = accounts_[addr];
    acct.set_exchange(flag);
    if (flag) acct.set_eai(true); // exchanges are distance-0 EAIs
    events_.push_back({LedgerEvent::Kind::kSetExchange, Address{}, addr, u256(flag ? 1 : 0), false});
}

void SimLedger::transfer(const Address& from, const Address& to, const u256& amount,
                         bool suppress_flag) {
    const PackedAccount* sender = find(from);
    u256 sender_balance = sender ? sender->balance() : u256(0);
    if (sender_balance < amount)
        throw Error(ErrorCode::kInsufficientBalance,
                    "transfer exceeds balance of " + from.to_string());
    const PackedAccount* recv = find(to);
    u256 receiver_balance = recv ? recv->balance() : u256(0);
    u256 receiver_next = from == to ? receiver_balance : receiver_balance + amount;
    if (receiver_next >= (u256(1) << PackedAccount::kExchangeBit))
        throw Error(ErrorCode::kOverflow, "transfer would spill into the flag bits");
    bool sender_is_exchange = sender && sender->is_exchange();
    accounts_[from].set_balance(sender_balance - amount);
    PackedAccount& receiver = accounts_[to];
    receiver.set_balance(receiver_next);
    if (sender_is_exchange && !suppress_flag) receiver.set_eai(true);
    events_.push_back({LedgerEvent::Kind::kTransfer, from, to, amount, suppress_flag});
}

const PackedAccount* SimLedger::find(const Address& addr) const {
    auto it = accounts_.find(addr);
    return it == accounts_.end() ? nullptr : &it->second;
}

bool SimLedger::is_eai_flag(const Address& addr) const {
    const PackedAccount* a = find(addr);
    return a && a->is_eai();
}

bool SimLedger::is_exchange_flag(const Address& addr) const {
    const PackedAccount* a = find(addr);
    return a && a->is_exchange();
}

u256 SimLedger::balance(const Address& addr) const {
    const PackedAccount* a = find(addr);
    return a ? a->balance() : u256(0);
}

std::string SimLedger::state_json() const {
    std::vector<const Address*> order;
    order.reserve(accounts_.size());
    for (const auto& [addr, _] : accounts_) order.push_back(&addr);
    std::sort(order.begin(), order.end(), [](const Address* a, const Address* b) { return *a < *b; });

    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const Address* addr : order) {
        const PackedAccount& acct = accounts_.at(*addr);
        nlohmann::ordered_json entry;
        entry["balance"] = format_micro_u256(acct.balance());
        entry["is_eai"] = acct.is_eai();
        entry["is_exchange"] = acct.is_exchange();
        j[addr->to_string()] = std::move(entry);
    }
    return j.dump(2) + "\n";
}

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else {
            field += c;
        }
    }
    fields.push_back(field);
    return fields;
}

[[noreturn]] void bad_row(size_t line_no, const std::string& what) {
    throw Error(ErrorCode::kMalformedRow, "script line " + std::to_string(line_no) + ": " + what);
}

Address parse_addr(const std::string& text, size_t line_no, const char* field) {
    auto a = Address::try_parse(text);
    if (!a) bad_row(line_no, std::string("bad ") + field + " address '" + text + "'");
    return *a;
}

bool parse_flag(const std::string& text, size_t line_no, const char* field) {
    if (text == "1" || text == "true") return true;
    if (text == "0" || text == "false") return false;
    bad_row(line_no, std::string("bad ") + field + " '" + text + "' (want 0/1/true/false)");
}

} // namespace

ScriptOutcome run_ledger_script(SimLedger& ledger, std::string_view script_csv) {
    std::istringstream in{std::string(script_csv)};
    std::string line;
    size_t line_no = 0;
    ScriptOutcome outcome;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line_no == 1 &&
            (line == "op,from,to,amount" || line == "op,from,to,amount,suppress_flag"))
            continue; // optional header

        std::vector<std::string> f = split_csv_row(line);
        if (f.size() != 4 && f.size() != 5) bad_row(line_no, "expected 4 or 5 fields");
        const std::string& op = f[0];
        try {
            if (op == "mint") {
                if (!f[1].empty()) bad_row(line_no, "mint takes no `from`");
                auto amount = Usd::try_parse(f[3]);
                if (!amount) bad_row(line_no, "bad amount '" + f[3] + "'");
                ledger.mint(parse_addr(f[2], line_no, "to"), u256(amount->micro()));
            } else if (op == "transfer") {
                auto amount = Usd::try_parse(f[3]);
                if (!amount) bad_row(line_no, "bad amount '" + f[3] + "'");
                bool suppress = f.size() == 5 && !f[4].empty() &&
                                parse_flag(f[4], line_no, "suppress_flag");
                ledger.transfer(parse_addr(f[1], line_no, "from"),
                                parse_addr(f[2], line_no, "to"), u256(amount->micro()), suppress);
            } else if (op == "set_exchange") {
                if (!f[1].empty()) bad_row(line_no, "set_exchange takes no `from`");
                ledger.set_exchange(parse_addr(f[2], line_no, "to"),
                                    parse_flag(f[3], line_no, "flag"));
            } else {
                bad_row(line_no, "unknown op '" + op + "'");
            }
        } catch (const Error& e) {
            if (e.code() == ErrorCode::kMalformedRow) throw;
            throw Error(e.code(), "script line " + std::to_string(line_no) + ": " + e.what());
        }
        ++outcome.ops_applied;
    }
    return outcome;
}

} // namespace eai
