// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "core/address.hpp"
#include "core/usd.hpp"

namespace eai {

// One value transfer between two addresses. `direct` marks wallet-to-wallet
// transfers made by calling the token contract itself, as opposed to flows
// routed through other contracts.
struct TransferRecord {
    uint64_t ordering_key = 0; // block number or row sequence
    Address from;
    Address to;
    Usd amount; // non-negative
    std::string token;
    bool direct = true;
};

enum class TransferFormat { kCsv, kJsonl };

struct ParseIssue {
    uint64_t line = 0;
    std::string message;
};

struct ParseResult {
    std::vector<TransferRecord> records;
    std::vector<ParseIssue> issues;
    uint64_t data_rows = 0; // rows seen, excluding header and blank lines
};

// Parses transfer records, preserving input order. In non-strict mode
// malformed rows are collected into `issues` and skipped; in strict mode the
// first malformed row throws Error(kMalformedRow) with its line number.
//
// CSV input must carry the exact header
//   ordering_key,from,to,amount_usd,token,direct
// JSONL input holds one object per line with the same field names;
// amount_usd may be a string (preferred, exact) or a JSON number.
ParseResult parse_transfers(std::istream& in, TransferFormat format, bool strict);

// One address per line; blank lines and lines starting with '#' are ignored.
// Addresses are canonicalized to lowercase and deduplicated. A non-hex line
// throws Error(kMalformedRow).
AddressList parse_address_list(std::istream& in, ListRole role);

} // namespace eai
