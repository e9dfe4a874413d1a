// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/ingest.hpp"

#include <charconv>
#include <istream>
#include <limits>

#include <json.hpp>

#include "core/error.hpp"

namespace eai {

namespace {

constexpr std::string_view kCsvHeader = "ordering_key,from,to,amount_usd,token,direct";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (true) {
        size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

std::optional<uint64_t> parse_u64(std::string_view s) {
    uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

std::optional<bool> parse_bool(std::string_view s) {
    if (s == "true" || s == "True" || s == "TRUE" || s == "1") return true;
    if (s == "false" || s == "False" || s == "FALSE" || s == "0") return false;
    return std::nullopt;
}

// Returns an error message, or empty string on success.
std::string parse_csv_row(std::string_view line, TransferRecord& rec) {
    auto fields = split_fields(line);
    if (fields.size() != 6) return "expected 6 fields, got " + std::to_string(fields.size());

    auto key = parse_u64(trim(fields[0]));
    if (!key) return "bad ordering_key '" + std::string(trim(fields[0])) + "'";
    auto from = Address::try_parse(trim(fields[1]));
    if (!from) return "bad from address '" + std::string(trim(fields[1])) + "'";
    auto to = Address::try_parse(trim(fields[2]));
    if (!to) return "bad to address '" + std::string(trim(fields[2])) + "'";
    auto amount = Usd::try_parse(trim(fields[3]));
    if (!amount) return "bad amount_usd '" + std::string(trim(fields[3])) + "'";
    auto direct = parse_bool(trim(fields[5]));
    if (!direct) return "bad direct flag '" + std::string(trim(fields[5])) + "'";

    rec.ordering_key = *key;
    rec.from = *from;
    rec.to = *to;
    rec.amount = *amount;
    rec.token = std::string(trim(fields[4]));
    rec.direct = *direct;
    return {};
}

std::string parse_jsonl_row(std::string_view line, TransferRecord& rec) {
    nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
    if (obj.is_discarded() || !obj.is_object()) return "not a JSON object";

    for (const char* field : {"ordering_key", "from", "to", "amount_usd", "token", "direct"})
        if (!obj.contains(field)) return std::string("missing field '") + field + "'";

    if (!obj["ordering_key"].is_number_unsigned()) return "bad ordering_key";
    rec.ordering_key = obj["ordering_key"].get<uint64_t>();

    auto from = obj["from"].is_string() ? Address::try_parse(obj["from"].get<std::string>()) : std::nullopt;
    if (!from) return "bad from address";
    rec.from = *from;
    auto to = obj["to"].is_string() ? Address::try_parse(obj["to"].get<std::string>()) : std::nullopt;
    if (!to) return "bad to address";
    rec.to = *to;

    const auto& amt = obj["amount_usd"];
    std::optional<Usd> amount;
    if (amt.is_string()) {
        amount = Usd::try_parse(amt.get<std::string>());
    } else if (amt.is_number_unsigned()) {
        uint64_t v = amt.get<uint64_t>();
        if (v <= static_cast<uint64_t>(std::numeric_limits<int64_t>::max() / Usd::kScale))
            amount = Usd::from_whole(static_cast<int64_t>(v));
    } else if (amt.is_number_float() && amt.get<double>() >= 0 &&
               amt.get<double>() < 9.0e12) {
        amount = Usd::from_micro(static_cast<int64_t>(amt.get<double>() * Usd::kScale + 0.5));
    }
    if (!amount) return "bad amount_usd";
    rec.amount = *amount;

    if (!obj["token"].is_string()) return "bad token";
    rec.token = obj["token"].get<std::string>();
    if (!obj["direct"].is_boolean()) return "bad direct flag";
    rec.direct = obj["direct"].get<bool>();
    return {};
}

} // namespace

ParseResult parse_transfers(std::istream& in, TransferFormat format, bool strict) {
    ParseResult result;
    std::string line;
    uint64_t line_no = 0;
    bool header_seen = false;

    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv = trim(line);
        if (sv.empty()) continue;

        if (format == TransferFormat::kCsv && !header_seen) {
            header_seen = true;
            if (sv != kCsvHeader)
                throw Error(ErrorCode::kMalformedRow,
                            "line 1: expected header '" + std::string(kCsvHeader) + "'");
            continue;
        }

        ++result.data_rows;
        TransferRecord rec;
        std::string err = format == TransferFormat::kCsv ? parse_csv_row(sv, rec)
                                                         : parse_jsonl_row(sv, rec);
        if (!err.empty()) {
            if (strict)
                throw Error(ErrorCode::kMalformedRow, "line " + std::to_string(line_no) + ": " + err);
            result.issues.push_back({line_no, err});
            continue;
        }
        result.records.push_back(std::move(rec));
    }
    return result;
}

AddressList parse_address_list(std::istream& in, ListRole role) {
    std::vector<Address> members;
    std::string line;
    uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv = trim(line);
        if (sv.empty() || sv.front() == '#') continue;
        auto addr = Address::try_parse(sv);
        if (!addr)
            throw Error(ErrorCode::kMalformedRow,
                        "line " + std::to_string(line_no) + ": bad address '" + std::string(sv) + "'");
        members.push_back(*addr);
    }
    return AddressList(role, std::move(members));
}

} // namespace eai
