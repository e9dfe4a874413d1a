// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/usd.hpp"

#include <charconv>
#include <limits>

namespace eai {

std::optional<Usd> Usd::try_parse(std::string_view text) {
    if (text.empty()) return std::nullopt;

    std::string_view whole = text;
    std::string_view frac;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        whole = text.substr(0, dot);
        frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 6) return std::nullopt;
    }
    if (whole.empty()) return std::nullopt;

    uint64_t dollars = 0;
    auto [ptr, ec] = std::from_chars(whole.data(), whole.data() + whole.size(), dollars);
    if (ec != std::errc{} || ptr != whole.data() + whole.size()) return std::nullopt;

    uint64_t micros = 0;
    for (char c : frac) {
        if (c < '0' || c > '9') return std::nullopt;
        micros = micros * 10 + static_cast<uint64_t>(c - '0');
    }
    for (size_t i = frac.size(); i < 6; ++i) micros *= 10;

    constexpr uint64_t kMaxMicro = static_cast<uint64_t>(std::numeric_limits<int64_t>::max());
    if (dollars > kMaxMicro / kScale) return std::nullopt;
    uint64_t total = dollars * kScale;
    if (total > kMaxMicro - micros) return std::nullopt;
    return from_micro(static_cast<int64_t>(total + micros));
}

std::string Usd::to_string() const {
    int64_t m = micro_;
    std::string sign;
    uint64_t abs;
    if (m < 0) {
        sign = "-";
        abs = static_cast<uint64_t>(-(m + 1)) + 1;
    } else {
        abs = static_cast<uint64_t>(m);
    }
    return sign + format_micro_usd(abs);
}

std::string format_micro_usd(uint64_t micro) {
    uint64_t dollars = micro / Usd::kScale;
    uint64_t frac = micro % Usd::kScale;
    char buf[32];
    int n = std::snprintf(buf, sizeof(buf), "%llu.%06llu",
                          static_cast<unsigned long long>(dollars),
                          static_cast<unsigned long long>(frac));
    return std::string(buf, static_cast<size_t>(n));
}

} // namespace eai
