// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace eai {

// Fixed-point USD with six fractional digits (micro-USD), the native precision
// of USDC amounts. All threshold comparisons in the toolkit are exact integer
// comparisons on this type.
class Usd {
  public:
    static constexpr int64_t kScale = 1'000'000;

    constexpr Usd() = default;

    static constexpr Usd from_micro(int64_t micro) {
        Usd v;
        v.micro_ = micro;
        return v;
    }

    static constexpr Usd from_whole(int64_t dollars) {
        return from_micro(dollars * kScale);
    }

    // Parses an unsigned decimal with at most six fractional digits, e.g.
    // "10", "9.999999". No sign, no exponent, no grouping.
    static std::optional<Usd> try_parse(std::string_view text);

    constexpr int64_t micro() const { return micro_; }

    // Always renders six fractional digits: 50 -> "50.000000".
    std::string to_string() const;

    friend constexpr auto operator<=>(Usd, Usd) = default;
    friend constexpr Usd operator+(Usd a, Usd b) { return from_micro(a.micro_ + b.micro_); }
    friend constexpr Usd operator-(Usd a, Usd b) { return from_micro(a.micro_ - b.micro_); }

  private:
    int64_t micro_ = 0;
};

// Renders a non-negative micro-USD quantity with six fractional digits.
std::string format_micro_usd(uint64_t micro);

} // namespace eai
