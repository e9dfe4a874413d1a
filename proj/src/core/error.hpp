// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace eai {

enum class ErrorCode {
    kInvalidArgument,
    kMalformedRow,
    kIo,
    kCapacityExceeded,
    kOutOfRange,
    kNoSources,
    kUnknownAddress,
    kBucketOverlap,
    kEmptyPopulation,
    kEmptySet,
    kNotMember,
    kAlreadyMember,
    kOverflow,
    kInsufficientBalance,
    kDegenerateFit,
    kUnsupportedCombination,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

} // namespace eai
