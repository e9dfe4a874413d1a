// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "core/address.hpp"
#include "core/keccak.hpp"

namespace eai {

// Signed, expiring statement that an address holds a given EAI status.
// The scheme tag travels with the serialized form so other curves can be
// added without a format change; only ed25519 is implemented.
struct Attestation {
    Address address;
    bool is_eai = false;
    uint64_t expires_at = 0; // unix seconds; valid strictly before this instant
    uint64_t nonce = 0;
    std::array<uint8_t, 64> signature{};
    std::string scheme = "ed25519";

    std::string to_json() const;
    static Attestation from_json(std::string_view text); // Error(kMalformedRow)
};

// Keccak-256("EAI-ATTEST-V1" ‖ address ‖ status byte ‖ expires_at BE8 ‖ nonce BE8).
Digest attestation_digest(const Address& address, bool is_eai, uint64_t expires_at,
                          uint64_t nonce);

class Signer {
  public:
    using Seed = std::array<uint8_t, 32>;
    using PublicKey = std::array<uint8_t, 32>;

    static Signer generate();
    static Signer from_seed(const Seed& seed);
    // Key file form: 32-byte seed hex, one line. Error(kIo), Error(kMalformedRow).
    static Signer load_key_file(const std::string& path);
    void save_key_file(const std::string& path) const; // written mode 0600

    const Seed& seed() const { return seed_; }
    const PublicKey& public_key() const { return public_key_; }
    // First 8 bytes of Keccak-256(public key).
    std::array<uint8_t, 8> fingerprint() const;

    // expires_at = now + ttl_seconds. Error(kInvalidArgument) when ttl is 0.
    Attestation sign(const Address& address, bool is_eai, uint64_t ttl_seconds, uint64_t nonce,
                     uint64_t now) const;

  private:
    Signer() = default;

    Seed seed_{};
    PublicKey public_key_{};
    std::array<uint8_t, 64> secret_key_{}; // libsodium expanded form
};

enum class AttestationStatus { kValid, kExpired, kBadSignature };

const char* attestation_status_name(AttestationStatus status);

// bad_signature dominates expired; valid iff the signature checks AND now < expires_at.
AttestationStatus verify_attestation(const Signer::PublicKey& public_key, const Attestation& att,
                                     uint64_t now);

} // namespace eai
