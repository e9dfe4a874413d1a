// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/attest.hpp"

#include <sodium.h>

#include <algorithm>
#include <nlohmann/json.hpp>

#include "core/error.hpp"
#include "core/hex.hpp"
#include "core/io_util.hpp"

namespace eai {

namespace {

void ensure_sodium() {
    static const int rc = sodium_init(); // idempotent; negative only on failure
    if (rc < 0) throw Error(ErrorCode::kIo, "libsodium initialization failed");
}

void put_be64(uint8_t* out, uint64_t v) {
    for (int i = 7; i >= 0; --i) {
        out[i] = static_cast<uint8_t>(v & 0xff);
        v >>= 8;
    }
}

uint64_t parse_u64_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) throw Error(ErrorCode::kMalformedRow, std::string("attestation JSON: missing ") + key);
    const auto& v = j[key];
    if (v.is_number_unsigned()) return v.get<uint64_t>();
    if (v.is_string()) {
        // Hex form covers the full 64-bit range losslessly.
        const std::string s = v.get<std::string>();
        auto bytes = from_hex(s);
        if (!bytes || bytes->empty() || bytes->size() > 8)
            throw Error(ErrorCode::kMalformedRow, std::string("attestation JSON: bad ") + key);
        uint64_t out = 0;
        for (uint8_t b : *bytes) out = (out << 8) | b;
        return out;
    }
    throw Error(ErrorCode::kMalformedRow, std::string("attestation JSON: bad ") + key);
}

} // namespace

Digest attestation_digest(const Address& address, bool is_eai, uint64_t expires_at,
                          uint64_t nonce) {
    static constexpr char kTag[] = "EAI-ATTEST-V1";
    Keccak256 hasher;
    hasher.update(reinterpret_cast<const uint8_t*>(kTag), sizeof kTag - 1);
    hasher.update(address.bytes.data(), address.bytes.size());
    uint8_t status = is_eai ? 0x01 : 0x00;
    hasher.update(&status, 1);
    uint8_t be[8];
    put_be64(be, expires_at);
    hasher.update(be, 8);
    put_be64(be, nonce);
    hasher.update(be, 8);
    return hasher.finish();
}

std::string Attestation::to_json() const {
    nlohmann::ordered_json j;
    j["scheme"] = scheme;
    j["address"] = address.to_string();
    j["is_eai"] = is_eai;
    j["expires_at"] = expires_at;
    // Hex keeps the full unsigned range out of JSON number territory.
    uint8_t nonce_be[8];
    put_be64(nonce_be, nonce);
    j["nonce"] = "0x" + to_hex(std::span<const uint8_t>(nonce_be, 8));
    j["signature"] = "0x" + to_hex(std::span<const uint8_t>(signature.data(), signature.size()));
    return j.dump(2) + "\n";
}

Attestation Attestation::from_json(std::string_view text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object())
        throw Error(ErrorCode::kMalformedRow, "attestation JSON: not an object");
    if (!j.contains("address") || !j["address"].is_string() || !j.contains("is_eai") ||
        !j["is_eai"].is_boolean() || !j.contains("signature") || !j["signature"].is_string())
        throw Error(ErrorCode::kMalformedRow, "attestation JSON: missing fields");

    Attestation att;
    if (j.contains("scheme")) {
        if (!j["scheme"].is_string())
            throw Error(ErrorCode::kMalformedRow, "attestation JSON: bad scheme");
        att.scheme = j["scheme"].get<std::string>();
    }
    auto addr = Address::try_parse(j["address"].get<std::string>());
    if (!addr) throw Error(ErrorCode::kMalformedRow, "attestation JSON: bad address");
    att.address = *addr;
    att.is_eai = j["is_eai"].get<bool>();
    att.expires_at = parse_u64_field(j, "expires_at");
    att.nonce = parse_u64_field(j, "nonce");
    auto sig = from_hex(j["signature"].get<std::string>());
    if (!sig || sig->size() != att.signature.size())
        throw Error(ErrorCode::kMalformedRow, "attestation JSON: signature must be 64 bytes");
    std::copy(sig->begin(), sig->end(), att.signature.begin());
    return att;
}

Signer Signer::generate() {
    ensure_sodium();
    Seed seed;
    randombytes_buf(seed.data(), seed.size());
    return from_seed(seed);
}

Signer Signer::from_seed(const Seed& seed) {
    ensure_sodium();
    Signer s;
    s.seed_ = seed;
    crypto_sign_ed25519_seed_keypair(s.public_key_.data(), s.secret_key_.data(), seed.data());
    return s;
}

Signer Signer::load_key_file(const std::string& path) {
    std::string text = slurp_file(path);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    auto bytes = from_hex(text);
    if (!bytes || bytes->size() != 32)
        throw Error(ErrorCode::kMalformedRow, "key file must hold a 32-byte seed in hex: " + path);
    Seed seed;
    std::copy(bytes->begin(), bytes->end(), seed.begin());
    return from_seed(seed);
}

void Signer::save_key_file(const std::string& path) const {
    write_file(path, to_hex(std::span<const uint8_t>(seed_.data(), seed_.size())) + "\n");
    restrict_file_mode(path);
}

std::array<uint8_t, 8> Signer::fingerprint() const {
    Digest d = keccak256(std::span<const uint8_t>(public_key_.data(), public_key_.size()));
    std::array<uint8_t, 8> fp;
    std::copy(d.begin(), d.begin() + 8, fp.begin());
    return fp;
}

Attestation Signer::sign(const Address& address, bool is_eai, uint64_t ttl_seconds,
                         uint64_t nonce, uint64_t now) const {
    if (ttl_seconds == 0) throw Error(ErrorCode::kInvalidArgument, "attestation ttl must be positive");
    Attestation att;
    att.address = address;
    att.is_eai = is_eai;
    att.expires_at = now + ttl_seconds;
    att.nonce = nonce;
    Digest digest = attestation_digest(address, is_eai, att.expires_at, nonce);
    crypto_sign_ed25519_detached(att.signature.data(), nullptr, digest.data(), digest.size(),
                                 secret_key_.data());
    return att;
}

const char* attestation_status_name(AttestationStatus status) {
    switch (status) {
        case AttestationStatus::kValid: return "valid";
        case AttestationStatus::kExpired: return "expired";
        case AttestationStatus::kBadSignature: return "bad_signature";
    }
    return "unknown";
}

AttestationStatus verify_attestation(const Signer::PublicKey& public_key, const Attestation& att,
                                     uint64_t now) {
    ensure_sodium();
    if (att.scheme != "ed25519") return AttestationStatus::kBadSignature;
    Digest digest = attestation_digest(att.address, att.is_eai, att.expires_at, att.nonce);
    if (crypto_sign_ed25519_verify_detached(att.signature.data(), digest.data(), digest.size(),
                                            public_key.data()) != 0)
        return AttestationStatus::kBadSignature;
    if (now >= att.expires_at) return AttestationStatus::kExpired;
    return AttestationStatus::kValid;
}

} // namespace eai
