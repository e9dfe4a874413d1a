// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "core/graph.hpp"
#include "core/ingest.hpp"

namespace eai::test {

// Address whose last bytes spell the tag: tag_addr(0x45) ends in 'E'.
Address tag_addr(uint8_t tag);
// Address carrying a 32-bit index (for populations past 255 nodes).
Address index_addr(uint32_t index);

TransferRecord make_record(uint64_t key, const Address& from, const Address& to,
                           const std::string& amount_usd, bool direct = true,
                           const std::string& token = "USDT");

// The 8-node chain fixture: E->A->B->C->D->F->G plus X->E, all $50.
// Distances from {E} at cap 5: E=0 A=1 B=2 C=3 D=4 F=5; G and X Beyond.
std::vector<TransferRecord> chain_records();
inline Address node_e() { return tag_addr(0x45); }
inline Address node_a() { return tag_addr(0x41); }
inline Address node_b() { return tag_addr(0x42); }
inline Address node_c() { return tag_addr(0x43); }
inline Address node_d() { return tag_addr(0x44); }
inline Address node_f() { return tag_addr(0x46); }
inline Address node_g() { return tag_addr(0x47); }
inline Address node_x() { return tag_addr(0x58); }

// Graph + distances over chain_records() with E as the only exchange.
struct ChainFixture {
    std::shared_ptr<const TransactionGraph> graph;
    AddressList exchanges;
};
ChainFixture build_chain_fixture();

// Committed fixture directory (EAI_TEST_DATA_DIR) and file helpers.
std::filesystem::path data_dir();
std::string read_file(const std::filesystem::path& path);

// Self-deleting scratch directory under the system temp root.
class TempDir {
  public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path file(const std::string& name) const { return path_ / name; }
    std::filesystem::path write(const std::string& name, std::string_view contents) const;

  private:
    std::filesystem::path path_;
};

} // namespace eai::test
