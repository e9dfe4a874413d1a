// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "support/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eai::test {

Address tag_addr(uint8_t tag) {
    Address a{};
    a.bytes[19] = tag;
    return a;
}

Address index_addr(uint32_t index) {
    Address a{};
    a.bytes[16] = static_cast<uint8_t>(index >> 24);
    a.bytes[17] = static_cast<uint8_t>(index >> 16);
    a.bytes[18] = static_cast<uint8_t>(index >> 8);
    a.bytes[19] = static_cast<uint8_t>(index);
    return a;
}

TransferRecord make_record(uint64_t key, const Address& from, const Address& to,
                           const std::string& amount_usd, bool direct,
                           const std::string& token) {
    TransferRecord rec;
    rec.ordering_key = key;
    rec.from = from;
    rec.to = to;
    auto amount = Usd::try_parse(amount_usd);
    if (!amount) throw std::runtime_error("fixture amount: " + amount_usd);
    rec.amount = *amount;
    rec.token = token;
    rec.direct = direct;
    return rec;
}

std::vector<TransferRecord> chain_records() {
    std::vector<TransferRecord> records;
    uint64_t key = 1;
    auto edge = [&](const Address& from, const Address& to) {
        records.push_back(make_record(key++, from, to, "50"));
    };
    edge(node_e(), node_a());
    edge(node_a(), node_b());
    edge(node_b(), node_c());
    edge(node_c(), node_d());
    edge(node_d(), node_f());
    edge(node_f(), node_g());
    edge(node_x(), node_e());
    return records;
}

ChainFixture build_chain_fixture() {
    ChainFixture fx;
    auto records = chain_records();
    fx.graph = std::make_shared<const TransactionGraph>(TransactionGraph::build(records));
    fx.exchanges = AddressList(ListRole::kExchange, {node_e()});
    return fx;
}

std::filesystem::path data_dir() {
#ifdef EAI_TEST_DATA_DIR
    return EAI_TEST_DATA_DIR;
#else
    throw std::runtime_error("EAI_TEST_DATA_DIR not configured");
#endif
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

TempDir::TempDir() {
    std::string tmpl = (std::filesystem::temp_directory_path() / "eai_test_XXXXXX").string();
    if (mkdtemp(tmpl.data()) == nullptr) throw std::runtime_error("mkdtemp failed");
    path_ = tmpl;
}

TempDir::~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
}

std::filesystem::path TempDir::write(const std::string& name,
                                     std::string_view contents) const {
    std::filesystem::path p = path_ / name;
    std::ofstream out(p, std::ios::binary);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw std::runtime_error("cannot write " + p.string());
    return p;
}

} // namespace eai::test
