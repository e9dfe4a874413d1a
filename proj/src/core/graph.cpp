// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/graph.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <limits>

#include "core/error.hpp"

namespace eai {

namespace {

constexpr char kMagic[5] = {'E', 'A', 'I', 'G', '1'};

struct RawEdge {
    uint64_t from;
    uint64_t to;
    uint64_t amount_micro;
};

template <class T>
void write_pod(std::ostream& out, const T& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(v)); // little-endian host
}

template <class T>
void read_pod(std::istream& in, T& v) {
    in.read(reinterpret_cast<char*>(&v), sizeof(v));
}

} // namespace

TransactionGraph TransactionGraph::build(std::span<const TransferRecord> records,
                                         const GraphBuildOptions& options) {
    if (options.id_width != 4 && options.id_width != 8)
        throw Error(ErrorCode::kInvalidArgument, "id_width must be 4 or 8");

    TransactionGraph g;
    g.id_width_ = options.id_width;
    const uint64_t id_limit = options.id_width == 4
                                  ? std::numeric_limits<uint32_t>::max()
                                  : std::numeric_limits<uint64_t>::max();

    auto intern = [&](const Address& a) -> uint64_t {
        auto [it, inserted] = g.index_.try_emplace(a, g.addresses_.size());
        if (inserted) {
            if (g.addresses_.size() >= id_limit)
                throw Error(ErrorCode::kCapacityExceeded,
                            "node count exceeds configured id width");
            g.addresses_.push_back(a);
        }
        return it->second;
    };

    std::vector<RawEdge> raw;
    raw.reserve(records.size());
    for (const TransferRecord& rec : records) {
        if (options.direct_only && !rec.direct) continue;
        if (options.token && rec.token != *options.token) continue;
        uint64_t u = intern(rec.from);
        uint64_t v = intern(rec.to);
        if (u == v) continue; // self-transfers never form edges
        raw.push_back({u, v, static_cast<uint64_t>(rec.amount.micro())});
    }

    std::sort(raw.begin(), raw.end(), [](const RawEdge& a, const RawEdge& b) {
        return a.from != b.from ? a.from < b.from : a.to < b.to;
    });

    // Aggregate per ordered pair, then apply the threshold to the sums.
    // Groups are compacted in place: the write cursor never overtakes the
    // read cursor, so no second edge buffer is needed.
    const uint64_t n = g.addresses_.size();
    size_t kept = 0;
    for (size_t i = 0; i < raw.size();) {
        uint64_t total = 0;
        size_t j = i;
        for (; j < raw.size() && raw[j].from == raw[i].from && raw[j].to == raw[i].to; ++j) {
            if (total > std::numeric_limits<uint64_t>::max() - raw[j].amount_micro)
                throw Error(ErrorCode::kCapacityExceeded, "edge total overflows 64 bits");
            total += raw[j].amount_micro;
        }
        if (total >= options.threshold_micro) raw[kept++] = {raw[i].from, raw[i].to, total};
        i = j;
    }
    raw.resize(kept);
    const std::vector<RawEdge>& edges = raw;

    g.offsets_.assign(n + 1, 0);
    for (const RawEdge& e : edges) ++g.offsets_[e.from + 1];
    for (uint64_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

    g.totals_.resize(edges.size());
    if (g.id_width_ == 4)
        g.targets32_.resize(edges.size());
    else
        g.targets64_.resize(edges.size());
    // `edges` is sorted by (from, to), so filling in order keeps each
    // adjacency list sorted ascending.
    for (size_t e = 0; e < edges.size(); ++e) {
        if (g.id_width_ == 4)
            g.targets32_[e] = static_cast<uint32_t>(edges[e].to);
        else
            g.targets64_[e] = edges[e].to;
        g.totals_[e] = edges[e].amount_micro;
    }
    return g;
}

GraphStats TransactionGraph::stats() const {
    GraphStats s;
    s.node_count = node_count();
    s.edge_count = edge_count();
    for (uint64_t t : totals_) s.total_volume_micro += t;
    return s;
}

std::optional<uint64_t> TransactionGraph::find(const Address& a) const {
    auto it = index_.find(a);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const Address& TransactionGraph::address_of(uint64_t id) const {
    if (id >= addresses_.size())
        throw Error(ErrorCode::kOutOfRange, "node id " + std::to_string(id) + " out of range");
    return addresses_[id];
}

uint64_t TransactionGraph::degree(uint64_t id) const {
    if (id >= addresses_.size())
        throw Error(ErrorCode::kOutOfRange, "node id " + std::to_string(id) + " out of range");
    return offsets_[id + 1] - offsets_[id];
}

std::vector<uint64_t> TransactionGraph::neighbors(uint64_t id) const {
    if (id >= addresses_.size())
        throw Error(ErrorCode::kOutOfRange, "node id " + std::to_string(id) + " out of range");
    std::vector<uint64_t> out;
    out.reserve(offsets_[id + 1] - offsets_[id]);
    for (uint64_t e = offsets_[id]; e < offsets_[id + 1]; ++e) out.push_back(target_at(e));
    return out;
}

std::vector<uint64_t> TransactionGraph::edge_totals(uint64_t id) const {
    if (id >= addresses_.size())
        throw Error(ErrorCode::kOutOfRange, "node id " + std::to_string(id) + " out of range");
    return std::vector<uint64_t>(totals_.begin() + static_cast<ptrdiff_t>(offsets_[id]),
                                 totals_.begin() + static_cast<ptrdiff_t>(offsets_[id + 1]));
}

void TransactionGraph::ensure_reverse() const {
    std::call_once(reverse_->once, [this] {
        const uint64_t n = node_count();
        auto& rev = *reverse_;
        rev.offsets.assign(n + 1, 0);
        for (uint64_t e = 0; e < edge_count(); ++e) ++rev.offsets[target_at(e) + 1];
        for (uint64_t v = 0; v < n; ++v) rev.offsets[v + 1] += rev.offsets[v];
        rev.targets.resize(edge_count());
        std::vector<uint64_t> cursor(rev.offsets.begin(), rev.offsets.end() - 1);
        for (uint64_t u = 0; u < n; ++u)
            for (uint64_t e = offsets_[u]; e < offsets_[u + 1]; ++e)
                rev.targets[cursor[target_at(e)]++] = u;
    });
}

std::vector<uint64_t> TransactionGraph::predecessors(uint64_t id) const {
    if (id >= addresses_.size())
        throw Error(ErrorCode::kOutOfRange, "node id " + std::to_string(id) + " out of range");
    ensure_reverse();
    const auto& rev = *reverse_;
    return std::vector<uint64_t>(rev.targets.begin() + static_cast<ptrdiff_t>(rev.offsets[id]),
                                 rev.targets.begin() + static_cast<ptrdiff_t>(rev.offsets[id + 1]));
}

void TransactionGraph::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "' for writing");

    out.write(kMagic, sizeof(kMagic));
    write_pod(out, id_width_);
    write_pod(out, static_cast<uint64_t>(node_count()));
    write_pod(out, static_cast<uint64_t>(edge_count()));
    for (const Address& a : addresses_)
        out.write(reinterpret_cast<const char*>(a.bytes.data()), a.bytes.size());
    out.write(reinterpret_cast<const char*>(offsets_.data()),
              static_cast<std::streamsize>(offsets_.size() * sizeof(uint64_t)));
    if (id_width_ == 4)
        out.write(reinterpret_cast<const char*>(targets32_.data()),
                  static_cast<std::streamsize>(targets32_.size() * sizeof(uint32_t)));
    else
        out.write(reinterpret_cast<const char*>(targets64_.data()),
                  static_cast<std::streamsize>(targets64_.size() * sizeof(uint64_t)));
    out.write(reinterpret_cast<const char*>(totals_.data()),
              static_cast<std::streamsize>(totals_.size() * sizeof(uint64_t)));
    if (!out) throw Error(ErrorCode::kIo, "write to '" + path.string() + "' failed");
}

TransactionGraph TransactionGraph::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");

    char magic[5];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw Error(ErrorCode::kMalformedRow, "'" + path.string() + "' is not a graph cache file");

    TransactionGraph g;
    uint64_t nodes = 0;
    uint64_t edges = 0;
    read_pod(in, g.id_width_);
    read_pod(in, nodes);
    read_pod(in, edges);
    if (!in || (g.id_width_ != 4 && g.id_width_ != 8))
        throw Error(ErrorCode::kMalformedRow, "corrupt graph cache header");

    g.addresses_.resize(nodes);
    for (Address& a : g.addresses_)
        in.read(reinterpret_cast<char*>(a.bytes.data()), a.bytes.size());
    g.offsets_.resize(nodes + 1);
    in.read(reinterpret_cast<char*>(g.offsets_.data()),
            static_cast<std::streamsize>(g.offsets_.size() * sizeof(uint64_t)));
    if (g.id_width_ == 4) {
        g.targets32_.resize(edges);
        in.read(reinterpret_cast<char*>(g.targets32_.data()),
                static_cast<std::streamsize>(edges * sizeof(uint32_t)));
    } else {
        g.targets64_.resize(edges);
        in.read(reinterpret_cast<char*>(g.targets64_.data()),
                static_cast<std::streamsize>(edges * sizeof(uint64_t)));
    }
    g.totals_.resize(edges);
    in.read(reinterpret_cast<char*>(g.totals_.data()),
            static_cast<std::streamsize>(edges * sizeof(uint64_t)));
    if (!in) throw Error(ErrorCode::kMalformedRow, "truncated graph cache '" + path.string() + "'");

    if (g.offsets_.empty() || g.offsets_.front() != 0 || g.offsets_.back() != edges)
        throw Error(ErrorCode::kMalformedRow, "inconsistent adjacency offsets in cache");
    g.rebuild_index();
    return g;
}

void TransactionGraph::rebuild_index() {
    index_.reserve(addresses_.size());
    for (uint64_t id = 0; id < addresses_.size(); ++id) index_.emplace(addresses_[id], id);
}

} // namespace eai
