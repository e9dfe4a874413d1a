// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/proximity.hpp"

#include <atomic>
#include <ostream>
#include <thread>

#include "core/error.hpp"

namespace eai {

namespace {

void bfs_sequential(const TransactionGraph& g, std::vector<uint32_t>& dist,
                    std::vector<uint64_t> frontier, uint32_t max_hops) {
    std::vector<uint64_t> next;
    for (uint32_t level = 0; level < max_hops && !frontier.empty(); ++level) {
        next.clear();
        for (uint64_t u : frontier) {
            g.for_each_neighbor(u, [&](uint64_t v) {
                if (dist[v] == kBeyond) {
                    dist[v] = level + 1;
                    next.push_back(v);
                }
            });
        }
        frontier.swap(next);
    }
}

// Level-synchronous BFS with the frontier partitioned across workers. A node
// is claimed with a CAS on its distance slot; BFS levels are unique, so the
// resulting distances do not depend on the worker count.
void bfs_parallel(const TransactionGraph& g, std::vector<uint32_t>& dist,
                  std::vector<uint64_t> frontier, uint32_t max_hops, unsigned threads) {
    std::vector<std::atomic<uint32_t>> adist(dist.size());
    for (size_t i = 0; i < dist.size(); ++i)
        adist[i].store(dist[i], std::memory_order_relaxed);

    std::vector<std::vector<uint64_t>> buckets(threads);
    for (uint32_t level = 0; level < max_hops && !frontier.empty(); ++level) {
        size_t chunk = (frontier.size() + threads - 1) / threads;
        std::vector<std::thread> workers;
        for (unsigned t = 0; t < threads; ++t) {
            size_t begin = std::min(frontier.size(), t * chunk);
            size_t end = std::min(frontier.size(), begin + chunk);
            buckets[t].clear();
            workers.emplace_back([&, t, begin, end, level] {
                for (size_t i = begin; i < end; ++i) {
                    g.for_each_neighbor(frontier[i], [&](uint64_t v) {
                        uint32_t expected = kBeyond;
                        if (adist[v].compare_exchange_strong(expected, level + 1,
                                                             std::memory_order_relaxed)) {
                            buckets[t].push_back(v);
                        }
                    });
                }
            });
        }
        for (auto& w : workers) w.join();
        frontier.clear();
        for (auto& b : buckets) frontier.insert(frontier.end(), b.begin(), b.end());
    }

    for (size_t i = 0; i < dist.size(); ++i)
        dist[i] = adist[i].load(std::memory_order_relaxed);
}

} // namespace

DistanceMap DistanceMap::compute(std::shared_ptr<const TransactionGraph> graph,
                                 const AddressList& exchanges,
                                 const AddressList* exclusions,
                                 uint32_t max_hops, unsigned threads) {
    if (!graph) throw Error(ErrorCode::kInvalidArgument, "null graph");
    if (max_hops < 1) throw Error(ErrorCode::kInvalidArgument, "max_hops must be >= 1");

    DistanceMap dm;
    dm.graph_ = std::move(graph);
    dm.max_hops_ = max_hops;
    dm.dist_.assign(dm.graph_->node_count(), kBeyond);

    std::vector<uint64_t> sources;
    for (const Address& a : exchanges.members()) {
        if (exclusions && exclusions->contains(a)) continue;
        if (auto id = dm.graph_->find(a)) sources.push_back(*id);
    }
    if (sources.empty())
        throw Error(ErrorCode::kNoSources,
                    "no exchange address is present in the graph after exclusions");
    dm.source_count_ = sources.size();

    for (uint64_t s : sources) dm.dist_[s] = 0;
    if (threads <= 1)
        bfs_sequential(*dm.graph_, dm.dist_, std::move(sources), max_hops);
    else
        bfs_parallel(*dm.graph_, dm.dist_, std::move(sources), max_hops, threads);
    return dm;
}

uint32_t DistanceMap::at_id(uint64_t id) const {
    if (id >= dist_.size())
        throw Error(ErrorCode::kOutOfRange, "node id " + std::to_string(id) + " out of range");
    return dist_[id];
}

uint32_t DistanceMap::at(const Address& a) const {
    auto id = graph_->find(a);
    if (!id) throw Error(ErrorCode::kUnknownAddress, "address " + a.to_string() + " not in graph");
    return dist_[*id];
}

bool DistanceMap::within_hops_of_eai(const Address& a, uint32_t k) const {
    uint32_t d = at(a);
    return d != kBeyond && d <= uint64_t{1} + k;
}

uint32_t DistanceMap::txn_distance(const Address& sender, const Address& receiver) const {
    return std::min(at(sender), at(receiver)); // kBeyond is the numeric max
}

bool DistanceMap::txn_is_eai(const Address& sender, const Address& receiver) const {
    return is_eai(sender) || is_eai(receiver);
}

std::string DistanceMap::distance_label(uint32_t d) const {
    if (d == kBeyond) return std::to_string(max_hops_) + "+";
    return std::to_string(d);
}

void DistanceMap::export_csv(std::ostream& out) const {
    out << "address,distance\n";
    for (uint64_t id = 0; id < dist_.size(); ++id)
        out << graph_->address_of(id).to_string() << ',' << distance_label(dist_[id]) << '\n';
}

} // namespace eai
