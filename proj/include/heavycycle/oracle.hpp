#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "heavycycle/cycle.hpp"
#include "heavycycle/digraph.hpp"
#include "heavycycle/scc.hpp"

namespace heavycycle {

inline constexpr std::uint64_t kDefaultCycleCap = 10'000'000;

namespace detail {

// Johnson's circuit search rooted at the least vertex `start` of one strongly
// connected component.
template <class Visitor>
class CircuitSearch {
public:
    CircuitSearch(const WeightedDigraph& g, std::uint64_t cap, std::uint64_t& emitted, Visitor& visit)
        : g_(g), cap_(cap), emitted_(emitted), visit_(visit),
          in_component_(g.vertex_count(), 0), blocked_(g.vertex_count(), 0), blocked_by_(g.vertex_count()) {}

    void run(VertexId start, std::span<const VertexId> component) {
        start_ = start;
        for (VertexId v : component) {
            in_component_[v] = 1;
            blocked_[v] = 0;
            blocked_by_[v].clear();
        }
        path_.clear();
        prefix_.assign(1, 0.0);
        circuit(start);
        for (VertexId v : component) in_component_[v] = 0;
    }

private:
    bool circuit(VertexId v) {
        bool closed = false;
        path_.push_back(v);
        blocked_[v] = 1;
        for (const OutArc& a : g_.out_arcs(v)) {
            const VertexId w = a.head;
            if (w == v || !in_component_[w]) continue;
            if (w == start_) {
                emit(prefix_.back() + a.weight);
                closed = true;
            } else if (!blocked_[w]) {
                prefix_.push_back(prefix_.back() + a.weight);
                if (circuit(w)) closed = true;
                prefix_.pop_back();
            }
        }
        if (closed) {
            unblock(v);
        } else {
            for (const OutArc& a : g_.out_arcs(v)) {
                if (a.head == v || !in_component_[a.head]) continue;
                auto& list = blocked_by_[a.head];
                if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
            }
        }
        path_.pop_back();
        return closed;
    }

    void unblock(VertexId v) {
        std::vector<VertexId> pending{v};
        while (!pending.empty()) {
            const VertexId u = pending.back();
            pending.pop_back();
            blocked_[u] = 0;
            for (VertexId w : blocked_by_[u]) {
                if (blocked_[w]) pending.push_back(w);
            }
            blocked_by_[u].clear();
        }
    }

    void emit(Weight weight) {
        if (++emitted_ > cap_) {
            throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap_) + " simple cycles");
        }
        visit_(std::span<const VertexId>(path_), weight);
    }

    const WeightedDigraph& g_;
    std::uint64_t cap_;
    std::uint64_t& emitted_;
    Visitor& visit_;
    VertexId start_ = 0;
    std::vector<char> in_component_;
    std::vector<char> blocked_;
    std::vector<std::vector<VertexId>> blocked_by_;
    std::vector<VertexId> path_;
    std::vector<Weight> prefix_;
};

}  // namespace detail

/// Calls visit(vertices, weight) once for every simple directed cycle of g,
/// loops included. Cycles are emitted grouped by their smallest vertex in
/// ascending order, each starting at that vertex, and within a group in
/// lexicographic order of the vertex sequence. Weights are summed from the
/// smallest vertex along the cycle. Throws CapExceeded once more than `cap`
/// cycles would be emitted. Returns the number of cycles.
template <class Visitor>
std::uint64_t for_each_simple_cycle(const WeightedDigraph& g, Visitor&& visit,
                                    std::uint64_t cap = kDefaultCycleCap) {
    std::uint64_t emitted = 0;
    detail::CircuitSearch<std::remove_reference_t<Visitor>> search(g, cap, emitted, visit);
    const std::size_t n = g.vertex_count();
    for (VertexId start = 0; start < n; ++start) {
        if (auto loop = g.weight(start, start)) {
            if (++emitted > cap) {
                throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " simple cycles");
            }
            const VertexId single[1] = {start};
            visit(std::span<const VertexId>(single), *loop);
        }
        auto parts = detail::tarjan_components(
            n, [start](VertexId v) { return v >= start; },
            [&](VertexId v) { return g.out_arcs(v).size(); },
            [&](VertexId v, std::size_t i) { return g.out_arcs(v)[i].head; });
        for (const auto& part : parts) {
            if (part.size() < 2 || std::find(part.begin(), part.end(), start) == part.end()) continue;
            search.run(start, part);
            break;
        }
    }
    return emitted;
}

inline std::vector<DirectedCycle> enumerate_simple_cycles(const WeightedDigraph& g,
                                                          std::uint64_t cap = kDefaultCycleCap) {
    std::vector<DirectedCycle> cycles;
    for_each_simple_cycle(
        g,
        [&](std::span<const VertexId> vs, Weight w) {
            cycles.push_back(DirectedCycle{{vs.begin(), vs.end()}, w});
        },
        cap);
    return cycles;
}

/// Heaviest simple cycle; the first one in emission order wins ties.
inline DirectedCycle max_weight_cycle(const WeightedDigraph& g, std::uint64_t cap = kDefaultCycleCap) {
    std::optional<DirectedCycle> best;
    for_each_simple_cycle(
        g,
        [&](std::span<const VertexId> vs, Weight w) {
            if (!best || w > best->weight) best = DirectedCycle{{vs.begin(), vs.end()}, w};
        },
        cap);
    if (!best) throw Error(ErrorCode::NoCycle, "graph is acyclic");
    return *best;
}

/// Number of arcs of the longest simple cycle.
inline std::size_t max_cycle_length(const WeightedDigraph& g, std::uint64_t cap = kDefaultCycleCap) {
    std::size_t longest = 0;
    for_each_simple_cycle(
        g, [&](std::span<const VertexId> vs, Weight) { longest = std::max(longest, vs.size()); }, cap);
    if (longest == 0) throw Error(ErrorCode::NoCycle, "graph is acyclic");
    return longest;
}

}  // namespace heavycycle
