#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "heavycycle/cycle.hpp"
#include "heavycycle/digraph.hpp"

namespace heavycycle {

/// Absolute slack used by every hypothesis and bound comparison.
inline constexpr Weight kTolerance = 1e-9;

/// Guaranteed cycle weight 1/log2(n + r) for a graph with n vertices and r loops.
inline double bound_value(std::size_t vertex_count, std::size_t loop_count) {
    const std::size_t size = vertex_count + loop_count;
    if (size < 2) {
        throw Error(ErrorCode::DegenerateSize,
                    "n + r = " + std::to_string(size) + " leaves 1/log2(n+r) undefined");
    }
    return 1.0 / std::log2(static_cast<double>(size));
}

/// w(u,y) + w(y,z), rounded toward +infinity so that the stored value never
/// falls below the exact sum.
inline Weight contracted_weight(Weight to_deleted, Weight deleted_to_target) {
    const Weight sum = to_deleted + deleted_to_target;
    const Weight virtual_b = sum - to_deleted;
    const Weight error = (to_deleted - (sum - virtual_b)) + (deleted_to_target - virtual_b);
    return error > 0.0 ? std::nextafter(sum, std::numeric_limits<Weight>::infinity()) : sum;
}

/// Bookkeeping for one contraction of y into z. Ids refer to the graph the
/// contraction was applied to.
struct ContractionRecord {
    VertexId z = 0;
    VertexId y = 0;
    Weight w_yz = 0.0;
    /// Tails u != y with (u, y) an arc, ascending. Each became (u, z).
    std::vector<VertexId> rerouted;
    /// (u, old w(u, z)) for rerouted tails whose arc (u, z) already existed, ascending by u.
    std::vector<std::pair<VertexId, Weight>> overwritten;

    bool reroutes(VertexId u) const { return std::binary_search(rerouted.begin(), rerouted.end(), u); }
    bool creates_loop() const { return reroutes(z); }

    friend bool operator==(const ContractionRecord&, const ContractionRecord&) = default;
};

struct Contraction {
    WeightedDigraph graph;
    ContractionRecord record;
    /// origin[i] is the id in the input graph of vertex i of `graph`.
    std::vector<VertexId> origin;
};

/// Heaviest arc into z, ties to the smallest tail.
inline std::pair<VertexId, Weight> heaviest_in_arc(const WeightedDigraph& g, VertexId z) {
    std::optional<std::pair<VertexId, Weight>> best;
    for (VertexId u : g.in_neighbors(z)) {
        const Weight w = *g.weight(u, z);
        if (!best || w > best->second) best = {u, w};
    }
    if (!best) throw Error(ErrorCode::NotStronglyConnected, "no arc enters z", std::nullopt, z);
    return *best;
}

/// Deletes the heaviest in-neighbour y of the loopless vertex z and reroutes
/// every arc (u, y) to (u, z) with weight w(u,y) + w(y,z), replacing any
/// existing (u, z). Vertex ids above y shift down by one.
inline Contraction contract_step(const WeightedDigraph& g, VertexId z) {
    if (z >= g.vertex_count()) throw Error(ErrorCode::InvalidVertex, "z out of range", std::nullopt, z);
    if (g.vertex_count() < 2) throw Error(ErrorCode::InvalidArgument, "contraction needs two vertices");
    if (g.has_loop(z)) throw Error(ErrorCode::HasLoopAtZ, "z carries a loop", std::nullopt, z);
    if (!is_strongly_connected(g)) throw Error(ErrorCode::NotStronglyConnected, "graph is not strongly connected");

    const auto [y, w_yz] = heaviest_in_arc(g, z);
    ContractionRecord record;
    record.z = z;
    record.y = y;
    record.w_yz = w_yz;

    auto relabel = [y](VertexId v) { return v < y ? v : v - 1; };
    Contraction result{WeightedDigraph(g.vertex_count() - 1), {}, {}};
    result.origin.reserve(g.vertex_count() - 1);

    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        if (u == y) continue;
        result.origin.push_back(u);
        const auto to_y = g.weight(u, y);
        for (const OutArc& a : g.out_arcs(u)) {
            if (a.head == y) continue;
            if (a.head == z && to_y) {
                if (a.weight > w_yz) {
                    throw Error(ErrorCode::Internal, "overwritten arc heavier than the chosen in-arc");
                }
                record.overwritten.emplace_back(u, a.weight);
                continue;
            }
            result.graph.add_arc(relabel(u), relabel(a.head), a.weight);
        }
        if (to_y) {
            record.rerouted.push_back(u);
            result.graph.add_arc(relabel(u), relabel(z), contracted_weight(*to_y, w_yz));
        }
    }
    result.record = std::move(record);
    return result;
}

/// Undoes one contraction on a cycle expressed in the ids of the
/// pre-contraction graph: the arc (x, z) becomes the path x, y, z exactly when
/// (x, y) was an arc before contracting. The weight is carried over unchanged.
inline DirectedCycle lift_cycle(const ContractionRecord& record, const DirectedCycle& cycle) {
    std::vector<VertexId> sorted = cycle.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.empty() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorCode::NotACycle, "vertex sequence is not a simple cycle");
    }
    if (std::binary_search(sorted.begin(), sorted.end(), record.y)) {
        throw Error(ErrorCode::NotACycle, "cycle passes through the deleted vertex", std::nullopt, record.y);
    }
    const auto& vs = cycle.vertices;
    auto at = std::find(vs.begin(), vs.end(), record.z);
    if (at == vs.end()) return cycle;
    const std::size_t i = static_cast<std::size_t>(at - vs.begin());
    const VertexId x = vs[(i + vs.size() - 1) % vs.size()];
    if (!record.reroutes(x)) return cycle;

    DirectedCycle lifted = cycle;
    // With x == z (a loop at z) the insertion point is the same slot.
    lifted.vertices.insert(lifted.vertices.begin() + static_cast<std::ptrdiff_t>(i == 0 ? vs.size() : i),
                           record.y);
    lifted.vertices = canonical_rotation(std::move(lifted.vertices));
    return lifted;
}

/// Lifts a cycle of `c.graph` back into `pre`, the graph that was contracted,
/// re-summing the weight there.
inline DirectedCycle lift_cycle(const Contraction& c, const WeightedDigraph& pre, const DirectedCycle& cycle) {
    DirectedCycle mapped;
    mapped.weight = cycle.weight;
    for (VertexId v : cycle.vertices) {
        if (v >= c.origin.size()) throw Error(ErrorCode::NotACycle, "vertex outside contracted graph", std::nullopt, v);
        mapped.vertices.push_back(c.origin[v]);
    }
    return make_cycle(pre, lift_cycle(c.record, mapped).vertices);
}

struct FoundLoop {
    DirectedCycle loop;
};

struct StrippedLoops {
    WeightedDigraph graph;
    /// Factor by which the outdegree guarantee shrinks after the loops are gone.
    Weight credit = 0.0;
};

/// Every vertex carries a loop: return the heaviest loop if it reaches
/// `target`, otherwise the graph with all loops deleted. `scale` is the
/// outdegree lower bound the caller guarantees (1 for the plain hypothesis).
inline std::variant<FoundLoop, StrippedLoops> strip_loops_step(const WeightedDigraph& g, Weight target,
                                                              Weight scale = 1.0) {
    if (g.vertex_count() == 0) throw Error(ErrorCode::EmptyGraph, "no vertices");
    std::optional<std::pair<VertexId, Weight>> best;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto loop = g.weight(v, v);
        if (!loop) throw Error(ErrorCode::PreconditionViolated, "vertex has no loop", std::nullopt, v);
        if (g.weighted_outdegree(v) < scale * (1.0 - kTolerance)) {
            throw Error(ErrorCode::PreconditionViolated, "weighted outdegree below the guarantee", std::nullopt, v);
        }
        if (!best || *loop > best->second) best = {v, *loop};
    }
    if (best->second >= target) return FoundLoop{DirectedCycle{{best->first}, best->second}};

    StrippedLoops stripped{WeightedDigraph(g.vertex_count()), 1.0 - target / scale};
    for (const Arc& a : g.arcs()) {
        if (a.tail != a.head) stripped.graph.add_arc(a.tail, a.head, a.weight);
    }
    return stripped;
}

}  // namespace heavycycle
