#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "heavycycle/error.hpp"
#include "heavycycle/scc.hpp"

namespace heavycycle {

struct Arc {
    VertexId tail;
    VertexId head;
    Weight weight;

    friend bool operator==(const Arc&, const Arc&) = default;
};

struct OutArc {
    VertexId head;
    Weight weight;

    friend bool operator==(const OutArc&, const OutArc&) = default;
};

/// Digraph on dense vertex ids 0..n-1 with nonnegative arc weights.
/// Loops are allowed (at most one per vertex); parallel arcs are not.
/// Out-lists are kept sorted by head and in-lists sorted by tail, so every
/// sum over a vertex's out-arcs runs in ascending head order.
class WeightedDigraph {
public:
    WeightedDigraph() = default;
    explicit WeightedDigraph(std::size_t vertex_count) : out_(vertex_count), in_(vertex_count) {}

    std::size_t vertex_count() const noexcept { return out_.size(); }
    std::size_t arc_count() const noexcept { return arc_count_; }
    std::size_t loop_count() const noexcept { return loop_count_; }

    void add_arc(VertexId tail, VertexId head, Weight weight) {
        check_vertex(tail);
        check_vertex(head);
        if (!(weight >= 0.0)) {
            throw Error(ErrorCode::NegativeWeight,
                        "arc (" + std::to_string(tail) + "," + std::to_string(head) +
                            ") has weight " + std::to_string(weight));
        }
        if (!std::isfinite(weight)) {
            throw Error(ErrorCode::InvalidArgument, "arc weight must be finite");
        }
        auto& out = out_[tail];
        auto pos = std::lower_bound(out.begin(), out.end(), head,
                                    [](const OutArc& a, VertexId h) { return a.head < h; });
        if (pos != out.end() && pos->head == head) {
            throw Error(ErrorCode::DuplicateArc,
                        "arc (" + std::to_string(tail) + "," + std::to_string(head) + ") already present");
        }
        out.insert(pos, OutArc{head, weight});
        auto& in = in_[head];
        in.insert(std::lower_bound(in.begin(), in.end(), tail), tail);
        ++arc_count_;
        if (tail == head) ++loop_count_;
    }

    bool has_arc(VertexId tail, VertexId head) const { return weight(tail, head).has_value(); }

    std::optional<Weight> weight(VertexId tail, VertexId head) const {
        if (tail >= vertex_count() || head >= vertex_count()) return std::nullopt;
        const auto& out = out_[tail];
        auto pos = std::lower_bound(out.begin(), out.end(), head,
                                    [](const OutArc& a, VertexId h) { return a.head < h; });
        if (pos == out.end() || pos->head != head) return std::nullopt;
        return pos->weight;
    }

    bool has_loop(VertexId v) const { return has_arc(v, v); }

    std::span<const OutArc> out_arcs(VertexId v) const {
        check_vertex(v);
        return out_[v];
    }

    std::span<const VertexId> in_neighbors(VertexId v) const {
        check_vertex(v);
        return in_[v];
    }

    /// Sum of the weights of all arcs leaving v, the loop at v included,
    /// accumulated in ascending head order.
    Weight weighted_outdegree(VertexId v) const {
        Weight total = 0.0;
        for (const OutArc& a : out_arcs(v)) total += a.weight;
        return total;
    }

    /// All arcs in lexicographic (tail, head) order.
    std::vector<Arc> arcs() const {
        std::vector<Arc> result;
        result.reserve(arc_count_);
        for (VertexId u = 0; u < vertex_count(); ++u) {
            for (const OutArc& a : out_[u]) result.push_back({u, a.head, a.weight});
        }
        return result;
    }

    /// Copy with every arc weight multiplied by `factor` (> 0).
    WeightedDigraph scaled(Weight factor) const {
        if (!(factor > 0.0)) throw Error(ErrorCode::InvalidArgument, "scale factor must be positive");
        WeightedDigraph copy = *this;
        for (auto& out : copy.out_) {
            for (OutArc& a : out) a.weight *= factor;
        }
        return copy;
    }

    friend bool operator==(const WeightedDigraph&, const WeightedDigraph&) = default;

private:
    void check_vertex(VertexId v) const {
        if (v >= vertex_count()) {
            throw Error(ErrorCode::InvalidVertex,
                        "vertex " + std::to_string(v) + " out of range (n=" +
                            std::to_string(vertex_count()) + ")",
                        std::nullopt, v);
        }
    }

    std::vector<std::vector<OutArc>> out_;
    std::vector<std::vector<VertexId>> in_;
    std::size_t arc_count_ = 0;
    std::size_t loop_count_ = 0;
};

inline WeightedDigraph new_digraph(std::size_t vertex_count) { return WeightedDigraph(vertex_count); }

inline Weight weighted_outdegree(const WeightedDigraph& g, VertexId v) { return g.weighted_outdegree(v); }

inline std::size_t loop_count(const WeightedDigraph& g) { return g.loop_count(); }

inline Weight min_weighted_outdegree(const WeightedDigraph& g) {
    if (g.vertex_count() == 0) throw Error(ErrorCode::EmptyGraph, "minimum outdegree of an empty graph");
    Weight best = std::numeric_limits<Weight>::infinity();
    for (VertexId v = 0; v < g.vertex_count(); ++v) best = std::min(best, g.weighted_outdegree(v));
    return best;
}

/// Strongly connected components in a topological order of the condensation:
/// every arc between two parts goes from an earlier part to a later one.
/// Each part is sorted ascending.
inline std::vector<std::vector<VertexId>> scc_decompose(const WeightedDigraph& g) {
    auto parts = detail::tarjan_components(
        g.vertex_count(), [](VertexId) { return true; },
        [&](VertexId v) { return g.out_arcs(v).size(); },
        [&](VertexId v, std::size_t i) { return g.out_arcs(v)[i].head; });
    std::reverse(parts.begin(), parts.end());
    for (auto& part : parts) std::sort(part.begin(), part.end());
    return parts;
}

inline bool is_strongly_connected(const WeightedDigraph& g) {
    return g.vertex_count() > 0 && scc_decompose(g).size() == 1;
}

/// The sink component (no arc leaves it) holding the smallest vertex id among
/// all sink components.
inline std::vector<VertexId> sink_component(const WeightedDigraph& g) {
    if (g.vertex_count() == 0) throw Error(ErrorCode::EmptyGraph, "sink component of an empty graph");
    const auto parts = scc_decompose(g);
    std::vector<std::size_t> part_of(g.vertex_count());
    for (std::size_t p = 0; p < parts.size(); ++p) {
        for (VertexId v : parts[p]) part_of[v] = p;
    }
    std::optional<std::size_t> best;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        bool closed = true;
        for (VertexId v : parts[p]) {
            for (const OutArc& a : g.out_arcs(v)) {
                if (part_of[a.head] != p) {
                    closed = false;
                    break;
                }
            }
            if (!closed) break;
        }
        if (closed && (!best || parts[p].front() < parts[*best].front())) best = p;
    }
    return parts[*best];
}

struct Subdigraph {
    WeightedDigraph graph;
    /// origin[i] is the id in the parent graph of vertex i of `graph`.
    std::vector<VertexId> origin;
};

/// Subdigraph induced by `subset`, relabeled 0..|subset|-1 in ascending order
/// of the original ids (the relabeling preserves vertex order).
inline Subdigraph induced_subdigraph(const WeightedDigraph& g, std::span<const VertexId> subset) {
    std::vector<VertexId> origin(subset.begin(), subset.end());
    std::sort(origin.begin(), origin.end());
    origin.erase(std::unique(origin.begin(), origin.end()), origin.end());
    constexpr VertexId absent = std::numeric_limits<VertexId>::max();
    std::vector<VertexId> relabel(g.vertex_count(), absent);
    for (std::size_t i = 0; i < origin.size(); ++i) {
        if (origin[i] >= g.vertex_count()) {
            throw Error(ErrorCode::InvalidVertex, "subset vertex out of range", std::nullopt, origin[i]);
        }
        relabel[origin[i]] = static_cast<VertexId>(i);
    }
    WeightedDigraph sub(origin.size());
    for (std::size_t i = 0; i < origin.size(); ++i) {
        for (const OutArc& a : g.out_arcs(origin[i])) {
            if (relabel[a.head] != absent) sub.add_arc(static_cast<VertexId>(i), relabel[a.head], a.weight);
        }
    }
    return {std::move(sub), std::move(origin)};
}

}  // namespace heavycycle
