#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "heavycycle/digraph.hpp"

namespace heavycycle {

/// A simple directed cycle v0 -> v1 -> ... -> v(k-1) -> v0, stored as its
/// vertex sequence. A single vertex denotes the loop at that vertex.
struct DirectedCycle {
    std::vector<VertexId> vertices;
    Weight weight = 0.0;

    std::size_t length() const noexcept { return vertices.size(); }

    bool contains(VertexId v) const {
        return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
    }

    std::vector<std::pair<VertexId, VertexId>> arcs() const {
        std::vector<std::pair<VertexId, VertexId>> result;
        result.reserve(vertices.size());
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            result.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
        }
        return result;
    }

    std::string to_string() const {
        std::string s;
        for (VertexId v : vertices) s += std::to_string(v) + " ";
        if (!vertices.empty()) s += std::to_string(vertices.front());
        return s;
    }

    friend bool operator==(const DirectedCycle&, const DirectedCycle&) = default;
};

/// A cycle of the input graph together with the bound it is claimed to meet.
struct CycleCertificate {
    DirectedCycle cycle;
    std::size_t n = 0;
    std::size_t r = 0;
    double bound = 0.0;
    double achieved = 0.0;
    bool valid = false;
};

/// Rotates the sequence so that its smallest vertex comes first.
inline std::vector<VertexId> canonical_rotation(std::vector<VertexId> vertices) {
    auto smallest = std::min_element(vertices.begin(), vertices.end());
    std::rotate(vertices.begin(), smallest, vertices.end());
    return vertices;
}

/// Validates `vertices` as a simple cycle of g and returns it in canonical
/// rotation with its weight summed in that order.
inline DirectedCycle make_cycle(const WeightedDigraph& g, std::vector<VertexId> vertices) {
    if (vertices.empty()) throw Error(ErrorCode::NotACycle, "empty vertex sequence");
    std::vector<VertexId> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorCode::NotACycle, "repeated vertex");
    }
    DirectedCycle cycle{canonical_rotation(std::move(vertices)), 0.0};
    for (auto [tail, head] : cycle.arcs()) {
        auto w = g.weight(tail, head);
        if (!w) {
            throw Error(ErrorCode::NotACycle,
                        "arc (" + std::to_string(tail) + "," + std::to_string(head) + ") not in graph");
        }
        cycle.weight += *w;
    }
    return cycle;
}

}  // namespace heavycycle
