#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "heavycycle/error.hpp"

namespace heavycycle::detail {

/// Iterative Tarjan over an implicit digraph on ids [0, vertex_count).
/// Inactive vertices are skipped, and arcs into them are ignored.
/// Components come out in reverse topological order of the condensation:
/// the first one emitted is always a sink.
template <class Active, class Degree, class Head>
std::vector<std::vector<VertexId>> tarjan_components(std::size_t vertex_count, Active&& active,
                                                     Degree&& degree, Head&& head) {
    constexpr std::uint32_t unvisited = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> index(vertex_count, unvisited);
    std::vector<std::uint32_t> low(vertex_count, 0);
    std::vector<char> on_stack(vertex_count, 0);
    std::vector<VertexId> stack;
    std::vector<std::vector<VertexId>> components;

    struct Frame {
        VertexId vertex;
        std::size_t next_arc;
    };
    std::vector<Frame> call_stack;
    std::uint32_t counter = 0;

    for (std::size_t root = 0; root < vertex_count; ++root) {
        if (!active(static_cast<VertexId>(root)) || index[root] != unvisited) continue;
        call_stack.push_back({static_cast<VertexId>(root), 0});
        index[root] = low[root] = counter++;
        stack.push_back(static_cast<VertexId>(root));
        on_stack[root] = 1;

        while (!call_stack.empty()) {
            Frame& frame = call_stack.back();
            const VertexId v = frame.vertex;
            if (frame.next_arc < degree(v)) {
                const VertexId w = head(v, frame.next_arc++);
                if (!active(w)) continue;
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call_stack.push_back({w, 0});
                } else if (on_stack[w] && index[w] < low[v]) {
                    low[v] = index[w];
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<VertexId> component;
                VertexId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    component.push_back(w);
                } while (w != v);
                components.push_back(std::move(component));
            }
            call_stack.pop_back();
            if (!call_stack.empty()) {
                const VertexId parent = call_stack.back().vertex;
                if (low[v] < low[parent]) low[parent] = low[v];
            }
        }
    }
    return components;
}

}  // namespace heavycycle::detail
