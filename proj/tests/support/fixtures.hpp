#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "heavycycle/digraph.hpp"

namespace heavycycle::testing {

/// Directed triangle 0 -> 1 -> 2 -> 0 with unit weights.
inline WeightedDigraph unit_triangle() {
    WeightedDigraph g(3);
    g.add_arc(0, 1, 1.0);
    g.add_arc(1, 2, 1.0);
    g.add_arc(2, 0, 1.0);
    return g;
}

/// u = 0, y = 1, z = 2; every weighted outdegree is exactly 1.
inline WeightedDigraph overwrite_triangle() {
    WeightedDigraph g(3);
    g.add_arc(0, 2, 0.3);
    g.add_arc(0, 1, 0.7);
    g.add_arc(1, 2, 0.5);
    g.add_arc(1, 0, 0.5);
    g.add_arc(2, 0, 1.0);
    return g;
}

/// Two vertices, loops of 0.2, cross arcs of 0.8.
inline WeightedDigraph looped_pair() {
    WeightedDigraph g(2);
    g.add_arc(0, 0, 0.2);
    g.add_arc(0, 1, 0.8);
    g.add_arc(1, 0, 0.8);
    g.add_arc(1, 1, 0.2);
    return g;
}

inline WeightedDigraph complete_digraph(std::size_t n, bool loops = false, Weight w = 1.0) {
    WeightedDigraph g(n);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = 0; v < n; ++v) {
            if (u != v || loops) g.add_arc(u, v, w);
        }
    }
    return g;
}

/// Sign (-1, 0, 1) of sum(plus) - sum(minus), computed exactly with
/// Shewchuk's non-overlapping partials.
inline int exact_difference_sign(std::span<const double> plus, std::span<const double> minus) {
    std::vector<double> partials;
    auto add = [&](double x) {
        std::size_t i = 0;
        for (double y : partials) {
            if (std::abs(x) < std::abs(y)) std::swap(x, y);
            const double hi = x + y;
            const double lo = y - (hi - x);
            if (lo != 0.0) partials[i++] = lo;
            x = hi;
        }
        partials.resize(i);
        partials.push_back(x);
    };
    for (double x : plus) add(x);
    for (double x : minus) add(-x);
    for (auto it = partials.rbegin(); it != partials.rend(); ++it) {
        if (*it > 0.0) return 1;
        if (*it < 0.0) return -1;
    }
    return 0;
}

inline std::vector<double> out_weights(const WeightedDigraph& g, VertexId v) {
    std::vector<double> w;
    for (const OutArc& a : g.out_arcs(v)) w.push_back(a.weight);
    return w;
}

}  // namespace heavycycle::testing
