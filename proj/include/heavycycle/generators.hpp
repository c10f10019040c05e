#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "heavycycle/digraph.hpp"

// Instance generators. All randomness comes from std::mt19937_64 seeded with
// the 64-bit seed; its output sequence is fixed by the C++ standard. Integers
// and reals are derived from raw 64-bit draws as follows (the standard
// distributions are implementation-defined and are not used):
//   index below b : rejection sampling, reject x < (2^64 - b) mod b, return x mod b
//   unit real     : (x >> 11) * 2^-53, in [0, 1)
//   k of n        : Floyd's algorithm over j = n-k .. n-1, then sorted

namespace heavycycle {

using Rng = std::mt19937_64;

namespace gen_detail {

inline std::uint64_t index_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        const std::uint64_t x = rng();
        if (x >= threshold) return x % bound;
    }
}

inline double unit_real(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline std::vector<VertexId> sample_distinct(Rng& rng, std::uint64_t n, std::uint64_t k) {
    std::vector<VertexId> chosen;
    chosen.reserve(k);
    for (std::uint64_t j = n - k; j < n; ++j) {
        const auto t = static_cast<VertexId>(index_below(rng, j + 1));
        if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) {
            chosen.push_back(t);
        } else {
            chosen.push_back(static_cast<VertexId>(j));
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

inline Weight ascending_sum(std::span<const OutArc> arcs) {
    Weight total = 0.0;
    for (const OutArc& a : arcs) total += a.weight;
    return total;
}

/// Splits `total` over `raw.size()` arcs proportionally to `raw`, the last one
/// taking the remainder.
inline std::vector<Weight> proportional(std::span<const double> raw, Weight total) {
    double raw_sum = 0.0;
    for (double x : raw) raw_sum += x;
    std::vector<Weight> w(raw.size());
    Weight partial = 0.0;
    for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
        w[i] = total * (raw[i] / raw_sum);
        partial += w[i];
    }
    w.back() = std::max(0.0, total - partial);
    return w;
}

/// Raises arcs[balance] one ulp at a time until the ascending sum reaches 1.
inline void balance_to_one(std::vector<OutArc>& arcs, std::size_t balance) {
    while (ascending_sum(arcs) < 1.0) {
        arcs[balance].weight = std::nextafter(arcs[balance].weight, std::numeric_limits<Weight>::infinity());
    }
}

inline void add_all(WeightedDigraph& g, VertexId tail, const std::vector<OutArc>& arcs) {
    for (const OutArc& a : arcs) g.add_arc(tail, a.head, a.weight);
}

}  // namespace gen_detail

struct NormalizedRandomSpec {
    std::size_t n = 1;
    std::size_t k = 1;
    bool allow_loops = true;
    /// When non-empty, raw weights are drawn from these values instead of (0.05, 1].
    std::vector<double> palette;
};

/// Each vertex gets k distinct out-neighbours sampled from all n vertices
/// (itself included when loops are allowed) and positive weights normalized
/// so the weighted outdegree is at least 1 exactly, and equal to 1 up to the
/// final ulp adjustment of the heaviest-id arc.
inline WeightedDigraph gen_normalized_random(const NormalizedRandomSpec& spec, std::uint64_t seed) {
    const std::size_t pool = spec.allow_loops ? spec.n : spec.n - 1;
    if (spec.n == 0 || spec.k < 1 || spec.k > pool) {
        throw Error(ErrorCode::InvalidArgument,
                    "k must satisfy 1 <= k <= " + std::string(spec.allow_loops ? "n" : "n-1"));
    }
    Rng rng(seed);
    WeightedDigraph g(spec.n);
    std::vector<double> raw(spec.k);
    for (VertexId v = 0; v < spec.n; ++v) {
        auto heads = gen_detail::sample_distinct(rng, pool, spec.k);
        if (!spec.allow_loops) {
            for (VertexId& h : heads) h = h >= v ? h + 1 : h;
        }
        for (double& x : raw) {
            x = spec.palette.empty()
                    ? 1.0 - 0.95 * gen_detail::unit_real(rng)
                    : spec.palette[gen_detail::index_below(rng, spec.palette.size())];
        }
        const auto weights = gen_detail::proportional(raw, 1.0);
        std::vector<OutArc> arcs(spec.k);
        for (std::size_t i = 0; i < spec.k; ++i) arcs[i] = {heads[i], weights[i]};
        gen_detail::balance_to_one(arcs, arcs.size() - 1);
        gen_detail::add_all(g, v, arcs);
    }
    return g;
}

inline WeightedDigraph gen_normalized_random(std::size_t n, std::size_t k, std::uint64_t seed) {
    return gen_normalized_random(NormalizedRandomSpec{n, k, true, {}}, seed);
}

/// Every vertex carries a loop of weight `loop_weight`; up to `cross_arcs`
/// other out-neighbours share the remaining 1 - loop_weight.
inline WeightedDigraph gen_loop_heavy(std::size_t n, Weight loop_weight, std::uint64_t seed,
                                      std::size_t cross_arcs = 3) {
    if (!(loop_weight >= 0.0 && loop_weight < 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "loop weight must lie in [0, 1)");
    }
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "loop-heavy graphs need n >= 2");
    if (cross_arcs < 1) throw Error(ErrorCode::InvalidArgument, "need at least one cross arc");
    const std::size_t k = std::min(cross_arcs, n - 1);
    Rng rng(seed);
    WeightedDigraph g(n);
    std::vector<double> raw(k);
    for (VertexId v = 0; v < n; ++v) {
        auto heads = gen_detail::sample_distinct(rng, n - 1, k);
        for (VertexId& h : heads) h = h >= v ? h + 1 : h;
        for (double& x : raw) x = 1.0 - 0.95 * gen_detail::unit_real(rng);
        const auto weights = gen_detail::proportional(raw, 1.0 - loop_weight);
        std::vector<OutArc> arcs;
        std::size_t balance = 0;
        for (std::size_t i = 0; i < k; ++i) arcs.push_back({heads[i], weights[i]});
        arcs.push_back({v, loop_weight});
        std::sort(arcs.begin(), arcs.end(), [](const OutArc& a, const OutArc& b) { return a.head < b.head; });
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            if (arcs[i].head == heads.back()) balance = i;
        }
        gen_detail::balance_to_one(arcs, balance);
        gen_detail::add_all(g, v, arcs);
    }
    return g;
}

/// Loopless digraph in which every vertex has exactly d out-neighbours, all arcs of weight 1.
inline WeightedDigraph gen_unweighted_outdegree_d(std::size_t n, std::size_t d, std::uint64_t seed) {
    if (d < 1 || d >= n) throw Error(ErrorCode::InvalidArgument, "d must satisfy 1 <= d < n");
    Rng rng(seed);
    WeightedDigraph g(n);
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId h : gen_detail::sample_distinct(rng, n - 1, d)) g.add_arc(v, h >= v ? h + 1 : h, 1.0);
    }
    return g;
}

/// A chain of `layers` strongly connected blocks of 2-4 vertices. Each vertex
/// of a non-final block keeps a light arc around its block's cycle and sends
/// the rest of its unit outdegree into the next block; the final (sink) block
/// is a normalized random block built around a Hamiltonian cycle.
inline WeightedDigraph gen_layered_sink(std::size_t layers, std::uint64_t seed) {
    if (layers < 2) throw Error(ErrorCode::InvalidArgument, "layered graphs need at least 2 layers");
    Rng rng(seed);
    std::vector<std::size_t> first(layers + 1, 0);
    for (std::size_t i = 0; i < layers; ++i) first[i + 1] = first[i] + 2 + gen_detail::index_below(rng, 3);
    WeightedDigraph g(first[layers]);

    for (std::size_t block = 0; block < layers; ++block) {
        const std::size_t begin = first[block];
        const std::size_t size = first[block + 1] - begin;
        const bool sink = block + 1 == layers;
        for (std::size_t i = 0; i < size; ++i) {
            const auto v = static_cast<VertexId>(begin + i);
            const auto successor = static_cast<VertexId>(begin + (i + 1) % size);
            std::vector<VertexId> heads{successor};
            if (sink) {
                const auto extra = gen_detail::index_below(rng, 3);
                for (std::uint64_t e = 0; e < extra; ++e) {
                    heads.push_back(static_cast<VertexId>(begin + gen_detail::index_below(rng, size)));
                }
            } else {
                const std::size_t next_begin = first[block + 1];
                const std::size_t next_size = first[block + 2] - next_begin;
                const auto count = 1 + gen_detail::index_below(rng, 2);
                for (std::uint64_t e = 0; e < count; ++e) {
                    heads.push_back(static_cast<VertexId>(next_begin + gen_detail::index_below(rng, next_size)));
                }
            }
            std::sort(heads.begin(), heads.end());
            heads.erase(std::unique(heads.begin(), heads.end()), heads.end());

            std::vector<double> raw(heads.size());
            for (std::size_t h = 0; h < heads.size(); ++h) {
                const double x = 1.0 - 0.95 * gen_detail::unit_real(rng);
                raw[h] = (!sink && heads[h] == successor) ? 0.1 * x : x;
            }
            const auto weights = gen_detail::proportional(raw, 1.0);
            std::vector<OutArc> arcs(heads.size());
            for (std::size_t h = 0; h < heads.size(); ++h) arcs[h] = {heads[h], weights[h]};
            gen_detail::balance_to_one(arcs, arcs.size() - 1);
            gen_detail::add_all(g, v, arcs);
        }
    }
    return g;
}

enum class Family { NormalizedRandom, LoopHeavy, UnweightedOutdegreeD, LayeredSink };

inline const char* to_string(Family f) {
    switch (f) {
    case Family::NormalizedRandom: return "normalized";
    case Family::LoopHeavy: return "loopheavy";
    case Family::UnweightedOutdegreeD: return "unweighted";
    case Family::LayeredSink: return "layered";
    }
    return "unknown";
}

inline Family parse_family(const std::string& name) {
    for (Family f : {Family::NormalizedRandom, Family::LoopHeavy, Family::UnweightedOutdegreeD, Family::LayeredSink}) {
        if (name == to_string(f)) return f;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown family '" + name + "'");
}

/// One generated instance: `n` is the vertex count (the layer count for
/// LayeredSink) and `param` is k, the loop weight, or d depending on family.
struct GenSpec {
    Family family = Family::NormalizedRandom;
    std::size_t n = 1;
    double param = 1.0;
    std::uint64_t seed = 0;
};

inline WeightedDigraph generate(const GenSpec& spec) {
    auto as_count = [](double x) {
        if (!(x >= 1.0) || x != std::floor(x)) throw Error(ErrorCode::InvalidArgument, "parameter must be a positive integer");
        return static_cast<std::size_t>(x);
    };
    switch (spec.family) {
    case Family::NormalizedRandom: return gen_normalized_random(spec.n, as_count(spec.param), spec.seed);
    case Family::LoopHeavy: return gen_loop_heavy(spec.n, spec.param, spec.seed);
    case Family::UnweightedOutdegreeD: return gen_unweighted_outdegree_d(spec.n, as_count(spec.param), spec.seed);
    case Family::LayeredSink: return gen_layered_sink(spec.n, spec.seed);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown family");
}

}  // namespace heavycycle
