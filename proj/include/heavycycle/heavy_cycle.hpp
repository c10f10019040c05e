#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "heavycycle/contraction.hpp"
#include "heavycycle/cycle.hpp"
#include "heavycycle/digraph.hpp"
#include "heavycycle/scc.hpp"

namespace heavycycle {

/// When the engine recomputes strongly connected components.
///   EveryStep: before every reduction step, so each contraction runs on a
///              strongly connected graph. O(n*m) overall.
///   OnDemand:  at the start and whenever the chosen z has no incoming arc.
///              Contraction only needs one arc into z, so the guarantee is the
///              same; this is the mode that scales.
enum class SccPolicy { EveryStep, OnDemand };

struct EngineOptions {
    SccPolicy scc_policy = SccPolicy::OnDemand;
    /// Slack for the outdegree hypothesis and for the certificate's bound check.
    Weight tolerance = kTolerance;
};

struct GraphSize {
    std::size_t n = 0;
    std::size_t r = 0;

    friend bool operator==(const GraphSize&, const GraphSize&) = default;
};

/// Restriction to the sink component; `removed` lists the discarded vertices.
struct SinkRestrict {
    std::vector<VertexId> removed;
};

/// Deletion of every loop once all vertices carry one and none reaches `target`.
struct StripLoops {
    Weight target = 0.0;
    Weight credit = 0.0;
};

struct ReductionStep {
    std::variant<SinkRestrict, ContractionRecord, StripLoops> action;
    GraphSize before;
    GraphSize after;
};

enum class Terminal {
    SingleVertex,  ///< one vertex left; its loop is the cycle
    HeavyLoop,     ///< every vertex looped and the heaviest loop met the target
};

/// The reduction from the input graph down to the terminal loop. Vertex ids
/// are those of the input graph throughout.
struct ReductionTrace {
    std::vector<ReductionStep> steps;
    Terminal terminal = Terminal::SingleVertex;
    VertexId terminal_vertex = 0;
    Weight terminal_target = 0.0;
};

struct HeavyCycleResult {
    CycleCertificate certificate;
    ReductionTrace trace;
};

namespace detail {

/// Mutable working copy of the graph. Ids never change; deleted vertices are
/// flagged dead. Incoming arcs live in per-vertex max-heaps keyed by
/// (weight, -tail) with lazy deletion: an entry is live only while the arc it
/// names exists with exactly that weight.
class ReductionEngine {
public:
    ReductionEngine(const WeightedDigraph& g, EngineOptions options)
        : options_(options),
          alive_(g.vertex_count(), 1),
          looped_(g.vertex_count(), 0),
          out_(g.vertex_count()),
          in_heap_(g.vertex_count()),
          stamp_(g.vertex_count(), 0),
          alive_count_(g.vertex_count()),
          loops_(g.loop_count()) {
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            const auto arcs = g.out_arcs(u);
            out_[u].assign(arcs.begin(), arcs.end());
            for (const OutArc& a : arcs) in_heap_[a.head].push_back({a.weight, u});
            if (g.has_loop(u)) {
                looped_[u] = 1;
            } else {
                loopless_.insert(u);
            }
        }
        for (auto& heap : in_heap_) std::make_heap(heap.begin(), heap.end());
    }

    ReductionTrace run(Weight scale) {
        ReductionTrace trace;
        bool need_components = true;
        while (true) {
            if (alive_count_ == 1) {
                const VertexId v = first_alive();
                if (!looped_[v]) throw Error(ErrorCode::Internal, "last vertex has no loop", std::nullopt, v);
                trace.terminal = Terminal::SingleVertex;
                trace.terminal_vertex = v;
                trace.terminal_target = scale;
                break;
            }
            if (need_components || options_.scc_policy == SccPolicy::EveryStep) {
                need_components = false;
                const GraphSize before = size();
                if (auto removed = restrict_to_sink_component()) {
                    trace.steps.push_back({SinkRestrict{std::move(*removed)}, before, size()});
                    continue;
                }
            }
            if (!loopless_.empty()) {
                const GraphSize before = size();
                auto record = contract(*loopless_.begin());
                if (!record) {
                    if (options_.scc_policy == SccPolicy::EveryStep) {
                        throw Error(ErrorCode::Internal, "strongly connected graph with a source vertex");
                    }
                    need_components = true;
                    continue;
                }
                trace.steps.push_back({std::move(*record), before, size()});
                continue;
            }
            // Every vertex carries a loop.
            const double target = scale * bound_value(alive_count_, alive_count_);
            const auto [v, w] = heaviest_loop();
            if (w >= target) {
                trace.terminal = Terminal::HeavyLoop;
                trace.terminal_vertex = v;
                trace.terminal_target = target;
                break;
            }
            const GraphSize before = size();
            const Weight credit = 1.0 - target / scale;
            strip_loops();
            scale *= credit;
            trace.steps.push_back({StripLoops{target, credit}, before, size()});
        }
        return trace;
    }

private:
    struct HeapEntry {
        Weight weight;
        VertexId tail;

        // Max-heap order: heavier first, then smaller tail.
        friend bool operator<(const HeapEntry& a, const HeapEntry& b) {
            if (a.weight != b.weight) return a.weight < b.weight;
            return a.tail > b.tail;
        }
    };

    GraphSize size() const { return {alive_count_, loops_}; }

    VertexId first_alive() const {
        for (VertexId v = 0; v < alive_.size(); ++v) {
            if (alive_[v]) return v;
        }
        throw Error(ErrorCode::Internal, "no vertex left");
    }

    std::size_t find_arc(VertexId tail, VertexId head) const {
        const auto& out = out_[tail];
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (out[i].head == head) return i;
        }
        return npos;
    }

    bool live(const HeapEntry& e, VertexId head) const {
        if (!alive_[e.tail]) return false;
        const std::size_t i = find_arc(e.tail, head);
        return i != npos && out_[e.tail][i].weight == e.weight;
    }

    std::optional<ContractionRecord> contract(VertexId z) {
        auto& heap = in_heap_[z];
        while (!heap.empty() && !live(heap.front(), z)) {
            std::pop_heap(heap.begin(), heap.end());
            heap.pop_back();
        }
        if (heap.empty()) return std::nullopt;

        ContractionRecord record;
        record.z = z;
        record.y = heap.front().tail;
        record.w_yz = heap.front().weight;
        const VertexId y = record.y;

        ++current_stamp_;
        std::vector<std::pair<VertexId, Weight>> tails;
        for (const HeapEntry& e : in_heap_[y]) {
            const VertexId u = e.tail;
            if (u == y || !alive_[u] || stamp_[u] == current_stamp_) continue;
            const std::size_t i = find_arc(u, y);
            if (i == npos) continue;
            stamp_[u] = current_stamp_;
            tails.emplace_back(u, out_[u][i].weight);
        }
        std::sort(tails.begin(), tails.end());

        for (const auto& [u, w_uy] : tails) {
            record.rerouted.push_back(u);
            const Weight merged = contracted_weight(w_uy, record.w_yz);
            auto& out = out_[u];
            const std::size_t to_y = find_arc(u, y);
            const std::size_t to_z = find_arc(u, z);
            if (to_z != npos) {
                if (out[to_z].weight > record.w_yz) {
                    throw Error(ErrorCode::Internal, "overwritten arc heavier than the chosen in-arc");
                }
                record.overwritten.emplace_back(u, out[to_z].weight);
                out[to_z].weight = merged;
                out[to_y] = out.back();
                out.pop_back();
            } else {
                out[to_y] = OutArc{z, merged};
            }
            heap.push_back({merged, u});
            std::push_heap(heap.begin(), heap.end());
            if (u == z) {
                looped_[z] = 1;
                ++loops_;
                loopless_.erase(z);
            }
        }

        if (looped_[y]) --loops_;
        kill(y);
        return record;
    }

    void kill(VertexId v) {
        alive_[v] = 0;
        looped_[v] = 0;
        loopless_.erase(v);
        std::vector<OutArc>().swap(out_[v]);
        std::vector<HeapEntry>().swap(in_heap_[v]);
        --alive_count_;
    }

    /// Returns the removed vertices when the live graph is not strongly connected.
    std::optional<std::vector<VertexId>> restrict_to_sink_component() {
        auto parts = tarjan_components(
            alive_.size(), [&](VertexId v) { return alive_[v] != 0; },
            [&](VertexId v) { return out_[v].size(); },
            [&](VertexId v, std::size_t i) { return out_[v][i].head; });
        if (parts.size() <= 1) return std::nullopt;

        constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
        std::vector<std::size_t> part_of(alive_.size(), none);
        for (std::size_t p = 0; p < parts.size(); ++p) {
            for (VertexId v : parts[p]) part_of[v] = p;
        }
        std::size_t best = none;
        VertexId best_min = 0;
        for (std::size_t p = 0; p < parts.size(); ++p) {
            bool closed = true;
            VertexId smallest = std::numeric_limits<VertexId>::max();
            for (VertexId v : parts[p]) {
                smallest = std::min(smallest, v);
                for (const OutArc& a : out_[v]) closed = closed && part_of[a.head] == p;
            }
            if (closed && (best == none || smallest < best_min)) {
                best = p;
                best_min = smallest;
            }
        }
        std::vector<VertexId> removed;
        for (std::size_t p = 0; p < parts.size(); ++p) {
            if (p == best) continue;
            for (VertexId v : parts[p]) {
                if (looped_[v]) --loops_;
                kill(v);
                removed.push_back(v);
            }
        }
        std::sort(removed.begin(), removed.end());
        return removed;
    }

    std::pair<VertexId, Weight> heaviest_loop() const {
        std::optional<std::pair<VertexId, Weight>> best;
        for (VertexId v = 0; v < alive_.size(); ++v) {
            if (!alive_[v]) continue;
            const Weight w = out_[v][find_arc(v, v)].weight;
            if (!best || w > best->second) best = {v, w};
        }
        return *best;
    }

    void strip_loops() {
        for (VertexId v = 0; v < alive_.size(); ++v) {
            if (!alive_[v]) continue;
            auto& out = out_[v];
            const std::size_t i = find_arc(v, v);
            out[i] = out.back();
            out.pop_back();
            looped_[v] = 0;
            loopless_.insert(v);
        }
        loops_ = 0;
    }

    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    EngineOptions options_;
    std::vector<char> alive_;
    std::vector<char> looped_;
    std::vector<std::vector<OutArc>> out_;
    std::vector<std::vector<HeapEntry>> in_heap_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t current_stamp_ = 0;
    std::set<VertexId> loopless_;
    std::size_t alive_count_;
    std::size_t loops_;
};

/// Replays the trace backwards from the terminal loop.
inline std::vector<VertexId> lift_through_trace(const ReductionTrace& trace, std::size_t vertex_count) {
    constexpr VertexId none = std::numeric_limits<VertexId>::max();
    std::vector<VertexId> next(vertex_count, none);
    std::vector<VertexId> prev(vertex_count, none);
    const VertexId start = trace.terminal_vertex;
    next[start] = prev[start] = start;

    for (auto step = trace.steps.rbegin(); step != trace.steps.rend(); ++step) {
        const auto* record = std::get_if<ContractionRecord>(&step->action);
        if (record == nullptr || next[record->z] == none) continue;
        const VertexId x = prev[record->z];
        if (!record->reroutes(x)) continue;
        next[x] = record->y;
        prev[record->y] = x;
        next[record->y] = record->z;
        prev[record->z] = record->y;
    }

    std::vector<VertexId> vertices{start};
    for (VertexId v = next[start]; v != start; v = next[v]) vertices.push_back(v);
    return vertices;
}

}  // namespace detail

/// Finds a directed cycle of weight at least 1/log2(n + r) in a graph whose
/// every vertex has weighted outdegree at least 1, by reducing the graph one
/// step at a time (sink-component restriction, contraction of the heaviest
/// in-neighbour into a loopless vertex, or loop deletion once every vertex is
/// looped) and lifting the terminal loop back to the input.
///
/// The outdegree hypothesis is carried as a running scale, starting at the
/// minimum weighted outdegree of the input and multiplied by the credit of
/// each loop deletion, so the loop thresholds scale with the weights.
inline HeavyCycleResult find_heavy_cycle_traced(const WeightedDigraph& g, EngineOptions options = {}) {
    if (g.vertex_count() == 0) throw Error(ErrorCode::DegenerateSize, "graph has no vertices");
    Weight scale = std::numeric_limits<Weight>::infinity();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const Weight d = g.weighted_outdegree(v);
        if (d < 1.0 - options.tolerance) {
            throw Error(ErrorCode::PreconditionViolated,
                        "vertex " + std::to_string(v) + " has weighted outdegree " + std::to_string(d) + " < 1",
                        std::nullopt, v);
        }
        scale = std::min(scale, d);
    }

    HeavyCycleResult result;
    result.trace = detail::ReductionEngine(g, options).run(scale);

    CycleCertificate& cert = result.certificate;
    try {
        cert.cycle = make_cycle(g, detail::lift_through_trace(result.trace, g.vertex_count()));
    } catch (const Error& e) {
        throw Error(ErrorCode::Internal, std::string("lifted sequence is not a cycle: ") + e.what());
    }
    cert.n = g.vertex_count();
    cert.r = g.loop_count();
    cert.bound = bound_value(cert.n, cert.r);
    cert.achieved = cert.cycle.weight;
    cert.valid = cert.achieved >= cert.bound - options.tolerance;
    return result;
}

inline CycleCertificate find_heavy_cycle(const WeightedDigraph& g, EngineOptions options = {}) {
    return find_heavy_cycle_traced(g, options).certificate;
}

/// One line per step, for `--trace` output.
inline std::string describe(const ReductionStep& step) {
    std::ostringstream os;
    if (const auto* s = std::get_if<SinkRestrict>(&step.action)) {
        os << "sink-restrict (not strongly connected): removed " << s->removed.size() << " vertices";
    } else if (const auto* c = std::get_if<ContractionRecord>(&step.action)) {
        os << "contract z=" << c->z << " y=" << c->y << " w(y,z)=" << c->w_yz << " rerouted="
           << c->rerouted.size() << " overwritten=" << c->overwritten.size()
           << (c->creates_loop() ? " new-loop" : "");
    } else if (const auto* l = std::get_if<StripLoops>(&step.action)) {
        os << "strip-loops (all vertices looped, every loop below " << l->target << "): credit " << l->credit;
    }
    os << "  [n=" << step.before.n << " r=" << step.before.r << " -> n=" << step.after.n
       << " r=" << step.after.r << "]";
    return os.str();
}

inline std::string describe(const ReductionTrace& trace) {
    std::ostringstream os;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) os << "step " << i + 1 << ": " << describe(trace.steps[i]) << "\n";
    os << (trace.terminal == Terminal::SingleVertex ? "base: single vertex " : "heavy-loop: vertex ")
       << trace.terminal_vertex << " (target " << trace.terminal_target << ")\n";
    return os.str();
}

}  // namespace heavycycle
