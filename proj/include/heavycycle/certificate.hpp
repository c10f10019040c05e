#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "heavycycle/cycle.hpp"
#include "heavycycle/digraph.hpp"

namespace heavycycle {

enum class CertificateVerdict {
    Ok,
    MarkedInvalid,
    SizeMismatch,
    LoopCountMismatch,
    EmptyCycle,
    VertexOutOfRange,
    RepeatedVertex,
    MissingArc,
    WeightMismatch,
    BoundMismatch,
    BelowBound,
};

inline const char* to_string(CertificateVerdict v) {
    switch (v) {
    case CertificateVerdict::Ok: return "ok";
    case CertificateVerdict::MarkedInvalid: return "certificate marked invalid";
    case CertificateVerdict::SizeMismatch: return "vertex count does not match graph";
    case CertificateVerdict::LoopCountMismatch: return "loop count does not match graph";
    case CertificateVerdict::EmptyCycle: return "cycle is empty";
    case CertificateVerdict::VertexOutOfRange: return "cycle vertex out of range";
    case CertificateVerdict::RepeatedVertex: return "cycle repeats a vertex";
    case CertificateVerdict::MissingArc: return "cycle uses an arc absent from the graph";
    case CertificateVerdict::WeightMismatch: return "claimed weight differs from the recomputed weight";
    case CertificateVerdict::BoundMismatch: return "claimed bound differs from 1/log2(n+r)";
    case CertificateVerdict::BelowBound: return "cycle weight below the bound";
    }
    return "unknown";
}

struct CertificateCheck {
    CertificateVerdict verdict = CertificateVerdict::Ok;
    double recomputed_weight = 0.0;
    std::string detail;

    bool ok() const noexcept { return verdict == CertificateVerdict::Ok; }
    explicit operator bool() const noexcept { return ok(); }
};

/// Re-checks a certificate against the graph from scratch. Uses only the
/// graph type: the cycle is walked arc by arc, the weight re-summed and the
/// bound recomputed here.
inline CertificateCheck verify_certificate(const WeightedDigraph& g, const CycleCertificate& cert) {
    constexpr double slack = 1e-9;
    CertificateCheck check;
    auto fail = [&](CertificateVerdict v, std::string detail = {}) {
        check.verdict = v;
        check.detail = std::move(detail);
        return check;
    };

    if (!cert.valid) return fail(CertificateVerdict::MarkedInvalid);
    if (cert.n != g.vertex_count()) {
        return fail(CertificateVerdict::SizeMismatch,
                    "certificate n=" + std::to_string(cert.n) + ", graph n=" + std::to_string(g.vertex_count()));
    }
    if (cert.r != g.loop_count()) {
        return fail(CertificateVerdict::LoopCountMismatch,
                    "certificate r=" + std::to_string(cert.r) + ", graph r=" + std::to_string(g.loop_count()));
    }

    const auto& vs = cert.cycle.vertices;
    if (vs.empty()) return fail(CertificateVerdict::EmptyCycle);
    std::vector<char> seen(g.vertex_count(), 0);
    for (VertexId v : vs) {
        if (v >= g.vertex_count()) return fail(CertificateVerdict::VertexOutOfRange, std::to_string(v));
        if (seen[v]) return fail(CertificateVerdict::RepeatedVertex, std::to_string(v));
        seen[v] = 1;
    }

    // Sum from the smallest vertex so the total matches the canonical order.
    const std::size_t start = static_cast<std::size_t>(std::min_element(vs.begin(), vs.end()) - vs.begin());
    double total = 0.0;
    for (std::size_t k = 0; k < vs.size(); ++k) {
        const VertexId tail = vs[(start + k) % vs.size()];
        const VertexId head = vs[(start + k + 1) % vs.size()];
        const auto w = g.weight(tail, head);
        if (!w) {
            return fail(CertificateVerdict::MissingArc,
                        "(" + std::to_string(tail) + "," + std::to_string(head) + ")");
        }
        total += *w;
    }
    check.recomputed_weight = total;

    if (std::abs(total - cert.achieved) > slack * std::max(1.0, std::abs(total))) {
        return fail(CertificateVerdict::WeightMismatch,
                    "claimed " + std::to_string(cert.achieved) + ", recomputed " + std::to_string(total));
    }
    const std::size_t size = g.vertex_count() + g.loop_count();
    if (size < 2) return fail(CertificateVerdict::BoundMismatch, "n + r < 2");
    const double bound = 1.0 / std::log2(static_cast<double>(size));
    if (std::abs(bound - cert.bound) > slack) {
        return fail(CertificateVerdict::BoundMismatch,
                    "claimed " + std::to_string(cert.bound) + ", expected " + std::to_string(bound));
    }
    if (total < bound - slack) {
        return fail(CertificateVerdict::BelowBound,
                    std::to_string(total) + " < " + std::to_string(bound));
    }
    return check;
}

}  // namespace heavycycle
