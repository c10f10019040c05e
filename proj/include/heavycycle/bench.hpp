#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "heavycycle/generators.hpp"
#include "heavycycle/heavy_cycle.hpp"
#include "heavycycle/io.hpp"
#include "heavycycle/oracle.hpp"

namespace heavycycle {

struct BenchConfig {
    Family family = Family::NormalizedRandom;
    std::vector<std::size_t> sizes{4, 8, 16};
    double param = 2.0;
    std::size_t seeds = 10;
    std::uint64_t first_seed = 0;
    /// Instances with at most this many vertices also get the exact optimum.
    std::size_t oracle_max_n = 12;
    std::uint64_t oracle_cap = kDefaultCycleCap;
    unsigned jobs = 1;
};

struct BenchRow {
    std::string family;
    std::size_t n = 0;
    std::size_t r = 0;
    std::uint64_t seed = 0;
    double bound_guaranteed = 0.0;
    std::optional<double> bound_conjectured;
    double bound_cube_root = 0.0;
    double achieved = 0.0;
    std::optional<double> oracle_max;
    double runtime_ms = 0.0;
};

inline BenchRow bench_instance(const GenSpec& spec, const BenchConfig& config) {
    const WeightedDigraph g = generate(spec);
    BenchRow row;
    row.family = to_string(spec.family);
    row.n = g.vertex_count();
    row.r = g.loop_count();
    row.seed = spec.seed;
    row.bound_guaranteed = 1.0 / std::log2(static_cast<double>(row.n + row.r));
    if (row.n >= 2) row.bound_conjectured = 2.0 / std::log2(static_cast<double>(row.n));
    row.bound_cube_root = std::cbrt(1.0 / (24.0 * static_cast<double>(row.n)));

    const auto start = std::chrono::steady_clock::now();
    const CycleCertificate cert = find_heavy_cycle(g);
    row.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    row.achieved = cert.achieved;

    if (row.n <= config.oracle_max_n) {
        try {
            row.oracle_max = max_weight_cycle(g, config.oracle_cap).weight;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::CapExceeded) throw;
        }
    }
    return row;
}

/// One row per (size, seed), in sweep order regardless of `jobs`.
inline std::vector<BenchRow> run_bench(const BenchConfig& config) {
    std::vector<GenSpec> specs;
    for (std::size_t n : config.sizes) {
        for (std::size_t s = 0; s < config.seeds; ++s) {
            specs.push_back({config.family, n, config.param, config.first_seed + s});
        }
    }
    std::vector<BenchRow> rows(specs.size());
    std::vector<std::exception_ptr> errors(specs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) {
            try {
                rows[i] = bench_instance(specs[i], config);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned jobs = std::max(1u, config.jobs);
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return rows;
}

inline std::string bench_csv_header() {
    return "family,n,r,seed,bound_proven,bound_conj,bound_cuberoot,achieved_algorithm,oracle_max,runtime_ms\n";
}

inline std::string bench_csv_row(const BenchRow& row) {
    auto opt = [](const std::optional<double>& x) { return x ? format_weight(*x) : std::string(); };
    char runtime[32];
    std::snprintf(runtime, sizeof runtime, "%.3f", row.runtime_ms);
    return row.family + "," + std::to_string(row.n) + "," + std::to_string(row.r) + "," + std::to_string(row.seed) +
           "," + format_weight(row.bound_guaranteed) + "," + opt(row.bound_conjectured) + "," +
           format_weight(row.bound_cube_root) + "," + format_weight(row.achieved) + "," + opt(row.oracle_max) +
           "," + runtime + "\n";
}

}  // namespace heavycycle
