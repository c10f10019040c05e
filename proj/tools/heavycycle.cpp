// heavycycle: command-line front end.
//
// Exit codes: 0 success, 1 bad input (parse/IO/arguments), 2 hypothesis not
// met, 3 oracle cycle cap exceeded, 4 certificate rejected, 5 internal error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "heavycycle/bench.hpp"
#include "heavycycle/certificate.hpp"
#include "heavycycle/generators.hpp"
#include "heavycycle/heavy_cycle.hpp"
#include "heavycycle/io.hpp"
#include "heavycycle/oracle.hpp"

namespace hc = heavycycle;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitCap = 3;
constexpr int kExitRejected = 4;

constexpr int kExitInternal = 5;

int exit_code_for(const hc::Error& e) {
    switch (e.code()) {
    case hc::ErrorCode::PreconditionViolated:
    case hc::ErrorCode::DegenerateSize:
    case hc::ErrorCode::EmptyGraph:
    case hc::ErrorCode::NoCycle:
        return kExitPrecondition;
    case hc::ErrorCode::CapExceeded:
        return kExitCap;
    case hc::ErrorCode::Internal:
        return kExitInternal;
    default:
        return kExitInput;
    }
}

std::uint64_t oracle_cap_from_env() {
    if (const char* env = std::getenv("HEAVYCYCLE_ORACLE_CAP")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw hc::Error(hc::ErrorCode::InvalidArgument, "HEAVYCYCLE_ORACLE_CAP is not an integer");
        }
    }
    return hc::kDefaultCycleCap;
}

int cmd_find(const std::string& path, bool trace, double tolerance, const std::string& scc) {
    const hc::WeightedDigraph g = hc::read_edge_list(path);
    hc::EngineOptions options;
    options.tolerance = tolerance;
    if (scc == "every-step") options.scc_policy = hc::SccPolicy::EveryStep;
    const hc::HeavyCycleResult result = hc::find_heavy_cycle_traced(g, options);
    if (trace) std::cerr << hc::describe(result.trace);
    std::cout << hc::write_certificate(result.certificate);
    return result.certificate.valid ? kExitOk : kExitRejected;
}

int cmd_check(const std::string& graph_path, const std::string& cert_path) {
    const hc::WeightedDigraph g = hc::read_edge_list(graph_path);
    const hc::CycleCertificate cert = hc::parse_certificate(hc::read_text_file(cert_path));
    const hc::CertificateCheck check = hc::verify_certificate(g, cert);
    if (!check) {
        std::cout << "rejected: " << hc::to_string(check.verdict);
        if (!check.detail.empty()) std::cout << " (" << check.detail << ")";
        std::cout << "\n";
        return kExitRejected;
    }
    std::cout << "ok: weight " << hc::format_weight(check.recomputed_weight) << " >= bound "
              << hc::format_bound(cert.bound) << "\n";
    return kExitOk;
}

int cmd_oracle(const std::string& path, std::optional<std::uint64_t> cap) {
    const hc::WeightedDigraph g = hc::read_edge_list(path);
    const hc::DirectedCycle best = hc::max_weight_cycle(g, cap.value_or(oracle_cap_from_env()));
    std::cout << "weight " << hc::format_weight(best.weight) << "\n";
    std::cout << "length " << best.length() << "\n";
    std::cout << "cycle " << best.to_string() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heavy directed cycles in weighted digraphs"};
    app.require_subcommand(1);

    auto* find = app.add_subcommand("find", "Find a cycle of weight >= 1/log2(n+r) and print its certificate");
    std::string find_path;
    bool find_trace = false;
    double find_tolerance = hc::kTolerance;
    std::string find_scc = "on-demand";
    find->add_option("graph", find_path, "Edge-list file")->required();
    find->add_flag("--trace", find_trace, "Print the reduction steps to stderr");
    find->add_option("--tolerance", find_tolerance, "Slack for the hypothesis and bound checks");
    find->add_option("--scc", find_scc, "When to recompute strong components")
        ->check(CLI::IsMember({"on-demand", "every-step"}));

    auto* check = app.add_subcommand("check", "Verify a certificate against a graph");
    std::string check_graph;
    std::string check_cert;
    check->add_option("graph", check_graph, "Edge-list file")->required();
    check->add_option("certificate", check_cert, "Certificate file")->required();

    auto* oracle = app.add_subcommand("oracle", "Exact maximum-weight cycle by enumeration (small graphs)");
    std::string oracle_path;
    std::optional<std::uint64_t> oracle_cap;
    oracle->add_option("graph", oracle_path, "Edge-list file")->required();
    oracle->add_option("--cap", oracle_cap, "Maximum number of cycles to enumerate");

    auto* gen = app.add_subcommand("gen", "Generate an instance");
    std::string gen_family = "normalized";
    std::size_t gen_n = 5;
    std::size_t gen_k = 2;
    double gen_eps = 0.2;
    std::size_t gen_d = 2;
    std::size_t gen_layers = 3;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--family", gen_family, "normalized | loopheavy | unweighted | layered")
        ->check(CLI::IsMember({"normalized", "loopheavy", "unweighted", "layered"}));
    gen->add_option("--n", gen_n, "Vertex count");
    gen->add_option("--k", gen_k, "Out-neighbours per vertex (normalized)");
    gen->add_option("--eps", gen_eps, "Loop weight (loopheavy)");
    gen->add_option("--d", gen_d, "Out-degree (unweighted)");
    gen->add_option("--layers", gen_layers, "Number of blocks (layered)");
    gen->add_option("--seed", gen_seed, "Random seed");
    gen->add_option("--out", gen_out, "Output file (default: stdout)");

    auto* bench = app.add_subcommand("bench", "Sweep a family and write bound-vs-observed CSV");
    std::string bench_family = "normalized";
    std::vector<std::size_t> bench_sizes{4, 8, 16};
    double bench_param = 2.0;
    std::size_t bench_seeds = 10;
    std::uint64_t bench_first_seed = 0;
    std::size_t bench_oracle_n = 12;
    unsigned bench_jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string bench_out;
    bench->add_option("--family", bench_family, "normalized | loopheavy | unweighted | layered")
        ->check(CLI::IsMember({"normalized", "loopheavy", "unweighted", "layered"}));
    bench->add_option("--n", bench_sizes, "Sizes to sweep (layer counts for layered)")->delimiter(',');
    bench->add_option("--param", bench_param, "k, loop weight, or d, depending on family");
    bench->add_option("--seeds", bench_seeds, "Seeds per size");
    bench->add_option("--first-seed", bench_first_seed, "First seed of each sweep");
    bench->add_option("--oracle-max-n", bench_oracle_n, "Largest n that also gets the exact optimum");
    bench->add_option("--jobs", bench_jobs, "Worker threads");
    bench->add_option("--out", bench_out, "CSV file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e);
        return status == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*find) return cmd_find(find_path, find_trace, find_tolerance, find_scc);
        if (*check) return cmd_check(check_graph, check_cert);
        if (*oracle) return cmd_oracle(oracle_path, oracle_cap);
        if (*gen) {
            hc::GenSpec spec{hc::parse_family(gen_family), gen_n, 0.0, gen_seed};
            switch (spec.family) {
            case hc::Family::NormalizedRandom: spec.param = static_cast<double>(gen_k); break;
            case hc::Family::LoopHeavy: spec.param = gen_eps; break;
            case hc::Family::UnweightedOutdegreeD: spec.param = static_cast<double>(gen_d); break;
            case hc::Family::LayeredSink: spec.n = gen_layers; break;
            }
            const std::string text = hc::write_edge_list(hc::generate(spec));
            if (gen_out.empty()) {
                std::cout << text;
            } else {
                hc::write_text_file(gen_out, text);
            }
            return kExitOk;
        }
        if (*bench) {
            hc::BenchConfig config;
            config.family = hc::parse_family(bench_family);
            config.sizes = bench_sizes;
            config.param = bench_param;
            config.seeds = bench_seeds;
            config.first_seed = bench_first_seed;
            config.oracle_max_n = bench_oracle_n;
            config.oracle_cap = oracle_cap_from_env();
            config.jobs = bench_jobs;
            std::string csv = hc::bench_csv_header();
            for (const auto& row : hc::run_bench(config)) csv += hc::bench_csv_row(row);
            if (bench_out.empty()) {
                std::cout << csv;
            } else {
                hc::write_text_file(bench_out, csv);
            }
            return kExitOk;
        }
    } catch (const hc::Error& e) {
        std::cerr << "error: " << e.what();
        if (e.line()) std::cerr << " (line " << *e.line() << ")";
        if (e.vertex()) std::cerr << " [vertex " << *e.vertex() << "]";
        std::cerr << "\n";
        return exit_code_for(e);
    }
    return kExitOk;
}
