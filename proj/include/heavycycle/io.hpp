#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "heavycycle/cycle.hpp"
#include "heavycycle/digraph.hpp"

// Edge-list documents:
//
//   # comment lines start with '#'
//   n m
//   u v w        (m lines; 0-based endpoints, decimal weight, "u u w" is a loop)
//
// Certificate documents are "key value" lines: n, r, bound, achieved, valid,
// and cycle (the vertex sequence closed by repeating its first vertex).

namespace heavycycle {

namespace io_detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (i < line.size()) {
        while (i < line.size() && blank(line[i])) ++i;
        const std::size_t start = i;
        while (i < line.size() && !blank(line[i])) ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

template <class T>
bool parse_number(std::string_view text, T& out) {
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc() && ptr == end;
}

/// Non-comment, non-blank lines with their 1-based line numbers.
inline std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        const std::string_view line = text.substr(pos, end - pos);
        const std::size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line[first] != '#') lines.emplace_back(number, line);
        if (end == text.size()) break;
        pos = end + 1;
    }
    return lines;
}

}  // namespace io_detail

inline std::string format_weight(double w) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", w);
    return buf;
}

inline std::string format_bound(double b) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", b);
    return buf;
}

inline WeightedDigraph parse_edge_list(std::string_view text) {
    using io_detail::parse_number;
    const auto lines = io_detail::content_lines(text);
    if (lines.empty()) throw Error(ErrorCode::ParseError, "missing header line \"n m\"", 1);

    const auto [header_line, header] = lines.front();
    const auto head_fields = io_detail::split_fields(header);
    std::size_t n = 0;
    std::size_t m = 0;
    if (head_fields.size() != 2 || !parse_number(head_fields[0], n) || !parse_number(head_fields[1], m)) {
        throw Error(ErrorCode::ParseError, "expected header \"n m\"", header_line);
    }
    if (lines.size() - 1 != m) {
        throw Error(ErrorCode::ParseError,
                    "header announces " + std::to_string(m) + " arcs but " + std::to_string(lines.size() - 1) +
                        " arc lines follow",
                    lines.size() - 1 < m ? lines.back().first : lines[m + 1].first);
    }

    WeightedDigraph g(n);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto [number, line] = lines[i];
        const auto fields = io_detail::split_fields(line);
        VertexId u = 0;
        VertexId v = 0;
        double w = 0.0;
        if (fields.size() != 3 || !parse_number(fields[0], u) || !parse_number(fields[1], v) ||
            !parse_number(fields[2], w)) {
            throw Error(ErrorCode::ParseError, "expected \"u v w\"", number);
        }
        if (u >= n || v >= n) throw Error(ErrorCode::ParseError, "endpoint out of range", number);
        if (!std::isfinite(w)) throw Error(ErrorCode::ParseError, "weight is not finite", number);
        if (w < 0.0) throw Error(ErrorCode::NegativeWeight, "negative weight " + std::string(fields[2]), number);
        if (g.has_arc(u, v)) {
            throw Error(ErrorCode::DuplicateArc,
                        "arc (" + std::to_string(u) + "," + std::to_string(v) + ") repeated", number);
        }
        g.add_arc(u, v, w + 0.0);
    }
    return g;
}

inline std::string write_edge_list(const WeightedDigraph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.arc_count()) + "\n";
    for (const Arc& a : g.arcs()) {
        out += std::to_string(a.tail) + " " + std::to_string(a.head) + " " + format_weight(a.weight) + "\n";
    }
    return out;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw Error(ErrorCode::ParseError, "cannot write " + path);
}

inline WeightedDigraph read_edge_list(const std::string& path) { return parse_edge_list(read_text_file(path)); }

inline std::string write_certificate(const CycleCertificate& cert) {
    std::string out = "# heavy cycle certificate\n";
    out += "n " + std::to_string(cert.n) + "\n";
    out += "r " + std::to_string(cert.r) + "\n";
    out += "bound " + format_bound(cert.bound) + "\n";
    out += "achieved " + format_weight(cert.achieved) + "\n";
    out += std::string("valid ") + (cert.valid ? "true" : "false") + "\n";
    out += "cycle " + cert.cycle.to_string() + "\n";
    return out;
}

inline CycleCertificate parse_certificate(std::string_view text) {
    using io_detail::parse_number;
    CycleCertificate cert;
    bool seen[6] = {};
    for (const auto& [number, line] : io_detail::content_lines(text)) {
        const auto fields = io_detail::split_fields(line);
        const std::string_view key = fields.front();
        auto single = [&, number = number](auto& target, int slot) {
            if (fields.size() != 2 || !parse_number(fields[1], target)) {
                throw Error(ErrorCode::ParseError, "malformed '" + std::string(key) + "' line", number);
            }
            seen[slot] = true;
        };
        if (key == "n") {
            single(cert.n, 0);
        } else if (key == "r") {
            single(cert.r, 1);
        } else if (key == "bound") {
            single(cert.bound, 2);
        } else if (key == "achieved") {
            single(cert.achieved, 3);
        } else if (key == "valid") {
            if (fields.size() != 2 || (fields[1] != "true" && fields[1] != "false")) {
                throw Error(ErrorCode::ParseError, "valid must be true or false", number);
            }
            cert.valid = fields[1] == "true";
            seen[4] = true;
        } else if (key == "cycle") {
            if (fields.size() < 3) throw Error(ErrorCode::ParseError, "cycle needs at least \"v v\"", number);
            std::vector<VertexId> vs(fields.size() - 1);
            for (std::size_t i = 1; i < fields.size(); ++i) {
                if (!parse_number(fields[i], vs[i - 1])) throw Error(ErrorCode::ParseError, "bad cycle vertex", number);
            }
            if (vs.back() != vs.front()) throw Error(ErrorCode::ParseError, "cycle must end at its first vertex", number);
            vs.pop_back();
            cert.cycle.vertices = std::move(vs);
            seen[5] = true;
        } else {
            throw Error(ErrorCode::ParseError, "unknown key '" + std::string(key) + "'", number);
        }
    }
    static constexpr const char* names[6] = {"n", "r", "bound", "achieved", "valid", "cycle"};
    for (int i = 0; i < 6; ++i) {
        if (!seen[i]) throw Error(ErrorCode::ParseError, std::string("missing '") + names[i] + "' line");
    }
    cert.cycle.weight = cert.achieved;
    return cert;
}

}  // namespace heavycycle
