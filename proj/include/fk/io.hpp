#pragma once

#include <cmath>
#include <cstdio>
#include <istream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "fk/enumerate.hpp"
#include "fk/slo.hpp"
#include "fk/spectral.hpp"
#include "fk/supertree.hpp"

namespace fk::io {

inline std::string fixed12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", x);
    return buf;
}

namespace detail {

inline int parse_int(const std::string& tok, int line) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != tok.size()) fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": '" + tok + "' is not an integer");
    return v;
}

inline std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

} // namespace detail

/// Reads the line-based format: `k <k>`, `n <n>`, then `e <id>...` per edge.
/// Blank lines and lines starting with '#' are skipped.
inline Supertree parse_supertree(std::istream& in) {
    int k = -1, n = -1, line_no = 0;
    std::vector<Edge> edges;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        auto toks = detail::tokens(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        const std::string& tag = toks[0];
        if (k < 0) {
            if (tag != "k" || toks.size() != 2) fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'k <k>'");
            k = detail::parse_int(toks[1], line_no);
        } else if (n < 0) {
            if (tag != "n" || toks.size() != 2) fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'n <n>'");
            n = detail::parse_int(toks[1], line_no);
        } else {
            if (tag != "e") fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'e <id> ...'");
            Edge e;
            for (std::size_t i = 1; i < toks.size(); ++i) e.push_back(detail::parse_int(toks[i], line_no));
            edges.push_back(std::move(e));
        }
    }
    if (k < 0 || n < 0) fail(ErrorCode::ParseError, "missing 'k' or 'n' header");
    return build_supertree(k, n, std::move(edges));
}

inline Supertree parse_supertree(const std::string& text) {
    std::istringstream in(text);
    return parse_supertree(in);
}

inline std::string serialize(const Supertree& g) {
    std::string out = "k " + std::to_string(g.k()) + "\nn " + std::to_string(g.order()) + "\n";
    for (const Edge& e : g.edges()) {
        out += "e";
        for (VertexId v : e) out += " " + std::to_string(v);
        out += "\n";
    }
    return out;
}

inline VertexOrdering parse_ordering(const std::string& text) {
    auto toks = detail::tokens(text);
    if (!toks.empty() && toks[0] == "order") toks.erase(toks.begin());
    VertexOrdering ord;
    for (const auto& t : toks) {
        // accept comma-separated lists as well as spaces
        std::string s = t;
        for (char& c : s)
            if (c == ',') c = ' ';
        for (const auto& piece : detail::tokens(s)) ord.order.push_back(detail::parse_int(piece, 1));
    }
    if (ord.order.empty()) fail(ErrorCode::ParseError, "empty ordering");
    return ord;
}

inline std::string serialize(const VertexOrdering& ord) {
    std::string out = "order";
    for (VertexId v : ord.order) out += " " + std::to_string(v);
    return out + "\n";
}

inline std::string eigen_report(const Supertree& g, const DirichletEigenpair& ep) {
    std::string out = "lambda=" + fixed12(ep.lambda) + "\n";
    out += "gap=" + (std::isinf(ep.gap) ? std::string("inf") : fixed12(ep.gap)) + "\n";
    out += "vertex_id,is_interior,f_value\n";
    for (VertexId v = 0; v < g.order(); ++v)
        out += std::to_string(v) + "," + (g.is_interior(v) ? "1" : "0") + "," + fixed12(ep.f[static_cast<std::size_t>(v)]) + "\n";
    return out;
}

inline std::string relabel_report(const std::vector<RelabeledVertex>& labels, std::span<const double> f) {
    std::string out = "vertex_id,s,i,p,f_value\n";
    for (std::size_t v = 0; v < labels.size(); ++v)
        out += std::to_string(v) + "," + std::to_string(labels[v].s) + "," + std::to_string(labels[v].i) + "," +
               std::to_string(labels[v].p) + "," + fixed12(f[v]) + "\n";
    return out;
}

inline std::string certificate_summary(const FkCertificate& c) {
    return "family=" + to_string(c.family) + " unique=" + (c.unique ? "true" : "false") + " slo_match=" + (c.slo_match ? "true" : "false");
}

inline std::string certificate_report(const FkCertificate& c) {
    std::string out = "canonical_code,lambda,is_winner,is_slo\n";
    for (std::size_t i = 0; i < c.members.size(); ++i) {
        const auto& m = c.members[i];
        out += m.code.code + "," + fixed12(m.eigen.lambda) + "," + (i == c.winner ? "true" : "false") + "," + (m.is_slo ? "true" : "false") + "\n";
    }
    return out + certificate_summary(c) + "\n";
}

} // namespace fk::io
