// Test-only oracles, kept independent of the library's query structures:
// brute-force edge enumeration, boolean-matrix reachability, and
// matrix-power chain-mixing. Everything here is O(n^2) or worse on purpose.

#pragma once

#include <vector>

#include "netdyn/chain_analysis.hpp"
#include "netdyn/transition_graph.hpp"

namespace oracles {

using netdyn::MetricKind;
using netdyn::NetSpace;
using netdyn::Point;
using netdyn::Rational;
using netdyn::SystemDef;
using netdyn::TransitionGraph;

// all-pairs metric evaluation, no sorted-index queries
inline std::vector<std::vector<uint32_t>> brute_force_edges(const SystemDef& sys,
                                                            const NetSpace& net,
                                                            const Rational& delta) {
    std::vector<std::vector<uint32_t>> succ(net.size());
    for (uint32_t u = 0; u < net.size(); ++u) {
        Point fu = eval_map(sys, net.points[u]);
        for (uint32_t v = 0; v < net.size(); ++v)
            if (metric_dist(fu, net.points[v]) <= delta) succ[u].push_back(v);
    }
    return succ;
}

using BoolMat = std::vector<std::vector<char>>;

inline BoolMat adjacency_matrix(const std::vector<std::vector<uint32_t>>& succ) {
    BoolMat m(succ.size(), std::vector<char>(succ.size(), 0));
    for (size_t u = 0; u < succ.size(); ++u)
        for (uint32_t v : succ[u]) m[u][v] = 1;
    return m;
}

inline BoolMat bool_mult(const BoolMat& a, const BoolMat& b) {
    size_t n = a.size();
    BoolMat c(n, std::vector<char>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            if (a[i][k])
                for (size_t j = 0; j < n; ++j)
                    if (b[k][j]) c[i][j] = 1;
    return c;
}

// reach[i][j]: path of length >= 1 from i to j (transitive closure)
inline BoolMat positive_closure(const BoolMat& adj) {
    size_t n = adj.size();
    BoolMat r = adj;
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            if (r[i][k])
                for (size_t j = 0; j < n; ++j)
                    if (r[k][j]) r[i][j] = 1;
    return r;
}

// recurrent nodes and mutual-reachability classes straight from the closure
struct ClosureAnalysis {
    std::vector<uint32_t> recurrent;
    std::vector<std::vector<uint32_t>> components;
};

inline ClosureAnalysis closure_analysis(const std::vector<std::vector<uint32_t>>& succ) {
    BoolMat r = positive_closure(adjacency_matrix(succ));
    size_t n = succ.size();
    ClosureAnalysis out;
    std::vector<char> placed(n, 0);
    for (uint32_t v = 0; v < n; ++v)
        if (r[v][v]) out.recurrent.push_back(v);
    for (uint32_t v : out.recurrent) {
        if (placed[v]) continue;
        std::vector<uint32_t> comp;
        for (uint32_t w : out.recurrent)
            if (r[v][w] && r[w][v]) {
                comp.push_back(w);
                placed[w] = 1;
            }
        out.components.push_back(comp);
    }
    return out;
}

// chain mixing by brute force: some power k0 of the adjacency matrix is
// all-ones and stays all-ones for n consecutive powers
inline bool mixing_by_matrix_powers(const std::vector<std::vector<uint32_t>>& succ,
                                    size_t max_power) {
    BoolMat a = adjacency_matrix(succ);
    BoolMat p = a;
    size_t n = succ.size();
    size_t consecutive = 0;
    for (size_t k = 1; k <= max_power; ++k) {
        bool all = true;
        for (const auto& row : p)
            for (char c : row)
                if (!c) all = false;
        consecutive = all ? consecutive + 1 : 0;
        if (consecutive >= n + 1) return true;
        p = bool_mult(p, a);
    }
    return false;
}

}  // namespace oracles
