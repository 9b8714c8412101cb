#include "netdyn/chain_analysis.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "netdyn/errors.hpp"
#include "netdyn/point.hpp"

namespace netdyn {

namespace {

// Iterative Tarjan; returns SCC id per node in discovery numbering.
std::pair<std::vector<int>, int> tarjan_scc(const std::vector<std::vector<uint32_t>>& succ) {
    size_t n = succ.size();
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<uint32_t> stack;
    int next_index = 0, comp_count = 0;

    struct Frame {
        uint32_t v;
        size_t child;
    };
    std::vector<Frame> frames;
    for (uint32_t root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        frames.push_back({root, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            uint32_t v = f.v;
            if (f.child == 0) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            bool descended = false;
            while (f.child < succ[v].size()) {
                uint32_t w = succ[v][f.child++];
                if (index[w] == -1) {
                    frames.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], index[w]);
            }
            if (descended) continue;
            if (low[v] == index[v]) {
                while (true) {
                    uint32_t w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = comp_count;
                    if (w == v) break;
                }
                ++comp_count;
            }
            frames.pop_back();
            if (!frames.empty()) {
                uint32_t parent = frames.back().v;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }
    return {std::move(comp), comp_count};
}

}  // namespace

ChainAnalysis analyze_chains(const TransitionGraph& g) {
    size_t n = g.size();
    ChainAnalysis a;
    a.delta = g.delta;

    auto [raw, raw_count] = tarjan_scc(g.succ);

    // canonical SCC numbering: by smallest member node
    std::vector<uint32_t> min_node(raw_count, static_cast<uint32_t>(n));
    for (uint32_t v = 0; v < n; ++v)
        min_node[raw[v]] = std::min(min_node[raw[v]], v);
    std::vector<int> order(raw_count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return min_node[x] < min_node[y]; });
    std::vector<int> renum(raw_count);
    for (int i = 0; i < raw_count; ++i) renum[order[i]] = i;

    a.scc_count = raw_count;
    a.scc_of_node.resize(n);
    for (uint32_t v = 0; v < n; ++v) a.scc_of_node[v] = renum[raw[v]];

    std::vector<size_t> scc_size(raw_count, 0);
    for (uint32_t v = 0; v < n; ++v) ++scc_size[a.scc_of_node[v]];

    a.scc_recurrent.assign(raw_count, 0);
    a.scc_succ.assign(raw_count, {});
    for (uint32_t v = 0; v < n; ++v) {
        for (uint32_t w : g.succ[v]) {
            if (v == w) a.scc_recurrent[a.scc_of_node[v]] = 1;  // self-loop
            if (a.scc_of_node[v] != a.scc_of_node[w])
                a.scc_succ[a.scc_of_node[v]].push_back(a.scc_of_node[w]);
        }
    }
    for (int s = 0; s < raw_count; ++s) {
        if (scc_size[s] >= 2) a.scc_recurrent[s] = 1;
        auto& e = a.scc_succ[s];
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
    }

    // recurrent components in canonical order
    std::vector<int> comp_id(raw_count, -1);
    for (int s = 0; s < raw_count; ++s)
        if (a.scc_recurrent[s]) {
            comp_id[s] = static_cast<int>(a.components.size());
            a.components.emplace_back();
            a.component_scc.push_back(s);
        }
    a.component_of_node.assign(n, -1);
    for (uint32_t v = 0; v < n; ++v) {
        int c = comp_id[a.scc_of_node[v]];
        a.component_of_node[v] = c;
        if (c >= 0) {
            a.components[c].push_back(v);
            a.recurrent_nodes.push_back(v);
        }
    }

    // order: C <= D iff condensation path; DFS per recurrent SCC
    size_t ncomp = a.components.size();
    for (size_t c = 0; c < ncomp; ++c) {
        std::vector<char> seen(raw_count, 0);
        std::vector<int> stack{a.component_scc[c]};
        seen[a.component_scc[c]] = 1;
        bool has_out = false;
        while (!stack.empty()) {
            int s = stack.back();
            stack.pop_back();
            if (s != a.component_scc[c] && comp_id[s] >= 0)
                a.order_pairs.emplace_back(static_cast<int>(c), comp_id[s]);
            for (int t : a.scc_succ[s]) {
                if (s == a.component_scc[c]) has_out = true;
                if (!seen[t]) {
                    seen[t] = 1;
                    stack.push_back(t);
                }
            }
        }
        if (!has_out) a.terminal.push_back(static_cast<int>(c));
    }
    std::sort(a.order_pairs.begin(), a.order_pairs.end());
    a.order_pairs.erase(std::unique(a.order_pairs.begin(), a.order_pairs.end()),
                        a.order_pairs.end());
    return a;
}

StabilityResult chain_stable_check(const TransitionGraph& g,
                                   const std::vector<uint32_t>& S, const Rational& eps) {
    if (S.empty()) throw ContractError("chain_stable_check: S is empty");
    size_t n = g.size();
    std::vector<int> parent(n, -2);  // -2 unseen, -1 root
    std::queue<uint32_t> q;
    for (uint32_t s : S) {
        if (parent[s] == -2) {
            parent[s] = -1;
            q.push(s);
        }
    }
    auto dist_to_S = [&](uint32_t v) {
        Rational best = metric_dist(g.net->points[v], g.net->points[S[0]]);
        for (size_t i = 1; i < S.size(); ++i)
            best = min(best, metric_dist(g.net->points[v], g.net->points[S[i]]));
        return best;
    };
    StabilityResult r;
    while (!q.empty()) {
        uint32_t v = q.front();
        q.pop();
        Rational d = dist_to_S(v);
        if (d > eps) {
            r.pass = false;
            r.witness = v;
            r.witness_dist = d;
            std::vector<uint32_t> path;
            int cur = static_cast<int>(v);
            while (cur >= 0) {
                path.push_back(static_cast<uint32_t>(cur));
                cur = parent[cur];
            }
            std::reverse(path.begin(), path.end());
            r.witness_path = std::move(path);
            return r;
        }
        for (uint32_t w : g.succ[v]) {
            if (parent[w] == -2) {
                parent[w] = static_cast<int>(v);
                q.push(w);
            }
        }
    }
    return r;
}

std::vector<uint32_t> reachable_set(const TransitionGraph& g,
                                    const std::vector<uint32_t>& S) {
    if (S.empty()) throw ContractError("reachable_set: S is empty");
    size_t n = g.size();
    std::vector<char> seen(n, 0);
    std::vector<uint32_t> stack;
    for (uint32_t s : S)
        for (uint32_t w : g.succ[s])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    std::vector<uint32_t> out(stack);
    while (!stack.empty()) {
        uint32_t v = stack.back();
        stack.pop_back();
        for (uint32_t w : g.succ[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
                out.push_back(w);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

MixingResult chain_mixing_check(const TransitionGraph& g) {
    MixingResult r;
    size_t n = g.size();
    if (n == 0) return r;
    ChainAnalysis a = analyze_chains(g);
    r.strongly_connected = (a.scc_count == 1);
    if (!r.strongly_connected) return r;
    if (g.edge_count == 0) return r;
    // BFS levels from node 0; period = gcd over edges of level[u]+1-level[v]
    std::vector<long> level(n, -1);
    std::queue<uint32_t> q;
    level[0] = 0;
    q.push(0);
    while (!q.empty()) {
        uint32_t v = q.front();
        q.pop();
        for (uint32_t w : g.succ[v])
            if (level[w] < 0) {
                level[w] = level[v] + 1;
                q.push(w);
            }
    }
    long gcd = 0;
    for (uint32_t v = 0; v < n; ++v)
        for (uint32_t w : g.succ[v])
            gcd = std::gcd(gcd, std::abs(level[v] + 1 - level[w]));
    // gcd 0 would mean every edge advances the level, impossible in a
    // strongly connected graph with a cycle
    r.cycle_gcd = static_cast<int>(gcd);
    r.mixing = (gcd == 1);
    return r;
}

std::string condensation_dot(const TransitionGraph& g, const ChainAnalysis& a) {
    std::string s = "digraph condensation {\n";
    std::vector<int> comp_of_scc(a.scc_count, -1);
    for (size_t c = 0; c < a.components.size(); ++c) comp_of_scc[a.component_scc[c]] = static_cast<int>(c);
    std::vector<char> is_terminal(a.components.size(), 0);
    for (int t : a.terminal) is_terminal[t] = 1;
    for (int scc = 0; scc < a.scc_count; ++scc) {
        int c = comp_of_scc[scc];
        std::string label;
        uint32_t members = 0;
        uint32_t first = 0;
        for (uint32_t v = 0; v < g.size(); ++v)
            if (a.scc_of_node[v] == scc) {
                if (members == 0) first = v;
                ++members;
            }
        label = g.net->points[first].to_string();
        if (members > 1) label += " (+" + std::to_string(members - 1) + ")";
        s += "  s" + std::to_string(scc) + " [label=\"" + label + "\"";
        if (c >= 0) {
            s += ", shape=box";
            if (is_terminal[c]) s += ", peripheries=2";
        }
        s += "];\n";
    }
    for (int scc = 0; scc < a.scc_count; ++scc)
        for (int t : a.scc_succ[scc])
            s += "  s" + std::to_string(scc) + " -> s" + std::to_string(t) + ";\n";
    s += "}\n";
    return s;
}

}  // namespace netdyn
