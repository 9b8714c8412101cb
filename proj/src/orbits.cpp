#include "netdyn/orbits.hpp"

#include <algorithm>
#include <unordered_map>

#include "netdyn/errors.hpp"

namespace netdyn {

uint32_t net_step(const SystemDef& sys, const NetSpace& net, uint32_t v) {
    Point image = eval_map(sys, net.points[v]);
    auto idx = net.index_of(image);
    if (!idx)
        throw DomainError("orbit leaves net: f(" + net.points[v].to_string() + ") = " +
                          image.to_string() + " is not a net point");
    return *idx;
}

std::vector<uint32_t> omega_limit(const SystemDef& sys, const NetSpace& net, uint32_t x) {
    std::unordered_map<uint32_t, size_t> first_seen;
    std::vector<uint32_t> orbit{x};
    first_seen[x] = 0;
    uint32_t cur = x;
    while (true) {
        cur = net_step(sys, net, cur);
        auto it = first_seen.find(cur);
        if (it != first_seen.end()) {
            std::vector<uint32_t> cycle(orbit.begin() + it->second, orbit.end());
            std::sort(cycle.begin(), cycle.end());
            return cycle;
        }
        first_seen[cur] = orbit.size();
        orbit.push_back(cur);
    }
}

std::vector<uint32_t> chain_omega_limit(const TransitionGraph& g,
                                        const ChainAnalysis& a, uint32_t x) {
    size_t n = g.size();
    std::vector<char> seen(n, 0);
    std::vector<uint32_t> stack{x};
    seen[x] = 1;
    std::vector<uint32_t> cyc_nodes;
    while (!stack.empty()) {
        uint32_t v = stack.back();
        stack.pop_back();
        if (a.is_recurrent(v)) cyc_nodes.push_back(v);
        for (uint32_t w : g.succ[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<uint32_t> out;
    for (uint32_t v : cyc_nodes)
        if (!seen[v]) {
            seen[v] = 1;
            stack.push_back(v);
            out.push_back(v);
        }
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

std::optional<long> cr_hitting_time(const TransitionGraph& g, const ChainAnalysis& a,
                                    uint32_t x, long cap) {
    if (cap < 0) cap = 4 * static_cast<long>(g.size());
    uint32_t cur = x;
    for (long i = 0; i <= cap; ++i) {
        if (a.is_recurrent(cur)) return i;
        cur = net_step(*g.system, *g.net, cur);
    }
    return std::nullopt;
}

std::vector<uint32_t> eventual_image(const SystemDef& sys, const NetSpace& net,
                                     std::vector<uint32_t> A) {
    std::sort(A.begin(), A.end());
    A.erase(std::unique(A.begin(), A.end()), A.end());
    // precondition: f(A) subset of A
    std::vector<uint32_t> image;
    for (uint32_t v : A) {
        uint32_t w = net_step(sys, net, v);
        if (!std::binary_search(A.begin(), A.end(), w))
            throw ContractError("eventual_image: f(A) escapes A at node " +
                                net.points[v].to_string());
        image.push_back(w);
    }
    while (true) {
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        if (image == A) return A;
        A = image;
        image.clear();
        for (uint32_t v : A) image.push_back(net_step(sys, net, v));
    }
}

}  // namespace netdyn
