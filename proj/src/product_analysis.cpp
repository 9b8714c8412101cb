#include "netdyn/product_analysis.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "netdyn/chain_analysis.hpp"
#include "netdyn/errors.hpp"
#include "netdyn/transition_graph.hpp"

namespace netdyn {

namespace {

// period (cycle-length gcd) of a strongly connected subgraph
long scc_period(const std::vector<std::vector<uint32_t>>& succ,
                const std::vector<uint32_t>& members) {
    std::vector<long> level(succ.size(), -1);
    std::vector<char> in_scc(succ.size(), 0);
    for (uint32_t v : members) in_scc[v] = 1;
    std::queue<uint32_t> q;
    level[members[0]] = 0;
    q.push(members[0]);
    while (!q.empty()) {
        uint32_t v = q.front();
        q.pop();
        for (uint32_t w : succ[v]) {
            if (!in_scc[w]) continue;
            if (level[w] < 0) {
                level[w] = level[v] + 1;
                q.push(w);
            }
        }
    }
    long g = 0;
    for (uint32_t v : members)
        for (uint32_t w : succ[v]) {
            if (!in_scc[w]) continue;
            g = std::gcd(g, std::abs(level[v] + 1 - level[w]));
        }
    return g == 0 ? 1 : g;
}

}  // namespace

FactorSummary factor_summary(const std::vector<Rational>& base_values,
                             const std::vector<Rational>& base_images,
                             const Rational& threshold) {
    size_t n = base_values.size();
    std::vector<std::vector<uint32_t>> succ(n);
    for (size_t u = 0; u < n; ++u)
        for (size_t v = 0; v < n; ++v)
            if ((base_images[u] - base_values[v]).abs() <= threshold)
                succ[u].push_back(static_cast<uint32_t>(v));

    // reuse the graph SCC machinery via a throwaway TransitionGraph shell is
    // not possible here (no net); run Tarjan directly on the small relation
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
            if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        }
    }

    FactorSummary fs;
    fs.threshold = threshold;
    for (int c = 0; c < comp_count; ++c) {
        std::vector<uint32_t> members;
        for (uint32_t v = 0; v < n; ++v)
            if (comp[v] == c) members.push_back(v);
        bool recurrent = members.size() >= 2;
        if (!recurrent)
            for (uint32_t w : succ[members[0]])
                if (w == members[0]) recurrent = true;
        if (!recurrent) continue;
        ++fs.recurrent_scc_count;
        fs.periods.push_back(scc_period(succ, members));
    }
    return fs;
}

ProductComponentCount product_component_count(const SystemDef& product_sys,
                                              const Rational& delta) {
    if (product_sys.space.kind != SpaceKind::ex21_product)
        throw UnsupportedSystemError("factored component count requires ex21_product");
    if (delta.sign() <= 0) throw ContractError("delta must be positive");

    ProductComponentCount out;
    out.m = product_sys.space.depth;
    out.delta = delta;

    // base set and exact base map
    std::vector<Rational> values;
    values.emplace_back(0);
    Rational v(1);
    for (int n = 0; n <= product_sys.space.base_depth; ++n) {
        values.push_back(v);
        v = v * Rational(1, 2);
    }
    std::sort(values.begin(), values.end());
    std::vector<Rational> images;
    images.reserve(values.size());
    for (const auto& x : values)
        images.push_back(x == Rational(1) ? x : x + x);

    Rational t = delta;
    for (int j = 1; j <= out.m; ++j) {
        t += t;  // 2^j * delta
        out.factors.push_back(factor_summary(values, images, t));
    }

    // sum over SCC tuples of prod(g) / lcm(g), by recursion over factors
    // carrying (running product, running lcm)
    unsigned long long total = 0;
    struct State {
        unsigned long long prod;
        unsigned long long lcm;
    };
    std::vector<State> states{{1ull, 1ull}};
    for (const auto& f : out.factors) {
        std::vector<State> next;
        next.reserve(states.size() * std::max(1, f.recurrent_scc_count));
        for (const auto& st : states)
            for (long g : f.periods) {
                unsigned long long gu = static_cast<unsigned long long>(g);
                next.push_back({st.prod * gu, std::lcm(st.lcm, gu)});
            }
        states = std::move(next);
        if (states.empty()) break;  // a factor with no recurrent SCC: empty CR
        if (states.size() > 20'000'000)
            throw ResourceError("product-tuples", "factor SCC tuple enumeration too large");
    }
    for (const auto& st : states) total += st.prod / st.lcm;
    out.component_count = states.empty() ? 0 : total;
    return out;
}

}  // namespace netdyn
