#include "netdyn/transition_graph.hpp"

#include <algorithm>

#include "netdyn/errors.hpp"

namespace netdyn {

bool TransitionGraph::has_edge(uint32_t u, uint32_t v) const {
    const auto& s = succ[u];
    return std::binary_search(s.begin(), s.end(), v);
}

TransitionGraph build_transition_graph(std::shared_ptr<const SystemDef> system,
                                       std::shared_ptr<const NetSpace> net,
                                       Rational delta, size_t edge_cap) {
    if (delta.sign() < 0) throw ContractError("delta must be >= 0");
    TransitionGraph g;
    g.system = std::move(system);
    g.net = std::move(net);
    g.delta = std::move(delta);
    size_t n = g.net->size();
    g.succ.resize(n);
    for (size_t i = 0; i < n; ++i) {
        Point image = eval_map(*g.system, g.net->points[i]);
        g.succ[i] = g.net->ball(image, g.delta);
        g.edge_count += g.succ[i].size();
        if (g.edge_count > edge_cap)
            throw ResourceError("edges", "edge count exceeds cap " + std::to_string(edge_cap));
    }
    return g;
}

}  // namespace netdyn
