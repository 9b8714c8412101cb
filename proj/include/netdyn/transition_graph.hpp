#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "netdyn/system.hpp"

namespace netdyn {

inline constexpr size_t kDefaultEdgeCap = 30'000'000;

/// The one-step delta-chain relation on a net: edge (x,y) iff
/// d(f(x), y) <= delta, tested exactly.
struct TransitionGraph {
    std::shared_ptr<const SystemDef> system;
    std::shared_ptr<const NetSpace> net;
    Rational delta;
    std::vector<std::vector<uint32_t>> succ;  // sorted per node
    size_t edge_count = 0;

    size_t size() const { return succ.size(); }
    bool has_edge(uint32_t u, uint32_t v) const;
};

TransitionGraph build_transition_graph(std::shared_ptr<const SystemDef> system,
                                       std::shared_ptr<const NetSpace> net,
                                       Rational delta,
                                       size_t edge_cap = kDefaultEdgeCap);

}  // namespace netdyn
