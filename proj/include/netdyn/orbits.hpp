#pragma once

#include <optional>

#include "netdyn/chain_analysis.hpp"

namespace netdyn {

/// Node index of the exact image; DomainError when the orbit leaves the net.
uint32_t net_step(const SystemDef& sys, const NetSpace& net, uint32_t v);

/// The unique cycle the eventually-periodic exact orbit of x enters.
std::vector<uint32_t> omega_limit(const SystemDef& sys, const NetSpace& net, uint32_t x);

/// Nodes reachable (length >= 0) from the union of all cycles reachable
/// from x: exactly the nodes admitting arbitrarily long delta-paths from x.
std::vector<uint32_t> chain_omega_limit(const TransitionGraph& g,
                                        const ChainAnalysis& a, uint32_t x);

/// Least i <= cap with exact-orbit point f^i(x) in CR_delta, else nullopt.
/// cap < 0 selects the default 4 * |net|.
std::optional<long> cr_hitting_time(const TransitionGraph& g, const ChainAnalysis& a,
                                    uint32_t x, long cap = -1);

/// Fixpoint of A <- f(A) under exact evaluation. Requires f(A) subset of A;
/// violation raises ContractError naming an escaping node.
std::vector<uint32_t> eventual_image(const SystemDef& sys, const NetSpace& net,
                                     std::vector<uint32_t> A);

}  // namespace netdyn
