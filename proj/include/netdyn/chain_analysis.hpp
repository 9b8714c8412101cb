#pragma once

#include <optional>
#include <string>

#include "netdyn/transition_graph.hpp"

namespace netdyn {

/// Chain-recurrence structure of a delta-transition graph.
///
/// Recurrent nodes are exactly the nodes lying on a directed cycle
/// (self-loops count); they partition into components = strongly-connected
/// classes. The order C <= D holds iff a condensation path runs from C to D;
/// terminal components have no outgoing condensation edge at all. Component
/// ids are assigned by smallest member node, so all outputs are canonical.
struct ChainAnalysis {
    Rational delta;
    std::vector<int> scc_of_node;          // SCC id per node (canonical numbering)
    int scc_count = 0;
    std::vector<char> scc_recurrent;       // per SCC: contains a cycle
    std::vector<std::vector<int>> scc_succ;  // condensation adjacency, dedup, sorted

    std::vector<uint32_t> recurrent_nodes;          // CR_delta, sorted
    std::vector<std::vector<uint32_t>> components;  // recurrent classes, each sorted
    std::vector<int> component_of_node;             // -1 for transient nodes
    std::vector<int> component_scc;                 // SCC id per component
    std::vector<std::pair<int, int>> order_pairs;   // (C, D) with C <= D, C != D
    std::vector<int> terminal;                      // component indices, sorted

    bool is_recurrent(uint32_t v) const { return component_of_node[v] >= 0; }
};

ChainAnalysis analyze_chains(const TransitionGraph& g);

/// Chain-stability check: every node reachable from S stays within eps of S.
struct StabilityResult {
    bool pass = true;
    std::optional<uint32_t> witness;     // a reachable node beyond eps
    std::vector<uint32_t> witness_path;  // from some s in S to the witness
    Rational witness_dist;
};
StabilityResult chain_stable_check(const TransitionGraph& g,
                                   const std::vector<uint32_t>& S, const Rational& eps);

/// Nodes reachable from S by a path of length >= 1.
std::vector<uint32_t> reachable_set(const TransitionGraph& g,
                                    const std::vector<uint32_t>& S);

/// Strong connectivity plus cycle-length gcd 1 (primitivity).
struct MixingResult {
    bool mixing = false;
    bool strongly_connected = false;
    int cycle_gcd = 0;  // period of the graph when strongly connected, 0 if acyclic
};
MixingResult chain_mixing_check(const TransitionGraph& g);

/// DOT rendering of the condensation; terminal components get peripheries=2.
std::string condensation_dot(const TransitionGraph& g, const ChainAnalysis& a);

}  // namespace netdyn
