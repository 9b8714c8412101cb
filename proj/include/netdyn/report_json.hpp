#pragma once

#include <json.hpp>

#include "netdyn/chain_analysis.hpp"
#include "netdyn/entropy.hpp"
#include "netdyn/expanding.hpp"
#include "netdyn/interval_map.hpp"
#include "netdyn/periodic.hpp"
#include "netdyn/product_analysis.hpp"
#include "netdyn/shadowing.hpp"

namespace netdyn {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

// Every exact value serializes as the canonical "p/q" string.
Json to_json(const Rational& r);
Json to_json(const Point& p);
Json to_json(const NetSpace& n);       // spec + resolution + size (not the points)
Json net_point_table(const NetSpace& n);  // index -> point, for graph sidecars
Json to_json(const SpaceSpec& s);
Json to_json(const SystemDef& s);
Json to_json(const TransitionGraph& g);     // adjacency + sidecar point table
Json to_json(const TransitionGraph& g, const ChainAnalysis& a);
Json to_json(const NetSpace& net, const StabilityResult& r);
Json to_json(const BallExpandingCertificate& c);
Json to_json(const CertificateSearchResult& c);
Json to_json(const NetSpace& net, const PairWitnessResult& r);
Json to_json(const ShadowingReport& r);
Json to_json(const NetSpace& net, const PullbackTrace& t);
Json to_json(const EntropyEstimate& e);
Json to_json(const NetSpace& net, const TrichotomyResult& t);
Json to_json(const PeriodicReport& p);
Json to_json(const ProductComponentCount& p);
Json to_json(const MixingResult& m);

std::string edge_list_text(const TransitionGraph& g);
TransitionGraph graph_from_json(const Json& j);  // re-import of to_json(graph)

/// Envelope around a payload: version, config echo, timing, verdict.
/// Timing lives under "meta" and is excluded from determinism hashes.
Json make_envelope(const std::string& command, const Json& config, const Json& payload,
                   const std::string& verdict, long elapsed_ms);

/// Re-parses every "p/q" string in the payload and checks canonical form;
/// throws ContractError on any non-canonical embedded exact value.
void verify_envelope(const Json& envelope);

SpaceSpec space_spec_from_json(const Json& j);
SystemDef system_from_json(const Json& j);

}  // namespace netdyn
