#pragma once

#include <optional>

#include "netdyn/system.hpp"

namespace netdyn {

enum class BEMode { exact, slack };

/// A failing triple: target y in the delta-ball of f(x) with no candidate z
/// within L*delta of x mapping eta-close to y. `gap` is the exact minimum of
/// d(f(z), y) over the candidate ball.
struct BEWitness {
    Point x;
    Rational delta;
    Point y;
    Rational gap;
};

struct BallExpandingCertificate {
    std::string system_name;
    Rational L, delta0, eta;  // eta = 0 in exact mode
    BEMode mode = BEMode::exact;
    int target_res = 0, cand_res = 0;
    std::vector<Rational> delta_samples;
    bool pass = false;
    std::optional<BEWitness> witness;        // strongest refutation (max gap, lex tie)
    std::optional<BEWitness> first_witness;  // lexicographically first failing triple
    std::vector<BEWitness> witness_table;    // failing triples in scan order, capped
    size_t fail_count = 0;
    size_t checked = 0;            // (x, delta, y) triples examined
    size_t excluded_count = 0;     // truncation-boundary targets skipped
    std::string excluded_desc;

    static constexpr size_t kWitnessTableCap = 200;
};

/// Certifies B_delta(f(x)) subset f(B_{L delta}(x)) on nets: for every
/// candidate-net x, sampled delta <= delta0 and non-excluded target-net y
/// with d(f(x), y) <= delta, some candidate z has d(x,z) <= L delta and
/// d(f(z), y) <= eta.
BallExpandingCertificate ball_expanding_check(const SystemDef& sys,
                                              const NetSpace& target_net,
                                              const NetSpace& cand_net,
                                              const Rational& L, const Rational& delta0,
                                              const std::vector<Rational>& delta_samples,
                                              BEMode mode, const Rational& eta = Rational(0));

struct CertificateSearchEntry {
    Rational L, delta0;
    bool pass = false;
    std::optional<BEWitness> witness;
};

struct CertificateSearchResult {
    std::optional<BallExpandingCertificate> best;  // first PASS in scan order
    std::vector<CertificateSearchEntry> table;     // per-(L, delta0) outcomes
};

/// Scans (L, delta0) preferring smaller L then larger delta0; delta samples
/// per delta0 are the dyadic grid {2^-k <= delta0} down to the target-net
/// resolution.
CertificateSearchResult certificate_search(const SystemDef& sys,
                                           const NetSpace& target_net,
                                           const NetSpace& cand_net,
                                           std::vector<Rational> L_grid,
                                           std::vector<Rational> delta0_grid,
                                           BEMode mode, const Rational& eta = Rational(0));

struct PairWitnessResult {
    bool pass = true;
    std::optional<std::pair<Point, Point>> witness;  // lexicographically first
};

/// d(f(x), f(y)) >= d(x,y)/L for all net pairs with 0 < d(x,y) <= delta0.
PairWitnessResult metric_expanding_check(const SystemDef& sys, const NetSpace& net,
                                         const Rational& L, const Rational& delta0);

/// No two distinct net points within rho share an image.
PairWitnessResult local_injectivity_check(const SystemDef& sys, const NetSpace& net,
                                          const Rational& rho);

/// Per-node flags for targets whose exact preimages were truncated away
/// (the finest layer of truncated spaces); honest coverage requires skipping
/// them. Returns the flag vector and a description of the excluded layer.
std::pair<std::vector<char>, std::string> excluded_targets(const SystemDef& sys,
                                                           const NetSpace& target_net);

}  // namespace netdyn
