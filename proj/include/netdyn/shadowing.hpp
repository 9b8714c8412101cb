#pragma once

#include <cstdint>
#include <optional>

#include "netdyn/transition_graph.hpp"

namespace netdyn {

/// Fixed linear congruential scheme (MMIX multiplier). Identical seeds give
/// identical draws within this implementation; no cross-implementation
/// bit-compatibility is claimed.
struct Lcg {
    uint64_t state;
    explicit Lcg(uint64_t seed) : state(seed * 0x9E3779B97F4A7C15ull + 1) {}
    uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    }
    uint64_t below(uint64_t k) { return next() % k; }
};

/// Finite pseudo-orbit on a net: consecutive gaps d(f(x_i), x_{i+1}) <= delta,
/// re-verified exactly at construction.
struct PseudoOrbit {
    Rational delta;
    std::vector<uint32_t> nodes;
    uint64_t seed = 0;
};

struct ShadowingParams {
    Rational L;       // in (0,1)
    Rational delta0;  // gap bound the shadowing constants refer to
    /// M = L / (1 - L)
    Rational lipschitz_M() const { return L / (Rational(1) - L); }
    /// M_i = L^i / (1 - L^i)
    Rational iterate_M(unsigned i) const {
        Rational li = L.pow(i);
        return li / (Rational(1) - li);
    }
};

struct ShadowTrial {
    uint64_t seed = 0;
    bool pass = false;
    std::optional<Point> shadow;  // a point of the space (not always on the net)
    Rational sup_dist;            // exact sup_i d(f^i(shadow), x_i)
    bool endpoint_exact = false;  // f^k(shadow) == x_k
    bool excluded = false;        // skipped by truncation-boundary rule
    std::string note;
};

struct ShadowingReport {
    ShadowingParams params;
    Rational delta, eps, slack;
    std::vector<ShadowTrial> trials;
    size_t pass_count = 0;
    size_t excluded_count = 0;
    Rational worst;  // max sup_dist over non-excluded trials
    bool all_pass = false;
    std::string horizon_note;  // finite-horizon disclaimer
};

PseudoOrbit gen_pseudo_orbit(const SystemDef& sys, const NetSpace& net,
                             const Rational& delta, size_t length, uint64_t seed);

struct ShadowSearchResult {
    std::optional<uint32_t> index;  // none if best sup-distance exceeds eps
    uint32_t best_index = 0;        // minimizer regardless of eps
    Rational best_sup;
};

/// Exhaustive scan over net points for a minimizer of sup_i d(f^i(x), x_i);
/// canonical-order tie-break (first strict minimum wins).
ShadowSearchResult shadow_search(const SystemDef& sys, const NetSpace& net,
                                 const std::vector<Point>& orbit, const Rational& eps);

/// Exact shadow of a finite pseudo-orbit by backward branch pullback, for
/// 1-D piecewise-affine systems whose branches invert onto their domains.
/// Returns the shadow point (an exact rational of the space, generally off
/// the net) and its exact sup-distance; nullopt when no branch pullback
/// applies.
std::optional<std::pair<Point, Rational>> pullback_shadow(const SystemDef& sys,
                                                          const std::vector<Point>& orbit);

ShadowingReport lipschitz_shadowing_test(const SystemDef& sys, const NetSpace& net,
                                         const ShadowingParams& params,
                                         const Rational& delta, size_t trials,
                                         size_t length, const Rational& slack,
                                         uint64_t seed0 = 1);

/// Enumerates all delta-chains (graph paths) of length <= max_len; each must
/// admit a net point x with d(f^i(x), x_i) <= eps for i < k and f^k(x) = x_k
/// exactly. Chains whose endpoint's exact k-step preimage was truncated away
/// are excluded and counted separately.
ShadowingReport h_shadowing_test(const SystemDef& sys, const NetSpace& net,
                                 const Rational& eps, const Rational& delta,
                                 size_t max_len, size_t chain_cap = 1'000'000);

struct PullbackStep {
    uint32_t node = 0;
    Rational dist_to_C;    // d(x_i, C), exact
    Rational orbit_error;  // d(f^i(x_i), x), exact
};

struct PullbackTrace {
    std::vector<PullbackStep> steps;  // steps[0] is x itself
    std::optional<size_t> failed_step;
    std::string note;
};

/// The inductive pullback construction: x_0 = x; step i forms the chain
/// (z, x_i, f(x_i), ..., f^{i-1}(x_i), x) with z in C mapping onto the
/// C-point nearest x_i, then obtains x_{i+1} by shadow search at
/// eps = L^{i+1} delta0 + slack. Requires f(C) = C on the net.
PullbackTrace pullback_trace(const SystemDef& sys, const NetSpace& net,
                             const std::vector<uint32_t>& C, uint32_t x,
                             const ShadowingParams& params, size_t steps,
                             const Rational& slack);

}  // namespace netdyn
