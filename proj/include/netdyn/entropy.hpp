#pragma once

#include <optional>

#include "netdyn/transition_graph.hpp"

namespace netdyn {

struct SeparatedResult {
    int n = 1;
    Rational eps;
    std::vector<uint32_t> chosen;  // greedy maximal (n,eps)-separated subset
    size_t count() const { return chosen.size(); }
};

/// Greedy (canonical order) maximal subset with
/// max_{0<=i<n} d(f^i x, f^i y) > eps for all distinct members, plus an
/// exact verification pass over the result.
SeparatedResult separated_count(const SystemDef& sys, const NetSpace& net, int n,
                                const Rational& eps);

struct EntropyEstimate {
    Rational eps;
    int n_min = 1, n_max = 1;
    std::vector<size_t> counts;  // s(n, eps) for n in [n_min, n_max]
    double slope = 0.0;          // least-squares slope of ln s(n) against n
    double positive_threshold = 0.1;
    double zero_threshold = 0.05;
    std::string verdict;  // "positive" | "zero-consistent" | "inconclusive"
};

EntropyEstimate entropy_estimate(const SystemDef& sys, const NetSpace& net,
                                 const Rational& eps, int n_min, int n_max,
                                 double positive_threshold = 0.1,
                                 double zero_threshold = 0.05);

/// The three equivalent conditions, evaluated on a net:
///  (1) entropy verdict zero-consistent,
///  (2) CR_delta finite and stable across the grid tail (its intersection),
///  (3) the exact map restricted to the stable CR is a bijection onto itself.
struct TrichotomyResult {
    bool entropy_zero = false;
    bool cr_finite_stable = false;
    bool cr_bijective = false;
    bool consistent = false;
    EntropyEstimate entropy;
    std::vector<Rational> grid_used;  // clamped at one net cell for sampled nets
    std::vector<size_t> cr_sizes;
    std::vector<uint32_t> stable_cr;
    std::string note;
};

TrichotomyResult entropy_trichotomy(const SystemDef& sys, const NetSpace& net,
                                    std::vector<Rational> delta_grid, const Rational& eps,
                                    int n_min, int n_max);

}  // namespace netdyn
