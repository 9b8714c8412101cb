#pragma once

#include <cstdint>

#include "netdyn/system.hpp"

namespace netdyn {

/// Recurrent SCC structure of the one-coordinate relation
/// u -> v  iff  |f(u) - v| <= threshold on a finite base set.
struct FactorSummary {
    Rational threshold;
    int recurrent_scc_count = 0;
    std::vector<long> periods;  // cycle gcd per recurrent SCC
};

FactorSummary factor_summary(const std::vector<Rational>& base_values,
                             const std::vector<Rational>& base_images,
                             const Rational& threshold);

/// Exact chain-component count of the coordinatewise product relation on
/// base^m with per-coordinate thresholds 2^j * delta (sup-weighted metric),
/// computed factorwise: a product node is recurrent iff every coordinate is,
/// and two recurrent nodes share a component iff they share factor SCCs and
/// their cyclic-class difference vector lies in the diagonal subgroup. The
/// count is the sum over factor-SCC tuples of prod(g_j) / lcm(g_j).
struct ProductComponentCount {
    int m = 0;
    Rational delta;
    std::vector<FactorSummary> factors;  // j = 1..m
    unsigned long long component_count = 0;
};

ProductComponentCount product_component_count(const SystemDef& product_sys,
                                              const Rational& delta);

}  // namespace netdyn
