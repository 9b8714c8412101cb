#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netdyn/point.hpp"

namespace netdyn {

inline constexpr size_t kDefaultNetCap = 1'000'000;

enum class SpaceKind {
    interval01,    // [0,1]
    ex21_set,      // {0} U {2^-n : 0 <= n <= N}
    ex22_set,      // {0,2} U union of [4^-n, 2*4^-n], 1 <= n <= N
    circle,        // [0,1) with arc metric, unit circumference
    word_shift,    // length-m words over a finite alphabet, sup-weighted metric
    ex21_product,  // m-tuples over ex21_set(N), sup-weighted metric
};

std::string space_kind_name(SpaceKind k);

struct SpaceSpec {
    SpaceKind kind = SpaceKind::interval01;
    int depth = 0;       // N for ex21_set/ex22_set, m for word kinds
    int base_depth = 0;  // N of the factor set for ex21_product
    std::vector<Rational> alphabet;  // word_shift symbols (sorted on build)
    std::string description;

    MetricKind metric() const;
    /// True when a finite net at any resolution IS the truncated space
    /// (no continuum sampling involved).
    bool is_exact() const;
    /// Exact membership in the (truncated) space.
    bool contains(const Point& p) const;
};

SpaceSpec interval01_spec();
SpaceSpec circle_spec();
SpaceSpec ex21_spec(int N);
SpaceSpec ex22_spec(int N);
SpaceSpec word_shift_spec(int m, std::vector<Rational> alphabet = {Rational(0), Rational(1)});
SpaceSpec ex21_product_spec(int m, int N);

/// Finite point set standing in for a compact metric space at a stated
/// resolution. Points are pairwise distinct and sorted in the canonical
/// order (lexicographic on coordinates). Word-metric nets are always full
/// products of a sorted factor value list, which ball queries rely on.
struct NetSpace {
    SpaceSpec spec;
    int resolution = 0;
    std::vector<Point> points;

    // product structure (word metric kinds only)
    std::vector<Rational> factor_values;
    int word_len = 0;

    size_t size() const { return points.size(); }
    MetricKind metric() const { return spec.metric(); }

    /// Max distance from a space point to the net: 0 for exact nets,
    /// 2^{-(r+1)} for sampled continuum specs.
    Rational density() const;

    /// Exact index lookup; nullopt when p is not a net point.
    std::optional<uint32_t> index_of(const Point& p) const;

    /// Sorted indices of net points z with d(center, z) <= radius.
    std::vector<uint32_t> ball(const Point& center, const Rational& radius) const;
};

NetSpace build_net(const SpaceSpec& spec, int resolution, size_t net_cap = kDefaultNetCap);

/// Index of a nearest net point; distance ties break toward the canonical
/// smaller point.
uint32_t project_to_net(const NetSpace& net, const Point& p);

}  // namespace netdyn
