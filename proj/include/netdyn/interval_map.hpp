#pragma once

#include <optional>
#include <variant>

#include "netdyn/system.hpp"

namespace netdyn {

/// Disjoint sorted closed intervals with rational endpoints, on [0,1] or the
/// circle ([0,1] with 1 identified with 0).
struct IntervalUnion {
    bool circle = false;
    std::vector<std::pair<Rational, Rational>> parts;  // normalized on use

    void normalize();
    bool intersects(const IntervalUnion& o) const;
    std::string to_string() const;
};

/// A finite union of cylinder sets of a word space: each prefix fixes the
/// first coordinates. An empty prefix is the whole space.
struct CylinderUnion {
    int word_len = 0;
    std::vector<Rational> alphabet;
    std::vector<std::vector<Rational>> prefixes;

    void normalize();
    bool covers_space() const;
    bool intersects(const CylinderUnion& o) const;
    std::string to_string() const;
};

using RegionUnion = std::variant<IntervalUnion, CylinderUnion>;

IntervalUnion make_interval(const Rational& lo, const Rational& hi, bool circle = false);
CylinderUnion make_cylinder(const SpaceSpec& word_space, std::vector<Rational> prefix);

/// Exact one-step image under the system: branchwise for 1-D piecewise-affine
/// systems, prefix shift for word shifts. UnsupportedSystemError otherwise.
RegionUnion push_forward(const SystemDef& sys, const RegionUnion& U);

/// Whether U contains the system's whole space.
bool covers_space(const SystemDef& sys, const RegionUnion& U);

bool regions_intersect(const RegionUnion& a, const RegionUnion& b);

/// Least i <= cap with f^i(U) = X, or nullopt.
std::optional<int> leo_check(const SystemDef& sys, const RegionUnion& U, int cap);

/// f^j(U) meets V for every j in [window_start, window_end].
bool mixing_check(const SystemDef& sys, const RegionUnion& U, const RegionUnion& V,
                  int window_start, int window_end);

}  // namespace netdyn
