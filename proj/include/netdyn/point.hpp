#pragma once

#include <string>
#include <vector>

#include "netdyn/rational.hpp"

namespace netdyn {

enum class MetricKind { interval, circle, word };

std::string metric_kind_name(MetricKind k);

/// A point of one of the three metric families:
///   interval  — one coordinate, |p - q|
///   circle    — one coordinate in [0,1), arc distance min(|p-q|, 1-|p-q|)
///               on the unit-circumference parameterization
///   word      — m coordinates, max_j 2^{-j} |p_j - q_j| (j is 1-based)
struct Point {
    MetricKind kind = MetricKind::interval;
    std::vector<Rational> coords;

    const Rational& x() const { return coords[0]; }
    size_t depth() const { return coords.size(); }
    std::string to_string() const;

    bool operator==(const Point& o) const;
    bool operator!=(const Point& o) const { return !(*this == o); }
};

Point real_point(Rational x);
Point circle_point(Rational x);  // requires 0 <= x < 1
Point word_point(std::vector<Rational> coords);

/// Canonical total order: lexicographic on coordinates.
bool point_less(const Point& a, const Point& b);

/// Exact metric. Throws ShapeError on mismatched kinds or word depths.
Rational metric_dist(const Point& p, const Point& q);

/// d(p, q) <= r without forming the max (early exit per coordinate).
bool within_dist(const Point& p, const Point& q, const Rational& r);

}  // namespace netdyn
