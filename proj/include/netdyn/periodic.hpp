#pragma once

#include "netdyn/space.hpp"
#include "netdyn/system.hpp"

namespace netdyn {

struct AffinePeriodicPoint {
    Point point;
    int period = 1;               // primitive period
    std::vector<int> branch_code;  // branch index per step, for one full period
};

struct PeriodicReport {
    int max_period = 0;
    std::vector<std::vector<Point>> exact_cycles;     // functional-graph cycles
    std::vector<AffinePeriodicPoint> affine_points;   // branch-enumerated solutions
};

/// All functional-graph cycles of length <= max_period on an exact
/// invariant net.
PeriodicReport periodic_points_exact(const SystemDef& sys, const NetSpace& net,
                                     int max_period);

/// For each period p <= max_period and each branch sequence, solves the
/// affine fixed-point equation exactly and keeps solutions whose iterates
/// respect the coded branches; deduplicated into primitive periods.
/// UnsupportedSystemError when the system has no affine branch structure.
PeriodicReport periodic_points_affine(const SystemDef& sys, int max_period);

}  // namespace netdyn
