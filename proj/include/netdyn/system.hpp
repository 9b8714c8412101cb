#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "netdyn/space.hpp"

namespace netdyn {

enum class MapKind {
    ex21,          // 2x on ex21_set, f(1)=1
    ex21_product,  // ex21 coordinatewise
    ex22,          // 4x on ex22_set, constant 2 on {2} U I_1
    tent,          // 1 - |1-2x| on [0,1]
    doubling,      // 2x mod 1 on the circle
    logistic,      // 4x(1-x) on [0,1]
    shift,         // drop first coordinate, append 0
    piecewise_affine,
};

std::string map_kind_name(MapKind k);

/// One affine branch x -> slope*x + intercept on the closed domain [lo, hi].
/// Circle branches take values in [0,1]; 1 is identified with 0 on use.
struct AffineBranch {
    Rational lo, hi, slope, intercept;
    Rational apply(const Rational& x) const { return slope * x + intercept; }
    bool domain_contains(const Rational& x) const { return x >= lo && x <= hi; }
};

struct SystemDef {
    std::string name;
    SpaceSpec space;
    MapKind kind = MapKind::tent;
    int iterate = 1;  // the system is the iterate-fold composition of its base
    std::vector<AffineBranch> base_branches;      // one step of the base map (if affine)
    std::vector<AffineBranch> composed_branches;  // branches of the full iterate (if derivable)

    bool is_affine() const { return !base_branches.empty(); }
    /// Branch structure of the full composition; null when not piecewise-affine.
    const std::vector<AffineBranch>* branches() const {
        if (iterate == 1 && is_affine()) return &base_branches;
        if (!composed_branches.empty()) return &composed_branches;
        return nullptr;
    }
};

/// Built-in example systems on their natural spaces.
SystemDef corpus_system(MapKind tag, int depth1 = 0, int depth2 = 0);

/// User-defined piecewise-affine map; validates that branches cover the
/// space, agree at shared endpoints, and send space points to space points
/// is left to eval-time domain checks.
SystemDef make_piecewise_affine(std::string name, SpaceSpec space,
                                std::vector<AffineBranch> branches);

/// Exact image. Throws DomainError when p is outside the system's space.
Point eval_map(const SystemDef& sys, const Point& p);

/// i-fold composition; piecewise-affine branch structure is composed
/// symbolically when available.
SystemDef iterate_system(const SystemDef& sys, int i);

/// Symbolic composition g(f(x)) of two affine branch families over the same
/// 1-D space; branch domains are intersected with affine preimages.
std::vector<AffineBranch> compose_branches(const std::vector<AffineBranch>& f,
                                           const std::vector<AffineBranch>& g);

}  // namespace netdyn
