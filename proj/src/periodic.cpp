#include "netdyn/periodic.hpp"

#include <algorithm>

#include "netdyn/errors.hpp"

namespace netdyn {

PeriodicReport periodic_points_exact(const SystemDef& sys, const NetSpace& net,
                                     int max_period) {
    if (max_period < 1) throw ContractError("max_period must be >= 1");
    size_t n = net.size();
    std::vector<uint32_t> next(n);
    for (uint32_t v = 0; v < n; ++v) {
        Point image = eval_map(sys, net.points[v]);
        auto idx = net.index_of(image);
        if (!idx)
            throw DomainError("net is not exactly invariant: f(" +
                              net.points[v].to_string() + ") off net");
        next[v] = *idx;
    }
    // color: 0 unvisited, 1 in progress, 2 done
    std::vector<char> color(n, 0);
    std::vector<long> pos(n, -1);
    PeriodicReport rep;
    rep.max_period = max_period;
    for (uint32_t start = 0; start < n; ++start) {
        if (color[start]) continue;
        std::vector<uint32_t> path;
        uint32_t v = start;
        while (color[v] == 0) {
            color[v] = 1;
            pos[v] = static_cast<long>(path.size());
            path.push_back(v);
            v = next[v];
        }
        if (color[v] == 1) {  // new cycle found within this walk
            std::vector<uint32_t> cycle(path.begin() + pos[v], path.end());
            if (static_cast<int>(cycle.size()) <= max_period) {
                std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()),
                            cycle.end());
                rep.exact_cycles.emplace_back();
                for (uint32_t c : cycle) rep.exact_cycles.back().push_back(net.points[c]);
            }
        }
        for (uint32_t p : path) color[p] = 2;
    }
    std::sort(rep.exact_cycles.begin(), rep.exact_cycles.end(),
              [](const auto& a, const auto& b) { return point_less(a[0], b[0]); });
    return rep;
}

namespace {

struct PathState {
    Rational slope{1};
    Rational intercept{0};
    std::vector<int> code;
};

// checks that iterating x through the coded branches reproduces eval_map and
// stays in each coded branch's domain, returning true on success
bool code_consistent(const SystemDef& sys, const std::vector<AffineBranch>& br,
                     const Point& x0, const std::vector<int>& code) {
    Point p = x0;
    for (int bi : code) {
        const auto& b = br[bi];
        if (!b.domain_contains(p.x())) return false;
        Rational v = b.apply(p.x());
        if (sys.space.kind == SpaceKind::circle) v = v.mod1();
        Point q = eval_map(sys, p);
        if (q.x() != v) return false;
        p = std::move(q);
    }
    return p == x0;
}

}  // namespace

PeriodicReport periodic_points_affine(const SystemDef& sys, int max_period) {
    if (max_period < 1) throw ContractError("max_period must be >= 1");
    const std::vector<AffineBranch>* brp =
        sys.iterate == 1 && sys.is_affine() ? &sys.base_branches : sys.branches();
    if (!brp)
        throw UnsupportedSystemError("periodic_points_affine: " + sys.name +
                                     " has no affine branch structure");
    const auto& br = *brp;
    bool circle = sys.space.kind == SpaceKind::circle;

    PeriodicReport rep;
    rep.max_period = max_period;
    std::vector<Point> found;

    for (int p = 1; p <= max_period; ++p) {
        std::vector<PathState> states{{Rational(1), Rational(0), {}}};
        for (int step = 0; step < p; ++step) {
            std::vector<PathState> next_states;
            for (const auto& st : states) {
                for (size_t bi = 0; bi < br.size(); ++bi) {
                    PathState ns;
                    ns.slope = br[bi].slope * st.slope;
                    ns.intercept = br[bi].slope * st.intercept + br[bi].intercept;
                    ns.code = st.code;
                    ns.code.push_back(static_cast<int>(bi));
                    next_states.push_back(std::move(ns));
                }
            }
            states = std::move(next_states);
        }
        for (const auto& st : states) {
            // solve slope*x + intercept = x (+ t on the circle)
            std::vector<Rational> candidates;
            if (st.slope == Rational(1)) {
                // identity-composition branch: every domain point is periodic
                // only when intercept == 0 (+t); such maps are isometric along
                // the path and handled by the exact route instead
                continue;
            }
            Rational denom = st.slope - Rational(1);
            if (!circle) {
                candidates.push_back((Rational(0) - st.intercept) / denom);
            } else {
                // x = (t - intercept)/(slope - 1) in [0,1)
                Rational t_lo = min(st.intercept, st.intercept + denom);
                Rational t_hi = max(st.intercept, st.intercept + denom);
                Rational t = t_lo.floor();
                for (; t <= t_hi; t += Rational(1)) {
                    Rational x = (t - st.intercept) / denom;
                    if (x >= Rational(0) && x < Rational(1)) candidates.push_back(x);
                }
            }
            for (const auto& x : candidates) {
                Point pt{sys.space.metric(), {x}};
                if (!sys.space.contains(pt)) continue;
                if (!code_consistent(sys, br, pt, st.code)) continue;
                bool dup = false;
                for (const auto& f : found)
                    if (f == pt) {
                        dup = true;
                        break;
                    }
                if (dup) continue;
                found.push_back(pt);
                // primitive period by exact iteration
                int prim = 0;
                Point q = pt;
                for (int k = 1; k <= p; ++k) {
                    q = eval_map(sys, q);
                    if (q == pt) {
                        prim = k;
                        break;
                    }
                }
                AffinePeriodicPoint app;
                app.point = pt;
                app.period = prim;
                app.branch_code.assign(st.code.begin(), st.code.begin() + prim);
                rep.affine_points.push_back(std::move(app));
            }
        }
    }
    std::sort(rep.affine_points.begin(), rep.affine_points.end(),
              [](const AffinePeriodicPoint& a, const AffinePeriodicPoint& b) {
                  return point_less(a.point, b.point);
              });
    return rep;
}

}  // namespace netdyn
