#include "netdyn/shadowing.hpp"

#include <algorithm>

#include "netdyn/errors.hpp"

namespace netdyn {

PseudoOrbit gen_pseudo_orbit(const SystemDef& sys, const NetSpace& net,
                             const Rational& delta, size_t length, uint64_t seed) {
    if (length < 1) throw ContractError("pseudo-orbit length must be >= 1");
    Lcg rng(seed);
    PseudoOrbit po;
    po.delta = delta;
    po.seed = seed;
    po.nodes.reserve(length);
    uint32_t cur = static_cast<uint32_t>(rng.below(net.size()));
    po.nodes.push_back(cur);
    for (size_t i = 1; i < length; ++i) {
        Point image = eval_map(sys, net.points[cur]);
        auto ball = net.ball(image, delta);
        if (ball.empty())
            throw ContractError("empty successor ball: delta below net density at " +
                                net.points[cur].to_string());
        cur = ball[rng.below(ball.size())];
        po.nodes.push_back(cur);
    }
    // constructor invariant: every gap verified exactly
    for (size_t i = 0; i + 1 < po.nodes.size(); ++i) {
        Point image = eval_map(sys, net.points[po.nodes[i]]);
        if (metric_dist(image, net.points[po.nodes[i + 1]]) > delta)
            throw ContractError("pseudo-orbit gap exceeds delta");
    }
    return po;
}

ShadowSearchResult shadow_search(const SystemDef& sys, const NetSpace& net,
                                 const std::vector<Point>& orbit, const Rational& eps) {
    if (orbit.empty()) throw ContractError("shadow_search: empty orbit");
    ShadowSearchResult res;
    bool have_best = false;
    for (uint32_t cand = 0; cand < net.size(); ++cand) {
        Point p = net.points[cand];
        Rational sup(0);
        bool abandoned = false;
        for (size_t i = 0; i < orbit.size(); ++i) {
            if (i > 0) p = eval_map(sys, p);
            Rational d = metric_dist(p, orbit[i]);
            if (d > sup) sup = std::move(d);
            if (have_best && sup >= res.best_sup) {
                abandoned = true;
                break;
            }
        }
        if (!abandoned && (!have_best || sup < res.best_sup)) {
            res.best_index = cand;
            res.best_sup = std::move(sup);
            have_best = true;
        }
    }
    if (res.best_sup <= eps) res.index = res.best_index;
    return res;
}

std::optional<std::pair<Point, Rational>> pullback_shadow(
    const SystemDef& sys, const std::vector<Point>& orbit) {
    const std::vector<AffineBranch>* brp = sys.branches();
    if (!brp || orbit.empty() || sys.space.metric() == MetricKind::word)
        return std::nullopt;
    const auto& br = *brp;
    for (const auto& b : br)
        if (b.slope.is_zero()) return std::nullopt;  // constant branches don't invert
    bool circle = sys.space.kind == SpaceKind::circle;

    // backward pass: y_{k} = x_k, y_i = branch-preimage of y_{i+1} chosen in
    // the branch nearest x_i
    Rational y = orbit.back().x();
    for (size_t i = orbit.size() - 1; i-- > 0;) {
        const Rational& xi = orbit[i].x();
        bool found = false;
        Rational best_z;
        Rational best_gap;
        for (const auto& b : br) {
            // invert y (+ integer wrap on the circle) through branch b
            for (int t = 0; t <= (circle ? 1 : 0); ++t) {
                Rational target = y + Rational(t);
                Rational z = (target - b.intercept) / b.slope;
                if (!b.domain_contains(z)) continue;
                Rational gap = (z - xi).abs();
                if (circle) gap = min(gap, Rational(1) - gap);
                if (!found || gap < best_gap) {
                    found = true;
                    best_z = z;
                    best_gap = std::move(gap);
                }
            }
        }
        if (!found) return std::nullopt;
        y = std::move(best_z);
    }
    Point shadow{sys.space.metric(), {circle ? y.mod1() : y}};
    if (!sys.space.contains(shadow)) return std::nullopt;
    // exact verification of the sup-distance
    Rational sup(0);
    Point p = shadow;
    for (size_t i = 0; i < orbit.size(); ++i) {
        if (i > 0) p = eval_map(sys, p);
        Rational d = metric_dist(p, orbit[i]);
        if (d > sup) sup = std::move(d);
    }
    return std::make_pair(std::move(shadow), std::move(sup));
}

static std::vector<Point> orbit_points(const NetSpace& net, const std::vector<uint32_t>& nodes) {
    std::vector<Point> pts;
    pts.reserve(nodes.size());
    for (uint32_t v : nodes) pts.push_back(net.points[v]);
    return pts;
}

ShadowingReport lipschitz_shadowing_test(const SystemDef& sys, const NetSpace& net,
                                         const ShadowingParams& params,
                                         const Rational& delta, size_t trials,
                                         size_t length, const Rational& slack,
                                         uint64_t seed0) {
    if (params.L.sign() <= 0 || params.L >= Rational(1))
        throw ContractError("shadowing constant L must lie in (0,1)");
    if (delta > params.delta0)
        throw ContractError("delta exceeds delta0 of the shadowing parameters");
    ShadowingReport rep;
    rep.params = params;
    rep.delta = delta;
    rep.slack = slack;
    rep.eps = params.lipschitz_M() * delta + slack;
    rep.horizon_note = "finite-horizon: necessary-condition check on length-" +
                       std::to_string(length) + " pseudo-orbits";
    rep.worst = Rational(0);
    for (size_t t = 0; t < trials; ++t) {
        PseudoOrbit po = gen_pseudo_orbit(sys, net, delta, length, seed0 + t);
        auto pts = orbit_points(net, po.nodes);
        ShadowTrial trial;
        trial.seed = po.seed;
        if (auto pb = pullback_shadow(sys, pts)) {
            trial.shadow = pb->first;
            trial.sup_dist = pb->second;
            trial.note = "branch pullback";
        } else {
            auto sr = shadow_search(sys, net, pts, rep.eps);
            trial.shadow = net.points[sr.best_index];
            trial.sup_dist = sr.best_sup;
            trial.note = "net scan";
        }
        trial.pass = trial.sup_dist <= rep.eps;
        if (trial.pass) ++rep.pass_count;
        if (trial.sup_dist > rep.worst) rep.worst = trial.sup_dist;
        rep.trials.push_back(std::move(trial));
    }
    rep.all_pass = rep.pass_count == trials;
    return rep;
}

namespace {

// Truncation-boundary rule for endpoint-exact shadowing: is there any point
// of the *untruncated* space whose k-step image is the endpoint, while every
// net solution was truncated away?
bool h_chain_excluded(const SystemDef& sys, const NetSpace& net,
                      const std::vector<uint32_t>& chain) {
    size_t k = chain.size() - 1;
    const Point& end = net.points[chain.back()];
    switch (sys.space.kind) {
        case SpaceKind::ex21_set: {
            // endpoint 2^-n needs the preimage 2^-(n+k), truncated when n+k > N
            const Rational& x = end.x();
            if (x.is_zero() || x == Rational(1)) return false;
            Rational v(1, 2);
            for (int depth = 1; depth <= sys.space.depth; ++depth) {
                if (x == v) return depth + static_cast<int>(k) > sys.space.depth;
                v = v * Rational(1, 2);
            }
            return false;
        }
        case SpaceKind::word_shift: {
            // k-step shift preimages exist on the net only when the last k
            // coordinates are the padding symbol
            size_t m = end.coords.size();
            for (size_t j = m >= k ? m - k : 0; j < m; ++j)
                if (!end.coords[j].is_zero()) return true;
            return false;
        }
        default:
            return false;
    }
}

}  // namespace

ShadowingReport h_shadowing_test(const SystemDef& sys, const NetSpace& net,
                                 const Rational& eps, const Rational& delta,
                                 size_t max_len, size_t chain_cap) {
    auto sys_ptr = std::make_shared<const SystemDef>(sys);
    auto net_ptr = std::make_shared<const NetSpace>(net);
    TransitionGraph g = build_transition_graph(sys_ptr, net_ptr, delta);

    ShadowingReport rep;
    rep.delta = delta;
    rep.eps = eps;
    rep.slack = Rational(0);
    rep.worst = Rational(0);
    rep.horizon_note = "all delta-chains of length <= " + std::to_string(max_len);

    // orbit table up to max_len for every net candidate
    size_t n = net.size();
    std::vector<std::vector<Point>> orbits(n);
    for (uint32_t v = 0; v < n; ++v) {
        orbits[v].reserve(max_len + 1);
        orbits[v].push_back(net.points[v]);
        for (size_t i = 0; i < max_len; ++i)
            orbits[v].push_back(eval_map(sys, orbits[v].back()));
    }

    size_t enumerated = 0;
    std::vector<uint32_t> chain;
    // DFS over all paths of length 1..max_len from every start node
    auto test_chain = [&](const std::vector<uint32_t>& c) {
        ShadowTrial trial;
        trial.seed = 0;
        size_t k = c.size() - 1;
        bool found = false;
        bool any_endpoint_exact = false;
        Rational best_sup;
        uint32_t best = 0;
        for (uint32_t cand = 0; cand < n; ++cand) {
            if (!(orbits[cand][k] == net.points[c[k]])) continue;  // endpoint exact
            any_endpoint_exact = true;
            Rational sup(0);
            for (size_t i = 0; i < k; ++i) {
                Rational d = metric_dist(orbits[cand][i], net.points[c[i]]);
                if (d > sup) sup = std::move(d);
            }
            if (sup <= eps && (!found || sup < best_sup)) {
                found = true;
                best_sup = std::move(sup);
                best = cand;
            }
        }
        // a chain counts as excluded only when no net point hits the endpoint
        // at all and the truncation rule explains why
        if (!any_endpoint_exact && h_chain_excluded(sys, net, c)) {
            trial.excluded = true;
            ++rep.excluded_count;
            trial.note = "excluded: endpoint preimage truncated away";
            rep.trials.push_back(std::move(trial));
            return;
        }
        trial.pass = found;
        trial.endpoint_exact = found;
        if (found) {
            trial.shadow = net.points[best];
            trial.sup_dist = best_sup;
            ++rep.pass_count;
            if (best_sup > rep.worst) rep.worst = best_sup;
        }
        rep.trials.push_back(std::move(trial));
    };

    struct DfsFrame {
        uint32_t node;
        size_t child;
    };
    for (uint32_t start = 0; start < n; ++start) {
        std::vector<DfsFrame> st{{start, 0}};
        chain.assign(1, start);
        while (!st.empty()) {
            DfsFrame& f = st.back();
            if (chain.size() - 1 >= max_len || f.child >= g.succ[f.node].size()) {
                st.pop_back();
                chain.pop_back();
                continue;
            }
            uint32_t w = g.succ[f.node][f.child++];
            chain.push_back(w);
            if (++enumerated > chain_cap)
                throw ResourceError("chains", "chain count exceeds cap " +
                                                  std::to_string(chain_cap));
            test_chain(chain);
            st.push_back({w, 0});
        }
    }
    rep.all_pass = rep.pass_count + rep.excluded_count == rep.trials.size();
    return rep;
}

PullbackTrace pullback_trace(const SystemDef& sys, const NetSpace& net,
                             const std::vector<uint32_t>& C, uint32_t x,
                             const ShadowingParams& params, size_t steps,
                             const Rational& slack) {
    if (C.empty()) throw ContractError("pullback_trace: C is empty");
    // f(C) = C on the net, exactly
    std::vector<uint32_t> image;
    for (uint32_t v : C) {
        Point q = eval_map(sys, net.points[v]);
        auto idx = net.index_of(q);
        if (!idx || !std::binary_search(C.begin(), C.end(), *idx))
            throw ContractError("pullback_trace: C is not exactly invariant at " +
                                net.points[v].to_string());
        image.push_back(*idx);
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (image.size() != C.size())
        throw ContractError("pullback_trace: f(C) is a strict subset of C");

    auto dist_to_C = [&](const Point& p) {
        Rational best = metric_dist(p, net.points[C[0]]);
        for (size_t i = 1; i < C.size(); ++i)
            best = min(best, metric_dist(p, net.points[C[i]]));
        return best;
    };

    PullbackTrace tr;
    const Point& x_pt = net.points[x];
    uint32_t xi = x;
    tr.steps.push_back({x, dist_to_C(x_pt), Rational(0)});
    if (tr.steps[0].dist_to_C > params.delta0) {
        tr.failed_step = 0;
        tr.note = "d(x, C) exceeds delta0";
        return tr;
    }
    Rational scale = params.delta0;
    for (size_t i = 0; i < steps; ++i) {
        // nearest C-point y to x_i and z in C with f(z) = y
        const Point& xi_pt = net.points[xi];
        uint32_t y = C[0];
        Rational best = metric_dist(xi_pt, net.points[C[0]]);
        for (size_t c = 1; c < C.size(); ++c) {
            Rational d = metric_dist(xi_pt, net.points[C[c]]);
            if (d < best) {
                best = std::move(d);
                y = C[c];
            }
        }
        uint32_t z = y;
        bool found_z = false;
        for (uint32_t c : C) {
            Point q = eval_map(sys, net.points[c]);
            auto idx = net.index_of(q);
            if (idx && *idx == y) {
                z = c;
                found_z = true;
                break;
            }
        }
        if (!found_z) throw ContractError("pullback_trace: no preimage of y inside C");

        // chain (z, x_i, f(x_i), ..., f^{i-1}(x_i), x)
        std::vector<Point> chain;
        chain.push_back(net.points[z]);
        Point p = net.points[xi];
        for (size_t j = 0; j < i; ++j) {
            chain.push_back(p);
            p = eval_map(sys, p);
        }
        chain.push_back(x_pt);

        scale = scale * params.L;  // L^{i+1} delta0
        auto sr = shadow_search(sys, net, chain, scale + slack);
        if (!sr.index) {
            tr.failed_step = i + 1;
            tr.note = "shadow search failed at step " + std::to_string(i + 1) +
                      " (best sup " + sr.best_sup.to_string() + " > " +
                      (scale + slack).to_string() + ")";
            return tr;
        }
        xi = *sr.index;
        Point fp = net.points[xi];
        for (size_t j = 0; j < i + 1; ++j) fp = eval_map(sys, fp);
        tr.steps.push_back({xi, dist_to_C(net.points[xi]), metric_dist(fp, x_pt)});
    }
    return tr;
}

}  // namespace netdyn
