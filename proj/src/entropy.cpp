#include "netdyn/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "netdyn/chain_analysis.hpp"
#include "netdyn/errors.hpp"

namespace netdyn {

namespace {

// Fast exact path: 1-D dyadic net whose orbits keep the common denominator
// 2^r (tent, doubling). Coordinates become integer numerators.
struct DyadicTable {
    bool circle = false;
    int64_t denom = 0;
    std::vector<std::vector<int64_t>> orbit;  // [node][step]
};

std::optional<DyadicTable> build_dyadic_table(const SystemDef& sys, const NetSpace& net,
                                              int n) {
    if (sys.kind != MapKind::tent && sys.kind != MapKind::doubling) return std::nullopt;
    if (net.metric() == MetricKind::word) return std::nullopt;
    DyadicTable t;
    t.circle = net.metric() == MetricKind::circle;
    if (net.resolution > 40) return std::nullopt;
    t.denom = int64_t(1) << net.resolution;
    t.orbit.assign(net.size(), {});
    for (size_t v = 0; v < net.size(); ++v) {
        int64_t num, den;
        if (!net.points[v].x().fits_int64(num, den) || den <= 0 || t.denom % den != 0)
            return std::nullopt;
        int64_t cur = num * (t.denom / den);
        auto& row = t.orbit[v];
        row.reserve(n);
        for (int i = 0; i < n; ++i) {
            row.push_back(cur);
            if (sys.kind == MapKind::tent) {
                cur = 2 * cur;
                if (cur > t.denom) cur = 2 * t.denom - cur;
            } else {
                cur = (2 * cur) % t.denom;
            }
        }
    }
    return t;
}

int64_t dyadic_dist(const DyadicTable& t, int64_t a, int64_t b) {
    int64_t d = a >= b ? a - b : b - a;
    if (t.circle && t.denom - d < d) d = t.denom - d;
    return d;
}

}  // namespace

SeparatedResult separated_count(const SystemDef& sys, const NetSpace& net, int n,
                                const Rational& eps) {
    if (n < 1) throw ContractError("separated_count: n must be >= 1");
    SeparatedResult res;
    res.n = n;
    res.eps = eps;

    if (auto tbl = build_dyadic_table(sys, net, n)) {
        int64_t enum_, eden;
        // eps as a numerator over the table denominator when exactly representable
        if (eps.fits_int64(enum_, eden) && eden > 0 && tbl->denom % eden == 0) {
            int64_t E = enum_ * (tbl->denom / eden);
            auto separated = [&](uint32_t a, uint32_t b) {
                const auto& ra = tbl->orbit[a];
                const auto& rb = tbl->orbit[b];
                for (int i = 0; i < n; ++i)
                    if (dyadic_dist(*tbl, ra[i], rb[i]) > E) return true;
                return false;
            };
            // chosen is sorted by numerator; only neighbors within eps at
            // step 0 need an orbit comparison, farther pairs separate at i=0
            std::vector<int64_t> chosen_num;
            for (uint32_t cand = 0; cand < net.size(); ++cand) {
                int64_t x0 = tbl->orbit[cand][0];
                size_t lo = std::lower_bound(chosen_num.begin(), chosen_num.end(), x0 - E) -
                            chosen_num.begin();
                bool ok = true;
                for (size_t k = lo; k < chosen_num.size(); ++k) {
                    if (!separated(res.chosen[k], cand)) {
                        ok = false;
                        break;
                    }
                }
                if (ok && tbl->circle) {
                    // wrap window: early chosen numerators within E of x0 + denom
                    for (size_t k = 0; k < res.chosen.size() && chosen_num[k] + tbl->denom <= x0 + E; ++k) {
                        if (!separated(res.chosen[k], cand)) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (ok) {
                    res.chosen.push_back(cand);
                    chosen_num.push_back(x0);
                }
            }
            // exact verification pass over eps-near pairs (farther pairs are
            // separated by their i=0 distance)
            for (size_t a = 0; a < res.chosen.size(); ++a) {
                for (size_t b = a + 1; b < res.chosen.size(); ++b) {
                    if (chosen_num[b] - chosen_num[a] > E) break;
                    if (!separated(res.chosen[a], res.chosen[b]))
                        throw ContractError("separated-set verification failed");
                }
                if (tbl->circle) {
                    for (size_t b = res.chosen.size(); b-- > a + 1;) {
                        if (chosen_num[a] + tbl->denom - chosen_num[b] > E) break;
                        if (!separated(res.chosen[a], res.chosen[b]))
                            throw ContractError("separated-set verification failed");
                    }
                }
            }
            return res;
        }
    }

    // general exact path
    std::vector<std::vector<Point>> orbits(net.size());
    for (uint32_t v = 0; v < net.size(); ++v) {
        orbits[v].reserve(n);
        orbits[v].push_back(net.points[v]);
        for (int i = 1; i < n; ++i) orbits[v].push_back(eval_map(sys, orbits[v].back()));
    }
    auto separated = [&](uint32_t a, uint32_t b) {
        for (int i = 0; i < n; ++i)
            if (metric_dist(orbits[a][i], orbits[b][i]) > eps) return true;
        return false;
    };
    for (uint32_t cand = 0; cand < net.size(); ++cand) {
        bool ok = true;
        for (uint32_t c : res.chosen)
            if (!separated(c, cand)) {
                ok = false;
                break;
            }
        if (ok) res.chosen.push_back(cand);
    }
    for (size_t a = 0; a < res.chosen.size(); ++a)
        for (size_t b = a + 1; b < res.chosen.size(); ++b)
            if (!separated(res.chosen[a], res.chosen[b]))
                throw ContractError("separated-set verification failed");
    return res;
}

EntropyEstimate entropy_estimate(const SystemDef& sys, const NetSpace& net,
                                 const Rational& eps, int n_min, int n_max,
                                 double positive_threshold, double zero_threshold) {
    if (n_min >= n_max) throw ContractError("entropy_estimate: need n_min < n_max");
    EntropyEstimate est;
    est.eps = eps;
    est.n_min = n_min;
    est.n_max = n_max;
    est.positive_threshold = positive_threshold;
    est.zero_threshold = zero_threshold;
    for (int n = n_min; n <= n_max; ++n)
        est.counts.push_back(separated_count(sys, net, n, eps).count());
    // least-squares slope of ln s(n) against n (report-level, double is fine)
    double k = static_cast<double>(est.counts.size());
    double sx = 0, sy = 0, sxy = 0, sxx = 0;
    for (size_t i = 0; i < est.counts.size(); ++i) {
        double x = n_min + static_cast<double>(i);
        double y = std::log(static_cast<double>(est.counts[i]));
        sx += x;
        sy += y;
        sxy += x * y;
        sxx += x * x;
    }
    est.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    if (est.slope >= positive_threshold)
        est.verdict = "positive";
    else if (est.slope <= zero_threshold)
        est.verdict = "zero-consistent";
    else
        est.verdict = "inconclusive";
    return est;
}

TrichotomyResult entropy_trichotomy(const SystemDef& sys, const NetSpace& net,
                                    std::vector<Rational> delta_grid, const Rational& eps,
                                    int n_min, int n_max) {
    TrichotomyResult tri;
    std::sort(delta_grid.begin(), delta_grid.end(), std::greater<Rational>());
    Rational floor_delta(0);
    if (!net.spec.is_exact()) {
        // below one net cell the graph degenerates to the exact functional
        // graph and stops over-approximating continuum chains
        floor_delta = Rational::pow2(-net.resolution);
        tri.note = "delta grid clamped at one net cell (" + floor_delta.to_string() + ")";
    }
    auto sys_ptr = std::make_shared<const SystemDef>(sys);
    auto net_ptr = std::make_shared<const NetSpace>(net);
    std::vector<std::vector<uint32_t>> crs;
    for (const auto& d : delta_grid) {
        if (!net.spec.is_exact() && d < floor_delta) continue;
        tri.grid_used.push_back(d);
        auto analysis = analyze_chains(build_transition_graph(sys_ptr, net_ptr, d));
        crs.push_back(analysis.recurrent_nodes);
        tri.cr_sizes.push_back(crs.back().size());
    }
    if (crs.empty()) throw ContractError("entropy_trichotomy: empty usable delta grid");

    // (2) intersection over the grid, stability over the tail; "finite" on a
    // finite net means the stable CR is a proper subset rather than the
    // whole-net shadow of an infinite chain recurrent set
    std::vector<uint32_t> inter = crs[0];
    for (size_t i = 1; i < crs.size(); ++i) {
        std::vector<uint32_t> tmp;
        std::set_intersection(inter.begin(), inter.end(), crs[i].begin(), crs[i].end(),
                              std::back_inserter(tmp));
        inter = std::move(tmp);
    }
    tri.stable_cr = inter;
    size_t tail = std::min<size_t>(2, crs.size());
    bool stable = true;
    for (size_t i = crs.size() - tail; i < crs.size(); ++i)
        if (crs[i] != inter) stable = false;
    tri.cr_finite_stable = stable && !inter.empty() && inter.size() < net.size();

    // (3) exact bijection on the stable CR
    bool bij = !inter.empty();
    {
        std::vector<uint32_t> images;
        for (uint32_t v : inter) {
            Point q = eval_map(sys, net.points[v]);
            auto idx = net.index_of(q);
            if (!idx || !std::binary_search(inter.begin(), inter.end(), *idx)) {
                bij = false;
                break;
            }
            images.push_back(*idx);
        }
        if (bij) {
            std::sort(images.begin(), images.end());
            images.erase(std::unique(images.begin(), images.end()), images.end());
            bij = images == inter;
        }
    }
    tri.cr_bijective = bij;

    tri.entropy = entropy_estimate(sys, net, eps, n_min, n_max);
    tri.entropy_zero = tri.entropy.verdict == "zero-consistent";
    tri.consistent = (tri.entropy_zero == tri.cr_finite_stable) &&
                     (tri.cr_finite_stable == tri.cr_bijective);
    return tri;
}

}  // namespace netdyn
