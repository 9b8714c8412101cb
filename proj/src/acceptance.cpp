#include "netdyn/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "netdyn/chain_analysis.hpp"
#include "netdyn/entropy.hpp"
#include "netdyn/errors.hpp"
#include "netdyn/expanding.hpp"
#include "netdyn/interval_map.hpp"
#include "netdyn/orbits.hpp"
#include "netdyn/periodic.hpp"
#include "netdyn/product_analysis.hpp"
#include "netdyn/shadowing.hpp"

namespace netdyn {

namespace {

struct Checker {
    std::string failures;
    void req(bool cond, const std::string& msg) {
        if (!cond) {
            if (!failures.empty()) failures += "; ";
            failures += msg;
        }
    }
};

std::vector<Rational> dyadic_grid(int hi_exp, int lo_exp) {
    // {2^-hi_exp, ..., 2^-lo_exp} listed from the largest delta down
    std::vector<Rational> g;
    for (int e = hi_exp; e <= lo_exp; ++e) g.push_back(Rational::pow2(-e));
    return g;
}

std::vector<uint32_t> sorted_cr_at(const SystemDef& sys, const NetSpace& net,
                                   const Rational& delta) {
    auto g = build_transition_graph(std::make_shared<const SystemDef>(sys),
                                    std::make_shared<const NetSpace>(net), delta);
    return analyze_chains(g).recurrent_nodes;
}

// A1: tent ball-expanding certificate, exact mode
void a1(Checker& c) {
    SystemDef tent = corpus_system(MapKind::tent);
    NetSpace target = build_net(tent.space, 6);
    NetSpace cand = build_net(tent.space, 8);
    auto cert = ball_expanding_check(tent, target, cand, Rational(1, 2), Rational(1, 2),
                                     dyadic_grid(2, 6), BEMode::exact);
    c.req(cert.pass, "tent certificate failed");
    c.req(cert.excluded_count == 0, "tent should have no excluded targets");
}

// A2: shift ball-expanding certificate, exact mode
void a2(Checker& c) {
    SystemDef shift = corpus_system(MapKind::shift, 8);
    NetSpace net = build_net(shift.space, 8);
    auto cert = ball_expanding_check(shift, net, net, Rational(1, 2), Rational(1, 2),
                                     dyadic_grid(1, 8), BEMode::exact);
    c.req(cert.pass, "shift certificate failed");
    c.req(cert.excluded_count == net.size() / 2,
          "shift exclusion should cover words with nonzero last coordinate");
}

// A3: logistic refutation with pinned witness
void a3(Checker& c) {
    SystemDef logistic = corpus_system(MapKind::logistic);
    NetSpace target = build_net(logistic.space, 6);
    NetSpace cand = build_net(logistic.space, 8);
    Rational eta(1, 4096);
    auto cert = ball_expanding_check(logistic, target, cand, Rational(1, 2),
                                     Rational(1, 4), {Rational(1, 8)}, BEMode::slack, eta);
    c.req(!cert.pass, "logistic should be refuted");
    c.req(cert.witness.has_value(), "missing witness");
    if (cert.witness) {
        c.req(cert.witness->x == real_point(Rational(1, 2)),
              "witness x != 1/2 (got " + cert.witness->x.to_string() + ")");
        c.req(cert.witness->delta == Rational(1, 8), "witness delta != 1/8");
        c.req(cert.witness->y == real_point(Rational(7, 8)),
              "witness y != 7/8 (got " + cert.witness->y.to_string() + ")");
        c.req(cert.witness->gap >= Rational(1, 16) - eta,
              "witness gap below 1/16 - eta (got " + cert.witness->gap.to_string() + ")");
    }
}

// A4: ex21 chain structure across the delta grid
void a4(Checker& c) {
    SystemDef sys = corpus_system(MapKind::ex21, 16);
    NetSpace net = build_net(sys.space, 16);
    auto sys_p = std::make_shared<const SystemDef>(sys);
    auto net_p = std::make_shared<const NetSpace>(net);
    std::vector<uint32_t> inter;
    bool first = true;
    for (int e = 6; e <= 18; ++e) {
        auto cr = sorted_cr_at(sys, net, Rational::pow2(-e));
        if (first) {
            inter = cr;
            first = false;
        } else {
            std::vector<uint32_t> tmp;
            std::set_intersection(inter.begin(), inter.end(), cr.begin(), cr.end(),
                                  std::back_inserter(tmp));
            inter = tmp;
        }
    }
    auto i0 = net.index_of(real_point(Rational(0)));
    auto i1 = net.index_of(real_point(Rational(1)));
    c.req(i0 && i1, "net misses 0 or 1");
    c.req(inter == std::vector<uint32_t>{*i0, *i1}, "intersected CR != {0,1}");

    auto per = periodic_points_exact(sys, net, 8);
    std::vector<uint32_t> per_nodes;
    for (const auto& cyc : per.exact_cycles)
        for (const auto& p : cyc) per_nodes.push_back(*net.index_of(p));
    std::sort(per_nodes.begin(), per_nodes.end());
    c.req(per_nodes == inter, "exact periodic set != intersected CR");

    auto g = build_transition_graph(sys_p, net_p, Rational::pow2(-10));
    auto a = analyze_chains(g);
    int comp0 = a.component_of_node[*i0];
    int comp1 = a.component_of_node[*i1];
    c.req(comp0 >= 0 && comp1 >= 0 && comp0 != comp1,
          "0 and 1 should sit in distinct components at delta=2^-10");
    c.req(a.terminal == std::vector<int>{comp1}, "terminal components != {{1}}");
    bool ordered = std::find(a.order_pairs.begin(), a.order_pairs.end(),
                             std::make_pair(comp0, comp1)) != a.order_pairs.end();
    c.req(ordered, "0-component does not precede the 1-component");
}

// A5: ex22 structure + entropy trichotomy
void a5(Checker& c) {
    SystemDef sys = corpus_system(MapKind::ex22, 4);
    NetSpace net = build_net(sys.space, 8);
    auto tri = entropy_trichotomy(sys, net, dyadic_grid(3, 12), Rational::pow2(-6), 4, 12);
    c.req(tri.entropy_zero, "ex22 entropy verdict not zero-consistent");
    c.req(tri.cr_finite_stable, "ex22 CR not finite/stable");
    c.req(tri.cr_bijective, "ex22 map not bijective on stable CR");
    c.req(tri.consistent, "trichotomy inconsistent");
    auto i0 = net.index_of(real_point(Rational(0)));
    auto i2 = net.index_of(real_point(Rational(2)));
    c.req(tri.stable_cr == std::vector<uint32_t>{*i0, *i2}, "stable CR != {0,2}");

    auto g = build_transition_graph(std::make_shared<const SystemDef>(sys),
                                    std::make_shared<const NetSpace>(net),
                                    Rational::pow2(-8));
    auto a = analyze_chains(g);
    c.req(a.components.size() == 2, "ex22 should have exactly 2 components (got " +
                                        std::to_string(a.components.size()) + ")");
    int comp2 = a.component_of_node[*i2];
    c.req(comp2 >= 0 && a.terminal == std::vector<int>{comp2},
          "terminal != the {2}-component");
    // clopen margin: minimal exact distance from the terminal component to
    // the rest of the net
    Rational margin(-1);
    for (uint32_t v : a.components[comp2])
        for (uint32_t w = 0; w < net.size(); ++w) {
            if (std::find(a.components[comp2].begin(), a.components[comp2].end(), w) !=
                a.components[comp2].end())
                continue;
            Rational d = metric_dist(net.points[v], net.points[w]);
            if (margin.sign() < 0 || d < margin) margin = d;
        }
    c.req(margin == Rational(3, 2), "clopen margin != 3/2 (got " + margin.to_string() + ")");
}

// A6: tent entropy slope
void a6(Checker& c) {
    SystemDef tent = corpus_system(MapKind::tent);
    NetSpace net = build_net(tent.space, 18);
    auto est = entropy_estimate(tent, net, Rational::pow2(-6), 4, 12);
    c.req(est.slope >= 0.60 && est.slope <= 0.75,
          "tent slope outside [0.60, 0.75] (got " + std::to_string(est.slope) + ")");
    c.req(est.verdict == "positive", "tent entropy verdict should be positive");
}

// A7: locally-eventually-onto + mixing windows
void a7(Checker& c) {
    SystemDef tent = corpus_system(MapKind::tent);
    RegionUnion u_tent = make_interval(Rational(0), Rational::pow2(-6));
    auto i_tent = leo_check(tent, u_tent, 20);
    c.req(i_tent && *i_tent == 6, "tent cover index != 6");
    c.req(mixing_check(tent, u_tent, make_interval(Rational(1, 2), Rational(9, 16)), 6, 16),
          "tent mixing window failed");

    SystemDef dbl = corpus_system(MapKind::doubling);
    RegionUnion u_dbl = make_interval(Rational(0), Rational::pow2(-6), true);
    auto i_dbl = leo_check(dbl, u_dbl, 20);
    c.req(i_dbl && *i_dbl == 6, "doubling cover index != 6");
    c.req(mixing_check(dbl, u_dbl, make_interval(Rational(1, 4), Rational(5, 16), true), 6, 16),
          "doubling mixing window failed");

    SystemDef shift = corpus_system(MapKind::shift, 8);
    RegionUnion u_sh = make_cylinder(shift.space, {Rational(1), Rational(0), Rational(1),
                                                   Rational(1), Rational(0)});
    auto i_sh = leo_check(shift, u_sh, 20);
    c.req(i_sh && *i_sh == 5, "shift cover index != 5");
    c.req(mixing_check(shift, u_sh, make_cylinder(shift.space, {Rational(0), Rational(1)}),
                       5, 15),
          "shift mixing window failed");
}

// A8: Lipschitz shadowing, base and second iterate
void a8(Checker& c) {
    SystemDef tent = corpus_system(MapKind::tent);
    NetSpace net = build_net(tent.space, 6);
    ShadowingParams params{Rational(1, 2), Rational(1, 2)};
    c.req(params.lipschitz_M() == Rational(1), "M != 1 for L=1/2");
    auto rep = lipschitz_shadowing_test(tent, net, params, Rational::pow2(-6), 100, 40,
                                        Rational::pow2(-7));
    c.req(rep.all_pass, "tent shadowing trials failed (" +
                            std::to_string(rep.pass_count) + "/100 passed, worst " +
                            rep.worst.to_string() + ")");

    SystemDef tent2 = iterate_system(tent, 2);
    ShadowingParams params2{Rational(1, 4), Rational(1, 2)};
    c.req(params.iterate_M(2) == Rational(1, 3), "M_2 != 1/3");
    c.req(params2.lipschitz_M() == Rational(1, 3), "L^2 params give M != 1/3");
    auto rep2 = lipschitz_shadowing_test(tent2, net, params2, Rational::pow2(-6), 100, 40,
                                         Rational::pow2(-7));
    c.req(rep2.all_pass, "tent^2 shadowing trials failed (worst " +
                             rep2.worst.to_string() + ")");
}

// A9: h-shadowing on ex21
void a9(Checker& c) {
    SystemDef sys = corpus_system(MapKind::ex21, 8);
    NetSpace net = build_net(sys.space, 8);
    auto rep = h_shadowing_test(sys, net, Rational(1, 4), Rational::pow2(-6), 4);
    c.req(rep.all_pass, "h-shadowing failed on some non-excluded chain (" +
                            std::to_string(rep.pass_count) + " of " +
                            std::to_string(rep.trials.size()) + ")");
    c.req(rep.pass_count > 0, "no chains tested");
    c.req(rep.excluded_count > 0,
          "expected truncation-boundary exclusions on ex21_set(8)");
}

// A10: periodic density and Per == stable CR
void a10(Checker& c) {
    SystemDef tent = corpus_system(MapKind::tent);
    auto rep = periodic_points_affine(tent, 6);
    std::vector<Rational> xs;
    for (const auto& a : rep.affine_points) xs.push_back(a.point.x());
    std::sort(xs.begin(), xs.end());
    c.req(!xs.empty() && xs.front() <= Rational(1, 8), "no periodic point near 0");
    c.req(xs.back() >= Rational(7, 8), "no periodic point near 1");
    bool dense = true;
    for (size_t i = 0; i + 1 < xs.size(); ++i)
        if (xs[i + 1] - xs[i] > Rational(1, 4)) dense = false;
    c.req(dense, "period<=6 points not 1/8-dense in [0,1]");

    SystemDef e21 = corpus_system(MapKind::ex21, 8);
    NetSpace net21 = build_net(e21.space, 8);
    auto aff21 = periodic_points_affine(e21, 6);
    std::vector<Point> pts21;
    for (const auto& a : aff21.affine_points) pts21.push_back(a.point);
    std::sort(pts21.begin(), pts21.end(), point_less);
    c.req(pts21 == std::vector<Point>{real_point(Rational(0)), real_point(Rational(1))},
          "ex21 affine Per != {0,1}");
    auto cr21 = sorted_cr_at(e21, net21, Rational::pow2(-12));
    c.req(cr21.size() == 2 && net21.points[cr21[0]] == pts21[0] &&
              net21.points[cr21[1]] == pts21[1],
          "ex21 Per != stable CR");

    SystemDef e22 = corpus_system(MapKind::ex22, 4);
    NetSpace net22 = build_net(e22.space, 8);
    auto aff22 = periodic_points_affine(e22, 6);
    std::vector<Point> pts22;
    for (const auto& a : aff22.affine_points) pts22.push_back(a.point);
    std::sort(pts22.begin(), pts22.end(), point_less);
    c.req(pts22 == std::vector<Point>{real_point(Rational(0)), real_point(Rational(2))},
          "ex22 affine Per != {0,2}");
    auto cr22 = sorted_cr_at(e22, net22, Rational::pow2(-9));
    c.req(cr22.size() == 2 && net22.points[cr22[0]] == pts22[0] &&
              net22.points[cr22[1]] == pts22[1],
          "ex22 Per != stable CR");
}

// A11: chain mixing verdicts
void a11(Checker& c) {
    SystemDef tent = corpus_system(MapKind::tent);
    NetSpace net = build_net(tent.space, 6);
    auto mix = chain_mixing_check(build_transition_graph(
        std::make_shared<const SystemDef>(tent), std::make_shared<const NetSpace>(net),
        Rational::pow2(-4)));
    c.req(mix.strongly_connected && mix.mixing && mix.cycle_gcd == 1,
          "tent graph (r=6, delta=2^-4) should be primitive");

    SystemDef e21 = corpus_system(MapKind::ex21, 8);
    NetSpace net21 = build_net(e21.space, 8);
    auto mix21 = chain_mixing_check(build_transition_graph(
        std::make_shared<const SystemDef>(e21), std::make_shared<const NetSpace>(net21),
        Rational::pow2(-6)));
    c.req(!mix21.strongly_connected && !mix21.mixing,
          "ex21 graph (delta=2^-6) should not be strongly connected");
}

// A12: product hitting times and component growth
void a12(Checker& c) {
    std::optional<long> prev;
    for (int m = 3; m <= 5; ++m) {
        SystemDef sys = corpus_system(MapKind::ex21_product, m, 6);
        NetSpace net = build_net(sys.space, 6);
        auto g = build_transition_graph(std::make_shared<const SystemDef>(sys),
                                        std::make_shared<const NetSpace>(net),
                                        Rational::pow2(-9));
        auto a = analyze_chains(g);
        std::vector<Rational> coords;
        for (int j = 1; j <= m; ++j) coords.push_back(Rational::pow2(-(j - 1)));
        auto xi = net.index_of(word_point(coords));
        c.req(xi.has_value(), "start point off net at m=" + std::to_string(m));
        auto hit = cr_hitting_time(g, a, *xi);
        c.req(hit && *hit == m - 1,
              "hitting time != m-1 at m=" + std::to_string(m) +
                  (hit ? " (got " + std::to_string(*hit) + ")" : " (none)"));
        c.req(!prev || *hit > *prev, "hitting times not strictly increasing");
        prev = hit;
    }
    // component count of the m=6 product, nondecreasing as delta shrinks;
    // the factor set is truncated at N=8 so the smallest sampled coordinate
    // threshold (2 * 2^-9) stays above the truncation floor 2^-N
    SystemDef sys6 = corpus_system(MapKind::ex21_product, 6, 8);
    unsigned long long prev_count = 0;
    for (int e = 3; e <= 9; ++e) {
        auto pc = product_component_count(sys6, Rational::pow2(-e));
        c.req(pc.component_count >= prev_count,
              "component count dropped at delta=2^-" + std::to_string(e) + " (" +
                  std::to_string(pc.component_count) + " < " +
                  std::to_string(prev_count) + ")");
        prev_count = pc.component_count;
    }
}

// A13: iterate laws at delta = 0
void a13(Checker& c) {
    auto run = [&](const SystemDef& sys, const NetSpace& net, const std::string& tag) {
        auto net_p = std::make_shared<const NetSpace>(net);
        std::vector<uint32_t> cr1;
        size_t comp1 = 0;
        for (int i = 1; i <= 3; ++i) {
            SystemDef si = iterate_system(sys, i);
            auto g = build_transition_graph(std::make_shared<const SystemDef>(si), net_p,
                                            Rational(0));
            auto a = analyze_chains(g);
            if (i == 1) {
                cr1 = a.recurrent_nodes;
                comp1 = a.components.size();
            } else {
                c.req(a.recurrent_nodes == cr1, tag + ": CR(f^" + std::to_string(i) +
                                                    ") != CR(f) at delta=0");
                size_t ci = a.components.size();
                c.req(comp1 <= ci && ci <= static_cast<size_t>(i) * comp1,
                      tag + ": component count bounds violated at i=" + std::to_string(i));
            }
        }
        c.req(comp1 >= 1, tag + ": no components at delta=0");
    };
    SystemDef e21 = corpus_system(MapKind::ex21, 8);
    run(e21, build_net(e21.space, 8), "ex21");
    SystemDef e22 = corpus_system(MapKind::ex22, 4);
    run(e22, build_net(e22.space, 8), "ex22");
}

struct Criterion {
    std::string id;
    std::string title;
    long budget_ms;  // <= 0 means no per-criterion budget
    std::function<void(Checker&)> fn;
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::string& only) {
    std::vector<Criterion> criteria = {
        {"A1", "tent ball-expanding certificate (exact mode)", 10'000, a1},
        {"A2", "shift ball-expanding certificate (exact mode)", 20'000, a2},
        {"A3", "logistic refutation with pinned witness", 0, a3},
        {"A4", "ex21 chain structure over the delta grid", 0, a4},
        {"A5", "ex22 structure and entropy trichotomy", 0, a5},
        {"A6", "tent entropy slope in [0.60, 0.75]", 60'000, a6},
        {"A7", "locally-eventually-onto + mixing windows", 0, a7},
        {"A8", "Lipschitz shadowing, base map and second iterate", 0, a8},
        {"A9", "h-shadowing over all short chains", 0, a9},
        {"A10", "periodic density and Per == stable CR", 0, a10},
        {"A11", "chain-mixing verdicts", 0, a11},
        {"A12", "product hitting times and component growth", 0, a12},
        {"A13", "iterate laws at delta = 0", 0, a13},
    };
    std::vector<CriterionResult> results;
    for (const auto& crit : criteria) {
        if (!only.empty() && only != crit.id) continue;
        CriterionResult r;
        r.id = crit.id;
        r.title = crit.title;
        Checker c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            crit.fn(c);
        } catch (const ResourceError& e) {
            throw;  // caps abort the run; the caller maps these to exit 3
        } catch (const std::exception& e) {
            c.req(false, std::string("exception: ") + e.what());
        }
        auto t1 = std::chrono::steady_clock::now();
        r.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        if (crit.budget_ms > 0 && r.elapsed_ms > crit.budget_ms)
            c.req(false, "over budget: " + std::to_string(r.elapsed_ms) + " ms > " +
                             std::to_string(crit.budget_ms) + " ms");
        r.pass = c.failures.empty();
        r.detail = c.failures;
        results.push_back(std::move(r));
    }
    return results;
}

std::string format_acceptance_table(const std::vector<CriterionResult>& results) {
    std::string out;
    for (const auto& r : results) {
        std::string line = r.id;
        line.resize(5, ' ');
        line += r.pass ? "PASS" : "FAIL";
        line += "  (" + std::to_string(r.elapsed_ms) + " ms)  " + r.title;
        if (!r.pass) line += "  -- " + r.detail;
        out += line + "\n";
    }
    return out;
}

}  // namespace netdyn
