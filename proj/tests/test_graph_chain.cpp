#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netdyn/chain_analysis.hpp"
#include "netdyn/errors.hpp"
#include "oracles.hpp"

using namespace netdyn;

namespace {

struct Fixture {
    std::shared_ptr<const SystemDef> sys;
    std::shared_ptr<const NetSpace> net;
    Fixture(SystemDef s, NetSpace n)
        : sys(std::make_shared<const SystemDef>(std::move(s))),
          net(std::make_shared<const NetSpace>(std::move(n))) {}
    TransitionGraph graph(const Rational& delta) const {
        return build_transition_graph(sys, net, delta);
    }
    uint32_t at(const Rational& x) const {
        auto idx = net->index_of(Point{net->metric(), {x}});
        REQUIRE(idx.has_value());
        return *idx;
    }
};

Fixture ex21_fix(int N) {
    return Fixture(corpus_system(MapKind::ex21, N), build_net(ex21_spec(N), N));
}

}  // namespace

TEST_CASE("ex21_set(2) edges at delta=1/8 and 1/4") {
    Fixture f = ex21_fix(2);
    // net order: 0, 1/4, 1/2, 1
    TransitionGraph g8 = f.graph(Rational(1, 8));
    CHECK(g8.succ[0] == std::vector<uint32_t>{0});
    CHECK(g8.succ[1] == std::vector<uint32_t>{2});
    CHECK(g8.succ[2] == std::vector<uint32_t>{3});
    CHECK(g8.succ[3] == std::vector<uint32_t>{3});
    CHECK(g8.edge_count == 4);

    TransitionGraph g4 = f.graph(Rational(1, 4));
    CHECK(g4.succ[0] == std::vector<uint32_t>{0, 1});
    CHECK(g4.succ[1] == std::vector<uint32_t>{1, 2});
    CHECK(g4.succ[2] == std::vector<uint32_t>{3});
    CHECK(g4.succ[3] == std::vector<uint32_t>{3});
}

TEST_CASE("delta=0 on an exact invariant net gives the functional graph") {
    Fixture f = ex21_fix(5);
    TransitionGraph g = f.graph(Rational(0));
    for (uint32_t v = 0; v < g.size(); ++v) {
        REQUIRE(g.succ[v].size() == 1);
        CHECK(g.succ[v][0] == *f.net->index_of(eval_map(*f.sys, f.net->points[v])));
    }
}

TEST_CASE("box and interval queries match brute-force edge enumeration") {
    struct Probe {
        SystemDef sys;
        NetSpace net;
        Rational delta;
    };
    std::vector<Probe> probes;
    probes.push_back({corpus_system(MapKind::tent), build_net(interval01_spec(), 5),
                      Rational(3, 64)});
    probes.push_back({corpus_system(MapKind::doubling), build_net(circle_spec(), 5),
                      Rational(5, 64)});
    probes.push_back({corpus_system(MapKind::ex22, 3), build_net(ex22_spec(3), 7),
                      Rational(1, 32)});
    probes.push_back({corpus_system(MapKind::shift, 4), build_net(word_shift_spec(4), 4),
                      Rational(1, 8)});
    probes.push_back({corpus_system(MapKind::ex21_product, 2, 4),
                      build_net(ex21_product_spec(2, 4), 4), Rational(1, 16)});
    probes.push_back({corpus_system(MapKind::logistic), build_net(interval01_spec(), 5),
                      Rational(1, 32)});
    for (const auto& p : probes) {
        auto g = build_transition_graph(std::make_shared<const SystemDef>(p.sys),
                                        std::make_shared<const NetSpace>(p.net), p.delta);
        auto brute = oracles::brute_force_edges(p.sys, p.net, p.delta);
        REQUIRE(g.succ.size() == brute.size());
        for (size_t v = 0; v < brute.size(); ++v) CHECK(g.succ[v] == brute[v]);
    }
}

TEST_CASE("edge cap raises a resource error naming the stage") {
    Fixture f(corpus_system(MapKind::tent), build_net(interval01_spec(), 6));
    try {
        build_transition_graph(f.sys, f.net, Rational(1, 4), 50);
        FAIL("expected ResourceError");
    } catch (const ResourceError& e) {
        CHECK(e.stage == "edges");
    }
}

TEST_CASE("ex21_set(2) chain analysis at delta=1/8") {
    Fixture f = ex21_fix(2);
    auto a = analyze_chains(f.graph(Rational(1, 8)));
    CHECK(a.recurrent_nodes == std::vector<uint32_t>{f.at(Rational(0)), f.at(Rational(1))});
    REQUIRE(a.components.size() == 2);
    CHECK(a.order_pairs.empty());  // 0 only reaches 0
    CHECK(a.terminal == std::vector<int>{0, 1});
}

TEST_CASE("ex21_set(2) chain analysis at delta=1/4") {
    Fixture f = ex21_fix(2);
    auto a = analyze_chains(f.graph(Rational(1, 4)));
    CHECK(a.recurrent_nodes ==
          std::vector<uint32_t>{f.at(Rational(0)), f.at(Rational(1, 4)), f.at(Rational(1))});
    REQUIRE(a.components.size() == 3);
    CHECK(a.terminal == std::vector<int>{2});  // the {1}-component
    // order: {0} <= {1/4} <= {1}, plus the transitive pair
    CHECK(a.order_pairs ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("ex22 terminal component at the truncation-scale delta") {
    Fixture f(corpus_system(MapKind::ex22, 4), build_net(ex22_spec(4), 8));
    auto a = analyze_chains(f.graph(Rational::pow2(-8)));
    uint32_t two = f.at(Rational(2));
    uint32_t zero = f.at(Rational(0));
    CHECK(a.is_recurrent(two));
    CHECK(a.is_recurrent(zero));
    REQUIRE(a.components.size() == 2);
    CHECK(a.terminal == std::vector<int>{a.component_of_node[two]});
}

TEST_CASE("analysis agrees with the transitive-closure oracle") {
    struct Probe {
        SystemDef sys;
        NetSpace net;
        Rational delta;
    };
    std::vector<Probe> probes;
    probes.push_back({corpus_system(MapKind::ex21, 6), build_net(ex21_spec(6), 6),
                      Rational(1, 64)});
    probes.push_back({corpus_system(MapKind::tent), build_net(interval01_spec(), 4),
                      Rational(1, 16)});
    probes.push_back({corpus_system(MapKind::ex22, 3), build_net(ex22_spec(3), 6),
                      Rational(1, 64)});
    probes.push_back({corpus_system(MapKind::doubling), build_net(circle_spec(), 4),
                      Rational(1, 16)});
    for (const auto& p : probes) {
        auto g = build_transition_graph(std::make_shared<const SystemDef>(p.sys),
                                        std::make_shared<const NetSpace>(p.net), p.delta);
        auto a = analyze_chains(g);
        auto want = oracles::closure_analysis(g.succ);
        CHECK(a.recurrent_nodes == want.recurrent);
        REQUIRE(a.components.size() == want.components.size());
        for (size_t c = 0; c < want.components.size(); ++c)
            CHECK(a.components[c] == want.components[c]);
    }
}

TEST_CASE("components partition CR and terminal components are order-maximal") {
    // deltas at or above net density so chains always extend
    Fixture f(corpus_system(MapKind::tent), build_net(interval01_spec(), 5));
    for (int e = 2; e <= 5; ++e) {
        auto a = analyze_chains(f.graph(Rational::pow2(-e)));
        size_t total = 0;
        for (const auto& comp : a.components) total += comp.size();
        CHECK(total == a.recurrent_nodes.size());
        // maximal <=> terminal
        for (size_t c = 0; c < a.components.size(); ++c) {
            bool has_succ = false;
            for (auto [x, y] : a.order_pairs)
                if (x == static_cast<int>(c)) has_succ = true;
            bool is_term =
                std::find(a.terminal.begin(), a.terminal.end(), static_cast<int>(c)) !=
                a.terminal.end();
            CHECK(is_term == !has_succ);
        }
        CHECK(!a.terminal.empty());
    }
}

TEST_CASE("CR and edges grow monotonically with delta") {
    auto run = [](const Fixture& f, int e_hi, int e_lo) {
        std::vector<uint32_t> prev_cr;
        std::vector<std::vector<uint32_t>> prev_succ;
        bool first = true;
        for (int e = e_lo; e >= e_hi; --e) {  // delta increasing
            TransitionGraph g = f.graph(Rational::pow2(-e));
            auto a = analyze_chains(g);
            if (!first) {
                // edge sets nest node by node, and CR grows
                for (uint32_t v = 0; v < g.size(); ++v)
                    CHECK(std::includes(g.succ[v].begin(), g.succ[v].end(),
                                        prev_succ[v].begin(), prev_succ[v].end()));
                CHECK(std::includes(a.recurrent_nodes.begin(), a.recurrent_nodes.end(),
                                    prev_cr.begin(), prev_cr.end()));
            }
            prev_cr = a.recurrent_nodes;
            prev_succ = g.succ;
            first = false;
        }
    };
    run(ex21_fix(8), 2, 12);
    run(Fixture(corpus_system(MapKind::tent), build_net(interval01_spec(), 7)), 4, 8);
    run(Fixture(corpus_system(MapKind::shift, 5), build_net(word_shift_spec(5), 5)), 2, 6);
}

TEST_CASE("chain stability checks") {
    Fixture f = ex21_fix(2);
    TransitionGraph g8 = f.graph(Rational(1, 8));
    auto r1 = chain_stable_check(g8, {f.at(Rational(1))}, Rational(0));
    CHECK(r1.pass);

    TransitionGraph g4 = f.graph(Rational(1, 4));
    auto r2 = chain_stable_check(g4, {f.at(Rational(0))}, Rational(1, 2));
    REQUIRE_FALSE(r2.pass);
    CHECK(*r2.witness == f.at(Rational(1)));
    CHECK(r2.witness_dist == Rational(1));
    CHECK(r2.witness_path ==
          std::vector<uint32_t>{f.at(Rational(0)), f.at(Rational(1, 4)),
                                f.at(Rational(1, 2)), f.at(Rational(1))});

    std::vector<uint32_t> whole(f.net->size());
    for (uint32_t i = 0; i < whole.size(); ++i) whole[i] = i;
    CHECK(chain_stable_check(g4, whole, Rational(0)).pass);
    CHECK_THROWS_AS(chain_stable_check(g4, {}, Rational(0)), ContractError);
}

TEST_CASE("reachable sets") {
    Fixture f = ex21_fix(2);
    auto r8 = reachable_set(f.graph(Rational(1, 8)), {f.at(Rational(0))});
    CHECK(r8 == std::vector<uint32_t>{f.at(Rational(0))});
    auto r4 = reachable_set(f.graph(Rational(1, 4)), {f.at(Rational(0))});
    CHECK(r4.size() == 4);  // everything
}

TEST_CASE("graph-level invariant sets under exact maps") {
    // A = reachable_set(S) for f-invariant S: f(A) subset A, and everything
    // within delta/2 of an exact image of A stays in A
    Fixture f = ex21_fix(6);
    Rational delta(1, 16);
    TransitionGraph g = f.graph(delta);
    std::vector<uint32_t> S{f.at(Rational(0)), f.at(Rational(1))};
    auto A = reachable_set(g, S);
    for (uint32_t v : A) {
        auto fv = f.net->index_of(eval_map(*f.sys, f.net->points[v]));
        REQUIRE(fv.has_value());
        CHECK(std::binary_search(A.begin(), A.end(), *fv));
        for (uint32_t w : f.net->ball(f.net->points[*fv], delta * Rational(1, 2)))
            CHECK(std::binary_search(A.begin(), A.end(), w));
    }
}

TEST_CASE("chain mixing verdicts vs the matrix-power oracle") {
    // single loop node
    Fixture one(corpus_system(MapKind::ex21, 1), build_net(ex21_spec(1), 1));
    // {0, 1/2, 1}: delta=0 graph has loops at 0 and 1 -> not strongly connected
    auto m0 = chain_mixing_check(one.graph(Rational(0)));
    CHECK_FALSE(m0.mixing);

    Fixture f = ex21_fix(2);
    auto m8 = chain_mixing_check(f.graph(Rational(1, 8)));
    CHECK_FALSE(m8.strongly_connected);
    CHECK_FALSE(m8.mixing);

    Fixture tent(corpus_system(MapKind::tent), build_net(interval01_spec(), 6));
    auto mt = chain_mixing_check(tent.graph(Rational::pow2(-4)));
    CHECK(mt.strongly_connected);
    CHECK(mt.cycle_gcd == 1);
    CHECK(mt.mixing);

    // oracle comparison on small graphs across several deltas
    Fixture small(corpus_system(MapKind::tent), build_net(interval01_spec(), 4));
    for (int e = 2; e <= 5; ++e) {
        TransitionGraph g = small.graph(Rational::pow2(-e));
        bool want = oracles::mixing_by_matrix_powers(g.succ, 4 * g.size() * g.size());
        CHECK(chain_mixing_check(g).mixing == want);
    }
    Fixture e21s(corpus_system(MapKind::ex21, 3), build_net(ex21_spec(3), 3));
    for (int e = 1; e <= 4; ++e) {
        TransitionGraph g = e21s.graph(Rational::pow2(-e));
        bool want = oracles::mixing_by_matrix_powers(g.succ, 4 * g.size() * g.size());
        CHECK(chain_mixing_check(g).mixing == want);
    }
}

TEST_CASE("single self-loop node is chain mixing") {
    // restrict to the fixed point {1} via a 1-node net: use word space m=1
    SystemDef shift1 = corpus_system(MapKind::shift, 1);
    NetSpace net = build_net(word_shift_spec(1, {Rational(0)}), 1);
    auto g = build_transition_graph(std::make_shared<const SystemDef>(shift1),
                                    std::make_shared<const NetSpace>(net), Rational(0));
    REQUIRE(g.size() == 1);
    auto m = chain_mixing_check(g);
    CHECK(m.mixing);
    CHECK(m.cycle_gcd == 1);
}

TEST_CASE("condensation DOT styles terminal components") {
    Fixture f = ex21_fix(2);
    TransitionGraph g = f.graph(Rational(1, 4));
    auto a = analyze_chains(g);
    std::string dot = condensation_dot(g, a);
    CHECK(dot.find("digraph condensation") != std::string::npos);
    CHECK(dot.find("peripheries=2") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
}
