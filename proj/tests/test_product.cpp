#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netdyn/chain_analysis.hpp"
#include "netdyn/errors.hpp"
#include "netdyn/orbits.hpp"
#include "netdyn/product_analysis.hpp"

using namespace netdyn;

TEST_CASE("factored component count equals explicit product-graph analysis") {
    struct Probe {
        int m, N;
        Rational delta;
    };
    std::vector<Probe> probes{{2, 3, Rational(1, 8)},  {2, 3, Rational(1, 16)},
                              {2, 3, Rational(1, 4)},  {3, 2, Rational(1, 8)},
                              {3, 2, Rational(1, 32)}, {2, 4, Rational(1, 64)}};
    for (const auto& p : probes) {
        SystemDef sys = corpus_system(MapKind::ex21_product, p.m, p.N);
        NetSpace net = build_net(ex21_product_spec(p.m, p.N), p.N);
        auto g = build_transition_graph(std::make_shared<const SystemDef>(sys),
                                        std::make_shared<const NetSpace>(net), p.delta);
        auto a = analyze_chains(g);
        auto pc = product_component_count(sys, p.delta);
        CHECK(pc.component_count == a.components.size());
        // recurrence factors coordinatewise: recurrent product nodes are
        // exactly the tuples of factor-recurrent coordinates
        size_t recurrent_product = 1;
        bool factors_known = true;
        for (const auto& fs : pc.factors)
            if (fs.recurrent_scc_count == 0) factors_known = false;
        if (factors_known) {
            // count recurrent base points per factor from the explicit graph
            NetSpace base = build_net(ex21_spec(p.N), p.N);
            SystemDef base_sys = corpus_system(MapKind::ex21, p.N);
            Rational t = p.delta;
            for (int j = 1; j <= p.m; ++j) {
                t = j == 1 ? p.delta + p.delta : t + t;
                auto bg = build_transition_graph(
                    std::make_shared<const SystemDef>(base_sys),
                    std::make_shared<const NetSpace>(base), min(t, Rational(2)));
                recurrent_product *= analyze_chains(bg).recurrent_nodes.size();
            }
            CHECK(a.recurrent_nodes.size() == recurrent_product);
        }
    }
}

TEST_CASE("component counts are nondecreasing down the delta grid at N=8") {
    SystemDef sys = corpus_system(MapKind::ex21_product, 6, 8);
    std::vector<unsigned long long> counts;
    for (int e = 3; e <= 9; ++e)
        counts.push_back(product_component_count(sys, Rational::pow2(-e)).component_count);
    CHECK(counts.front() == 6);
    CHECK(counts.back() == 729);
    for (size_t i = 1; i < counts.size(); ++i) CHECK(counts[i] >= counts[i - 1]);
}

TEST_CASE("hitting times on the product grow with the truncation length") {
    std::vector<long> hits;
    for (int m = 3; m <= 5; ++m) {
        SystemDef sys = corpus_system(MapKind::ex21_product, m, 6);
        NetSpace net = build_net(ex21_product_spec(m, 6), 6);
        auto g = build_transition_graph(std::make_shared<const SystemDef>(sys),
                                        std::make_shared<const NetSpace>(net),
                                        Rational::pow2(-9));
        auto a = analyze_chains(g);
        std::vector<Rational> coords;
        for (int j = 1; j <= m; ++j) coords.push_back(Rational::pow2(-(j - 1)));
        auto hit = cr_hitting_time(g, a, *net.index_of(word_point(coords)));
        REQUIRE(hit.has_value());
        CHECK(*hit == m - 1);
        hits.push_back(*hit);
    }
    CHECK(std::is_sorted(hits.begin(), hits.end()));
}

TEST_CASE("all-ones is a terminal fixed point of the product") {
    SystemDef sys = corpus_system(MapKind::ex21_product, 3, 4);
    NetSpace net = build_net(ex21_product_spec(3, 4), 4);
    auto g = build_transition_graph(std::make_shared<const SystemDef>(sys),
                                    std::make_shared<const NetSpace>(net),
                                    Rational::pow2(-8));
    auto a = analyze_chains(g);
    auto ones = *net.index_of(word_point({Rational(1), Rational(1), Rational(1)}));
    REQUIRE(a.is_recurrent(ones));
    int comp = a.component_of_node[ones];
    CHECK(std::find(a.terminal.begin(), a.terminal.end(), comp) != a.terminal.end());
}

TEST_CASE("factored count rejects non-product systems") {
    CHECK_THROWS_AS(product_component_count(corpus_system(MapKind::tent), Rational(1, 8)),
                    UnsupportedSystemError);
}
