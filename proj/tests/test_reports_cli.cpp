#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "netdyn/chain_analysis.hpp"
#include "netdyn/entropy.hpp"
#include "netdyn/errors.hpp"
#include "netdyn/expanding.hpp"
#include "netdyn/report_json.hpp"
#include "netdyn/shadowing.hpp"

using namespace netdyn;

TEST_CASE("rationals serialize canonically everywhere") {
    CHECK(to_json(Rational(1, 2)) == "1/2");
    CHECK(to_json(Rational(0)) == "0/1");
    CHECK(to_json(Rational(-6, 8)) == "-3/4");
}

TEST_CASE("envelope verification re-parses embedded exact values") {
    Json payload{{"value", "3/4"}, {"nested", Json::array({"1/2", "0/1"})}};
    Json env = make_envelope("demo", Json{{"eps", "1/8"}}, payload, "ok", 12);
    CHECK_NOTHROW(verify_envelope(env));
    Json bad = make_envelope("demo", Json::object(), Json{{"value", "2/4"}}, "ok", 0);
    CHECK_THROWS_AS(verify_envelope(bad), ContractError);
    CHECK(env.at("meta").at("tool_version") == kToolVersion);
}

TEST_CASE("graph JSON round trip reproduces the adjacency bit-exactly") {
    SystemDef sys = corpus_system(MapKind::ex21, 4);
    NetSpace net = build_net(ex21_spec(4), 4);
    auto g = build_transition_graph(std::make_shared<const SystemDef>(sys),
                                    std::make_shared<const NetSpace>(net), Rational(1, 8));
    Json j = to_json(g);
    TransitionGraph g2 = graph_from_json(j);
    CHECK(g2.succ == g.succ);
    CHECK(g2.delta == g.delta);
    CHECK(to_json(g2) == j);
}

TEST_CASE("edge list export matches the graph") {
    SystemDef sys = corpus_system(MapKind::ex21, 2);
    NetSpace net = build_net(ex21_spec(2), 2);
    auto g = build_transition_graph(std::make_shared<const SystemDef>(sys),
                                    std::make_shared<const NetSpace>(net), Rational(1, 8));
    CHECK(edge_list_text(g) == "0 0\n1 2\n2 3\n3 3\n");
}

TEST_CASE("identical configs and seeds give byte-identical payloads") {
    auto run_once = [] {
        SystemDef tent = corpus_system(MapKind::tent);
        NetSpace net = build_net(interval01_spec(), 6);
        ShadowingParams params{Rational(1, 2), Rational(1, 2)};
        auto rep = lipschitz_shadowing_test(tent, net, params, Rational::pow2(-6), 5, 10,
                                            Rational::pow2(-7), 42);
        return to_json(rep).dump();
    };
    CHECK(run_once() == run_once());
}

TEST_CASE("system and space specs parse from JSON") {
    Json j{{"map", "piecewise_affine"},
           {"name", "halving"},
           {"space", Json{{"kind", "interval01"}}},
           {"branches", Json::array({Json{{"lo", "0/1"},
                                          {"hi", "1/1"},
                                          {"slope", "1/2"},
                                          {"intercept", "0/1"}}})}};
    SystemDef sys = system_from_json(j);
    CHECK(sys.kind == MapKind::piecewise_affine);
    CHECK(eval_map(sys, real_point(Rational(1, 2))).x() == Rational(1, 4));

    Json jc{{"map", "ex21"}, {"space", Json{{"kind", "ex21_set"}, {"depth", 5}}}};
    SystemDef e21 = system_from_json(jc);
    CHECK(e21.space.depth == 5);

    Json ji{{"map", "tent"}, {"iterate", 2}};
    SystemDef t2 = system_from_json(ji);
    CHECK(t2.iterate == 2);
    CHECK(eval_map(t2, real_point(Rational(1, 8))).x() == Rational(1, 2));

    CHECK_THROWS_AS(system_from_json(Json{{"map", "nope"}}), ConfigError);
    CHECK_THROWS_AS(space_spec_from_json(Json{{"kind", "nope"}}), ConfigError);
}

TEST_CASE("certificate and analysis reports re-verify") {
    SystemDef tent = corpus_system(MapKind::tent);
    NetSpace target = build_net(interval01_spec(), 4);
    NetSpace cand = build_net(interval01_spec(), 6);
    auto cert = ball_expanding_check(tent, target, cand, Rational(1, 2), Rational(1, 2),
                                     {Rational(1, 8)}, BEMode::exact);
    Json env = make_envelope("certify", Json{{"L", "1/2"}}, to_json(cert), "pass", 1);
    CHECK_NOTHROW(verify_envelope(env));

    auto g = build_transition_graph(std::make_shared<const SystemDef>(tent),
                                    std::make_shared<const NetSpace>(target),
                                    Rational(1, 8));
    auto a = analyze_chains(g);
    Json env2 = make_envelope("components", Json::object(), to_json(g, a), "ok", 1);
    CHECK_NOTHROW(verify_envelope(env2));
}

#ifndef NETDYN_CLI_PATH
#define NETDYN_CLI_PATH "./netdyn"
#endif

namespace {

int run_cli(const std::string& args) {
    std::string cmd = std::string(NETDYN_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("CLI exit codes: pass, refuted, usage, resource") {
    std::string out = " --out /tmp";
    CHECK(run_cli("certify --system tent --L 1/2 --delta0 1/2 --res 6 --cand-res 8" + out) == 0);
    CHECK(run_cli("certify --system logistic --L 1/2 --delta0 1/4 --delta 1/8 "
                  "--slack 1/4096 --res 6 --cand-res 8" + out) == 1);
    CHECK(run_cli("no-such-subcommand") == 2);
    CHECK(run_cli("certify --bogus-flag 1") == 2);
    CHECK(run_cli("graph --system tent --res 6 --delta 1/8 --edge-cap 10" + out) == 3);
    CHECK(run_cli("components --system ex21 --depth 8 --res 8 --delta 1/64" + out) == 0);
    CHECK(run_cli("corpus-verify --only A3" + out) == 0);
    // decimal rationals must reduce to power-of-two denominators
    CHECK(run_cli("graph --system tent --res 4 --delta 0.1" + out) == 2);
    CHECK(run_cli("graph --system tent --res 4 --delta 0.125" + out) == 0);
}

TEST_CASE("CLI graph exports") {
    std::string base = "export --system ex21 --depth 2 --res 2 --delta 1/8 --out /tmp";
    REQUIRE(run_cli(base + " --format edge-list") == 0);
    {
        std::ifstream in("/tmp/graph.edges");
        REQUIRE(in.good());
        std::string all((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
        CHECK(all == "0 0\n1 2\n2 3\n3 3\n");
        // sidecar maps node indices to exact points
        std::ifstream side("/tmp/graph.points.json");
        REQUIRE(side.good());
        Json pts = Json::parse(side);
        REQUIRE(pts.size() == 4);
        CHECK(pts[1][0] == "1/4");
    }
    REQUIRE(run_cli(base + " --format dot") == 0);
    {
        std::ifstream in("/tmp/condensation.dot");
        REQUIRE(in.good());
        std::string all((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
        CHECK(all.find("digraph") != std::string::npos);
    }
    CHECK(run_cli(base + " --format nope") == 2);
}

TEST_CASE("CLI entropy emits the CSV table") {
    REQUIRE(run_cli("entropy --system ex21 --depth 6 --res 6 --eps 1/16 "
                    "--n-min 2 --n-max 5 --out /tmp") == 0);
    std::ifstream in("/tmp/entropy.csv");
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "n,count");
    int rows = 0;
    for (std::string line; std::getline(in, line) && !line.empty();) ++rows;
    CHECK(rows == 4);
}

TEST_CASE("CLI reports parse back and carry exact strings") {
    REQUIRE(run_cli("components --system ex21 --depth 4 --res 4 --delta 1/8 --out /tmp") == 0);
    std::ifstream in("/tmp/components.json");
    REQUIRE(in.good());
    Json env = Json::parse(in);
    CHECK_NOTHROW(verify_envelope(env));
    CHECK(env.at("payload").at("delta") == "1/8");
    CHECK(env.at("verdict") == "ok");
}

TEST_CASE("config file values apply beneath flags") {
    {
        std::ofstream cfg("/tmp/netdyn_cfg.json");
        cfg << R"({"system": "ex21", "depth": 4, "res": 4})";
    }
    REQUIRE(run_cli("net --config /tmp/netdyn_cfg.json --out /tmp") == 0);
    std::ifstream in("/tmp/net.json");
    Json env = Json::parse(in);
    CHECK(env.at("payload").at("space").at("kind") == "ex21_set");
    // a flag overrides the config file
    REQUIRE(run_cli("net --config /tmp/netdyn_cfg.json --depth 6 --res 6 --out /tmp") == 0);
    std::ifstream in2("/tmp/net.json");
    Json env2 = Json::parse(in2);
    CHECK(env2.at("payload").at("space").at("depth") == 6);
}
