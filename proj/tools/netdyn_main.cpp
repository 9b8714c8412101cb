// netdyn: desk-scale verification of topological dynamics on finite metric
// nets. Subcommands cover net construction, delta-transition graphs, chain
// recurrence, ball-expanding certificates, shadowing, entropy, and the
// built-in corpus verification suite.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "netdyn/acceptance.hpp"
#include "netdyn/chain_analysis.hpp"
#include "netdyn/entropy.hpp"
#include "netdyn/errors.hpp"
#include "netdyn/expanding.hpp"
#include "netdyn/interval_map.hpp"
#include "netdyn/orbits.hpp"
#include "netdyn/periodic.hpp"
#include "netdyn/product_analysis.hpp"
#include "netdyn/report_json.hpp"
#include "netdyn/shadowing.hpp"

namespace {

using namespace netdyn;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct CommonOpts {
    std::string system = "tent";
    int depth = 0;       // N for ex21/ex22, m for words
    int base_depth = 0;  // N for ex21_product
    int resolution = 8;
    std::string config_file;
    std::string spec_file;  // JSON SystemDef for user piecewise-affine maps
    std::string out_dir;
    size_t net_cap = kDefaultNetCap;
    size_t edge_cap = kDefaultEdgeCap;
    size_t chain_cap = 1'000'000;
    int iterate = 1;
};

// config precedence: flags override config file overrides defaults
void apply_config_file(CommonOpts& o, CLI::App* cmd) {
    if (o.config_file.empty()) return;
    std::ifstream in(o.config_file);
    if (!in) throw ConfigError("cannot open config file " + o.config_file);
    Json j = Json::parse(in);
    auto set_if_default = [&](const char* flag, auto& field, auto parse) {
        if (j.contains(flag) && cmd->count(std::string("--") + flag) == 0)
            field = parse(j.at(flag));
    };
    set_if_default("system", o.system, [](const Json& v) { return v.get<std::string>(); });
    set_if_default("depth", o.depth, [](const Json& v) { return v.get<int>(); });
    set_if_default("base-depth", o.base_depth, [](const Json& v) { return v.get<int>(); });
    set_if_default("res", o.resolution, [](const Json& v) { return v.get<int>(); });
    set_if_default("net-cap", o.net_cap, [](const Json& v) { return v.get<size_t>(); });
    set_if_default("edge-cap", o.edge_cap, [](const Json& v) { return v.get<size_t>(); });
    set_if_default("iterate", o.iterate, [](const Json& v) { return v.get<int>(); });
}

// rationals on the command line: "p/q" or dyadic decimals like "0.125"
Rational parse_config_rational(const std::string& s) {
    Rational r = Rational::parse(s);
    if (s.find('.') != std::string::npos) {
        // decimal forms must reduce to a power-of-two denominator
        int64_t num = 0, denom = 0;
        bool pow2 = r.fits_int64(num, denom) && denom > 0 && (denom & (denom - 1)) == 0;
        if (!pow2)
            throw ConfigError("decimal rational '" + s +
                              "' does not have a power-of-two denominator");
    }
    return r;
}

SystemDef load_system(const CommonOpts& o) {
    if (!o.spec_file.empty()) {
        std::ifstream in(o.spec_file);
        if (!in) throw ConfigError("cannot open system spec " + o.spec_file);
        Json j = Json::parse(in);
        SystemDef sys = system_from_json(j);
        if (o.iterate > 1) sys = iterate_system(sys, o.iterate);
        return sys;
    }
    MapKind kind;
    if (o.system == "tent") kind = MapKind::tent;
    else if (o.system == "doubling") kind = MapKind::doubling;
    else if (o.system == "logistic") kind = MapKind::logistic;
    else if (o.system == "ex21") kind = MapKind::ex21;
    else if (o.system == "ex22") kind = MapKind::ex22;
    else if (o.system == "shift") kind = MapKind::shift;
    else if (o.system == "ex21_product") kind = MapKind::ex21_product;
    else throw ConfigError("unknown corpus tag '" + o.system + "'");
    SystemDef sys = corpus_system(kind, o.depth, o.base_depth);
    if (o.iterate > 1) sys = iterate_system(sys, o.iterate);
    return sys;
}

std::string out_path(const CommonOpts& o, const std::string& name) {
    std::string dir = o.out_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("NETDYN_OUT")) dir = env;
    }
    if (dir.empty()) dir = ".";
    return dir + "/" + name;
}

void write_report(const CommonOpts& o, const std::string& command, const Json& config,
                  const Json& payload, const std::string& verdict, long ms) {
    Json env = make_envelope(command, config, payload, verdict, ms);
    verify_envelope(env);
    std::string path = out_path(o, command + ".json");
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write report to " + path);
    out << env.dump(2) << "\n";
    std::cout << "report: " << path << "\n";
}

std::vector<Rational> parse_grid(const std::vector<std::string>& raw, int hi, int lo) {
    std::vector<Rational> grid;
    for (const auto& s : raw) grid.push_back(parse_config_rational(s));
    if (grid.empty())
        for (int e = hi; e <= lo; ++e) grid.push_back(Rational::pow2(-e));
    return grid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification of expanding-map dynamics on finite metric nets"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string delta_s = "1/64", eps_s = "1/16", L_s = "1/2", delta0_s = "1/2";
    std::string rho_s = "1/8", slack_s, set_s, U_lo = "0", U_hi = "1/64";
    std::string V_lo = "1/2", V_hi = "9/16", eta_s = "0";
    std::vector<std::string> delta_grid_s, L_grid_s, delta0_grid_s;
    int cand_res = 0, n_min = 4, n_max = 12, max_period = 6, length = 40;
    int max_len = 4, cap = 64, win_start = 0, win_end = 10, steps = 4;
    size_t trials = 100;
    uint64_t seed = 1;
    long hit_cap = -1;
    uint32_t start_node = 0;
    std::string only, format = "json", mode_s = "exact";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--system", o.system, "corpus tag (tent, doubling, logistic, ex21, ex22, shift, ex21_product)");
        cmd->add_option("--spec", o.spec_file, "JSON file with a piecewise-affine system");
        cmd->add_option("--depth,--N,--m", o.depth, "truncation depth (N or m)");
        cmd->add_option("--base-depth", o.base_depth, "factor depth for ex21_product");
        cmd->add_option("--res", o.resolution, "net resolution r");
        cmd->add_option("--iterate", o.iterate, "analyze the i-fold composition");
        cmd->add_option("--config", o.config_file, "JSON config file (flags override it)");
        cmd->add_option("--out", o.out_dir, "output directory (default $NETDYN_OUT or .)");
        cmd->add_option("--net-cap", o.net_cap, "net size cap");
        cmd->add_option("--edge-cap", o.edge_cap, "edge count cap");
        cmd->add_option("--chain-cap", o.chain_cap, "chain enumeration cap");
    };

    CLI::App* c_net = app.add_subcommand("net", "build a net and report it");
    add_common(c_net);

    CLI::App* c_graph = app.add_subcommand("graph", "build the delta-transition graph");
    add_common(c_graph);
    c_graph->add_option("--delta", delta_s, "chain jump bound");

    CLI::App* c_comp = app.add_subcommand("components", "chain recurrence analysis");
    add_common(c_comp);
    c_comp->add_option("--delta", delta_s, "chain jump bound");

    CLI::App* c_cert = app.add_subcommand("certify", "ball-expanding certificate");
    add_common(c_cert);
    c_cert->add_option("--L", L_s, "contraction factor in (0,1)");
    c_cert->add_option("--delta0", delta0_s, "ball radius bound");
    c_cert->add_option("--delta", delta_s, "single delta sample (else dyadic grid)");
    c_cert->add_option("--target-res", o.resolution, "target net resolution");
    c_cert->add_option("--cand-res", cand_res, "candidate net resolution (default target+2)");
    c_cert->add_option("--slack", eta_s, "image tolerance eta (enables slack mode)");
    c_cert->add_option("--delta-grid", delta_grid_s, "explicit delta samples");
    c_cert->add_option("--L-grid", L_grid_s, "search grid for L");
    c_cert->add_option("--delta0-grid", delta0_grid_s, "search grid for delta0");

    CLI::App* c_side = app.add_subcommand("expanding-side-checks",
                                          "metric expansion and local injectivity");
    add_common(c_side);
    c_side->add_option("--L", L_s, "expansion factor");
    c_side->add_option("--delta0", delta0_s, "pair distance bound");
    c_side->add_option("--rho", rho_s, "injectivity radius");

    CLI::App* c_shadow = app.add_subcommand("shadow", "Lipschitz shadowing trials");
    add_common(c_shadow);
    c_shadow->add_option("--L", L_s, "shadowing contraction L");
    c_shadow->add_option("--delta0", delta0_s, "gap bound delta0");
    c_shadow->add_option("--delta", delta_s, "pseudo-orbit gap");
    c_shadow->add_option("--trials", trials, "number of seeded trials");
    c_shadow->add_option("--length", length, "pseudo-orbit length");
    c_shadow->add_option("--seed", seed, "base seed");
    c_shadow->add_option("--slack", slack_s, "net-discreteness slack (default 2x density)");

    CLI::App* c_hshadow = app.add_subcommand("hshadow", "endpoint-exact shadowing");
    add_common(c_hshadow);
    c_hshadow->add_option("--eps", eps_s, "shadowing tolerance");
    c_hshadow->add_option("--delta", delta_s, "chain jump bound");
    c_hshadow->add_option("--max-len", max_len, "maximum chain length");

    CLI::App* c_pull = app.add_subcommand("pullback", "inductive pullback trace");
    add_common(c_pull);
    c_pull->add_option("--L", L_s, "contraction L");
    c_pull->add_option("--delta0", delta0_s, "initial scale");
    c_pull->add_option("--set", set_s, "comma-separated C values, e.g. '1' or '0,1/2'");
    c_pull->add_option("--start", U_lo, "start point x");
    c_pull->add_option("--steps", steps, "pullback steps");
    c_pull->add_option("--slack", slack_s, "shadow slack (default 2x density)");

    CLI::App* c_entropy = app.add_subcommand("entropy", "separated-set entropy estimate");
    add_common(c_entropy);
    c_entropy->add_option("--eps", eps_s, "separation scale");
    c_entropy->add_option("--n-min", n_min, "smallest horizon");
    c_entropy->add_option("--n-max", n_max, "largest horizon");

    CLI::App* c_tri = app.add_subcommand("trichotomy", "entropy / CR / bijection verdicts");
    add_common(c_tri);
    c_tri->add_option("--eps", eps_s, "separation scale");
    c_tri->add_option("--n-min", n_min, "smallest horizon");
    c_tri->add_option("--n-max", n_max, "largest horizon");
    c_tri->add_option("--delta-grid", delta_grid_s, "delta grid (default 2^-3..2^-12)");

    CLI::App* c_leo = app.add_subcommand("leo", "locally-eventually-onto index");
    add_common(c_leo);
    c_leo->add_option("--lo", U_lo, "interval lower end / cylinder prefix");
    c_leo->add_option("--hi", U_hi, "interval upper end");
    c_leo->add_option("--cap", cap, "iteration cap");

    CLI::App* c_mix = app.add_subcommand("mixing", "image-meets-target windows");
    add_common(c_mix);
    c_mix->add_option("--lo", U_lo, "U lower end");
    c_mix->add_option("--hi", U_hi, "U upper end");
    c_mix->add_option("--v-lo", V_lo, "V lower end");
    c_mix->add_option("--v-hi", V_hi, "V upper end");
    c_mix->add_option("--window-start", win_start, "first j checked");
    c_mix->add_option("--window-end", win_end, "last j checked");

    CLI::App* c_per = app.add_subcommand("periodic", "exact and branch-enumerated periodic points");
    add_common(c_per);
    c_per->add_option("--max-period", max_period, "largest period");

    CLI::App* c_hit = app.add_subcommand("hitting", "first entry time into CR_delta");
    add_common(c_hit);
    c_hit->add_option("--delta", delta_s, "chain jump bound");
    c_hit->add_option("--start-node", start_node, "net index of the start point");
    c_hit->add_option("--cap", hit_cap, "iteration cap (default 4|net|)");

    CLI::App* c_export = app.add_subcommand("export", "graph exports");
    add_common(c_export);
    c_export->add_option("--delta", delta_s, "chain jump bound");
    c_export->add_option("--format", format, "edge-list | dot | json");

    CLI::App* c_verify = app.add_subcommand("corpus-verify", "run the acceptance suite");
    add_common(c_verify);
    c_verify->add_option("--only", only, "run a single criterion (e.g. A3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&]() {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    };

    try {
        CLI::App* sub = app.get_subcommands().front();
        apply_config_file(o, sub);
        Json config{{"system", o.system},   {"depth", o.depth},
                    {"base_depth", o.base_depth}, {"resolution", o.resolution},
                    {"iterate", o.iterate}};

        if (sub == c_net) {
            SystemDef sys = load_system(o);
            NetSpace net = build_net(sys.space, o.resolution, o.net_cap);
            write_report(o, "net", config, to_json(net), "ok", elapsed());
            return kExitOk;
        }
        if (sub == c_graph || sub == c_comp || sub == c_export || sub == c_hit) {
            SystemDef sys = load_system(o);
            NetSpace net = build_net(sys.space, o.resolution, o.net_cap);
            Rational delta = parse_config_rational(delta_s);
            config["delta"] = to_json(delta);
            auto g = build_transition_graph(std::make_shared<const SystemDef>(sys),
                                            std::make_shared<const NetSpace>(net), delta,
                                            o.edge_cap);
            if (sub == c_graph) {
                write_report(o, "graph", config, to_json(g), "ok", elapsed());
                return kExitOk;
            }
            auto a = analyze_chains(g);
            if (sub == c_comp) {
                Json payload = to_json(g, a);
                write_report(o, "components", config, payload, "ok", elapsed());
                std::string dot = condensation_dot(g, a);
                std::ofstream dotf(out_path(o, "components.dot"));
                dotf << dot;
                return kExitOk;
            }
            if (sub == c_hit) {
                if (start_node >= g.size())
                    throw ConfigError("start node " + std::to_string(start_node) +
                                      " out of range for a net of " +
                                      std::to_string(g.size()) + " points");
                auto hit = cr_hitting_time(g, a, start_node, hit_cap);
                Json payload{{"start", g.net->points[start_node].to_string()},
                             {"hitting_time", hit ? Json(*hit) : Json(nullptr)}};
                write_report(o, "hitting", config, payload, hit ? "ok" : "none", elapsed());
                return kExitOk;
            }
            // export
            if (format == "edge-list") {
                std::ofstream f(out_path(o, "graph.edges"));
                f << edge_list_text(g);
                std::ofstream sidecar(out_path(o, "graph.points.json"));
                sidecar << net_point_table(*g.net).dump(2) << "\n";
                std::cout << "report: " << out_path(o, "graph.edges") << " (+ "
                          << out_path(o, "graph.points.json") << ")\n";
            } else if (format == "dot") {
                std::ofstream f(out_path(o, "condensation.dot"));
                f << condensation_dot(g, a);
                std::cout << "report: " << out_path(o, "condensation.dot") << "\n";
            } else if (format == "json") {
                write_report(o, "graph", config, to_json(g), "ok", elapsed());
            } else {
                throw ConfigError("unknown export format '" + format + "'");
            }
            return kExitOk;
        }
        if (sub == c_cert) {
            SystemDef sys = load_system(o);
            NetSpace target = build_net(sys.space, o.resolution, o.net_cap);
            int cr = cand_res > 0 ? cand_res : o.resolution + 2;
            NetSpace cand = sys.space.is_exact() && sys.space.metric() == MetricKind::word
                                ? target
                                : build_net(sys.space, cr, o.net_cap);
            Rational eta = parse_config_rational(eta_s);
            BEMode mode = eta.is_zero() ? BEMode::exact : BEMode::slack;
            Rational L = parse_config_rational(L_s);
            Rational d0 = parse_config_rational(delta0_s);
            config["L"] = to_json(L);
            config["delta0"] = to_json(d0);
            if (!L_grid_s.empty() || !delta0_grid_s.empty()) {
                auto Ls = parse_grid(L_grid_s, 1, 2);
                auto d0s = parse_grid(delta0_grid_s, 1, 3);
                auto res = certificate_search(sys, target, cand, Ls, d0s, mode, eta);
                write_report(o, "certify", config, to_json(res),
                             res.best ? "pass" : "refuted", elapsed());
                return res.best ? kExitOk : kExitRefuted;
            }
            std::vector<Rational> samples;
            if (!delta_grid_s.empty())
                samples = parse_grid(delta_grid_s, 0, 0);
            else if (c_cert->count("--delta"))
                samples = {parse_config_rational(delta_s)};
            else
                for (Rational d = Rational::pow2(-o.resolution); d <= d0; d += d)
                    samples.push_back(d);
            auto cert = ball_expanding_check(sys, target, cand, L, d0, samples, mode, eta);
            write_report(o, "certify", config, to_json(cert),
                         cert.pass ? "pass" : "refuted", elapsed());
            return cert.pass ? kExitOk : kExitRefuted;
        }
        if (sub == c_side) {
            SystemDef sys = load_system(o);
            NetSpace net = build_net(sys.space, o.resolution, o.net_cap);
            auto me = metric_expanding_check(sys, net, parse_config_rational(L_s),
                                             parse_config_rational(delta0_s));
            auto li = local_injectivity_check(sys, net, parse_config_rational(rho_s));
            Json payload{{"metric_expanding", to_json(net, me)},
                         {"local_injectivity", to_json(net, li)}};
            bool pass = me.pass && li.pass;
            write_report(o, "expanding-side-checks", config, payload,
                         pass ? "pass" : "refuted", elapsed());
            return pass ? kExitOk : kExitRefuted;
        }
        if (sub == c_shadow) {
            SystemDef sys = load_system(o);
            NetSpace net = build_net(sys.space, o.resolution, o.net_cap);
            Rational slack = slack_s.empty() ? net.density() + net.density()
                                             : parse_config_rational(slack_s);
            ShadowingParams params{parse_config_rational(L_s),
                                   parse_config_rational(delta0_s)};
            auto rep = lipschitz_shadowing_test(sys, net, params,
                                                parse_config_rational(delta_s), trials,
                                                length, slack, seed);
            write_report(o, "shadow", config, to_json(rep),
                         rep.all_pass ? "pass" : "refuted", elapsed());
            return rep.all_pass ? kExitOk : kExitRefuted;
        }
        if (sub == c_hshadow) {
            SystemDef sys = load_system(o);
            NetSpace net = build_net(sys.space, o.resolution, o.net_cap);
            auto rep = h_shadowing_test(sys, net, parse_config_rational(eps_s),
                                        parse_config_rational(delta_s), max_len,
                                        o.chain_cap);
            write_report(o, "hshadow", config, to_json(rep),
                         rep.all_pass ? "pass" : "refuted", elapsed());
            return rep.all_pass ? kExitOk : kExitRefuted;
        }
        if (sub == c_pull) {
            SystemDef sys = load_system(o);
            NetSpace net = build_net(sys.space, o.resolution, o.net_cap);
            Rational slack = slack_s.empty() ? net.density() + net.density()
                                             : parse_config_rational(slack_s);
            std::vector<uint32_t> C;
            std::string item;
            std::stringstream ss(set_s);
            while (std::getline(ss, item, ',')) {
                auto idx = net.index_of(Point{net.metric(), {parse_config_rational(item)}});
                if (!idx) throw ConfigError("C value off net: " + item);
                C.push_back(*idx);
            }
            std::sort(C.begin(), C.end());
            auto xi = net.index_of(Point{net.metric(), {parse_config_rational(U_lo)}});
            if (!xi) throw ConfigError("start point off net");
            ShadowingParams params{parse_config_rational(L_s),
                                   parse_config_rational(delta0_s)};
            auto tr = pullback_trace(sys, net, C, *xi, params, steps, slack);
            write_report(o, "pullback", config, to_json(net, tr),
                         tr.failed_step ? "refuted" : "pass", elapsed());
            return tr.failed_step ? kExitRefuted : kExitOk;
        }
        if (sub == c_entropy) {
            SystemDef sys = load_system(o);
            NetSpace net = build_net(sys.space, o.resolution, o.net_cap);
            auto est = entropy_estimate(sys, net, parse_config_rational(eps_s), n_min, n_max);
            write_report(o, "entropy", config, to_json(est), est.verdict, elapsed());
            // CSV table of (n, s(n, eps)) for plotting
            std::ofstream csv(out_path(o, "entropy.csv"));
            csv << "n,count\n";
            for (size_t i = 0; i < est.counts.size(); ++i)
                csv << (est.n_min + static_cast<int>(i)) << "," << est.counts[i] << "\n";
            return kExitOk;
        }
        if (sub == c_tri) {
            SystemDef sys = load_system(o);
            NetSpace net = build_net(sys.space, o.resolution, o.net_cap);
            auto grid = parse_grid(delta_grid_s, 3, 12);
            auto tri = entropy_trichotomy(sys, net, grid, parse_config_rational(eps_s),
                                          n_min, n_max);
            write_report(o, "trichotomy", config, to_json(net, tri),
                         tri.consistent ? "consistent" : "inconsistent", elapsed());
            return tri.consistent ? kExitOk : kExitRefuted;
        }
        if (sub == c_leo || sub == c_mix) {
            SystemDef sys = load_system(o);
            RegionUnion U = sys.space.metric() == MetricKind::word
                                ? RegionUnion(make_cylinder(sys.space, [&] {
                                      std::vector<Rational> pre;
                                      std::string item;
                                      std::stringstream ss(U_lo);
                                      while (std::getline(ss, item, ','))
                                          pre.push_back(parse_config_rational(item));
                                      return pre;
                                  }()))
                                : RegionUnion(make_interval(
                                      parse_config_rational(U_lo),
                                      parse_config_rational(U_hi),
                                      sys.space.kind == SpaceKind::circle));
            if (sub == c_leo) {
                auto idx = leo_check(sys, U, cap);
                Json payload{{"cover_index", idx ? Json(*idx) : Json(nullptr)},
                             {"cap", cap}};
                write_report(o, "leo", config, payload, idx ? "pass" : "none", elapsed());
                return idx ? kExitOk : kExitRefuted;
            }
            RegionUnion V = sys.space.metric() == MetricKind::word
                                ? RegionUnion(make_cylinder(sys.space, [&] {
                                      std::vector<Rational> pre;
                                      std::string item;
                                      std::stringstream ss(V_lo);
                                      while (std::getline(ss, item, ','))
                                          pre.push_back(parse_config_rational(item));
                                      return pre;
                                  }()))
                                : RegionUnion(make_interval(
                                      parse_config_rational(V_lo),
                                      parse_config_rational(V_hi),
                                      sys.space.kind == SpaceKind::circle));
            bool ok = mixing_check(sys, U, V, win_start, win_end);
            Json payload{{"mixing", ok},
                         {"window", Json::array({win_start, win_end})}};
            write_report(o, "mixing", config, payload, ok ? "pass" : "refuted", elapsed());
            return ok ? kExitOk : kExitRefuted;
        }
        if (sub == c_per) {
            SystemDef sys = load_system(o);
            PeriodicReport rep;
            rep.max_period = max_period;
            try {
                NetSpace net = build_net(sys.space, o.resolution, o.net_cap);
                rep = periodic_points_exact(sys, net, max_period);
            } catch (const DomainError&) {
                // non-invariant net: affine enumeration only
            }
            auto aff = periodic_points_affine(sys, max_period);
            rep.affine_points = std::move(aff.affine_points);
            write_report(o, "periodic", config, to_json(rep), "ok", elapsed());
            return kExitOk;
        }
        if (sub == c_verify) {
            auto results = run_acceptance(only);
            std::cout << format_acceptance_table(results);
            bool all = !results.empty();
            Json payload = Json::array();
            long total = 0;
            for (const auto& r : results) {
                all = all && r.pass;
                total += r.elapsed_ms;
                payload.push_back(Json{{"id", r.id},
                                       {"title", r.title},
                                       {"pass", r.pass},
                                       {"elapsed_ms", r.elapsed_ms},
                                       {"detail", r.detail}});
            }
            std::cout << "total: " << total << " ms\n";
            write_report(o, "corpus-verify", config, payload, all ? "pass" : "fail",
                         elapsed());
            return all ? kExitOk : kExitRefuted;
        }
        throw ConfigError("unhandled subcommand");
    } catch (const ResourceError& e) {
        std::cerr << "resource cap exceeded at stage '" << e.stage << "': " << e.what()
                  << "\n";
        return kExitResource;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
