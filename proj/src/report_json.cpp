#include "netdyn/report_json.hpp"

#include <regex>

#include "netdyn/errors.hpp"

namespace netdyn {

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Point& p) {
    Json coords = Json::array();
    for (const auto& c : p.coords) coords.push_back(to_json(c));
    return Json{{"kind", metric_kind_name(p.kind)}, {"coords", coords}};
}

Json to_json(const SpaceSpec& s) {
    Json j{{"kind", space_kind_name(s.kind)}, {"description", s.description}};
    if (s.depth) j["depth"] = s.depth;
    if (s.base_depth) j["base_depth"] = s.base_depth;
    if (!s.alphabet.empty()) {
        Json a = Json::array();
        for (const auto& v : s.alphabet) a.push_back(to_json(v));
        j["alphabet"] = a;
    }
    return j;
}

Json to_json(const NetSpace& n) {
    return Json{{"space", to_json(n.spec)},
                {"resolution", n.resolution},
                {"size", n.size()},
                {"density", to_json(n.density())}};
}

Json net_point_table(const NetSpace& n) {
    Json t = Json::array();
    for (const auto& p : n.points) {
        Json coords = Json::array();
        for (const auto& c : p.coords) coords.push_back(to_json(c));
        t.push_back(coords);
    }
    return t;
}

Json to_json(const SystemDef& s) {
    Json j{{"name", s.name}, {"map", map_kind_name(s.kind)}, {"space", to_json(s.space)}};
    if (s.iterate != 1) j["iterate"] = s.iterate;
    if (s.kind == MapKind::piecewise_affine) {
        Json br = Json::array();
        for (const auto& b : s.base_branches)
            br.push_back(Json{{"lo", to_json(b.lo)},
                              {"hi", to_json(b.hi)},
                              {"slope", to_json(b.slope)},
                              {"intercept", to_json(b.intercept)}});
        j["branches"] = br;
    }
    return j;
}

Json to_json(const TransitionGraph& g) {
    Json adj = Json::array();
    for (const auto& row : g.succ) adj.push_back(row);
    return Json{{"system", to_json(*g.system)},
                {"net", to_json(*g.net)},
                {"delta", to_json(g.delta)},
                {"edge_count", g.edge_count},
                {"adjacency", adj},
                {"points", net_point_table(*g.net)}};
}

Json to_json(const TransitionGraph& g, const ChainAnalysis& a) {
    Json comps = Json::array();
    for (const auto& comp : a.components) {
        Json c = Json::array();
        for (uint32_t v : comp) c.push_back(g.net->points[v].to_string());
        comps.push_back(c);
    }
    Json order = Json::array();
    for (auto [c, d] : a.order_pairs) order.push_back(Json::array({c, d}));
    return Json{{"delta", to_json(a.delta)},
                {"approximation", "outer approximation at (delta, resolution) = (" +
                                      a.delta.to_string() + ", " +
                                      std::to_string(g.net->resolution) + ")"},
                {"recurrent_count", a.recurrent_nodes.size()},
                {"recurrent_nodes", a.recurrent_nodes},
                {"components", comps},
                {"order", order},
                {"terminal", a.terminal},
                {"scc_count", a.scc_count}};
}

Json to_json(const NetSpace& net, const StabilityResult& r) {
    Json j{{"pass", r.pass}};
    if (!r.pass) {
        j["witness"] = net.points[*r.witness].to_string();
        j["witness_dist"] = to_json(r.witness_dist);
        Json path = Json::array();
        for (uint32_t v : r.witness_path) path.push_back(net.points[v].to_string());
        j["witness_path"] = path;
    }
    return j;
}

static Json witness_json(const BEWitness& w) {
    return Json{{"x", w.x.to_string()},
                {"delta", to_json(w.delta)},
                {"y", w.y.to_string()},
                {"gap", to_json(w.gap)}};
}

Json to_json(const BallExpandingCertificate& c) {
    Json deltas = Json::array();
    for (const auto& d : c.delta_samples) deltas.push_back(to_json(d));
    Json j{{"system", c.system_name},
           {"L", to_json(c.L)},
           {"delta0", to_json(c.delta0)},
           {"mode", c.mode == BEMode::exact ? "exact" : "slack"},
           {"eta", to_json(c.eta)},
           {"target_resolution", c.target_res},
           {"candidate_resolution", c.cand_res},
           {"delta_samples", deltas},
           {"checked_triples", c.checked},
           {"excluded_targets", c.excluded_count},
           {"excluded_description", c.excluded_desc},
           {"pass", c.pass}};
    if (c.witness) {
        j["fail_count"] = c.fail_count;
        j["witness"] = witness_json(*c.witness);
        j["first_witness"] = witness_json(*c.first_witness);
        Json table = Json::array();
        for (const auto& w : c.witness_table) table.push_back(witness_json(w));
        j["witness_table"] = table;
        j["witness_table_truncated"] =
            c.fail_count > c.witness_table.size();
    }
    return j;
}

Json to_json(const CertificateSearchResult& c) {
    Json table = Json::array();
    for (const auto& e : c.table) {
        Json row{{"L", to_json(e.L)}, {"delta0", to_json(e.delta0)}, {"pass", e.pass}};
        if (e.witness) row["witness"] = witness_json(*e.witness);
        table.push_back(row);
    }
    Json j{{"found", c.best.has_value()}, {"table", table}};
    if (c.best) j["certificate"] = to_json(*c.best);
    return j;
}

Json to_json(const NetSpace&, const PairWitnessResult& r) {
    Json j{{"pass", r.pass}};
    if (r.witness)
        j["witness"] = Json::array(
            {r.witness->first.to_string(), r.witness->second.to_string()});
    return j;
}

Json to_json(const ShadowingReport& r) {
    Json trials = Json::array();
    for (const auto& t : r.trials) {
        Json tj{{"seed", t.seed}, {"pass", t.pass}};
        if (t.excluded) tj["excluded"] = true;
        if (t.shadow) {
            tj["shadow_point"] = t.shadow->to_string();
            tj["sup_dist"] = to_json(t.sup_dist);
        }
        if (t.endpoint_exact) tj["endpoint_exact"] = true;
        if (!t.note.empty()) tj["note"] = t.note;
        trials.push_back(tj);
    }
    return Json{{"L", to_json(r.params.L)},
                {"delta0", to_json(r.params.delta0)},
                {"delta", to_json(r.delta)},
                {"eps", to_json(r.eps)},
                {"slack", to_json(r.slack)},
                {"horizon", r.horizon_note},
                {"trials", trials},
                {"pass_count", r.pass_count},
                {"excluded_count", r.excluded_count},
                {"worst", to_json(r.worst)},
                {"all_pass", r.all_pass}};
}

Json to_json(const NetSpace& net, const PullbackTrace& t) {
    Json steps = Json::array();
    for (const auto& s : t.steps)
        steps.push_back(Json{{"point", net.points[s.node].to_string()},
                             {"dist_to_C", to_json(s.dist_to_C)},
                             {"orbit_error", to_json(s.orbit_error)}});
    Json j{{"steps", steps}, {"completed", !t.failed_step.has_value()}};
    if (t.failed_step) {
        j["failed_step"] = *t.failed_step;
        j["note"] = t.note;
    }
    return j;
}

Json to_json(const EntropyEstimate& e) {
    return Json{{"eps", to_json(e.eps)},
                {"n_min", e.n_min},
                {"n_max", e.n_max},
                {"counts", e.counts},
                {"slope", e.slope},
                {"positive_threshold", e.positive_threshold},
                {"zero_threshold", e.zero_threshold},
                {"verdict", e.verdict}};
}

Json to_json(const NetSpace& net, const TrichotomyResult& t) {
    Json grid = Json::array();
    for (const auto& d : t.grid_used) grid.push_back(to_json(d));
    Json cr = Json::array();
    for (uint32_t v : t.stable_cr) cr.push_back(net.points[v].to_string());
    return Json{{"entropy_zero", t.entropy_zero},
                {"cr_finite_stable", t.cr_finite_stable},
                {"cr_bijective", t.cr_bijective},
                {"consistent", t.consistent},
                {"grid", grid},
                {"cr_sizes", t.cr_sizes},
                {"stable_cr", cr},
                {"entropy", to_json(t.entropy)},
                {"note", t.note}};
}

Json to_json(const PeriodicReport& p) {
    Json cycles = Json::array();
    for (const auto& cyc : p.exact_cycles) {
        Json c = Json::array();
        for (const auto& pt : cyc) c.push_back(pt.to_string());
        cycles.push_back(c);
    }
    Json affine = Json::array();
    for (const auto& a : p.affine_points)
        affine.push_back(Json{{"point", a.point.to_string()},
                              {"period", a.period},
                              {"branch_code", a.branch_code}});
    return Json{{"max_period", p.max_period},
                {"exact_cycles", cycles},
                {"affine_points", affine}};
}

Json to_json(const ProductComponentCount& p) {
    Json factors = Json::array();
    for (const auto& f : p.factors)
        factors.push_back(Json{{"threshold", to_json(f.threshold)},
                               {"recurrent_sccs", f.recurrent_scc_count},
                               {"periods", f.periods}});
    return Json{{"m", p.m},
                {"delta", to_json(p.delta)},
                {"factors", factors},
                {"component_count", p.component_count}};
}

Json to_json(const MixingResult& m) {
    return Json{{"chain_mixing", m.mixing},
                {"strongly_connected", m.strongly_connected},
                {"cycle_gcd", m.cycle_gcd}};
}

std::string edge_list_text(const TransitionGraph& g) {
    std::string s;
    for (uint32_t v = 0; v < g.size(); ++v)
        for (uint32_t w : g.succ[v]) {
            s += std::to_string(v);
            s += ' ';
            s += std::to_string(w);
            s += '\n';
        }
    return s;
}

TransitionGraph graph_from_json(const Json& j) {
    SystemDef sys = system_from_json(j.at("system"));
    int res = j.at("net").at("resolution").get<int>();
    NetSpace net = build_net(sys.space, res);
    TransitionGraph g;
    g.system = std::make_shared<const SystemDef>(std::move(sys));
    g.net = std::make_shared<const NetSpace>(std::move(net));
    g.delta = Rational::parse(j.at("delta").get<std::string>());
    for (const auto& row : j.at("adjacency")) {
        g.succ.emplace_back();
        for (const auto& v : row) g.succ.back().push_back(v.get<uint32_t>());
        g.edge_count += g.succ.back().size();
    }
    if (g.succ.size() != g.net->size())
        throw ContractError("graph import: adjacency size mismatch");
    return g;
}

Json make_envelope(const std::string& command, const Json& config, const Json& payload,
                   const std::string& verdict, long elapsed_ms) {
    return Json{{"meta", Json{{"tool_version", kToolVersion},
                              {"schema_version", kSchemaVersion},
                              {"elapsed_ms", elapsed_ms}}},
                {"command", command},
                {"config", config},
                {"payload", payload},
                {"verdict", verdict}};
}

static void verify_rationals(const Json& j) {
    static const std::regex rat_re("^-?[0-9]+/[0-9]+$");
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (std::regex_match(s, rat_re)) {
            Rational r = Rational::parse(s);
            if (r.to_string() != s)
                throw ContractError("non-canonical rational in report: '" + s + "'");
        }
        return;
    }
    if (j.is_object() || j.is_array())
        for (const auto& item : j) verify_rationals(item);
}

void verify_envelope(const Json& envelope) {
    verify_rationals(envelope.at("payload"));
    verify_rationals(envelope.at("config"));
}

SpaceSpec space_spec_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "interval01") return interval01_spec();
    if (kind == "circle") return circle_spec();
    if (kind == "ex21_set") return ex21_spec(j.at("depth").get<int>());
    if (kind == "ex22_set") return ex22_spec(j.at("depth").get<int>());
    if (kind == "word_shift") {
        std::vector<Rational> alpha;
        if (j.contains("alphabet"))
            for (const auto& a : j.at("alphabet"))
                alpha.push_back(Rational::parse(a.get<std::string>()));
        else
            alpha = {Rational(0), Rational(1)};
        return word_shift_spec(j.at("depth").get<int>(), std::move(alpha));
    }
    if (kind == "ex21_product")
        return ex21_product_spec(j.at("depth").get<int>(), j.at("base_depth").get<int>());
    throw ConfigError("unknown space kind '" + kind + "'");
}

SystemDef system_from_json(const Json& j) {
    const std::string map = j.at("map").get<std::string>();
    SystemDef sys;
    if (map == "piecewise_affine") {
        SpaceSpec space = space_spec_from_json(j.at("space"));
        std::vector<AffineBranch> branches;
        for (const auto& b : j.at("branches"))
            branches.push_back(
                AffineBranch{Rational::parse(b.at("lo").get<std::string>()),
                             Rational::parse(b.at("hi").get<std::string>()),
                             Rational::parse(b.at("slope").get<std::string>()),
                             Rational::parse(b.at("intercept").get<std::string>())});
        sys = make_piecewise_affine(j.value("name", std::string("user")), space,
                                    std::move(branches));
    } else {
        MapKind kind;
        if (map == "ex21") kind = MapKind::ex21;
        else if (map == "ex21_product") kind = MapKind::ex21_product;
        else if (map == "ex22") kind = MapKind::ex22;
        else if (map == "tent") kind = MapKind::tent;
        else if (map == "doubling") kind = MapKind::doubling;
        else if (map == "logistic") kind = MapKind::logistic;
        else if (map == "shift") kind = MapKind::shift;
        else throw ConfigError("unknown map kind '" + map + "'");
        int d1 = 0, d2 = 0;
        if (j.contains("space")) {
            const auto& sp = j.at("space");
            d1 = sp.value("depth", 0);
            d2 = sp.value("base_depth", 0);
        }
        sys = corpus_system(kind, d1, d2);
    }
    if (j.contains("iterate")) {
        int it = j.at("iterate").get<int>();
        if (it > 1) sys = iterate_system(sys, it);
    }
    return sys;
}

}  // namespace netdyn
