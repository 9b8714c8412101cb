#include "netdyn/system.hpp"

#include <algorithm>

#include "netdyn/errors.hpp"

namespace netdyn {

std::string map_kind_name(MapKind k) {
    switch (k) {
        case MapKind::ex21: return "ex21";
        case MapKind::ex21_product: return "ex21_product";
        case MapKind::ex22: return "ex22";
        case MapKind::tent: return "tent";
        case MapKind::doubling: return "doubling";
        case MapKind::logistic: return "logistic";
        case MapKind::shift: return "shift";
        case MapKind::piecewise_affine: return "piecewise_affine";
    }
    return "?";
}

static std::vector<AffineBranch> corpus_branches(MapKind k) {
    const Rational h(1, 2);
    switch (k) {
        case MapKind::tent:
            return {{Rational(0), h, Rational(2), Rational(0)},
                    {h, Rational(1), Rational(-2), Rational(2)}};
        case MapKind::doubling:
            return {{Rational(0), h, Rational(2), Rational(0)},
                    {h, Rational(1), Rational(2), Rational(-1)}};
        case MapKind::ex21:
            return {{Rational(0), h, Rational(2), Rational(0)},
                    {Rational(1), Rational(1), Rational(0), Rational(1)}};
        case MapKind::ex22:
            return {{Rational(0), Rational(1, 8), Rational(4), Rational(0)},
                    {Rational(1, 4), Rational(2), Rational(0), Rational(2)}};
        default:
            return {};
    }
}

SystemDef corpus_system(MapKind tag, int depth1, int depth2) {
    SystemDef s;
    s.kind = tag;
    s.name = map_kind_name(tag);
    switch (tag) {
        case MapKind::ex21:
            s.space = ex21_spec(depth1 > 0 ? depth1 : 8);
            break;
        case MapKind::ex22:
            s.space = ex22_spec(depth1 > 0 ? depth1 : 4);
            break;
        case MapKind::tent:
        case MapKind::logistic:
            s.space = interval01_spec();
            break;
        case MapKind::doubling:
            s.space = circle_spec();
            break;
        case MapKind::shift:
            s.space = word_shift_spec(depth1 > 0 ? depth1 : 8);
            break;
        case MapKind::ex21_product:
            s.space = ex21_product_spec(depth1 > 0 ? depth1 : 4, depth2 > 0 ? depth2 : 6);
            break;
        case MapKind::piecewise_affine:
            throw ConfigError("piecewise_affine is not a corpus tag");
    }
    s.base_branches = corpus_branches(tag);
    return s;
}

SystemDef make_piecewise_affine(std::string name, SpaceSpec space,
                                std::vector<AffineBranch> branches) {
    if (space.metric() == MetricKind::word)
        throw ConfigError("piecewise-affine systems are 1-D");
    if (branches.empty()) throw ConfigError("piecewise-affine system needs branches");
    std::sort(branches.begin(), branches.end(),
              [](const AffineBranch& a, const AffineBranch& b) { return a.lo < b.lo; });
    for (const auto& b : branches)
        if (b.lo > b.hi) throw ConfigError("branch with empty domain");
    bool circle = space.kind == SpaceKind::circle;
    for (size_t i = 0; i + 1 < branches.size(); ++i) {
        const auto& a = branches[i];
        const auto& b = branches[i + 1];
        if (b.lo < a.hi) throw ConfigError("overlapping branch domains");
        if (b.lo == a.hi) {
            Rational va = a.apply(a.hi), vb = b.apply(b.lo);
            if (circle ? va.mod1() != vb.mod1() : va != vb)
                throw ConfigError("branches disagree at shared endpoint " +
                                  a.hi.to_string());
        }
    }
    if (circle) {
        // symbolic composition requires branch values in [0,1] (1 == 0)
        for (const auto& br : branches) {
            Rational lo = min(br.apply(br.lo), br.apply(br.hi));
            Rational hi = max(br.apply(br.lo), br.apply(br.hi));
            if (lo.sign() < 0 || hi > Rational(1))
                throw ConfigError("circle branch values must stay in [0,1]");
        }
    }
    SystemDef s;
    s.name = std::move(name);
    s.space = std::move(space);
    s.kind = MapKind::piecewise_affine;
    s.base_branches = std::move(branches);
    return s;
}

static Rational eval_ex21_coord(const Rational& x) {
    if (x == Rational(1)) return x;
    return x + x;
}

static Point eval_once(const SystemDef& sys, const Point& p) {
    switch (sys.kind) {
        case MapKind::ex21:
            return real_point(eval_ex21_coord(p.x()));
        case MapKind::ex22: {
            if (p.x() == Rational(2) || (p.x() >= Rational(1, 4) && p.x() <= Rational(1, 2)))
                return real_point(Rational(2));
            return real_point(p.x() * Rational(4));
        }
        case MapKind::tent: {
            if (p.x() <= Rational(1, 2)) return real_point(p.x() + p.x());
            return real_point(Rational(2) - p.x() - p.x());
        }
        case MapKind::doubling:
            return circle_point((p.x() + p.x()).mod1());
        case MapKind::logistic: {
            Rational x = p.x();
            return real_point(Rational(4) * x * (Rational(1) - x));
        }
        case MapKind::shift: {
            std::vector<Rational> c(p.coords.begin() + 1, p.coords.end());
            c.emplace_back(0);
            return word_point(std::move(c));
        }
        case MapKind::ex21_product: {
            std::vector<Rational> c;
            c.reserve(p.coords.size());
            for (const auto& x : p.coords) c.push_back(eval_ex21_coord(x));
            return word_point(std::move(c));
        }
        case MapKind::piecewise_affine: {
            for (const auto& b : sys.base_branches) {
                if (!b.domain_contains(p.x())) continue;
                Rational v = b.apply(p.x());
                if (sys.space.kind == SpaceKind::circle) v = v.mod1();
                return Point{p.kind, {std::move(v)}};
            }
            throw DomainError("point " + p.to_string() + " not covered by any branch");
        }
    }
    throw DomainError("unreachable map kind");
}

Point eval_map(const SystemDef& sys, const Point& p) {
    if (!sys.space.contains(p))
        throw DomainError("point " + p.to_string() + " outside space of " + sys.name);
    if (const auto* br = sys.branches(); br && sys.iterate > 1) {
        for (const auto& b : *br) {
            if (!b.domain_contains(p.x())) continue;
            Rational v = b.apply(p.x());
            if (sys.space.kind == SpaceKind::circle) v = v.mod1();
            return Point{p.kind, {std::move(v)}};
        }
        throw DomainError("point " + p.to_string() + " not covered by composed branches");
    }
    Point q = p;
    for (int k = 0; k < sys.iterate; ++k) q = eval_once(sys, q);
    return q;
}

std::vector<AffineBranch> compose_branches(const std::vector<AffineBranch>& f,
                                           const std::vector<AffineBranch>& g) {
    std::vector<AffineBranch> out;
    for (const auto& bf : f) {
        for (const auto& bg : g) {
            // domain piece of bf whose bf-image lies in bg's domain
            Rational lo = bf.lo, hi = bf.hi;
            if (bf.slope.is_zero()) {
                if (!bg.domain_contains(bf.intercept)) continue;
            } else {
                Rational plo = (bg.lo - bf.intercept) / bf.slope;
                Rational phi = (bg.hi - bf.intercept) / bf.slope;
                if (bf.slope.sign() < 0) std::swap(plo, phi);
                lo = max(lo, plo);
                hi = min(hi, phi);
                if (lo > hi) continue;
            }
            out.push_back(AffineBranch{lo, hi, bg.slope * bf.slope,
                                       bg.slope * bf.intercept + bg.intercept});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const AffineBranch& a, const AffineBranch& b) {
                  return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
              });
    return out;
}

SystemDef iterate_system(const SystemDef& sys, int i) {
    if (i < 1) throw ConfigError("iterate count must be >= 1");
    SystemDef out = sys;
    out.iterate = sys.iterate * i;
    out.name = sys.name + "^" + std::to_string(out.iterate);
    out.composed_branches.clear();
    if (sys.is_affine()) {
        // circle branch values stay in [0,1] for the corpus doubling map, so
        // plain affine composition is exact along valid paths
        std::vector<AffineBranch> acc = sys.base_branches;
        for (int k = 1; k < out.iterate; ++k) acc = compose_branches(acc, sys.base_branches);
        if (out.iterate > 1) out.composed_branches = std::move(acc);
    }
    return out;
}

}  // namespace netdyn
