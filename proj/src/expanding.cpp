#include "netdyn/expanding.hpp"

#include <algorithm>

#include "netdyn/errors.hpp"

namespace netdyn {

std::pair<std::vector<char>, std::string> excluded_targets(const SystemDef& sys,
                                                           const NetSpace& target_net) {
    std::vector<char> flags(target_net.size(), 0);
    std::string desc;
    int iters = sys.iterate;
    switch (sys.space.kind) {
        case SpaceKind::ex21_set: {
            // 2^-n has the lone preimage chain 2^-(n+i); off net when n+i > N
            int N = sys.space.depth;
            for (size_t v = 0; v < target_net.size(); ++v) {
                const Rational& x = target_net.points[v].x();
                if (x.is_zero() || x == Rational(1)) continue;
                Rational val(1, 2);
                for (int n = 1; n <= N; ++n) {
                    if (x == val) {
                        if (n + iters > N) flags[v] = 1;
                        break;
                    }
                    val = val * Rational(1, 2);
                }
            }
            desc = "targets 2^-n with n+" + std::to_string(iters) + " > " +
                   std::to_string(N) + " (preimage ladder truncated)";
            break;
        }
        case SpaceKind::ex22_set: {
            // points of I_n pull back to I_{n+i}, truncated when n+i > N
            int N = sys.space.depth;
            for (int n = std::max(1, N - iters + 1); n <= N; ++n) {
                Rational lo = Rational(1, 4).pow(static_cast<unsigned>(n));
                Rational hi = lo + lo;
                for (size_t v = 0; v < target_net.size(); ++v) {
                    const Rational& x = target_net.points[v].x();
                    if (x >= lo && x <= hi) flags[v] = 1;
                }
            }
            desc = "interval layers I_n with n+" + std::to_string(iters) + " > " +
                   std::to_string(N);
            break;
        }
        case SpaceKind::word_shift: {
            // an i-step shift preimage exists iff the last i coordinates are 0
            int m = sys.space.depth;
            for (size_t v = 0; v < target_net.size(); ++v) {
                const auto& c = target_net.points[v].coords;
                for (int j = std::max(0, m - iters); j < m; ++j)
                    if (!c[j].is_zero()) {
                        flags[v] = 1;
                        break;
                    }
            }
            desc = "words whose last " + std::to_string(iters) +
                   " coordinates are not the padding symbol";
            break;
        }
        default:
            desc = "none";
            break;
    }
    return {std::move(flags), std::move(desc)};
}

namespace {

// shift-specific fast candidate: z = (x_1, y_1, ..., y_{m-1})
std::optional<Point> shift_candidate(const SystemDef& sys, const Point& x, const Point& y) {
    if (sys.kind != MapKind::shift || sys.iterate != 1) return std::nullopt;
    std::vector<Rational> c;
    c.reserve(x.coords.size());
    c.push_back(x.coords[0]);
    for (size_t j = 0; j + 1 < y.coords.size(); ++j) c.push_back(y.coords[j]);
    return word_point(std::move(c));
}

}  // namespace

BallExpandingCertificate ball_expanding_check(const SystemDef& sys,
                                              const NetSpace& target_net,
                                              const NetSpace& cand_net,
                                              const Rational& L, const Rational& delta0,
                                              const std::vector<Rational>& delta_samples,
                                              BEMode mode, const Rational& eta) {
    if (L.sign() <= 0 || L >= Rational(1)) throw ContractError("L must lie in (0,1)");
    if (target_net.metric() != cand_net.metric())
        throw ShapeError("target and candidate nets use different metrics");
    if (mode == BEMode::exact && !eta.is_zero())
        throw ContractError("exact mode requires eta = 0");

    BallExpandingCertificate cert;
    cert.system_name = sys.name;
    cert.L = L;
    cert.delta0 = delta0;
    cert.eta = mode == BEMode::exact ? Rational(0) : eta;
    cert.mode = mode;
    cert.target_res = target_net.resolution;
    cert.cand_res = cand_net.resolution;
    cert.delta_samples = delta_samples;
    std::sort(cert.delta_samples.begin(), cert.delta_samples.end());
    for (const auto& d : cert.delta_samples)
        if (d.sign() <= 0 || d > delta0)
            throw ContractError("delta sample outside (0, delta0]");

    auto [excluded, desc] = excluded_targets(sys, target_net);
    cert.excluded_desc = desc;
    for (char f : excluded) cert.excluded_count += f ? 1 : 0;

    // cache candidate images
    std::vector<Point> cand_image;
    cand_image.reserve(cand_net.size());
    for (const auto& p : cand_net.points) cand_image.push_back(eval_map(sys, p));

    bool have_strongest = false;
    for (uint32_t xi = 0; xi < cand_net.size(); ++xi) {
        const Point& x = cand_net.points[xi];
        const Point& fx = cand_image[xi];
        for (const auto& delta : cert.delta_samples) {
            Rational r = L * delta;
            std::vector<uint32_t> zs;  // filled lazily
            bool zs_ready = false;
            for (uint32_t yi : target_net.ball(fx, delta)) {
                if (excluded[yi]) continue;
                const Point& y = target_net.points[yi];
                ++cert.checked;
                bool found = false;
                // constructed candidate first (shift), then the full ball scan
                if (auto zc = shift_candidate(sys, x, y)) {
                    if (within_dist(x, *zc, r) && cand_net.index_of(*zc) &&
                        eval_map(sys, *zc) == y)
                        found = true;
                }
                Rational gap;
                bool have_gap = false;
                if (!found) {
                    if (!zs_ready) {
                        zs = cand_net.ball(x, r);
                        zs_ready = true;
                    }
                    for (uint32_t zi : zs) {
                        Rational g = metric_dist(cand_image[zi], y);
                        if (g <= cert.eta) {
                            found = true;
                            break;
                        }
                        if (!have_gap || g < gap) {
                            gap = std::move(g);
                            have_gap = true;
                        }
                    }
                }
                if (found) continue;
                ++cert.fail_count;
                if (!have_gap) gap = metric_dist(fx, y);  // empty candidate ball
                BEWitness w{x, delta, y, gap};
                if (!cert.first_witness) cert.first_witness = w;
                if (cert.witness_table.size() < BallExpandingCertificate::kWitnessTableCap)
                    cert.witness_table.push_back(w);
                if (!have_strongest || gap > cert.witness->gap) {
                    cert.witness = std::move(w);
                    have_strongest = true;
                }
            }
        }
    }
    cert.pass = cert.fail_count == 0;
    return cert;
}

CertificateSearchResult certificate_search(const SystemDef& sys,
                                           const NetSpace& target_net,
                                           const NetSpace& cand_net,
                                           std::vector<Rational> L_grid,
                                           std::vector<Rational> delta0_grid,
                                           BEMode mode, const Rational& eta) {
    if (L_grid.empty() || delta0_grid.empty())
        throw ContractError("certificate_search: empty grids");
    std::sort(L_grid.begin(), L_grid.end());
    std::sort(delta0_grid.begin(), delta0_grid.end(), std::greater<Rational>());
    CertificateSearchResult res;
    for (const auto& L : L_grid) {
        for (const auto& d0 : delta0_grid) {
            // dyadic samples up from one target cell, plus delta0 itself
            std::vector<Rational> samples;
            Rational d = Rational::pow2(-target_net.resolution);
            for (; d < d0; d += d) samples.push_back(d);
            samples.push_back(d0);
            auto cert = ball_expanding_check(sys, target_net, cand_net, L, d0, samples,
                                             mode, eta);
            CertificateSearchEntry e;
            e.L = L;
            e.delta0 = d0;
            e.pass = cert.pass;
            e.witness = cert.witness;
            res.table.push_back(e);
            if (cert.pass && !res.best) {
                res.best = std::move(cert);
                return res;  // first PASS in preference order
            }
        }
    }
    return res;
}

PairWitnessResult metric_expanding_check(const SystemDef& sys, const NetSpace& net,
                                         const Rational& L, const Rational& delta0) {
    if (L.sign() <= 0 || L >= Rational(1)) throw ContractError("L must lie in (0,1)");
    PairWitnessResult res;
    std::vector<Point> image;
    image.reserve(net.size());
    for (const auto& p : net.points) image.push_back(eval_map(sys, p));
    for (uint32_t i = 0; i < net.size(); ++i) {
        for (uint32_t j = i + 1; j < net.size(); ++j) {
            Rational d = metric_dist(net.points[i], net.points[j]);
            if (d.is_zero() || d > delta0) continue;
            // d(f(x), f(y)) >= d / L, compared as L * d(f(x), f(y)) >= d
            if (L * metric_dist(image[i], image[j]) < d) {
                res.pass = false;
                res.witness = {net.points[i], net.points[j]};
                return res;
            }
        }
    }
    return res;
}

PairWitnessResult local_injectivity_check(const SystemDef& sys, const NetSpace& net,
                                          const Rational& rho) {
    if (rho.sign() <= 0) throw ContractError("rho must be positive");
    PairWitnessResult res;
    std::vector<Point> image;
    image.reserve(net.size());
    for (const auto& p : net.points) image.push_back(eval_map(sys, p));
    for (uint32_t i = 0; i < net.size(); ++i) {
        for (uint32_t j = i + 1; j < net.size(); ++j) {
            Rational d = metric_dist(net.points[i], net.points[j]);
            if (d.is_zero() || d > rho) continue;
            if (image[i] == image[j]) {
                res.pass = false;
                res.witness = {net.points[i], net.points[j]};
                return res;
            }
        }
    }
    return res;
}

}  // namespace netdyn
