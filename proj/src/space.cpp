#include "netdyn/space.hpp"

#include <algorithm>

#include "netdyn/errors.hpp"

namespace netdyn {

std::string space_kind_name(SpaceKind k) {
    switch (k) {
        case SpaceKind::interval01: return "interval01";
        case SpaceKind::ex21_set: return "ex21_set";
        case SpaceKind::ex22_set: return "ex22_set";
        case SpaceKind::circle: return "circle";
        case SpaceKind::word_shift: return "word_shift";
        case SpaceKind::ex21_product: return "ex21_product";
    }
    return "?";
}

MetricKind SpaceSpec::metric() const {
    switch (kind) {
        case SpaceKind::circle: return MetricKind::circle;
        case SpaceKind::word_shift:
        case SpaceKind::ex21_product: return MetricKind::word;
        default: return MetricKind::interval;
    }
}

bool SpaceSpec::is_exact() const {
    return kind == SpaceKind::ex21_set || kind == SpaceKind::word_shift ||
           kind == SpaceKind::ex21_product;
}

static bool in_ex21_set(const Rational& x, int N) {
    if (x.is_zero()) return true;
    Rational v(1);
    for (int n = 0; n <= N; ++n) {
        if (x == v) return true;
        v = v * Rational(1, 2);
    }
    return false;
}

static bool in_ex22_set(const Rational& x, int N) {
    if (x.is_zero() || x == Rational(2)) return true;
    Rational lo(1, 4), hi(1, 2);
    for (int n = 1; n <= N; ++n) {
        if (x >= lo && x <= hi) return true;
        lo = lo * Rational(1, 4);
        hi = hi * Rational(1, 4);
    }
    return false;
}

bool SpaceSpec::contains(const Point& p) const {
    if (p.kind != metric()) return false;
    switch (kind) {
        case SpaceKind::interval01:
            return p.x() >= Rational(0) && p.x() <= Rational(1);
        case SpaceKind::circle:
            return p.x() >= Rational(0) && p.x() < Rational(1);
        case SpaceKind::ex21_set:
            return in_ex21_set(p.x(), depth);
        case SpaceKind::ex22_set:
            return in_ex22_set(p.x(), depth);
        case SpaceKind::word_shift: {
            if (static_cast<int>(p.depth()) != depth) return false;
            for (const auto& c : p.coords)
                if (std::find(alphabet.begin(), alphabet.end(), c) == alphabet.end())
                    return false;
            return true;
        }
        case SpaceKind::ex21_product: {
            if (static_cast<int>(p.depth()) != depth) return false;
            for (const auto& c : p.coords)
                if (!in_ex21_set(c, base_depth)) return false;
            return true;
        }
    }
    return false;
}

SpaceSpec interval01_spec() {
    return SpaceSpec{SpaceKind::interval01, 0, 0, {}, "unit interval [0,1]"};
}
SpaceSpec circle_spec() {
    return SpaceSpec{SpaceKind::circle, 0, 0, {}, "circle, unit circumference"};
}
SpaceSpec ex21_spec(int N) {
    if (N < 1) throw ConfigError("ex21_set depth must be >= 1");
    return SpaceSpec{SpaceKind::ex21_set, N, 0, {},
                     "{0} U {2^-n : 0<=n<=" + std::to_string(N) + "}"};
}
SpaceSpec ex22_spec(int N) {
    if (N < 1) throw ConfigError("ex22_set depth must be >= 1");
    return SpaceSpec{SpaceKind::ex22_set, N, 0, {},
                     "{0,2} U I_1..I_" + std::to_string(N)};
}
SpaceSpec word_shift_spec(int m, std::vector<Rational> alphabet) {
    if (m < 1) throw ConfigError("word length must be >= 1");
    if (alphabet.empty()) throw ConfigError("empty alphabet");
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    if (std::find(alphabet.begin(), alphabet.end(), Rational(0)) == alphabet.end())
        throw ConfigError("shift alphabet must contain the padding symbol 0");
    return SpaceSpec{SpaceKind::word_shift, m, 0, std::move(alphabet),
                     "length-" + std::to_string(m) + " words"};
}
SpaceSpec ex21_product_spec(int m, int N) {
    if (m < 1 || N < 1) throw ConfigError("ex21_product parameters must be >= 1");
    return SpaceSpec{SpaceKind::ex21_product, m, N, {},
                     std::to_string(m) + "-fold product of ex21_set(" + std::to_string(N) + ")"};
}

Rational NetSpace::density() const {
    if (spec.is_exact()) return Rational(0);
    return Rational::pow2(-(resolution + 1));
}

static std::vector<Rational> ex21_values(int N) {
    std::vector<Rational> vals;
    vals.emplace_back(0);
    Rational v(1);
    for (int n = 0; n <= N; ++n) {
        vals.push_back(v);
        v = v * Rational(1, 2);
    }
    std::sort(vals.begin(), vals.end());
    return vals;
}

static void check_cap(size_t n, size_t cap) {
    if (n > cap)
        throw ResourceError("net",
                            "net size " + std::to_string(n) + " exceeds cap " +
                                std::to_string(cap));
}

NetSpace build_net(const SpaceSpec& spec, int resolution, size_t net_cap) {
    if (resolution < 1) throw ConfigError("net resolution must be >= 1");
    if (resolution > 40 &&
        (spec.kind == SpaceKind::interval01 || spec.kind == SpaceKind::circle))
        throw ResourceError("net", "resolution " + std::to_string(resolution) +
                                       " exceeds the supported depth 40");
    NetSpace net;
    net.spec = spec;
    net.resolution = resolution;
    MetricKind mk = spec.metric();

    auto push1 = [&](Rational x) { net.points.push_back(Point{mk, {std::move(x)}}); };

    switch (spec.kind) {
        case SpaceKind::interval01: {
            size_t n = (size_t(1) << resolution) + 1;
            check_cap(n, net_cap);
            Rational step = Rational::pow2(-resolution);
            Rational x(0);
            for (size_t k = 0; k < n; ++k, x += step) push1(x);
            break;
        }
        case SpaceKind::circle: {
            size_t n = size_t(1) << resolution;
            check_cap(n, net_cap);
            Rational step = Rational::pow2(-resolution);
            Rational x(0);
            for (size_t k = 0; k < n; ++k, x += step) push1(x);
            break;
        }
        case SpaceKind::ex21_set: {
            for (auto& v : ex21_values(spec.depth)) push1(v);
            check_cap(net.points.size(), net_cap);
            break;
        }
        case SpaceKind::ex22_set: {
            push1(Rational(0));
            push1(Rational(2));
            Rational step = Rational::pow2(-resolution);
            Rational lo(1, 4), hi(1, 2);
            for (int n = 1; n <= spec.depth; ++n) {
                // depth-r grid inside I_n, endpoints always included
                push1(lo);
                push1(hi);
                Rational x = lo + step;
                while (x < hi) {
                    push1(x);
                    x += step;
                }
                check_cap(net.points.size(), net_cap);
                lo = lo * Rational(1, 4);
                hi = hi * Rational(1, 4);
            }
            break;
        }
        case SpaceKind::word_shift:
        case SpaceKind::ex21_product: {
            net.factor_values = spec.kind == SpaceKind::word_shift
                                    ? spec.alphabet
                                    : ex21_values(spec.base_depth);
            net.word_len = spec.depth;
            size_t b = net.factor_values.size();
            size_t total = 1;
            for (int j = 0; j < net.word_len; ++j) {
                total *= b;
                check_cap(total, net_cap);
            }
            std::vector<size_t> digit(net.word_len, 0);
            net.points.reserve(total);
            for (size_t c = 0; c < total; ++c) {
                std::vector<Rational> coords;
                coords.reserve(net.word_len);
                for (int j = 0; j < net.word_len; ++j) coords.push_back(net.factor_values[digit[j]]);
                net.points.push_back(Point{MetricKind::word, std::move(coords)});
                for (int j = net.word_len - 1; j >= 0; --j) {
                    if (++digit[j] < b) break;
                    digit[j] = 0;
                }
            }
            break;
        }
    }

    std::sort(net.points.begin(), net.points.end(), point_less);
    net.points.erase(std::unique(net.points.begin(), net.points.end()), net.points.end());
    check_cap(net.points.size(), net_cap);
    return net;
}

static std::optional<size_t> factor_index(const std::vector<Rational>& vals, const Rational& x) {
    auto it = std::lower_bound(vals.begin(), vals.end(), x);
    if (it == vals.end() || *it != x) return std::nullopt;
    return size_t(it - vals.begin());
}

std::optional<uint32_t> NetSpace::index_of(const Point& p) const {
    if (p.kind != metric()) return std::nullopt;
    if (metric() == MetricKind::word) {
        if (static_cast<int>(p.depth()) != word_len) return std::nullopt;
        size_t b = factor_values.size();
        size_t idx = 0;
        for (const auto& c : p.coords) {
            auto fi = factor_index(factor_values, c);
            if (!fi) return std::nullopt;
            idx = idx * b + *fi;
        }
        return static_cast<uint32_t>(idx);
    }
    auto it = std::lower_bound(points.begin(), points.end(), p, point_less);
    if (it == points.end() || !(*it == p)) return std::nullopt;
    return static_cast<uint32_t>(it - points.begin());
}

std::vector<uint32_t> NetSpace::ball(const Point& center, const Rational& radius) const {
    std::vector<uint32_t> out;
    if (radius.sign() < 0) return out;
    if (metric() == MetricKind::word) {
        if (center.kind != MetricKind::word || static_cast<int>(center.depth()) != word_len)
            throw ShapeError("ball center has wrong shape for word net");
        // per-coordinate ranges: |v - c_j| <= 2^j * radius
        size_t b = factor_values.size();
        std::vector<std::pair<size_t, size_t>> rng(word_len);  // [lo, hi)
        Rational t = radius;
        size_t total = 1;
        for (int j = 0; j < word_len; ++j) {
            t += t;  // 2^{j+1} * radius
            Rational lo = center.coords[j] - t, hi = center.coords[j] + t;
            auto l = std::lower_bound(factor_values.begin(), factor_values.end(), lo);
            auto h = std::upper_bound(factor_values.begin(), factor_values.end(), hi);
            rng[j] = {size_t(l - factor_values.begin()), size_t(h - factor_values.begin())};
            total *= rng[j].second - rng[j].first;
            if (total == 0) return out;
        }
        out.reserve(total);
        std::vector<size_t> digit(word_len);
        for (int j = 0; j < word_len; ++j) digit[j] = rng[j].first;
        while (true) {
            size_t idx = 0;
            for (int j = 0; j < word_len; ++j) idx = idx * b + digit[j];
            out.push_back(static_cast<uint32_t>(idx));
            int j = word_len - 1;
            for (; j >= 0; --j) {
                if (++digit[j] < rng[j].second) break;
                digit[j] = rng[j].first;
            }
            if (j < 0) break;
        }
        return out;  // nested enumeration emits ascending indices
    }

    auto range_1d = [&](const Rational& lo, const Rational& hi) {
        Point plo{metric(), {lo}};
        auto l = std::lower_bound(points.begin(), points.end(), plo, point_less);
        for (auto it = l; it != points.end() && it->coords[0] <= hi; ++it)
            out.push_back(static_cast<uint32_t>(it - points.begin()));
    };
    const Rational& c = center.coords[0];
    if (metric() == MetricKind::interval) {
        range_1d(c - radius, c + radius);
    } else {
        // circle: |x-c| <= radius or |x-c| >= 1-radius
        if (radius >= Rational(1, 2)) {
            out.resize(points.size());
            for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<uint32_t>(i);
            return out;
        }
        Rational lo = c - radius, hi = c + radius;
        if (lo.sign() < 0) {
            range_1d(Rational(0), hi);
            range_1d(lo + Rational(1), Rational(1));
        } else if (hi >= Rational(1)) {
            range_1d(Rational(0), hi - Rational(1));
            range_1d(lo, Rational(1));
        } else {
            range_1d(lo, hi);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return out;
}

uint32_t project_to_net(const NetSpace& net, const Point& p) {
    if (p.kind != net.metric() ||
        (net.metric() == MetricKind::word && static_cast<int>(p.depth()) != net.word_len))
        throw ShapeError("projected point has wrong shape for net");
    size_t best = 0;
    Rational best_d = metric_dist(net.points[0], p);
    for (size_t i = 1; i < net.points.size(); ++i) {
        Rational d = metric_dist(net.points[i], p);
        if (d < best_d) {
            best = i;
            best_d = std::move(d);
        }
    }
    return static_cast<uint32_t>(best);
}

}  // namespace netdyn
