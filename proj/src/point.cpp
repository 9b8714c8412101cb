#include "netdyn/point.hpp"

#include "netdyn/errors.hpp"

namespace netdyn {

std::string metric_kind_name(MetricKind k) {
    switch (k) {
        case MetricKind::interval: return "interval";
        case MetricKind::circle: return "circle";
        case MetricKind::word: return "word";
    }
    return "?";
}

std::string Point::to_string() const {
    if (kind != MetricKind::word) return coords[0].to_string();
    std::string s = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += coords[i].to_string();
    }
    return s + ")";
}

bool Point::operator==(const Point& o) const {
    return kind == o.kind && coords == o.coords;
}

Point real_point(Rational x) { return Point{MetricKind::interval, {std::move(x)}}; }

Point circle_point(Rational x) {
    if (x.sign() < 0 || x >= Rational(1))
        throw DomainError("circle coordinate outside [0,1): " + x.to_string());
    return Point{MetricKind::circle, {std::move(x)}};
}

Point word_point(std::vector<Rational> coords) {
    if (coords.empty()) throw ShapeError("word point needs at least one coordinate");
    return Point{MetricKind::word, std::move(coords)};
}

bool point_less(const Point& a, const Point& b) {
    size_t n = std::min(a.coords.size(), b.coords.size());
    for (size_t i = 0; i < n; ++i) {
        int c = a.coords[i].cmp(b.coords[i]);
        if (c != 0) return c < 0;
    }
    return a.coords.size() < b.coords.size();
}

static void check_shape(const Point& p, const Point& q) {
    if (p.kind != q.kind)
        throw ShapeError("metric on mismatched kinds " + metric_kind_name(p.kind) +
                         " vs " + metric_kind_name(q.kind));
    if (p.coords.size() != q.coords.size())
        throw ShapeError("metric on words of different depth");
}

Rational metric_dist(const Point& p, const Point& q) {
    check_shape(p, q);
    switch (p.kind) {
        case MetricKind::interval:
            return (p.coords[0] - q.coords[0]).abs();
        case MetricKind::circle: {
            Rational d = (p.coords[0] - q.coords[0]).abs();
            return min(d, Rational(1) - d);
        }
        case MetricKind::word: {
            Rational best(0);
            Rational w(1);
            const Rational half(1, 2);
            for (size_t j = 0; j < p.coords.size(); ++j) {
                w *= half;  // 2^{-(j+1)}
                Rational term = (p.coords[j] - q.coords[j]).abs() * w;
                if (term > best) best = std::move(term);
            }
            return best;
        }
    }
    throw ShapeError("unreachable metric kind");
}

bool within_dist(const Point& p, const Point& q, const Rational& r) {
    check_shape(p, q);
    if (p.kind != MetricKind::word) return metric_dist(p, q) <= r;
    // max_j 2^{-j}|p_j - q_j| <= r  iff  |p_j - q_j| <= 2^j r for all j
    Rational bound = r;
    for (size_t j = 0; j < p.coords.size(); ++j) {
        bound += bound;  // 2^{j+1} r
        if ((p.coords[j] - q.coords[j]).abs() > bound) return false;
    }
    return true;
}

}  // namespace netdyn
