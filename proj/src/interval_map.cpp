#include "netdyn/interval_map.hpp"

#include <algorithm>

#include "netdyn/errors.hpp"

namespace netdyn {

void IntervalUnion::normalize() {
    for (auto& p : parts)
        if (p.first > p.second) std::swap(p.first, p.second);
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) {
                  return a.first < b.first || (a.first == b.first && a.second < b.second);
              });
    std::vector<std::pair<Rational, Rational>> merged;
    for (auto& p : parts) {
        if (!merged.empty() && p.first <= merged.back().second) {
            if (p.second > merged.back().second) merged.back().second = p.second;
        } else {
            merged.push_back(p);
        }
    }
    parts = std::move(merged);
}

bool IntervalUnion::intersects(const IntervalUnion& o) const {
    for (const auto& a : parts)
        for (const auto& b : o.parts) {
            if (a.first <= b.second && b.first <= a.second) return true;
            if (circle) {
                // endpoint identification 1 == 0
                bool a_hits_1 = a.second == Rational(1), a_hits_0 = a.first.is_zero();
                bool b_hits_1 = b.second == Rational(1), b_hits_0 = b.first.is_zero();
                if ((a_hits_1 && b_hits_0) || (a_hits_0 && b_hits_1)) return true;
            }
        }
    return false;
}

std::string IntervalUnion::to_string() const {
    std::string s;
    for (const auto& p : parts) {
        if (!s.empty()) s += " U ";
        s += "[" + p.first.to_string() + ", " + p.second.to_string() + "]";
    }
    return s.empty() ? "{}" : s;
}

void CylinderUnion::normalize() {
    std::sort(prefixes.begin(), prefixes.end(),
              [](const auto& a, const auto& b) {
                  return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                                      b.end());
              });
    prefixes.erase(std::unique(prefixes.begin(), prefixes.end()), prefixes.end());
}

bool CylinderUnion::covers_space() const {
    if (prefixes.empty()) return false;
    size_t maxlen = 0;
    for (const auto& p : prefixes) {
        if (p.empty()) return true;
        maxlen = std::max(maxlen, p.size());
    }
    // every word of length maxlen must extend some prefix
    size_t b = alphabet.size();
    size_t total = 1;
    for (size_t i = 0; i < maxlen; ++i) {
        total *= b;
        if (total > 4'000'000)
            throw ResourceError("cylinders", "cylinder coverage enumeration too large");
    }
    std::vector<size_t> digit(maxlen, 0);
    for (size_t c = 0; c < total; ++c) {
        bool covered = false;
        for (const auto& p : prefixes) {
            bool match = true;
            for (size_t j = 0; j < p.size(); ++j)
                if (!(alphabet[digit[j]] == p[j])) {
                    match = false;
                    break;
                }
            if (match) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
        for (size_t j = maxlen; j-- > 0;) {
            if (++digit[j] < b) break;
            digit[j] = 0;
        }
    }
    return true;
}

bool CylinderUnion::intersects(const CylinderUnion& o) const {
    for (const auto& a : prefixes)
        for (const auto& b : o.prefixes) {
            size_t n = std::min(a.size(), b.size());
            bool compatible = true;
            for (size_t j = 0; j < n; ++j)
                if (!(a[j] == b[j])) {
                    compatible = false;
                    break;
                }
            if (compatible) return true;
        }
    return false;
}

std::string CylinderUnion::to_string() const {
    std::string s;
    for (const auto& p : prefixes) {
        if (!s.empty()) s += " U ";
        s += "[";
        for (size_t j = 0; j < p.size(); ++j) {
            if (j) s += ",";
            s += p[j].to_string();
        }
        s += "*]";
    }
    return s.empty() ? "{}" : s;
}

IntervalUnion make_interval(const Rational& lo, const Rational& hi, bool circle) {
    IntervalUnion u;
    u.circle = circle;
    u.parts.push_back({lo, hi});
    u.normalize();
    return u;
}

CylinderUnion make_cylinder(const SpaceSpec& word_space, std::vector<Rational> prefix) {
    if (word_space.metric() != MetricKind::word)
        throw ShapeError("cylinders require a word space");
    if (static_cast<int>(prefix.size()) > word_space.depth)
        throw ShapeError("cylinder prefix longer than the word length");
    CylinderUnion u;
    u.word_len = word_space.depth;
    u.alphabet = word_space.kind == SpaceKind::word_shift
                     ? word_space.alphabet
                     : std::vector<Rational>{};
    if (u.alphabet.empty()) throw UnsupportedSystemError("cylinders need a finite alphabet");
    u.prefixes.push_back(std::move(prefix));
    return u;
}

RegionUnion push_forward(const SystemDef& sys, const RegionUnion& U) {
    if (std::holds_alternative<CylinderUnion>(U)) {
        if (sys.kind != MapKind::shift)
            throw UnsupportedSystemError("cylinder pushforward requires the shift");
        CylinderUnion out = std::get<CylinderUnion>(U);
        for (auto& p : out.prefixes)
            if (!p.empty()) p.erase(p.begin());
        out.normalize();
        return out;
    }
    const auto& u = std::get<IntervalUnion>(U);
    const std::vector<AffineBranch>* brp = sys.branches();
    if (!brp)
        throw UnsupportedSystemError("interval pushforward requires a piecewise-affine system");
    IntervalUnion out;
    out.circle = u.circle;
    for (const auto& part : u.parts) {
        for (const auto& b : *brp) {
            Rational lo = max(part.first, b.lo);
            Rational hi = min(part.second, b.hi);
            if (lo > hi) continue;
            Rational ilo = b.apply(lo), ihi = b.apply(hi);
            if (ilo > ihi) std::swap(ilo, ihi);
            if (out.circle) {
                // branch values lie in [0, 1]; keep [x, 1] as-is (1 == 0)
                if (ihi > Rational(1))
                    throw ContractError("circle branch image exceeds [0,1]");
            }
            out.parts.push_back({std::move(ilo), std::move(ihi)});
        }
    }
    out.normalize();
    return out;
}

bool covers_space(const SystemDef& sys, const RegionUnion& U) {
    if (std::holds_alternative<CylinderUnion>(U))
        return std::get<CylinderUnion>(U).covers_space();
    const auto& u = std::get<IntervalUnion>(U);
    auto contains_interval = [&](const Rational& lo, const Rational& hi) {
        for (const auto& p : u.parts)
            if (p.first <= lo && p.second >= hi) return true;
        return false;
    };
    auto contains_point = [&](const Rational& x) {
        for (const auto& p : u.parts)
            if (p.first <= x && x <= p.second) return true;
        return false;
    };
    switch (sys.space.kind) {
        case SpaceKind::interval01:
        case SpaceKind::circle:
            return contains_interval(Rational(0), Rational(1));
        case SpaceKind::ex22_set: {
            if (!contains_point(Rational(0)) || !contains_point(Rational(2))) return false;
            Rational lo(1, 4), hi(1, 2);
            for (int n = 1; n <= sys.space.depth; ++n) {
                if (!contains_interval(lo, hi)) return false;
                lo = lo * Rational(1, 4);
                hi = hi * Rational(1, 4);
            }
            return true;
        }
        case SpaceKind::ex21_set: {
            if (!contains_point(Rational(0))) return false;
            Rational v(1);
            for (int n = 0; n <= sys.space.depth; ++n) {
                if (!contains_point(v)) return false;
                v = v * Rational(1, 2);
            }
            return true;
        }
        default:
            throw UnsupportedSystemError("coverage test unsupported for this space");
    }
}

bool regions_intersect(const RegionUnion& a, const RegionUnion& b) {
    if (std::holds_alternative<IntervalUnion>(a) && std::holds_alternative<IntervalUnion>(b))
        return std::get<IntervalUnion>(a).intersects(std::get<IntervalUnion>(b));
    if (std::holds_alternative<CylinderUnion>(a) && std::holds_alternative<CylinderUnion>(b))
        return std::get<CylinderUnion>(a).intersects(std::get<CylinderUnion>(b));
    throw ShapeError("cannot intersect regions of different kinds");
}

std::optional<int> leo_check(const SystemDef& sys, const RegionUnion& U, int cap) {
    RegionUnion cur = U;
    for (int i = 0; i <= cap; ++i) {
        if (covers_space(sys, cur)) return i;
        cur = push_forward(sys, cur);
    }
    return std::nullopt;
}

bool mixing_check(const SystemDef& sys, const RegionUnion& U, const RegionUnion& V,
                  int window_start, int window_end) {
    if (window_start < 0 || window_end < window_start)
        throw ContractError("bad mixing window");
    RegionUnion cur = U;
    for (int j = 0; j <= window_end; ++j) {
        if (j >= window_start && !regions_intersect(cur, V)) return false;
        if (j < window_end) cur = push_forward(sys, cur);
    }
    return true;
}

}  // namespace netdyn
