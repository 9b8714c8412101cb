#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netdyn/errors.hpp"
#include "netdyn/system.hpp"

using namespace netdyn;

static Rational eval1(const SystemDef& s, const Rational& x) {
    return eval_map(s, Point{s.space.metric(), {x}}).x();
}

TEST_CASE("corpus evaluation") {
    SystemDef e21 = corpus_system(MapKind::ex21, 8);
    CHECK(eval1(e21, Rational(1, 8)) == Rational(1, 4));
    CHECK(eval1(e21, Rational(1)) == Rational(1));
    CHECK(eval1(e21, Rational(0)) == Rational(0));

    SystemDef e22 = corpus_system(MapKind::ex22, 4);
    CHECK(eval1(e22, Rational(1, 4)) == Rational(2));  // 1/4 in I_1
    CHECK(eval1(e22, Rational(1, 16)) == Rational(1, 4));
    CHECK(eval1(e22, Rational(2)) == Rational(2));

    SystemDef tent = corpus_system(MapKind::tent);
    CHECK(eval1(tent, Rational(1, 4)) == Rational(1, 2));
    CHECK(eval1(tent, Rational(3, 4)) == Rational(1, 2));
    CHECK(eval1(tent, Rational(1, 2)) == Rational(1));

    SystemDef logistic = corpus_system(MapKind::logistic);
    CHECK(eval1(logistic, Rational(1, 2)) == Rational(1));
    CHECK(eval1(logistic, Rational(1, 4)) == Rational(3, 4));

    SystemDef dbl = corpus_system(MapKind::doubling);
    CHECK(eval1(dbl, Rational(3, 8)) == Rational(3, 4));
    CHECK(eval1(dbl, Rational(3, 4)) == Rational(1, 2));
    CHECK(eval1(dbl, Rational(1, 2)) == Rational(0));

    SystemDef shift = corpus_system(MapKind::shift, 3);
    Point w = word_point({Rational(1), Rational(0), Rational(1)});
    CHECK(eval_map(shift, w) == word_point({Rational(0), Rational(1), Rational(0)}));

    SystemDef prod = corpus_system(MapKind::ex21_product, 2, 4);
    Point p = word_point({Rational(1, 4), Rational(1)});
    CHECK(eval_map(prod, p) == word_point({Rational(1, 2), Rational(1)}));
}

TEST_CASE("domain errors") {
    SystemDef e21 = corpus_system(MapKind::ex21, 4);
    CHECK_THROWS_AS(eval_map(e21, real_point(Rational(3, 16))), DomainError);
    CHECK_THROWS_AS(eval_map(e21, real_point(Rational(1, 32))), DomainError);  // below depth
    SystemDef tent = corpus_system(MapKind::tent);
    CHECK_THROWS_AS(eval_map(tent, real_point(Rational(3, 2))), DomainError);
}

TEST_CASE("iterate examples") {
    SystemDef tent2 = iterate_system(corpus_system(MapKind::tent), 2);
    CHECK(eval1(tent2, Rational(1, 8)) == Rational(1, 2));
    SystemDef e21_3 = iterate_system(corpus_system(MapKind::ex21, 8), 3);
    CHECK(eval1(e21_3, Rational(1, 32)) == Rational(1, 4));
    SystemDef dbl2 = iterate_system(corpus_system(MapKind::doubling), 2);
    CHECK(eval1(dbl2, Rational(3, 8)) == Rational(1, 2));
    SystemDef shift2 = iterate_system(corpus_system(MapKind::shift, 3), 2);
    CHECK(eval_map(shift2, word_point({Rational(1), Rational(1), Rational(1)})) ==
          word_point({Rational(1), Rational(0), Rational(0)}));
}

TEST_CASE("iterates agree with repeated evaluation on whole nets") {
    struct Probe {
        SystemDef sys;
        NetSpace net;
    };
    std::vector<Probe> probes;
    probes.push_back({corpus_system(MapKind::tent), build_net(interval01_spec(), 7)});
    probes.push_back({corpus_system(MapKind::doubling), build_net(circle_spec(), 7)});
    probes.push_back({corpus_system(MapKind::ex21, 8), build_net(ex21_spec(8), 8)});
    probes.push_back({corpus_system(MapKind::ex22, 4), build_net(ex22_spec(4), 8)});
    probes.push_back({corpus_system(MapKind::shift, 5), build_net(word_shift_spec(5), 5)});
    for (const auto& pr : probes) {
        for (int i = 2; i <= 3; ++i) {
            SystemDef si = iterate_system(pr.sys, i);
            for (const auto& p : pr.net.points) {
                Point q = p;
                for (int k = 0; k < i; ++k) q = eval_map(pr.sys, q);
                CHECK(eval_map(si, p) == q);
            }
        }
    }
}

TEST_CASE("corpus nets are exactly invariant") {
    // tent sends depth-r dyadics into the depth-r net (via depth r-1)
    struct Probe {
        SystemDef sys;
        NetSpace net;
    };
    std::vector<Probe> probes;
    probes.push_back({corpus_system(MapKind::tent), build_net(interval01_spec(), 8)});
    probes.push_back({corpus_system(MapKind::doubling), build_net(circle_spec(), 8)});
    probes.push_back({corpus_system(MapKind::ex21, 8), build_net(ex21_spec(8), 8)});
    probes.push_back({corpus_system(MapKind::ex22, 4), build_net(ex22_spec(4), 8)});
    probes.push_back({corpus_system(MapKind::shift, 6), build_net(word_shift_spec(6), 6)});
    probes.push_back({corpus_system(MapKind::ex21_product, 3, 4),
                      build_net(ex21_product_spec(3, 4), 4)});
    for (const auto& pr : probes)
        for (const auto& p : pr.net.points)
            CHECK(pr.net.index_of(eval_map(pr.sys, p)).has_value());
}

TEST_CASE("logistic map leaves dyadic nets") {
    SystemDef logistic = corpus_system(MapKind::logistic);
    NetSpace net = build_net(interval01_spec(), 4);
    // 4 * (1/16) * (15/16) has denominator 64, off the r=4 net
    Point img = eval_map(logistic, real_point(Rational(1, 16)));
    CHECK(img.x() == Rational(15, 64));
    CHECK_FALSE(net.index_of(img).has_value());
}

TEST_CASE("every depth-r dyadic has a tent preimage at depth r+1") {
    SystemDef tent = corpus_system(MapKind::tent);
    int r = 6;
    NetSpace coarse = build_net(interval01_spec(), r);
    NetSpace fine = build_net(interval01_spec(), r + 1);
    for (const auto& y : coarse.points) {
        bool found = false;
        for (const auto& z : fine.points)
            if (eval_map(tent, z) == y) {
                found = true;
                break;
            }
        CHECK(found);
    }
}

TEST_CASE("symbolic branch composition matches pointwise composition") {
    SystemDef tent = corpus_system(MapKind::tent);
    SystemDef tent3 = iterate_system(tent, 3);
    REQUIRE(tent3.branches() != nullptr);
    CHECK(tent3.branches()->size() == 8);  // 2^3 laps
    for (const auto& b : *tent3.branches()) {
        CHECK(b.slope.abs() == Rational(8));
        CHECK(b.lo < b.hi);
    }
}

TEST_CASE("piecewise-affine user systems validate") {
    SpaceSpec space = interval01_spec();
    // valid: the identity in two branches
    auto id2 = make_piecewise_affine(
        "id", space,
        {{Rational(0), Rational(1, 2), Rational(1), Rational(0)},
         {Rational(1, 2), Rational(1), Rational(1), Rational(0)}});
    CHECK(eval1(id2, Rational(1, 3)) == Rational(1, 3));

    // endpoint disagreement
    CHECK_THROWS_AS(make_piecewise_affine(
                        "bad", space,
                        {{Rational(0), Rational(1, 2), Rational(1), Rational(0)},
                         {Rational(1, 2), Rational(1), Rational(1), Rational(1, 4)}}),
                    ConfigError);
    // overlapping domains
    CHECK_THROWS_AS(make_piecewise_affine(
                        "bad", space,
                        {{Rational(0), Rational(3, 4), Rational(1), Rational(0)},
                         {Rational(1, 2), Rational(1), Rational(1), Rational(0)}}),
                    ConfigError);
    // uncovered space point -> eval-time domain error
    auto gappy = make_piecewise_affine(
        "gappy", space, {{Rational(0), Rational(1, 2), Rational(1), Rational(0)}});
    CHECK_THROWS_AS(eval_map(gappy, real_point(Rational(3, 4))), DomainError);
}

TEST_CASE("iterate count must be positive") {
    CHECK_THROWS_AS(iterate_system(corpus_system(MapKind::tent), 0), ConfigError);
}

TEST_CASE("circle branches must keep values in the fundamental domain") {
    CHECK_THROWS_AS(make_piecewise_affine(
                        "bad-circle", circle_spec(),
                        {{Rational(0), Rational(1, 2), Rational(3), Rational(0)}}),
                    ConfigError);
    // a rotation written with in-range branches is accepted
    auto rot = make_piecewise_affine(
        "rotation", circle_spec(),
        {{Rational(0), Rational(3, 4), Rational(1), Rational(1, 4)},
         {Rational(3, 4), Rational(1), Rational(1), Rational(-3, 4)}});
    CHECK(eval_map(rot, circle_point(Rational(7, 8))).x() == Rational(1, 8));
}
