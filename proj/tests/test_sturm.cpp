#include <doctest.h>

#include <cmath>
#include <random>

#include "cubiso/sturm.hpp"

using namespace cubiso;
using doctest::Approx;

TEST_CASE("sturm chain of the worked cubic") {
    SturmChain ch = sturm_chain({3, -0.5, -4});
    REQUIRE(ch.p.size() == 4);
    CHECK(ch.p[0] == Poly{1, 3, -0.5, -4});
    CHECK(ch.p[1] == Poly{3, 6, -0.5});
    REQUIRE(ch.p[2].size() == 2);
    CHECK(ch.p[2][0] == Approx(7.0 / 3));
    CHECK(ch.p[2][1] == Approx(23.0 / 6));
    REQUIRE(ch.p[3].size() == 1);
    CHECK(ch.p[3][0] == Approx(110.75 / 49));
    CHECK_FALSE(ch.p2_leading_vanishes);
    CHECK_FALSE(ch.p3_vanishes);
}

TEST_CASE("chain remainders match the closed forms") {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> U(-5, 5);
    for (int i = 0; i < 5000; ++i) {
        MonicCubic m{U(rng), U(rng), U(rng)};
        double g = m.a * m.a / 3 - m.b;
        if (std::fabs(g) < 0.1) continue;
        SturmChain ch = sturm_chain(m);
        REQUIRE(ch.p.size() == 4);
        CHECK(ch.p[2][0] == Approx(2 * g / 3).epsilon(1e-10));
        CHECK(ch.p[2][1] == Approx(m.a * m.b / 9 - m.c).epsilon(1e-10).scale(1));
        CHECK(ch.p[3][0] == Approx(discriminant(m) / (4 * g * g)).epsilon(1e-8).scale(1));
    }
}

TEST_CASE("chain truncation on repeated roots") {
    SturmChain ch = sturm_chain({0, -3, 2});
    CHECK(ch.p3_vanishes);
    ch = sturm_chain({-3, 3, -1});
    CHECK(ch.p2_leading_vanishes);
}

TEST_CASE("sign variations count roots") {
    SturmChain ch = sturm_chain({3, -0.5, -4});
    CHECK(sign_variations_at_infinity(ch, false) - sign_variations_at_infinity(ch, true) == 3);
    CHECK(count_roots_in(ch, -10, 10) == 3);
    CHECK(count_roots_in(ch, -2.7, -2.5) == 1);
    CHECK(count_roots_in(ch, -2.5, 0) == 1);
    CHECK(count_roots_in(ch, 0, 2) == 1);
    CHECK(count_roots_in(ch, 2, 10) == 0);

    ch = sturm_chain({0, 1, 1});
    CHECK(count_roots_in(ch, -10, 10) == 1);
}

TEST_CASE("solve_all") {
    RootReport r = solve_all({3, -0.5, -4});
    REQUIRE(r.roots.size() == 3);
    CHECK(r.roots[0].value == Approx(-2.600955888339354114).epsilon(1e-14));
    CHECK(r.roots[1].value == Approx(-1.455589403823121513).epsilon(1e-14));
    CHECK(r.roots[2].value == Approx(1.056545292162475627).epsilon(1e-14));
    CHECK(r.distinct == 3);
    CHECK(r.total() == 3);

    r = solve_all({-3, 3, -1});
    REQUIRE(r.roots.size() == 1);
    CHECK(r.roots[0].multiplicity == 3);
    CHECK(r.roots[0].value == Approx(1));

    r = solve_all({0, -3, -2});
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0].value == Approx(-1));
    CHECK(r.roots[0].multiplicity == 2);
    CHECK(r.roots[1].value == Approx(2));

    r = solve_all({-8, 22.4, -14.4});
    REQUIRE(r.roots.size() == 1);
    CHECK(r.roots[0].value == Approx(0.89913748259864587).epsilon(1e-14));

    // root at a partition midpoint
    r = solve_all({-1, -1, 0});
    CHECK(r.roots.size() == 3);
    CHECK(r.roots[1].value == 0);
    CHECK_FALSE(std::signbit(r.roots[1].value));
}

TEST_CASE("solve_all on integer roots") {
    std::mt19937_64 rng(52);
    std::uniform_int_distribution<int> I(-20, 20);
    for (int i = 0; i < 20000; ++i) {
        double r[3] = {double(I(rng)), double(I(rng)), double(I(rng))};
        std::sort(r, r + 3);
        MonicCubic m{-(r[0] + r[1] + r[2]), r[0] * r[1] + r[0] * r[2] + r[1] * r[2], -r[0] * r[1] * r[2]};
        RootReport rep = solve_all(m);
        CHECK(rep.total() == 3);
        size_t k = 0;
        for (const auto& x : rep.roots) {
            for (int j = 0; j < x.multiplicity; ++j, ++k) {
                REQUIRE(k < 3);
                CHECK(x.value == Approx(r[k]).epsilon(1e-9).scale(1));
            }
        }
    }
}

TEST_CASE("verification passes on isolated cubics") {
    for (MonicCubic m : {MonicCubic{3, -0.5, -4}, MonicCubic{0, -1, 0.2}, MonicCubic{-3, 3, -1},
                         MonicCubic{0, 0, 0}, MonicCubic{0, -3, 2}, MonicCubic{-8, 22.4, -14.4},
                         MonicCubic{3, -0.5, 0}}) {
        Classification c = classify(m);
        VerificationReport rep = verify(m, c, isolate(m));
        CHECK(rep.pass);
        CHECK(rep.diagnostics.empty());
    }
    MonicCubic m{3, -0.5, -4};
    VerificationReport rep = verify(m, classify(m), isolate(m));
    REQUIRE(rep.span);
    CHECK(*rep.span == Approx(1.056545292162475627 + 2.600955888339354114));
    CHECK(rep.harness_ok.value_or(false));
    REQUIRE(rep.intervals.size() == 3);
    for (const auto& iv : rep.intervals) CHECK(iv.sturm_count == 1);
}

TEST_CASE("verification rejects corrupted isolations") {
    MonicCubic m{3, -0.5, -4};
    Classification c = classify(m);
    RootIsolation good = isolate(m);

    RootIsolation bad = good;
    bad.intervals[2].hi.value = 1.0;  // excludes x1
    CHECK_FALSE(verify(m, c, bad).pass);

    bad = good;
    bad.intervals[0].hi.value = bad.intervals[1].hi.value;  // overlaps and holds two roots
    CHECK_FALSE(verify(m, c, bad).pass);

    bad = good;
    bad.intervals.pop_back();
    CHECK_FALSE(verify(m, c, bad).pass);

    // open endpoint on a root
    bad = good;
    bad.intervals[2].lo = {1.056545292162475627, false, {}};
    CHECK_FALSE(verify(m, c, bad).pass);

    // point interval away from the root
    MonicCubic t{-3, 3, -1};
    RootIsolation tp = isolate(t);
    tp.intervals[0].lo.value = tp.intervals[0].hi.value = 1.01;
    CHECK_FALSE(verify(t, classify(t), tp).pass);

    // wrong sign pattern
    Classification wrong = c;
    wrong.signs.n_pos = 2;
    wrong.signs.n_neg = 1;
    CHECK_FALSE(verify(m, wrong, good).pass);
}
