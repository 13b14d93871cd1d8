#include <doctest.h>

#include <cmath>
#include <random>

#include "cubiso/case_table.hpp"
#include "cubiso/classify.hpp"
#include "cubiso/sturm.hpp"

using namespace cubiso;
using doctest::Approx;

namespace {
SignPattern oracle_signs(const MonicCubic& m) {
    SignPattern s;
    RootReport r = solve_all(m);
    for (const auto& x : r.roots) {
        if (x.value == 0) s.n_zero += x.multiplicity;
        else if (x.value > 0) s.n_pos += x.multiplicity;
        else s.n_neg += x.multiplicity;
    }
    s.complex_pair = r.total() == 1;
    return s;
}
bool has_flag(const std::vector<std::string>& f, const std::string& s) {
    return std::find(f.begin(), f.end(), s) != f.end();
}
}

TEST_CASE("regime partition") {
    CHECK(regime(0, -1).figure_id == 1);
    CHECK(regime(0, 0).figure_id == 2);
    CHECK(regime(0, 2).figure_id == 3);
    CHECK(regime(0, 2).kind == RegimeKind::DepressedBPos);

    struct Row { double a, b; RegimeKind k; int fig; };
    // a = -3: thresholds -1, 0, 2, 2.25, 3
    Row rows[] = {
        {-3, -2, RegimeKind::R1, 4},   {3, -2, RegimeKind::R1, 5},
        {-3, -1, RegimeKind::R2, 6},   {3, -0.5, RegimeKind::R2, 7},
        {-3, 0, RegimeKind::R3, 8},    {3, 0, RegimeKind::R3, 9},
        {-3, 2, RegimeKind::R4, 10},   {3, 1, RegimeKind::R4, 11},
        {-3, 2.25, RegimeKind::R5, 12}, {3, 2.1, RegimeKind::R5, 13},
        {-3, 3, RegimeKind::R6, 14},   {3, 2.5, RegimeKind::R6, 15},
        {-3, 3.5, RegimeKind::R7, 16}, {3, 10, RegimeKind::R7, 17},
    };
    for (auto& r : rows) {
        Regime g = regime(r.a, r.b);
        CHECK(g.kind == r.k);
        CHECK(g.figure_id == r.fig);
        CHECK(g.a_sign == (r.a < 0 ? Sign::Neg : Sign::Pos));
    }
}

TEST_CASE("regime boundary flags") {
    CHECK(has_flag(regime(-3, -1).boundary_flags, "b~-a^2/9"));
    CHECK(has_flag(regime(3, 3 * (1 + 1e-12)).boundary_flags, "b~a^2/3"));
    CHECK(has_flag(regime(3, 2.25).boundary_flags, "b~a^2/4"));
    CHECK(has_flag(regime(3, 1e-12).boundary_flags, "b~0"));
    CHECK(regime(3, -0.5).boundary_flags.empty());
}

TEST_CASE("root counts") {
    auto count = [](MonicCubic m) { return count_real_roots(m, landmarks(m.a, m.b, m.c)); };
    CHECK(count({3, -0.5, -4}).kind == CountKind::ThreeDistinct);
    CHECK(count({0, 1, 1}).kind == CountKind::OneReal);
    CHECK(count({0, -3, 3}).kind == CountKind::OneReal);

    RootCount t = count({-3, 3, -1});
    CHECK(t.kind == CountKind::TripleRoot);
    CHECK(t.triple_at == Approx(1));
    CHECK(t.real_with_multiplicity() == 3);

    // (x - 1)^2 (x + 2) and (x + 1)^2 (x - 2)
    RootCount d = count({0, -3, 2});
    CHECK(d.kind == CountKind::DoubleSimple);
    CHECK(d.which == 1);
    CHECK(d.double_at == Approx(1));
    CHECK(d.simple_at == Approx(-2));
    d = count({0, -3, -2});
    CHECK(d.which == 2);
    CHECK(d.double_at == Approx(-1));
    CHECK(d.simple_at == Approx(2));

    // x^3 - 3x^2 + 3x at b = a^2/3 but c != c0: one real root
    CHECK(count({-3, 3, 0}).kind == CountKind::OneReal);
}

TEST_CASE("worked cubic classification") {
    Classification c = classify({3, -0.5, -4});
    CHECK(c.regime.kind == RegimeKind::R2);
    CHECK(c.regime.figure_id == 7);
    CHECK(c.c_slot == 5);
    CHECK(c.count.kind == CountKind::ThreeDistinct);
    CHECK(c.signs.n_pos == 1);
    CHECK(c.signs.n_neg == 2);
    CHECK_FALSE(c.signs.complex_pair);
    CHECK_FALSE(c.zero_root);
}

TEST_CASE("depressed classification") {
    Classification c = classify({0, -1, 0.2});
    CHECK(c.regime.figure_id == 1);
    CHECK(c.c_slot == 2);
    CHECK(c.count.kind == CountKind::ThreeDistinct);
    CHECK((c.signs.n_pos == 2 && c.signs.n_neg == 1));

    c = classify({0, -1, -0.2});
    CHECK(c.c_slot == 3);
    CHECK((c.signs.n_pos == 1 && c.signs.n_neg == 2));

    c = classify({0, 0, -8});
    CHECK(c.regime.figure_id == 2);
    CHECK(c.count.kind == CountKind::OneReal);
    CHECK(c.signs.n_pos == 1);
    CHECK(c.signs.complex_pair);

    c = classify({0, 0, 0});
    CHECK(c.count.kind == CountKind::TripleRoot);
    CHECK(c.zero_root);
    CHECK(c.signs.n_zero == 3);
}

TEST_CASE("zero free term") {
    Classification c = classify({3, -0.5, 0});
    CHECK(c.zero_root);
    CHECK(c.signs.table_id == TableId::ZeroRootCase);
    CHECK(c.signs.n_zero == 1);
    CHECK(c.signs.n_pos == 1);
    CHECK(c.signs.n_neg == 1);

    // x (x^2 + x + 1)
    c = classify({1, 1, 0});
    CHECK(c.signs.n_zero == 1);
    CHECK(c.signs.complex_pair);

    // x^2 (x + 2)
    c = classify({2, 0, 0});
    CHECK(c.signs.n_zero == 2);
    CHECK(c.signs.n_neg == 1);
}

TEST_CASE("rayleigh cubic at q = 0.1") {
    // b = 22.4 for this q
    Classification c = classify({-8, 22.4, -14.4});
    CHECK(c.regime.figure_id == 16);
    CHECK(c.c_slot == 2);
    CHECK(c.count.kind == CountKind::OneReal);
}

TEST_CASE("slot snapping onto a level") {
    // -c lands on -ab = -6 for a = -3, b = -2 up to rounding
    Landmarks L = landmarks(-3, -2, 6.0);
    SlotLocation s = locate_slot(4, {-3, -2, 6 * (1 + 1e-13)}, L);
    CHECK(s.y == -6);
    CHECK(has_flag(s.flags, "-c~-ab"));
    CHECK(row_admits(case_row(4, s.case_id), s.y, L));
}

TEST_CASE("case table structure") {
    for (int fig = 1; fig <= 17; ++fig) {
        auto rows = figure_cases(fig);
        REQUIRE_FALSE(rows.empty());
        CHECK(rows.front().lo == Level::NegInf);
        CHECK(rows.back().hi == Level::PosInf);
        for (size_t i = 0; i < rows.size(); ++i) {
            CHECK(rows[i].case_id == static_cast<int>(i) + 1);
            if (i > 0) {
                CHECK(rows[i].lo == rows[i - 1].hi);
                // each threshold belongs to exactly one side
                if (rows[i].lo != rows[i].hi) CHECK(rows[i].lo_closed != rows[i - 1].hi_closed);
            }
        }
    }
    CHECK(case_table().size() == 85);
    CHECK_THROWS(case_row(7, 42));
}

TEST_CASE("route agreement and oracle signs over random cubics") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> U(-10, 10);
    int checked = 0;
    for (int i = 0; i < 50000; ++i) {
        MonicCubic m{U(rng), U(rng), U(rng)};
        Classification c = classify(m);
        CHECK(c.signs.same_signs(oracle_signs(m)));
        CHECK(c.count.real_with_multiplicity() == solve_all(m).total());
        auto t2 = table_signs(m, c.landmarks, c.count);
        if (t2) {
            CHECK(t2->same_signs(c.signs));
            ++checked;
        }
        CHECK(row_admits(case_row(c.regime.figure_id, c.c_slot), -m.c, c.landmarks));
    }
    CHECK(checked > 40000);
}

TEST_CASE("sign trichotomy and Descartes parity") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<int> I(-6, 6);
    for (int i = 0; i < 20000; ++i) {
        MonicCubic m{double(I(rng)), double(I(rng)), double(I(rng))};
        Classification c = classify(m);
        int total = c.signs.n_pos + c.signs.n_neg + c.signs.n_zero + (c.signs.complex_pair ? 2 : 0);
        CHECK(total == 3);
        // positive roots vs sign changes of 1, a, b, c
        int changes = 0;
        double prev = 1;
        for (double v : {m.a, m.b, m.c}) {
            if (v == 0) continue;
            if ((v > 0) != (prev > 0)) ++changes;
            prev = v;
        }
        if (m.c != 0) {
            CHECK(c.signs.n_pos <= changes);
            CHECK((changes - c.signs.n_pos) % 2 == 0);
        }
    }
}
