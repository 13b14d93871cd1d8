#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cubiso/io.hpp"
#include "cubiso/sweep.hpp"

using namespace cubiso;
using doctest::Approx;

namespace {
const Boundary* find_gap(const SweepReport& r, const std::string& gap) {
    for (const auto& b : r.boundaries)
        if (b.gap == gap) return &b;
    return nullptr;
}
}

TEST_CASE("landmark gaps") {
    auto gaps = landmark_gaps({3, -0.5, -4});
    REQUIRE(gaps.size() == 9);
    CHECK(gaps[0].identity == "c=c1");
    CHECK(*gaps[0].value == Approx(-4 - 0.020288049380834534));
    CHECK(gaps[8].identity == "c=ab");
    CHECK(*gaps[8].value == Approx(-1.5 - -4.0));
    gaps = landmark_gaps({0, 1, 1});
    CHECK_FALSE(gaps[0].value);
}

TEST_CASE("rayleigh sweep boundaries") {
    SweepConfig cfg = rayleigh_preset();
    cfg.t_lo = 0.01;
    cfg.t_hi = 0.74;
    cfg.physical = true;
    SweepReport r = run_sweep(cfg);
    CHECK(r.samples.size() == 200);
    CHECK(r.failed == 0);
    CHECK(r.verified == 200);
    CHECK(r.anomalies.empty());

    const Boundary* b = find_gap(r, "b=a^2/3");
    REQUIRE(b);
    CHECK(b->t == Approx(1.0 / 6).epsilon(1e-11));
    b = find_gap(r, "c=c1");
    REQUIRE(b);
    CHECK(b->t == Approx(0.32149839734751190911).epsilon(1e-11));
    CHECK(b->classification_changed);
    b = find_gap(r, "b=a^2/4");
    REQUIRE(b);
    CHECK(b->t == Approx(0.5).epsilon(1e-11));
    b = find_gap(r, "b=2a^2/9");
    REQUIRE(b);
    CHECK(b->t == Approx(11.0 / 18).epsilon(1e-11));
    for (size_t i = 1; i < r.boundaries.size(); ++i) CHECK(r.boundaries[i - 1].t <= r.boundaries[i].t);
    for (const auto& s : r.samples) CHECK(s.physical.size() == s.iso.intervals.size());
}

TEST_CASE("constant family has no boundaries") {
    SweepConfig cfg;
    cfg.a0 = 3;
    cfg.b0 = -0.5;
    cfg.c0 = -4;
    cfg.samples = 50;
    SweepReport r = run_sweep(cfg);
    CHECK(r.boundaries.empty());
    CHECK(r.failed == 0);
    for (const auto& s : r.samples) CHECK(s.iso.figure_id == 7);
}

TEST_CASE("sweep config validation") {
    SweepConfig cfg;
    cfg.samples = 1;
    CHECK_THROWS(cfg.validate());
    cfg.samples = 10;
    cfg.t_lo = 1;
    cfg.t_hi = 0;
    CHECK_THROWS(cfg.validate());
}

TEST_CASE("physical filter") {
    MonicCubic m{-8, 22.4, -14.4};
    RootIsolation ri = isolate(m);
    PhysicalNote n = physical_status(ri.intervals[0], 0.1, m);
    CHECK(n.status == PhysicalStatus::Ambiguous);
    REQUIRE(n.resolved);
    CHECK(*n.resolved == PhysicalStatus::Physical);
    CHECK(*n.root == Approx(0.89913748259864587));

    Interval mid{{2, true, {}}, {3, true, {}}, 1};
    CHECK(physical_status(mid, 0.1, m).status == PhysicalStatus::Unphysical);
    Interval far{{11, true, {}}, {12, true, {}}, 1};
    CHECK(physical_status(far, 0.1, m).status == PhysicalStatus::Physical);
    // q = 0 has no second branch
    CHECK(physical_status(far, 0.0, m).status == PhysicalStatus::Unphysical);
    Interval neg{{-2, true, {}}, {-1, true, {}}, 1};
    CHECK(physical_status(neg, 0.1, m).status == PhysicalStatus::Unphysical);
    CHECK(physical_name(PhysicalStatus::Ambiguous) == "ambiguous");
}

TEST_CASE("number and coefficient parsing") {
    CHECK(parse_number("-0.5") == -0.5);
    CHECK(parse_number("1e3") == 1000);
    CHECK_THROWS_AS(parse_number("two"), ParseError);
    CHECK_THROWS_AS(parse_number("1.5x"), ParseError);
    CHECK_THROWS_AS(parse_number("inf"), ParseError);
    CHECK_THROWS_AS(parse_number("nan"), ParseError);

    CubicInput in = parse_coefficients({"3", "-0.5", "-4"});
    CHECK_FALSE(in.general);
    CHECK((in.m.a == 3 && in.m.b == -0.5 && in.m.c == -4));
    in = parse_coefficients({"2", "6", "-1", "-8"});
    REQUIRE(in.general);
    CHECK((in.m.a == 3 && in.m.b == -0.5 && in.m.c == -4));
    CHECK_THROWS_AS(parse_coefficients({"1", "2"}), ParseError);
    CHECK_THROWS_AS(parse_coefficients({"0", "1", "2", "3"}), Error);
}

TEST_CASE("batch parsing") {
    std::istringstream s("# header\n3 -0.5 -4\n\n0, -1, 0.2  # trailing\n2 6 -1 -8\n");
    auto v = parse_batch(s);
    REQUIRE(v.size() == 3);
    CHECK(v[0].line == 2);
    CHECK(v[1].m.c == 0.2);
    CHECK(v[2].general);

    std::istringstream bad("1 2\n");
    CHECK_THROWS_AS(parse_batch(bad), ParseError);
}

TEST_CASE("sweep config parsing") {
    std::istringstream s("a0 = -8\nb0 = 24\nb1 = -16\nc0 = -16\nc1 = 16\nsamples = 20\nphysical = true\n");
    SweepConfig cfg;
    parse_sweep_config(s, cfg);
    CHECK(cfg.a0 == -8);
    CHECK(cfg.b1 == -16);
    CHECK(cfg.samples == 20);
    CHECK(cfg.physical);
    CHECK_THROWS_AS(apply_sweep_setting(cfg, "nope", "1"), ParseError);
    CHECK_THROWS_AS(apply_sweep_setting(cfg, "samples", "2.5"), ParseError);
    CHECK_THROWS_AS(apply_sweep_setting(cfg, "physical", "maybe"), ParseError);
}

TEST_CASE("json document round trip re-verifies") {
    for (MonicCubic m : {MonicCubic{3, -0.5, -4}, MonicCubic{0, -1, 5}, MonicCubic{-3, 3, -1},
                         MonicCubic{3, -0.5, 0}, MonicCubic{-8, 22.4, -14.4}}) {
        Classification c = classify(m);
        RootIsolation ri = isolate(m);
        VerificationReport ver = verify(m, c, ri);
        nlohmann::json doc = document(c, ri, ver);
        auto text = doc.dump();
        auto back = nlohmann::json::parse(text);

        MonicCubic m2 = coefficients_from_json(back);
        CHECK((m2.a == m.a && m2.b == m.b && m2.c == m.c));
        RootIsolation ri2 = isolation_from_json(back);
        REQUIRE(ri2.intervals.size() == ri.intervals.size());
        for (size_t i = 0; i < ri.intervals.size(); ++i) {
            CHECK(ri2.intervals[i].lo.value == ri.intervals[i].lo.value);
            CHECK(ri2.intervals[i].hi.value == ri.intervals[i].hi.value);
            CHECK(ri2.intervals[i].lo.provenance == ri.intervals[i].lo.provenance);
            CHECK(ri2.intervals[i].multiplicity == ri.intervals[i].multiplicity);
        }
        CHECK(verify(m2, classify(m2), ri2).pass);
        CHECK(back["verification"]["pass"].get<bool>());
        CHECK(back["citation"].get<std::string>().rfind("Figure ", 0) == 0);
    }
}

TEST_CASE("json schema fields") {
    MonicCubic m{3, -0.5, -4};
    Classification c = classify(m);
    nlohmann::json doc = document(c, isolate(m), std::nullopt, GeneralCubic{2, 6, -1, -8});
    for (const char* k : {"coefficients", "input", "figure", "case", "citation", "regime", "intervals", "bounds",
                          "harness_applied", "classification", "verification"})
        CHECK(doc.contains(k));
    CHECK(doc["verification"].is_null());
    CHECK(doc["input"]["A"] == 2.0);
    CHECK(doc["regime"]["kind"] == "R2");
    CHECK(doc["classification"]["count"]["kind"] == "ThreeDistinct");
    CHECK(doc["intervals"][0]["lo_tag"] == "rho2");
}

TEST_CASE("text rendering") {
    MonicCubic m{3, -0.5, -4};
    Classification c = classify(m);
    RootIsolation ri = isolate(m);
    std::string t = render_text(c, ri, verify(m, c, ri));
    CHECK(t.find("Figure 7, case (5)") != std::string::npos);
    CHECK(format_cubic(m).find("x^3") != std::string::npos);
    CHECK(format_interval(ri.intervals[1]).front() == '[');

    SweepConfig cfg = rayleigh_preset();
    cfg.samples = 20;
    SweepReport r = run_sweep(cfg);
    std::string series = sweep_series(r, ',');
    CHECK(std::count(series.begin(), series.end(), '\n') >= 21);
    CHECK(sweep_json(r)["samples"].size() == 20);
    CHECK_FALSE(render_sweep_text(r).empty());
}
