#include "cubiso/isolate.hpp"

#include <algorithm>
#include <cmath>

#include "cubiso/case_table.hpp"

namespace cubiso {

namespace {

struct Upper {
    double B = 0, H = 0;
    int k = 0;
};

// 1 + H^(1/k) with k the gap to the first negative coefficient
Upper generic_upper(double a, double b, double c) {
    Upper u;
    const double coef[3] = {a, b, c};
    for (int i = 0; i < 3; ++i) {
        if (coef[i] < 0) {
            if (!u.k) u.k = i + 1;
            u.H = std::max(u.H, -coef[i]);
        }
    }
    if (u.k) u.B = 1.0 + std::pow(u.H, 1.0 / u.k);
    return u;
}

Endpoint endpoint(const Provenance& p, bool closed, const TagContext& ctx) {
    return {eval_provenance(p, ctx), closed, p};
}

Interval point(Tag t, int mult, const TagContext& ctx) {
    Endpoint e = endpoint(Provenance(t), true, ctx);
    return {e, e, mult};
}

void sort_intervals(std::vector<Interval>& v) {
    std::sort(v.begin(), v.end(), [](const Interval& x, const Interval& y) { return x.lo.value < y.lo.value; });
}

std::vector<Interval> zero_case(const Classification& cls, const TagContext& ctx, const Tolerance& t) {
    const SignPattern& sp = cls.signs;
    std::vector<Interval> out{point(Tag::Zero, sp.n_zero, ctx)};
    if (sp.complex_pair || sp.n_zero == 3) return out;
    const Landmarks& L = cls.landmarks;
    if (sp.n_zero == 2) {
        out.push_back(point(Tag::NegA, 1, ctx));
    } else if (t.close(*L.lambda1, *L.lambda2, std::fabs(cls.m.a))) {
        out.push_back(point(Tag::Lambda1, 2, ctx));
    } else {
        out.push_back(point(Tag::Lambda2, 1, ctx));
        out.push_back(point(Tag::Lambda1, 1, ctx));
    }
    sort_intervals(out);
    return out;
}

bool is_bound(const Endpoint& e) { return uses_bound(e.provenance); }

}  // namespace

std::string citation(int figure, int case_id) {
    return "Figure " + std::to_string(figure) + ", case (" + std::to_string(case_id) + ")";
}

RootBound upper_lower_bounds(const MonicCubic& m) {
    RootBound rb;
    Upper up = generic_upper(m.a, m.b, m.c);
    Upper lo = generic_upper(-m.a, m.b, -m.c);
    rb.B_U = up.B;
    rb.H = up.H;
    rb.k = up.k;
    rb.B_L = lo.B == 0.0 ? 0.0 : -lo.B;
    rb.H_L = lo.H;
    rb.k_L = lo.k;
    rb.source = BoundsMode::Generic;
    return rb;
}

RootBound figure_bounds(const MonicCubic& m, int figure) {
    RootBound rb = upper_lower_bounds(m);
    const double a = m.a, b = m.b, c = m.c;
    const double A = std::fabs(a), B = std::fabs(b), C = std::fabs(c);
    double lo, hi;
    switch (figure) {
        case 1:
            lo = -(1 + std::max(B, c));
            hi = 1 + std::max(B, C);
            break;
        case 4:
        case 6:
            lo = -(1 + std::sqrt(std::max(B, c)));
            hi = 1 + std::max({A, B, C});
            break;
        case 5:
        case 7:
            lo = -(1 + std::max({a, B, c}));
            hi = 1 + std::sqrt(std::max(B, C));
            break;
        case 8:
            lo = -std::max(1.0, c);
            hi = 1 + std::max(A, C);
            break;
        case 9:
            lo = -(1 + std::max(a, C));
            hi = std::max(1.0, C);
            break;
        default:
            return rb;
    }
    rb.B_L = lo;
    rb.B_U = hi;
    rb.source = BoundsMode::Figure;
    return rb;
}

TagContext tag_context(const MonicCubic& m, const RootBound& rb, const Tolerance& t) {
    return {m, landmarks(m.a, m.b, m.c, t), true, rb.B_L, rb.B_U};
}

RootIsolation c_slot_intervals(const Classification& cls, const IsolateOptions& opt) {
    const MonicCubic& m = cls.m;
    RootIsolation ri;
    ri.figure_id = cls.regime.figure_id;
    ri.case_id = cls.c_slot;
    ri.zero_root = cls.zero_root;
    ri.bounds = opt.bounds == BoundsMode::Figure ? figure_bounds(m, ri.figure_id) : upper_lower_bounds(m);
    TagContext ctx = tag_context(m, ri.bounds, opt.tol);

    if (cls.zero_root) {
        ri.intervals = zero_case(cls, ctx, opt.tol);
        return ri;
    }
    switch (cls.count.kind) {
        case CountKind::TripleRoot:
            ri.intervals.push_back(point(Tag::NegAThird, 3, ctx));
            return ri;
        case CountKind::DoubleSimple: {
            bool first = cls.count.which == 1;
            ri.intervals.push_back(point(first ? Tag::Mu1 : Tag::Mu2, 2, ctx));
            ri.intervals.push_back(point(first ? Tag::Xi1 : Tag::Xi2, 1, ctx));
            sort_intervals(ri.intervals);
            return ri;
        }
        default:
            break;
    }

    const CaseRow& row = case_row(ri.figure_id, ri.case_id);
    for (const auto& ci : row.intervals) {
        Interval iv{endpoint(ci.lo, ci.lo_closed, ctx), endpoint(ci.hi, ci.hi_closed, ctx), 1};
        const double width = iv.hi.value - iv.lo.value;
        if (width <= opt.tol.abs + opt.tol.rel * std::max({std::fabs(iv.lo.value), std::fabs(iv.hi.value), 1.0})) {
            if (iv.hi.value < iv.lo.value) std::swap(iv.lo, iv.hi);
            iv.lo.closed = iv.hi.closed = true;
        }
        ri.intervals.push_back(std::move(iv));
    }
    return ri;
}

namespace {

bool three_open_intervals(const RootIsolation& ri) {
    return ri.intervals.size() == 3 &&
           std::none_of(ri.intervals.begin(), ri.intervals.end(), [](const Interval& iv) { return iv.is_point(); });
}

// x1 >= x3 + L and x3 <= x1 - L
bool apply_min_spread(RootIsolation& ri, const Provenance& L, double Lv) {
    Interval& x3 = ri.intervals[0];
    Interval& x1 = ri.intervals[2];
    bool changed = false;
    if (!is_bound(x3.lo)) {
        double cand = x3.lo.value + Lv;
        if (cand > x1.lo.value) {
            x1.lo = {cand, x3.lo.closed, Provenance(Tag::MaxOf, x1.lo.provenance, Provenance(Tag::Plus, x3.lo.provenance, L))};
            changed = true;
        }
    }
    if (!is_bound(x1.hi)) {
        double cand = x1.hi.value - Lv;
        if (cand < x3.hi.value) {
            x3.hi = {cand, x1.hi.closed, Provenance(Tag::MinOf, x3.hi.provenance, Provenance(Tag::Minus, x1.hi.provenance, L))};
            changed = true;
        }
    }
    return changed;
}

// x1 <= x3 + U and x3 >= x1 - U
bool apply_max_spread(RootIsolation& ri, const Provenance& U, double Uv) {
    Interval& x3 = ri.intervals[0];
    Interval& x1 = ri.intervals[2];
    bool changed = false;
    if (!is_bound(x3.hi)) {
        double cand = x3.hi.value + Uv;
        if (cand < x1.hi.value) {
            x1.hi = {cand, x3.hi.closed, Provenance(Tag::MinOf, x1.hi.provenance, Provenance(Tag::Plus, x3.hi.provenance, U))};
            changed = true;
        }
    }
    if (!is_bound(x1.lo)) {
        double cand = x1.lo.value - Uv;
        if (cand > x3.lo.value) {
            x3.lo = {cand, x1.lo.closed, Provenance(Tag::MaxOf, x3.lo.provenance, Provenance(Tag::Minus, x1.lo.provenance, U))};
            changed = true;
        }
    }
    return changed;
}

Provenance spread_at(Level l, const MonicCubic& m) {
    switch (l) {
        case Level::C1: return {Tag::Minus, Tag::Mu1, Tag::Xi1};
        case Level::C2: return {Tag::Minus, Tag::Xi2, Tag::Mu2};
        case Level::C0: return {Tag::Minus, Tag::Rho1, Tag::Rho2};
        case Level::AB:
            if (m.b < 0)
                return {Tag::Minus, {Tag::MaxOf, Tag::NegA, Tag::SqrtNegB}, {Tag::MinOf, Tag::NegA, Tag::NegSqrtNegB}};
            [[fallthrough]];
        default:
            return {Tag::Minus, {Tag::MaxOf, Tag::Zero, Tag::Lambda1}, {Tag::MinOf, Tag::Zero, Tag::Lambda2}};
    }
}

}  // namespace

RootIsolation harness_narrow(const RootIsolation& ri, const Harness& h) {
    RootIsolation out = ri;
    if (!three_open_intervals(out)) return out;
    if (apply_min_spread(out, Provenance(Tag::HarnessLower), h.lower)) out.harness_applied = true;
    return out;
}

RootIsolation harness_narrow_demo(const RootIsolation& ri, const Classification& cls, const Tolerance& t) {
    RootIsolation out = ri;
    if (!three_open_intervals(out) || !cls.landmarks.s) return out;
    const CaseRow& row = case_row(ri.figure_id, ri.case_id);
    const MonicCubic& m = cls.m;
    TagContext ctx = tag_context(m, ri.bounds, t);
    const Harness h = harness(m.a, m.b, t);

    Provenance L(Tag::HarnessLower), U(Tag::HarnessUpper);
    double Lv = h.lower, Uv = h.upper;
    if (row.intervals.size() == 3) {
        Provenance s_lo = spread_at(row.lo, m), s_hi = spread_at(row.hi, m);
        Provenance slot_min(Tag::MinOf, s_lo, s_hi);
        double v = eval_provenance(slot_min, ctx);
        if (v > Lv) {
            L = slot_min;
            Lv = v;
        }
        const double y0 = -cls.landmarks.c0;
        const double ylo = level_value(row.lo, cls.landmarks).value();
        const double yhi = level_value(row.hi, cls.landmarks).value();
        if (!(ylo <= y0 && y0 <= yhi)) {
            Provenance slot_max(Tag::MaxOf, s_lo, s_hi);
            double w = eval_provenance(slot_max, ctx);
            if (w < Uv) {
                U = slot_max;
                Uv = w;
            }
        }
    }
    bool changed = apply_min_spread(out, L, Lv);
    changed = apply_max_spread(out, U, Uv) || changed;
    out.harness_applied = changed;
    return out;
}

RootIsolation isolate(const MonicCubic& m, const IsolateOptions& opt) {
    Classification cls = classify(m, opt.tol);
    RootIsolation ri = c_slot_intervals(cls, opt);
    if (opt.harness == HarnessMode::Off || !cls.landmarks.s) return ri;
    if (opt.harness == HarnessMode::Demo) return harness_narrow_demo(ri, cls, opt.tol);
    return harness_narrow(ri, harness(m.a, m.b, opt.tol));
}

RootIsolation isolate(const MonicCubic& m, const Tolerance& t) {
    IsolateOptions opt;
    opt.tol = t;
    return isolate(m, opt);
}

}  // namespace cubiso
