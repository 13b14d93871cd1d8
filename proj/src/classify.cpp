#include "cubiso/classify.hpp"

#include <algorithm>
#include <cmath>

#include "cubiso/case_table.hpp"
#include "cubiso/isolate.hpp"

namespace cubiso {

std::string_view kind_name(RegimeKind k) {
    switch (k) {
        case RegimeKind::DepressedBNeg: return "DepressedBNeg";
        case RegimeKind::DepressedBZero: return "DepressedBZero";
        case RegimeKind::DepressedBPos: return "DepressedBPos";
        case RegimeKind::R1: return "R1";
        case RegimeKind::R2: return "R2";
        case RegimeKind::R3: return "R3";
        case RegimeKind::R4: return "R4";
        case RegimeKind::R5: return "R5";
        case RegimeKind::R6: return "R6";
        case RegimeKind::R7: return "R7";
    }
    return "?";
}

std::string_view count_name(CountKind k) {
    switch (k) {
        case CountKind::OneReal: return "OneReal";
        case CountKind::ThreeDistinct: return "ThreeDistinct";
        case CountKind::DoubleSimple: return "DoubleSimple";
        case CountKind::TripleRoot: return "TripleRoot";
    }
    return "?";
}

std::string_view table_name(TableId t) {
    switch (t) {
        case TableId::I: return "I";
        case TableId::II: return "II";
        case TableId::III: return "III";
        case TableId::IV: return "IV";
        case TableId::V: return "V";
        case TableId::VI: return "VI";
        case TableId::ZeroRootCase: return "ZeroRootCase";
    }
    return "?";
}

Regime regime(double a, double b, const Tolerance& t) {
    Regime r;
    const double a2 = a * a;
    auto flag = [&](double thr, const char* name) {
        if (t.close(b, thr, a2)) r.boundary_flags.emplace_back(name);
    };
    if (a == 0.0) {
        r.a_sign = Sign::Zero;
        if (b < 0) {
            r.kind = RegimeKind::DepressedBNeg;
            r.figure_id = 1;
        } else if (b == 0) {
            r.kind = RegimeKind::DepressedBZero;
            r.figure_id = 2;
        } else {
            r.kind = RegimeKind::DepressedBPos;
            r.figure_id = 3;
        }
        if (b != 0 && t.near_zero(b, 1.0)) r.boundary_flags.emplace_back("b~0");
        return r;
    }
    if (t.near_zero(a, std::max(1.0, std::sqrt(std::fabs(b))))) r.boundary_flags.emplace_back("a~0");
    flag(-a2 / 9.0, "b~-a^2/9");
    flag(0.0, "b~0");
    flag(2.0 * a2 / 9.0, "b~2a^2/9");
    flag(a2 / 4.0, "b~a^2/4");
    flag(a2 / 3.0, "b~a^2/3");

    int base;
    if (b < -a2 / 9.0) {
        r.kind = RegimeKind::R1;
        base = 4;
    } else if (b < 0.0) {
        r.kind = RegimeKind::R2;
        base = 6;
    } else if (b == 0.0) {
        r.kind = RegimeKind::R3;
        base = 8;
    } else if (b <= 2.0 * a2 / 9.0) {
        r.kind = RegimeKind::R4;
        base = 10;
    } else if (b <= a2 / 4.0) {
        r.kind = RegimeKind::R5;
        base = 12;
    } else if (b <= a2 / 3.0) {
        r.kind = RegimeKind::R6;
        base = 14;
    } else {
        r.kind = RegimeKind::R7;
        base = 16;
    }
    r.a_sign = a < 0 ? Sign::Neg : Sign::Pos;
    r.figure_id = a < 0 ? base : base + 1;
    return r;
}

RootCount count_real_roots(const MonicCubic& m, const Landmarks& lm, const Tolerance& t) {
    RootCount rc;
    const double a2 = m.a * m.a;
    if (!lm.s) return rc;
    if (t.near_zero(a2 / 3.0 - m.b, std::max(a2 / 3.0, std::fabs(m.b)))) {
        if (t.close(m.c, lm.c0, term_magnitude(m, lm.rho0))) {
            rc.kind = CountKind::TripleRoot;
            rc.triple_at = -m.a / 3.0;
        }
        return rc;
    }
    const double c1 = *lm.c1, c2 = *lm.c2;
    const bool near1 = t.close(m.c, c1, term_magnitude(m, *lm.mu1));
    const bool near2 = t.close(m.c, c2, term_magnitude(m, *lm.mu2));
    if (near1 && (!near2 || std::fabs(m.c - c1) <= std::fabs(m.c - c2))) {
        rc.kind = CountKind::DoubleSimple;
        rc.which = 1;
        rc.double_at = *lm.mu1;
        rc.simple_at = *lm.xi1;
    } else if (near2) {
        rc.kind = CountKind::DoubleSimple;
        rc.which = 2;
        rc.double_at = *lm.mu2;
        rc.simple_at = *lm.xi2;
    } else if (c2 < m.c && m.c < c1) {
        rc.kind = CountKind::ThreeDistinct;
    }
    return rc;
}

SlotLocation locate_slot(int figure, const MonicCubic& m, const Landmarks& lm, const Tolerance& t) {
    SlotLocation loc;
    auto rows = figure_cases(figure);
    loc.y = -m.c;
    // each level is p(x) - c read at one abscissa
    auto abscissa = [&](Level l) -> std::optional<double> {
        switch (l) {
            case Level::C1: return lm.mu1;
            case Level::C2: return lm.mu2;
            case Level::C0: return lm.rho0;
            case Level::AB: return -m.a;
            default: return std::nullopt;
        }
    };

    double best = INFINITY;
    std::optional<Level> snapped;
    for (const auto& row : rows) {
        for (Level l : {row.lo, row.hi}) {
            auto v = level_value(l, lm);
            auto x = abscissa(l);
            // zero is exact; a vanishing free term never reaches here
            if (!v || !x) continue;
            double scale = term_magnitude(m, *x);
            // c = ab also puts roots at +-sqrt(-b)
            if (l == Level::AB && lm.sqrt_neg_b) scale = std::max(scale, term_magnitude(m, *lm.sqrt_neg_b));
            if (!t.close(-m.c, *v, scale)) continue;
            double d = std::fabs(-m.c - *v);
            if (d < best) {
                best = d;
                snapped = l;
                loc.y = *v;
            }
        }
    }
    if (snapped && best > 0.0) loc.flags.push_back("-c~" + std::string(level_name(*snapped)));

    for (const auto& row : rows) {
        if (row.hi == Level::PosInf) {
            loc.case_id = row.case_id;
            return loc;
        }
        double v = level_value(row.hi, lm).value();
        if (loc.y < v || (loc.y == v && row.hi_closed)) {
            loc.case_id = row.case_id;
            return loc;
        }
    }
    loc.case_id = rows.back().case_id;
    return loc;
}

std::optional<SignPattern> table_signs(const MonicCubic& m, const Landmarks& lm, const RootCount& rc,
                                       const Tolerance& t) {
    (void)lm;
    if (c_is_zero(m, t)) return std::nullopt;
    const double a = m.a, b = m.b, c = m.c;
    SignPattern sp;
    if (rc.kind == CountKind::OneReal) {
        sp.complex_pair = true;
        if (c < 0) {
            sp.n_pos = 1;
            sp.table_id = TableId::V;
        } else {
            sp.n_neg = 1;
            sp.table_id = TableId::VI;
        }
        return sp;
    }
    // three real roots: c2 <= c <= c1
    if (a < 0 && b > 0 && c < 0) {
        sp.n_pos = 3;
        sp.table_id = TableId::I;
    } else if (a > 0 && b > 0 && c > 0) {
        sp.n_neg = 3;
        sp.table_id = TableId::II;
    } else if (c > 0) {
        sp.n_pos = 2;
        sp.n_neg = 1;
        sp.table_id = TableId::III;
    } else {
        sp.n_pos = 1;
        sp.n_neg = 2;
        sp.table_id = TableId::IV;
    }
    return sp;
}

namespace {

SignPattern zero_signs(const MonicCubic& m, const Landmarks& lm, const Tolerance& t) {
    SignPattern sp;
    sp.table_id = TableId::ZeroRootCase;
    const bool b0 = t.near_zero(m.b, std::max({m.a * m.a, std::fabs(m.b), 1.0}));
    const bool a0 = t.near_zero(m.a, 1.0);
    sp.n_zero = 1;
    if (!lm.lambda1) {
        sp.complex_pair = true;
        return sp;
    }
    if (b0) {
        ++sp.n_zero;
        if (a0) {
            ++sp.n_zero;
            return sp;
        }
        (m.a < 0 ? sp.n_pos : sp.n_neg) += 1;
        return sp;
    }
    for (double l : {*lm.lambda1, *lm.lambda2}) (l > 0 ? sp.n_pos : sp.n_neg) += 1;
    return sp;
}

}  // namespace

SignPattern sign_classify(const MonicCubic& m, const Regime& r, const RootCount& rc, const Landmarks& lm,
                          const Tolerance& t) {
    if (c_is_zero(m, t)) throw ZeroFreeTerm("free term is zero within tolerance");
    Classification cls;
    cls.m = m;
    cls.regime = r;
    cls.count = rc;
    cls.landmarks = lm.c_over_b || m.b == 0.0 ? lm : landmarks(m.a, m.b, m.c, t);
    SlotLocation loc = locate_slot(r.figure_id, m, cls.landmarks, t);
    cls.c_slot = loc.case_id;
    std::vector<std::string> flags = r.boundary_flags;
    flags.insert(flags.end(), loc.flags.begin(), loc.flags.end());

    IsolateOptions opt;
    opt.tol = t;
    opt.harness = HarnessMode::Off;
    RootIsolation ri = c_slot_intervals(cls, opt);

    SignPattern from_intervals;
    int total = 0;
    for (const auto& iv : ri.intervals) {
        total += iv.multiplicity;
        if (iv.lo.value >= 0.0)
            from_intervals.n_pos += iv.multiplicity;
        else if (iv.hi.value <= 0.0)
            from_intervals.n_neg += iv.multiplicity;
        else
            throw TableMismatch("isolation interval straddles zero in " + citation(ri.figure_id, ri.case_id), flags);
    }
    from_intervals.complex_pair = total < 3;

    auto from_tables = table_signs(m, lm, rc, t);
    if (!from_tables || !from_tables->same_signs(from_intervals))
        throw TableMismatch("sign pattern from " + citation(ri.figure_id, ri.case_id) +
                                " disagrees with the summary-table predicates",
                            flags);
    from_intervals.table_id = from_tables->table_id;
    return from_intervals;
}

Classification classify(const MonicCubic& m, const Tolerance& t) {
    Classification cls;
    cls.m = m;
    cls.landmarks = landmarks(m.a, m.b, m.c, t);
    cls.regime = regime(m.a, m.b, t);
    cls.zero_root = c_is_zero(m, t);
    MonicCubic mc = m;
    if (cls.zero_root) mc.c = 0.0;
    cls.count = count_real_roots(mc, cls.landmarks, t);
    SlotLocation loc = locate_slot(cls.regime.figure_id, mc, cls.landmarks, t);
    cls.c_slot = loc.case_id;
    for (auto& f : loc.flags) cls.regime.boundary_flags.push_back(f);
    if (cls.zero_root)
        cls.signs = zero_signs(m, cls.landmarks, t);
    else
        cls.signs = sign_classify(m, cls.regime, cls.count, cls.landmarks, t);
    return cls;
}

}  // namespace cubiso
