#include "cubiso/case_table.hpp"

#include <algorithm>
#include <string>

namespace cubiso {

namespace {

struct RawInterval {
    const char* lo;
    bool lo_closed;
    const char* hi;
    bool hi_closed;
};

struct RawRow {
    int figure, case_id;
    Level lo;
    bool lo_closed;
    Level hi;
    bool hi_closed;
    std::vector<RawInterval> intervals;
};

std::vector<CaseRow> build() {
    const std::vector<RawRow> raw = {
        // Figure 1: a = 0, b < 0
        {1, 1, Level::NegInf, false, Level::C1, false, {{"B_L", false, "xi1", false}}},
        {1, 2, Level::C1, true, Level::Zero, false, {{"xi1", true, "neg_sqrt_neg_b", false}, {"c_over_b", false, "mu1", true}, {"mu1", true, "sqrt_neg_b", false}}},
        {1, 3, Level::Zero, true, Level::C2, true, {{"neg_sqrt_neg_b", true, "mu2", true}, {"mu2", true, "c_over_b", true}, {"sqrt_neg_b", true, "xi2", true}}},
        {1, 4, Level::C2, false, Level::PosInf, false, {{"xi2", false, "B_U", false}}},
        // Figure 2: a = 0, b = 0
        {2, 1, Level::NegInf, false, Level::Zero, false, {{"cbrt_closed_form", true, "cbrt_closed_form", true}}},
        {2, 2, Level::Zero, true, Level::Zero, true, {{"zero", true, "zero", true}}},
        {2, 3, Level::Zero, false, Level::PosInf, false, {{"cbrt_closed_form", true, "cbrt_closed_form", true}}},
        // Figure 3: a = 0, b > 0
        {3, 1, Level::NegInf, false, Level::Zero, true, {{"c_over_b", false, "zero", true}}},
        {3, 2, Level::Zero, false, Level::PosInf, false, {{"zero", false, "c_over_b", false}}},
        // Figure 4: a < 0, b < -a^2/9
        {4, 1, Level::NegInf, false, Level::C1, false, {{"B_L", false, "xi1", false}}},
        {4, 2, Level::C1, true, Level::AB, false, {{"xi1", true, "neg_sqrt_neg_b", false}, {"min_of(sqrt_neg_b,neg_a)", false, "mu1", true}, {"mu1", true, "max_of(sqrt_neg_b,neg_a)", false}}},
        {4, 3, Level::AB, true, Level::C0, false, {{"neg_sqrt_neg_b", true, "rho2", false}, {"rho0", false, "min_of(c_over_b,min_of(sqrt_neg_b,neg_a))", true}, {"max_of(sqrt_neg_b,neg_a)", true, "rho1", false}}},
        {4, 4, Level::C0, true, Level::Zero, false, {{"rho2", true, "lambda2", false}, {"zero", false, "min_of(c_over_b,rho0)", true}, {"rho1", true, "lambda1", false}}},
        {4, 5, Level::Zero, true, Level::C2, true, {{"lambda2", true, "mu2", true}, {"mu2", true, "c_over_b", true}, {"lambda1", true, "xi2", true}}},
        {4, 6, Level::C2, false, Level::PosInf, false, {{"xi2", false, "B_U", false}}},
        // Figure 5: a > 0, b < -a^2/9
        {5, 1, Level::NegInf, false, Level::C1, false, {{"B_L", false, "xi1", false}}},
        {5, 2, Level::C1, true, Level::Zero, false, {{"xi1", true, "lambda2", false}, {"c_over_b", false, "mu1", true}, {"mu1", true, "lambda1", false}}},
        {5, 3, Level::Zero, true, Level::C0, false, {{"lambda2", true, "rho2", false}, {"max_of(c_over_b,rho0)", false, "zero", true}, {"lambda1", true, "rho1", false}}},
        {5, 4, Level::C0, true, Level::AB, false, {{"rho2", true, "min_of(neg_sqrt_neg_b,neg_a)", false}, {"max_of(c_over_b,max_of(neg_sqrt_neg_b,neg_a))", false, "rho0", true}, {"rho1", true, "sqrt_neg_b", false}}},
        {5, 5, Level::AB, true, Level::C2, true, {{"min_of(neg_sqrt_neg_b,neg_a)", true, "mu2", true}, {"mu2", true, "max_of(neg_sqrt_neg_b,neg_a)", true}, {"sqrt_neg_b", true, "xi2", true}}},
        {5, 6, Level::C2, false, Level::PosInf, false, {{"xi2", false, "B_U", false}}},
        // Figure 6: a < 0, -a^2/9 <= b < 0
        {6, 1, Level::NegInf, false, Level::C1, false, {{"B_L", false, "xi1", false}}},
        {6, 2, Level::C1, true, Level::C0, false, {{"xi1", true, "rho2", false}, {"rho0", false, "mu1", true}, {"mu1", true, "rho1", false}}},
        {6, 3, Level::C0, true, Level::AB, false, {{"rho2", true, "neg_sqrt_neg_b", false}, {"sqrt_neg_b", false, "rho0", true}, {"rho1", true, "neg_a", false}}},
        {6, 4, Level::AB, true, Level::Zero, false, {{"neg_sqrt_neg_b", true, "lambda2", false}, {"zero", false, "min_of(c_over_b,sqrt_neg_b)", true}, {"neg_a", true, "lambda1", false}}},
        {6, 5, Level::Zero, true, Level::C2, true, {{"lambda2", true, "mu2", true}, {"mu2", true, "c_over_b", true}, {"lambda1", true, "xi2", true}}},
        {6, 6, Level::C2, false, Level::PosInf, false, {{"xi2", false, "B_U", false}}},
        // Figure 7: a > 0, -a^2/9 <= b < 0
        {7, 1, Level::NegInf, false, Level::C1, false, {{"B_L", false, "xi1", false}}},
        {7, 2, Level::C1, true, Level::Zero, false, {{"xi1", true, "lambda2", false}, {"c_over_b", false, "mu1", true}, {"mu1", true, "lambda1", false}}},
        {7, 3, Level::Zero, true, Level::AB, false, {{"lambda2", true, "neg_a", false}, {"max_of(c_over_b,neg_sqrt_neg_b)", false, "zero", true}, {"lambda1", true, "sqrt_neg_b", false}}},
        {7, 4, Level::AB, true, Level::C0, false, {{"neg_a", true, "rho2", false}, {"rho0", false, "neg_sqrt_neg_b", true}, {"sqrt_neg_b", true, "rho1", false}}},
        {7, 5, Level::C0, true, Level::C2, true, {{"rho2", true, "mu2", true}, {"mu2", true, "rho0", true}, {"rho1", true, "xi2", true}}},
        {7, 6, Level::C2, false, Level::PosInf, false, {{"xi2", false, "B_U", false}}},
        // Figure 8: a < 0, b = 0
        {8, 1, Level::NegInf, false, Level::C1, false, {{"B_L", false, "xi1", false}}},
        {8, 2, Level::C1, true, Level::C0, false, {{"xi1", true, "rho2", false}, {"rho0", false, "mu1", true}, {"mu1", true, "rho1", false}}},
        {8, 3, Level::C0, true, Level::Zero, true, {{"rho2", true, "zero", false}, {"zero", false, "rho0", true}, {"rho1", true, "neg_a", false}}},
        {8, 4, Level::Zero, false, Level::PosInf, false, {{"neg_a", false, "B_U", false}}},
        // Figure 9: a > 0, b = 0
        {9, 1, Level::NegInf, false, Level::Zero, false, {{"B_L", false, "neg_a", false}}},
        {9, 2, Level::Zero, true, Level::C0, false, {{"neg_a", true, "rho2", false}, {"rho0", false, "zero", true}, {"zero", true, "rho1", false}}},
        {9, 3, Level::C0, true, Level::C2, true, {{"rho2", true, "mu2", true}, {"mu2", true, "rho0", true}, {"rho1", true, "xi2", true}}},
        {9, 4, Level::C2, false, Level::PosInf, false, {{"xi2", true, "B_U", false}}},
        // Figure 10: a < 0, 0 < b <= 2a^2/9
        {10, 1, Level::NegInf, false, Level::C1, false, {{"c_over_b", false, "xi1", false}}},
        {10, 2, Level::C1, true, Level::C0, false, {{"max_of(c_over_b,xi1)", true, "rho2", false}, {"rho0", false, "mu1", true}, {"mu1", true, "rho1", false}}},
        {10, 3, Level::C0, true, Level::Zero, false, {{"max_of(c_over_b,rho2)", true, "zero", false}, {"lambda2", false, "rho0", true}, {"rho1", true, "lambda1", false}}},
        {10, 4, Level::Zero, true, Level::C2, true, {{"c_over_b", true, "mu2", true}, {"mu2", true, "lambda2", true}, {"lambda1", true, "xi2", true}}},
        {10, 5, Level::C2, false, Level::AB, false, {{"max_of(c_over_b,xi2)", false, "neg_a", false}}},
        {10, 6, Level::AB, true, Level::PosInf, false, {{"neg_a", true, "c_over_b", false}}},
        // Figure 11: a > 0, 0 < b <= 2a^2/9
        {11, 1, Level::NegInf, false, Level::AB, false, {{"c_over_b", false, "neg_a", false}}},
        {11, 2, Level::AB, true, Level::C1, false, {{"neg_a", true, "min_of(c_over_b,xi1)", false}}},
        {11, 3, Level::C1, true, Level::Zero, false, {{"xi1", true, "lambda2", false}, {"lambda1", false, "mu1", true}, {"mu1", true, "c_over_b", false}}},
        {11, 4, Level::Zero, true, Level::C0, false, {{"lambda2", true, "rho2", false}, {"rho0", false, "lambda1", true}, {"zero", true, "min_of(c_over_b,rho1)", false}}},
        {11, 5, Level::C0, true, Level::C2, true, {{"rho2", true, "mu2", true}, {"mu2", true, "rho0", true}, {"rho1", true, "min_of(c_over_b,xi2)", true}}},
        {11, 6, Level::C2, false, Level::PosInf, false, {{"xi2", false, "c_over_b", false}}},
        // Figure 12: a < 0, 2a^2/9 < b <= a^2/4
        {12, 1, Level::NegInf, false, Level::C1, false, {{"c_over_b", false, "xi1", false}}},
        {12, 2, Level::C1, true, Level::Zero, false, {{"max_of(c_over_b,xi1)", true, "zero", false}, {"lambda2", false, "mu1", true}, {"mu1", true, "lambda1", false}}},
        {12, 3, Level::Zero, true, Level::C0, false, {{"c_over_b", true, "rho2", false}, {"rho0", false, "lambda2", true}, {"lambda1", true, "rho1", false}}},
        {12, 4, Level::C0, true, Level::C2, true, {{"max_of(rho2,c_over_b)", true, "mu2", true}, {"mu2", true, "rho0", true}, {"rho1", true, "xi2", true}}},
        {12, 5, Level::C2, false, Level::AB, true, {{"max_of(c_over_b,xi2)", false, "neg_a", true}}},
        {12, 6, Level::AB, false, Level::PosInf, false, {{"neg_a", false, "c_over_b", false}}},
        // Figure 13: a > 0, 2a^2/9 < b <= a^2/4
        {13, 1, Level::NegInf, false, Level::AB, false, {{"c_over_b", false, "neg_a", false}}},
        {13, 2, Level::AB, true, Level::C1, false, {{"neg_a", true, "min_of(c_over_b,xi1)", false}}},
        {13, 3, Level::C1, true, Level::C0, false, {{"xi1", true, "rho2", false}, {"rho0", false, "mu1", true}, {"mu1", true, "min_of(c_over_b,rho1)", false}}},
        {13, 4, Level::C0, true, Level::Zero, false, {{"rho2", true, "lambda2", false}, {"lambda1", false, "rho0", true}, {"rho1", true, "c_over_b", false}}},
        {13, 5, Level::Zero, true, Level::C2, true, {{"lambda2", true, "mu2", true}, {"mu2", true, "lambda1", true}, {"zero", true, "min_of(c_over_b,xi2)", true}}},
        {13, 6, Level::C2, false, Level::PosInf, false, {{"xi2", false, "c_over_b", false}}},
        // Figure 14: a < 0, a^2/4 < b <= a^2/3
        {14, 1, Level::NegInf, false, Level::Zero, false, {{"c_over_b", false, "zero", false}}},
        {14, 2, Level::Zero, true, Level::C1, false, {{"c_over_b", true, "xi1", false}}},
        {14, 3, Level::C1, true, Level::C0, false, {{"max_of(c_over_b,xi1)", true, "rho2", false}, {"rho0", false, "mu1", true}, {"mu1", true, "rho1", false}}},
        {14, 4, Level::C0, true, Level::C2, true, {{"max_of(c_over_b,rho2)", true, "mu2", true}, {"mu2", true, "rho0", true}, {"rho1", true, "xi2", true}}},
        {14, 5, Level::C2, false, Level::AB, true, {{"max_of(c_over_b,xi2)", false, "neg_a", true}}},
        {14, 6, Level::AB, false, Level::PosInf, false, {{"neg_a", false, "c_over_b", false}}},
        // Figure 15: a > 0, a^2/4 < b <= a^2/3
        {15, 1, Level::NegInf, false, Level::AB, false, {{"c_over_b", false, "neg_a", false}}},
        {15, 2, Level::AB, true, Level::C1, false, {{"neg_a", true, "min_of(c_over_b,xi1)", false}}},
        {15, 3, Level::C1, true, Level::C0, false, {{"xi1", true, "rho2", false}, {"rho0", false, "mu1", true}, {"mu1", true, "min_of(c_over_b,rho1)", false}}},
        {15, 4, Level::C0, true, Level::C2, true, {{"rho2", true, "mu2", true}, {"mu2", true, "rho0", true}, {"rho1", true, "min_of(c_over_b,xi2)", false}}},
        {15, 5, Level::C2, false, Level::Zero, true, {{"xi2", false, "c_over_b", true}}},
        {15, 6, Level::Zero, false, Level::PosInf, false, {{"zero", false, "c_over_b", false}}},
        // Figure 16: a < 0, b > a^2/3
        {16, 1, Level::NegInf, false, Level::Zero, false, {{"c_over_b", false, "zero", false}}},
        {16, 2, Level::Zero, true, Level::C0, false, {{"c_over_b", true, "rho0", false}}},
        {16, 3, Level::C0, true, Level::AB, false, {{"max_of(c_over_b,rho0)", true, "neg_a", false}}},
        {16, 4, Level::AB, true, Level::PosInf, false, {{"neg_a", true, "c_over_b", false}}},
        // Figure 17: a > 0, b > a^2/3
        {17, 1, Level::NegInf, false, Level::AB, false, {{"c_over_b", false, "neg_a", false}}},
        {17, 2, Level::AB, true, Level::C0, false, {{"neg_a", true, "min_of(c_over_b,rho0)", false}}},
        {17, 3, Level::C0, true, Level::Zero, false, {{"rho0", true, "c_over_b", false}}},
        {17, 4, Level::Zero, true, Level::PosInf, false, {{"zero", true, "c_over_b", false}}},
    };
    std::vector<CaseRow> rows;
    rows.reserve(raw.size());
    for (const auto& r : raw) {
        CaseRow row{r.figure, r.case_id, r.lo, r.lo_closed, r.hi, r.hi_closed, {}};
        for (const auto& iv : r.intervals)
            row.intervals.push_back({parse_provenance(iv.lo), iv.lo_closed, parse_provenance(iv.hi), iv.hi_closed});
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string_view level_name(Level l) {
    switch (l) {
        case Level::NegInf: return "-inf";
        case Level::C1: return "-c1";
        case Level::C2: return "-c2";
        case Level::C0: return "-c0";
        case Level::AB: return "-ab";
        case Level::Zero: return "0";
        case Level::PosInf: return "+inf";
    }
    return "?";
}

std::optional<double> level_value(Level l, const Landmarks& lm) {
    switch (l) {
        case Level::C1: return lm.c1 ? std::optional(-*lm.c1) : std::nullopt;
        case Level::C2: return lm.c2 ? std::optional(-*lm.c2) : std::nullopt;
        case Level::C0: return -lm.c0;
        case Level::AB: return -lm.ab;
        case Level::Zero: return 0.0;
        default: return std::nullopt;
    }
}

const std::vector<CaseRow>& case_table() {
    static const std::vector<CaseRow> rows = build();
    return rows;
}

std::span<const CaseRow> figure_cases(int figure) {
    const auto& rows = case_table();
    auto first = std::find_if(rows.begin(), rows.end(), [&](const CaseRow& r) { return r.figure == figure; });
    auto last = std::find_if(first, rows.end(), [&](const CaseRow& r) { return r.figure != figure; });
    return {first, last};
}

const CaseRow& case_row(int figure, int case_id) {
    for (const auto& r : figure_cases(figure))
        if (r.case_id == case_id) return r;
    throw Error("no case (" + std::to_string(case_id) + ") in Figure " + std::to_string(figure));
}

bool row_admits(const CaseRow& row, double y, const Landmarks& lm) {
    if (row.lo != Level::NegInf) {
        double v = level_value(row.lo, lm).value();
        if (row.lo_closed ? y < v : y <= v) return false;
    }
    if (row.hi != Level::PosInf) {
        double v = level_value(row.hi, lm).value();
        if (row.hi_closed ? y > v : y >= v) return false;
    }
    return true;
}

}  // namespace cubiso
