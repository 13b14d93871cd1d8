#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cubiso/landmarks.hpp"
#include "cubiso/provenance.hpp"

namespace cubiso {

// ordinate levels compared against y = -c
enum class Level { NegInf, C1, C2, C0, AB, Zero, PosInf };

struct CaseInterval {
    Provenance lo;
    bool lo_closed;
    Provenance hi;
    bool hi_closed;
};

struct CaseRow {
    int figure;
    int case_id;
    Level lo;
    bool lo_closed;
    Level hi;
    bool hi_closed;
    std::vector<CaseInterval> intervals;  // ascending: x3, x2, x1
};

std::string_view level_name(Level l);
// value of the threshold on y = -c; nullopt for infinite or undefined levels
std::optional<double> level_value(Level l, const Landmarks& lm);

const std::vector<CaseRow>& case_table();
std::span<const CaseRow> figure_cases(int figure);
const CaseRow& case_row(int figure, int case_id);

// declarative membership of y in a row's condition
bool row_admits(const CaseRow& row, double y, const Landmarks& lm);

}  // namespace cubiso
