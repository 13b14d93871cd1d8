#pragma once

#include <string>
#include <vector>

#include "cubiso/classify.hpp"
#include "cubiso/provenance.hpp"

namespace cubiso {

struct Endpoint {
    double value = 0;
    bool closed = true;
    Provenance provenance;
};

struct Interval {
    Endpoint lo, hi;
    int multiplicity = 1;

    bool is_point() const { return lo.value == hi.value; }
    bool contains(double x) const {
        bool above = lo.closed ? x >= lo.value : x > lo.value;
        bool below = hi.closed ? x <= hi.value : x < hi.value;
        return above && below;
    }
};

enum class BoundsMode { Figure, Generic };
enum class HarnessMode { Off, Min, Demo };

struct RootBound {
    double B_L = 0, B_U = 0;
    double H = 0;  // largest |negative coefficient| of p(x)
    int k = 0;     // 0 when p(x) has no negative coefficient
    double H_L = 0;
    int k_L = 0;   // same rule applied to p(-x)
    BoundsMode source = BoundsMode::Generic;
};

struct RootIsolation {
    std::vector<Interval> intervals;
    int figure_id = 0;
    int case_id = 0;
    bool harness_applied = false;
    bool zero_root = false;
    RootBound bounds;
};

struct IsolateOptions {
    Tolerance tol;
    HarnessMode harness = HarnessMode::Min;
    BoundsMode bounds = BoundsMode::Figure;
};

RootBound upper_lower_bounds(const MonicCubic& m);
RootBound figure_bounds(const MonicCubic& m, int figure);
RootIsolation c_slot_intervals(const Classification& cls, const IsolateOptions& opt = {});
RootIsolation harness_narrow(const RootIsolation& ri, const Harness& h);
// per-slot spread refinement; applies the minimum-spread rule as well
RootIsolation harness_narrow_demo(const RootIsolation& ri, const Classification& cls, const Tolerance& t = {});
RootIsolation isolate(const MonicCubic& m, const IsolateOptions& opt);
RootIsolation isolate(const MonicCubic& m, const Tolerance& t = {});

TagContext tag_context(const MonicCubic& m, const RootBound& rb, const Tolerance& t = {});
std::string citation(int figure, int case_id);

}  // namespace cubiso
