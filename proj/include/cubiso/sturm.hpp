#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubiso/classify.hpp"
#include "cubiso/core.hpp"
#include "cubiso/isolate.hpp"

namespace cubiso {

struct NonConvergence : Error {
    using Error::Error;
};

// polynomials are stored with descending coefficients
using Poly = std::vector<double>;

struct SturmChain {
    MonicCubic m;
    std::vector<Poly> p;  // p0, p1, p2, p3 (truncated at the last nonzero entry)
    bool p2_leading_vanishes = false;
    bool p3_vanishes = false;
};

struct Root {
    double value = 0;
    int multiplicity = 1;
};

struct RootReport {
    std::vector<Root> roots;
    std::vector<double> residuals;
    int distinct = 0;
    int total() const;
};

struct IntervalCheck {
    int sturm_count = 0;
    int expected = 1;
    bool contains = false;
};

struct VerificationReport {
    std::vector<IntervalCheck> intervals;
    RootReport roots;
    bool counts_ok = true;
    bool disjoint_ok = true;
    bool count_kind_ok = true;
    bool signs_ok = true;
    std::optional<bool> harness_ok;
    std::optional<double> span;
    bool bounds_ok = true;
    bool pass = true;
    std::vector<std::string> diagnostics;
};

double eval_poly(const Poly& p, double x);
SturmChain sturm_chain(const MonicCubic& m, const Tolerance& t = {});
int sign_variations(const SturmChain& ch, double x);
int sign_variations_at_infinity(const SturmChain& ch, bool positive);
int count_roots_in(const SturmChain& ch, double lo, double hi);
RootReport solve_all(const MonicCubic& m, const Tolerance& t = {});
VerificationReport verify(const MonicCubic& m, const Classification& cls, const RootIsolation& ri,
                          const Tolerance& t = {});

}  // namespace cubiso
