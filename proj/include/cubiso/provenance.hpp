#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cubiso/core.hpp"
#include "cubiso/landmarks.hpp"

namespace cubiso {

enum class Tag {
    Xi1, Xi2, Mu1, Mu2, Rho0, Rho1, Rho2, Lambda1, Lambda2,
    NegA, NegAThird, SqrtNegB, NegSqrtNegB, COverB, Zero,
    BL, BU, CbrtClosedForm,
    MinOf, MaxOf, Plus, Minus, HarnessLower, HarnessUpper,
};

struct Provenance {
    Tag tag = Tag::Zero;
    std::vector<Provenance> args;

    Provenance() = default;
    Provenance(Tag t) : tag(t) {}
    Provenance(Tag t, Provenance x, Provenance y) : tag(t), args{std::move(x), std::move(y)} {}

    bool operator==(const Provenance&) const = default;
};

struct MissingBound : Error {
    using Error::Error;
};
struct MissingLandmark : Error {
    using Error::Error;
};
struct TagParseError : Error {
    using Error::Error;
};

struct TagContext {
    MonicCubic m;
    Landmarks lm;
    bool has_bounds = false;
    double B_L = 0, B_U = 0;
};

std::string_view tag_name(Tag t);
std::string to_string(const Provenance& p);
Provenance parse_provenance(std::string_view s);
double eval_provenance(const Provenance& p, const TagContext& ctx);
bool uses_bound(const Provenance& p);

}  // namespace cubiso
