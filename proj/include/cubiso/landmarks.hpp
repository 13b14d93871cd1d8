#pragma once

#include <optional>

#include "cubiso/core.hpp"

namespace cubiso {

struct NotApplicable : Error {
    using Error::Error;
};

struct Landmarks {
    double a = 0, b = 0;
    double c0 = 0;
    std::optional<double> c1, c2;
    std::optional<double> mu1, mu2;
    std::optional<double> xi1, xi2;
    double rho0 = 0;
    std::optional<double> rho1, rho2;
    std::optional<double> lambda1, lambda2;
    double ab = 0;
    std::optional<double> c_over_b;
    std::optional<double> sqrt_neg_b;
    // sqrt(a^2/3 - b), clamped at zero; present with the three-real family
    std::optional<double> s;
};

struct Harness {
    double lower = 0, upper = 0;
};

Landmarks landmarks(double a, double b, std::optional<double> c = std::nullopt,
                    const Tolerance& t = {});
Harness harness(double a, double b, const Tolerance& t = {});

}  // namespace cubiso
