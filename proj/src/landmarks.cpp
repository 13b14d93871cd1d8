#include "cubiso/landmarks.hpp"

#include <algorithm>
#include <cmath>

namespace cubiso {

namespace {

std::optional<double> clamped_sqrt(double r, double scale, const Tolerance& t) {
    if (r >= 0.0) return std::sqrt(r);
    if (t.near_zero(r, scale)) return 0.0;
    return std::nullopt;
}

}  // namespace

Landmarks landmarks(double a, double b, std::optional<double> c, const Tolerance& t) {
    Landmarks L;
    L.a = a;
    L.b = b;
    L.c0 = -2.0 * a * a * a / 27.0 + a * b / 3.0;
    L.rho0 = -a / 3.0;
    L.ab = a * b;

    const double a2 = a * a;
    L.s = clamped_sqrt(a2 / 3.0 - b, std::max(a2 / 3.0, std::fabs(b)), t);
    if (L.s) {
        const double s = *L.s;
        const double d = s / std::sqrt(3.0);
        L.mu1 = -a / 3.0 + d;
        L.mu2 = -a / 3.0 - d;
        // -(x^3 + a x^2 + b x) at the critical points
        auto level = [&](double x) { return -((x + a) * x + b) * x; };
        L.c1 = level(*L.mu1);
        L.c2 = level(*L.mu2);
        L.xi1 = -a - 2.0 * *L.mu1;
        L.xi2 = -a - 2.0 * *L.mu2;
        L.rho1 = -a / 3.0 + s;
        L.rho2 = -a / 3.0 - s;
    }
    if (auto r = clamped_sqrt(a2 / 4.0 - b, std::max(a2 / 4.0, std::fabs(b)), t)) {
        L.lambda1 = -a / 2.0 + *r;
        L.lambda2 = -a / 2.0 - *r;
    }
    if (b < 0.0) L.sqrt_neg_b = std::sqrt(-b);
    if (c && b != 0.0) L.c_over_b = -*c / b;
    return L;
}

Harness harness(double a, double b, const Tolerance& t) {
    Landmarks L = landmarks(a, b, std::nullopt, t);
    if (!L.s) throw NotApplicable("harness requires b <= a^2/3");
    return {std::sqrt(3.0) * *L.s, 2.0 * *L.s};
}

}  // namespace cubiso
