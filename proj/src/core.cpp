#include "cubiso/core.hpp"

#include <algorithm>
#include <cmath>

namespace cubiso {

bool Tolerance::close(double u, double v, double scale) const {
    double s = std::max({std::fabs(u), std::fabs(v), scale});
    return std::fabs(u - v) <= abs + rel * s;
}

bool Tolerance::near_zero(double v, double scale) const {
    return std::fabs(v) <= abs + rel * scale;
}

MonicCubic monicize(const GeneralCubic& g) {
    if (g.A == 0.0) throw DegenerateLeadingCoefficient("leading coefficient is zero");
    return {g.B / g.A, g.C / g.A, g.D / g.A};
}

DepressedCubic depress(const MonicCubic& m) {
    const double a = m.a, b = m.b, c = m.c;
    return {b - a * a / 3.0, 2.0 * a * a * a / 27.0 - a * b / 3.0 + c, a / 3.0};
}

double discriminant(const MonicCubic& m) {
    const double a = m.a, b = m.b, c = m.c;
    return -27.0 * c * c + (18.0 * a * b - 4.0 * a * a * a) * c + a * a * b * b - 4.0 * b * b * b;
}

double depressed_discriminant(const DepressedCubic& d) {
    return -4.0 * d.p * d.p * d.p - 27.0 * d.q * d.q;
}

double evaluate(const MonicCubic& m, double x) {
    return ((x + m.a) * x + m.b) * x + m.c;
}

double coefficient_scale(const MonicCubic& m) {
    return std::max({1.0, std::fabs(m.a), std::fabs(m.b), std::fabs(m.c)});
}

double term_magnitude(const MonicCubic& m, double x) {
    return std::fabs(x * x * x) + std::fabs(m.a * x * x) + std::fabs(m.b * x) + std::fabs(m.c);
}

bool c_is_zero(const MonicCubic& m, const Tolerance& t) {
    return t.near_zero(m.c, std::max({std::fabs(m.a), std::fabs(m.b), 1.0}));
}

ZeroRootSplit zero_root_factor(const MonicCubic& m, const Tolerance& t) {
    if (!c_is_zero(m, t)) throw NotZeroFreeTerm("free term is not zero within tolerance");
    return {true, {m.a, m.b}};
}

}  // namespace cubiso
