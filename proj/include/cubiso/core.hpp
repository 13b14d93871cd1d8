#pragma once

#include <stdexcept>
#include <string>

namespace cubiso {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateLeadingCoefficient : Error {
    using Error::Error;
};
struct NotZeroFreeTerm : Error {
    using Error::Error;
};

struct GeneralCubic {
    double A = 1, B = 0, C = 0, D = 0;
};

struct MonicCubic {
    double a = 0, b = 0, c = 0;
};

struct DepressedCubic {
    double p = 0, q = 0, shift = 0;
};

struct Tolerance {
    double rel = 1e-10;
    double abs = 1e-12;

    // |u - v| within abs + rel * max(|u|, |v|, scale)
    bool close(double u, double v, double scale = 0.0) const;
    bool near_zero(double v, double scale) const;
};

struct QuadraticResidual {
    double a = 0, b = 0;  // x^2 + a x + b
};

struct ZeroRootSplit {
    bool zero_root = true;
    QuadraticResidual residual;
};

MonicCubic monicize(const GeneralCubic& g);
DepressedCubic depress(const MonicCubic& m);
double discriminant(const MonicCubic& m);
double depressed_discriminant(const DepressedCubic& d);
double evaluate(const MonicCubic& m, double x);
ZeroRootSplit zero_root_factor(const MonicCubic& m, const Tolerance& t = {});

double coefficient_scale(const MonicCubic& m);
// sum of |terms| of p(x); the scale for residuals and free-term levels read at x
double term_magnitude(const MonicCubic& m, double x);
bool c_is_zero(const MonicCubic& m, const Tolerance& t);

}  // namespace cubiso
