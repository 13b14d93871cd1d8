#include "cubiso/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cubiso {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double oracle_scale(const MonicCubic& m) {
    return std::max({1.0, std::fabs(m.a), std::fabs(m.b), std::fabs(m.c)});
}

// -rem(num / den) for descending coefficient vectors
Poly neg_rem(const Poly& num, const Poly& den) {
    Poly r = num;
    const size_t dn = den.size();
    for (size_t i = 0; i + dn <= r.size(); ++i) {
        double q = r[i] / den[0];
        for (size_t j = 0; j < dn; ++j) r[i + j] -= q * den[j];
    }
    Poly out(r.end() - static_cast<long>(dn - 1), r.end());
    for (double& v : out) v = -v;
    return out;
}

int sgn(double v) { return (v > 0) - (v < 0); }

double magnitude(const MonicCubic& m, double x) {
    return std::fabs(x * x * x) + std::fabs(m.a * x * x) + std::fabs(m.b * x) + std::fabs(m.c);
}

bool root_like(const MonicCubic& m, double x, double ulps = 8.0) {
    return std::fabs(eval_poly({1.0, m.a, m.b, m.c}, x)) <= ulps * kEps * magnitude(m, x);
}

// forward error estimate for a computed simple root
double root_error(const MonicCubic& m, double x) {
    const double d = std::fabs((3.0 * x + 2.0 * m.a) * x + m.b);
    const double floor = 4 * kEps * std::max(1.0, std::fabs(x));
    if (d == 0) return std::sqrt(kEps) * std::max(1.0, std::fabs(x));
    return std::max(floor, 16 * kEps * magnitude(m, x) / d);
}

double nudge(const MonicCubic& m, double x, double dir) {
    double step = 4 * kEps * std::max(1.0, std::fabs(x));
    for (int i = 0; i < 60 && root_like(m, x); ++i) {
        x += dir * step;
        step *= 2;
    }
    return x;
}

// root in (lo, hi]
double bisect(const Poly& f, double lo, double hi) {
    if (eval_poly(f, hi) == 0) return hi;
    double flo = eval_poly(f, lo);
    for (int i = 0; i < 2000; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        double fm = eval_poly(f, mid);
        if (fm == 0) return mid;
        if (flo == 0 || sgn(fm) == sgn(flo)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double newton_polish(const MonicCubic& m, double x) {
    const Poly p{1.0, m.a, m.b, m.c}, dp{3.0, 2.0 * m.a, m.b};
    for (int i = 0; i < 3; ++i) {
        double d = eval_poly(dp, x);
        if (d == 0) break;
        double nx = x - eval_poly(p, x) / d;
        if (!(std::fabs(eval_poly(p, nx)) < std::fabs(eval_poly(p, x)))) break;
        x = nx;
    }
    return x;
}

void partition(const SturmChain& ch, const Poly& f, double lo, double hi, int count, int depth,
               std::vector<double>& out) {
    if (count <= 0) return;
    if (depth > 200) throw NonConvergence("Sturm partition did not separate the roots");
    if (count == 1) {
        out.push_back(bisect(f, lo, hi));
        return;
    }
    double mid = 0.5 * (lo + hi);
    for (int i = 0; i < 60 && root_like(ch.m, mid); ++i) mid = lo + 0.61803398875 * (mid - lo);
    int left = count_roots_in(ch, lo, mid);
    partition(ch, f, lo, mid, left, depth + 1, out);
    partition(ch, f, mid, hi, count - left, depth + 1, out);
}

}  // namespace

int RootReport::total() const {
    int n = 0;
    for (const auto& r : roots) n += r.multiplicity;
    return n;
}

double eval_poly(const Poly& p, double x) {
    double v = 0;
    for (double c : p) v = v * x + c;
    return v;
}

SturmChain sturm_chain(const MonicCubic& m, const Tolerance& t) {
    SturmChain ch;
    ch.m = m;
    Poly p0{1.0, m.a, m.b, m.c};
    Poly p1{3.0, 2.0 * m.a, m.b};
    Poly p2 = neg_rem(p0, p1);
    ch.p = {p0, p1};

    const double lead_scale = std::max(2.0 * m.a * m.a / 9.0, 2.0 * std::fabs(m.b) / 3.0);
    if (t.near_zero(p2[0], lead_scale)) {
        ch.p2_leading_vanishes = true;
        if (t.near_zero(p2[1], magnitude(m, -m.a / 3.0))) return ch;
        ch.p.push_back({p2[1]});
        return ch;
    }
    ch.p.push_back(p2);
    Poly p3 = neg_rem(p1, p2);
    // near a double root p3 ~ 3 sqrt(3) dc / s for a free-term offset dc; compare dc with p at the p2 root
    const double x = -p2[1] / p2[0];
    const double s = std::sqrt(1.5 * p2[0]);
    if (t.near_zero(p3[0] * s / (3.0 * std::sqrt(3.0)), magnitude(m, x)) &&
        t.near_zero(eval_poly(p0, x), magnitude(m, x))) {
        ch.p3_vanishes = true;
        return ch;
    }
    ch.p.push_back(p3);
    return ch;
}

int sign_variations(const SturmChain& ch, double x) {
    int v = 0, prev = 0;
    for (const auto& q : ch.p) {
        int s = sgn(eval_poly(q, x));
        if (s == 0) continue;
        if (prev && s != prev) ++v;
        prev = s;
    }
    return v;
}

int sign_variations_at_infinity(const SturmChain& ch, bool positive) {
    int v = 0, prev = 0;
    for (const auto& q : ch.p) {
        int s = sgn(q[0]);
        if (!positive && (q.size() - 1) % 2 == 1) s = -s;
        if (s == 0) continue;
        if (prev && s != prev) ++v;
        prev = s;
    }
    return v;
}

int count_roots_in(const SturmChain& ch, double lo, double hi) {
    lo = nudge(ch.m, lo, -1.0);
    hi = nudge(ch.m, hi, +1.0);
    return sign_variations(ch, lo) - sign_variations(ch, hi);
}

RootReport solve_all(const MonicCubic& m, const Tolerance& t) {
    RootReport rep;
    SturmChain ch = sturm_chain(m, t);
    const Poly p0 = ch.p[0];

    if (ch.p.size() == 2) {
        // p1 divides p0: triple root at the vertex of p1
        rep.roots.push_back({-m.a / 3.0, 3});
    } else if (ch.p3_vanishes) {
        // gcd(p0, p1) = p2 is linear: double root there, simple root by the root sum
        const Poly& g = ch.p[2];
        double d = -g[1] / g[0];
        double s = newton_polish(m, -m.a - 2.0 * d);
        rep.roots.push_back({d, 2});
        rep.roots.push_back({s, 1});
    } else {
        const int n = sign_variations_at_infinity(ch, false) - sign_variations_at_infinity(ch, true);
        const double R = 1.0 + oracle_scale(m);
        std::vector<double> xs;
        partition(ch, p0, -R, R, n, 0, xs);
        for (double x : xs) rep.roots.push_back({newton_polish(m, x), 1});
    }
    std::sort(rep.roots.begin(), rep.roots.end(), [](const Root& x, const Root& y) { return x.value < y.value; });
    rep.distinct = static_cast<int>(rep.roots.size());
    for (auto& r : rep.roots) r.value += 0.0;
    for (const auto& r : rep.roots) rep.residuals.push_back(std::fabs(eval_poly(p0, r.value)));
    return rep;
}

VerificationReport verify(const MonicCubic& m, const Classification& cls, const RootIsolation& ri,
                          const Tolerance& t) {
    VerificationReport rep;
    auto fail = [&](bool& flag, const std::string& msg) {
        flag = false;
        rep.diagnostics.push_back(msg);
    };
    const SturmChain ch = sturm_chain(m, t);
    rep.roots = solve_all(m, t);
    const auto& roots = rep.roots.roots;

    for (size_t i = 0; i < ri.intervals.size(); ++i) {
        const Interval& iv = ri.intervals[i];
        IntervalCheck ic;
        ic.expected = iv.multiplicity;
        const std::string name = "interval " + std::to_string(i);
        if (iv.is_point()) {
            const double x = iv.lo.value;
            const double delta = 1e-6 * std::max(1.0, std::fabs(x));
            int mult = 0, near = 0;
            for (const auto& r : roots)
                if (std::fabs(r.value - x) <= delta) {
                    mult += r.multiplicity;
                    ++near;
                }
            ic.sturm_count = mult;
            ic.contains = near > 0;
            if (mult != iv.multiplicity)
                fail(rep.counts_ok, name + ": point interval carries multiplicity " + std::to_string(iv.multiplicity) +
                                        ", oracle finds " + std::to_string(mult));
            const double mag = std::fabs(x * x * x) + std::fabs(m.a * x * x) + std::fabs(m.b * x) + std::fabs(m.c);
            if (std::fabs(eval_poly(ch.p[0], x)) > 1e-8 * std::max(1.0, mag))
                fail(rep.counts_ok, name + ": point interval residual too large");
        } else {
            // closed landmark endpoints carry the rounding of a and sqrt(a^2/3 - b)
            const double lm_err =
                32 * kEps * (std::fabs(m.a) + std::sqrt(std::max(m.a * m.a / 3.0, std::fabs(m.b))));
            const double lo = iv.lo.closed ? iv.lo.value - lm_err - 4 * kEps * std::fabs(iv.lo.value) : iv.lo.value;
            const double hi = iv.hi.closed ? iv.hi.value + lm_err + 4 * kEps * std::fabs(iv.hi.value) : iv.hi.value;
            ic.sturm_count = count_roots_in(ch, lo, hi);
            int inside = 0;
            for (const auto& r : roots) {
                const double e = root_error(m, r.value);
                inside += r.value >= iv.lo.value - e && r.value <= iv.hi.value + e;
            }
            for (const Endpoint* ep : {&iv.lo, &iv.hi})
                if (!ep->closed && root_like(m, ep->value, 64.0))
                    fail(rep.counts_ok, name + ": open endpoint " + std::to_string(ep->value) + " is a root");
            ic.contains = inside == 1;
            if (ic.sturm_count != 1)
                fail(rep.counts_ok, name + ": Sturm count " + std::to_string(ic.sturm_count) + ", expected 1");
            if (inside != 1)
                fail(rep.counts_ok, name + ": contains " + std::to_string(inside) + " oracle roots");
        }
        rep.intervals.push_back(ic);
    }
    for (size_t i = 1; i < ri.intervals.size(); ++i) {
        const Interval &x = ri.intervals[i - 1], &y = ri.intervals[i];
        if (x.hi.value > y.lo.value) fail(rep.disjoint_ok, "intervals " + std::to_string(i - 1) + " and " +
                                                               std::to_string(i) + " overlap");
    }
    if (static_cast<int>(ri.intervals.size()) != rep.roots.distinct)
        fail(rep.counts_ok, "emitted " + std::to_string(ri.intervals.size()) + " intervals for " +
                                std::to_string(rep.roots.distinct) + " distinct oracle roots");

    const int total = rep.roots.total();
    if (total != cls.count.real_with_multiplicity())
        fail(rep.count_kind_ok, "root count " + std::string(count_name(cls.count.kind)) + " but oracle finds " +
                                    std::to_string(total) + " real roots with multiplicity");

    SignPattern oracle;
    const double zero_tol = t.abs + t.rel * std::max({std::fabs(m.a), std::fabs(m.b), 1.0});
    for (const auto& r : roots) {
        if (std::fabs(r.value) <= zero_tol)
            oracle.n_zero += r.multiplicity;
        else
            (r.value > 0 ? oracle.n_pos : oracle.n_neg) += r.multiplicity;
    }
    oracle.complex_pair = total < 3;
    if (!oracle.same_signs(cls.signs))
        fail(rep.signs_ok, "sign pattern (+" + std::to_string(cls.signs.n_pos) + ", -" +
                               std::to_string(cls.signs.n_neg) + ", 0x" + std::to_string(cls.signs.n_zero) +
                               ") disagrees with oracle (+" + std::to_string(oracle.n_pos) + ", -" +
                               std::to_string(oracle.n_neg) + ", 0x" + std::to_string(oracle.n_zero) + ")");

    if (total == 3) {
        const double span = roots.back().value - roots.front().value;
        rep.span = span;
        const double r = m.a * m.a / 3.0 - m.b;
        const double s = std::sqrt(std::max(0.0, r));
        // s carries the rounding of its radicand; merged roots carry the radicand tolerance too
        const double rs = std::max(m.a * m.a / 3.0, std::fabs(m.b));
        const double ds = roots.size() < 3 ? 2.0 * std::sqrt(t.abs + t.rel * rs) : std::sqrt(8 * kEps * rs);
        const double tol = 1e-9 * std::max(1.0, s) + ds;
        bool ok = std::sqrt(3.0) * s - tol <= span && span <= 2.0 * s + tol;
        rep.harness_ok = ok;
        if (!ok) rep.diagnostics.push_back("harness violated: span " + std::to_string(span));
    }

    for (const auto& r : roots) {
        const double tol = 1e-12 * std::max(1.0, std::fabs(r.value));
        if (r.value < ri.bounds.B_L - tol || r.value > ri.bounds.B_U + tol)
            fail(rep.bounds_ok, "root " + std::to_string(r.value) + " outside [B_L, B_U]");
    }

    rep.pass = rep.counts_ok && rep.disjoint_ok && rep.count_kind_ok && rep.signs_ok && rep.bounds_ok &&
               rep.harness_ok.value_or(true);
    return rep;
}

}  // namespace cubiso
