#include "cubiso/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace cubiso {

void SweepConfig::validate() const {
    if (!(t_lo < t_hi)) throw Error("sweep requires t_lo < t_hi");
    if (samples < 2) throw Error("sweep requires at least 2 samples");
    if (!(boundary_refine_tol > 0)) throw Error("boundary_refine_tol must be positive");
    for (double v : {a0, a1, b0, b1, c0, c1, t_lo, t_hi})
        if (!std::isfinite(v)) throw Error("sweep coefficients must be finite");
}

SweepConfig rayleigh_preset() {
    SweepConfig cfg;
    cfg.a0 = -8;
    cfg.a1 = 0;
    cfg.b0 = 24;
    cfg.b1 = -16;
    cfg.c0 = -16;
    cfg.c1 = 16;
    cfg.t_lo = 0.0;
    cfg.t_hi = 0.75;
    cfg.samples = 200;
    return cfg;
}

std::vector<Gap> landmark_gaps(const MonicCubic& m) {
    const double a = m.a, b = m.b, c = m.c, a2 = a * a;
    const double c0 = -2.0 * a2 * a / 27.0 + a * b / 3.0;
    const double r = a2 - 3.0 * b;
    std::optional<double> w;
    if (r >= 0) w = (2.0 / 27.0) * std::pow(r, 1.5);
    std::vector<Gap> g;
    g.push_back({"c=c1", w ? std::optional(c - (c0 + *w)) : std::nullopt});
    g.push_back({"c=c2", w ? std::optional(c - (c0 - *w)) : std::nullopt});
    g.push_back({"c=c0", c - c0});
    g.push_back({"b=a^2/3", b - a2 / 3.0});
    g.push_back({"b=a^2/4", b - a2 / 4.0});
    g.push_back({"b=2a^2/9", b - 2.0 * a2 / 9.0});
    g.push_back({"b=-a^2/9", b + a2 / 9.0});
    g.push_back({"c=0", c});
    g.push_back({"c=ab", a * b - c});
    return g;
}

PhysicalNote physical_status(const Interval& iv, double q, const MonicCubic& m, const Tolerance& t) {
    const bool second = q > 0;
    const double cut = second ? 1.0 / q : INFINITY;
    auto admissible = [&](double x) { return (x > 0 && x <= 1.0) || (second && x >= cut); };
    auto side = [&](double x) { return admissible(x) ? PhysicalStatus::Physical : PhysicalStatus::Unphysical; };

    PhysicalNote note;
    const double lo = iv.lo.value, hi = iv.hi.value;
    bool straddles = (lo <= 0 && hi > 0) || (lo <= 1.0 && hi > 1.0) || (second && lo < cut && hi >= cut);
    if (!straddles) {
        note.status = side(0.5 * (lo + hi));
        if (iv.is_point()) note.status = side(lo);
        return note;
    }
    note.status = PhysicalStatus::Ambiguous;
    for (const auto& r : solve_all(m, t).roots) {
        if (iv.contains(r.value)) {
            note.root = r.value;
            note.resolved = side(r.value);
            break;
        }
    }
    return note;
}

namespace {

std::optional<double> gap_at(const SweepConfig& cfg, size_t k, double t) {
    return landmark_gaps(cfg.at(t))[k].value;
}

void process(const SweepConfig& cfg, SweepSample& s) {
    s.m = cfg.at(s.t);
    try {
        s.cls = classify(s.m, cfg.isolate.tol);
        s.iso = c_slot_intervals(s.cls, cfg.isolate);
        if (cfg.isolate.harness != HarnessMode::Off && s.cls.landmarks.s) {
            s.iso = cfg.isolate.harness == HarnessMode::Demo
                        ? harness_narrow_demo(s.iso, s.cls, cfg.isolate.tol)
                        : harness_narrow(s.iso, harness(s.m.a, s.m.b, cfg.isolate.tol));
        }
        if (cfg.verify) s.verification = verify(s.m, s.cls, s.iso, cfg.isolate.tol);
        if (cfg.physical)
            for (const auto& iv : s.iso.intervals) s.physical.push_back(physical_status(iv, s.t, s.m, cfg.isolate.tol));
    } catch (const Error& e) {
        s.error = e.what();
    }
}

}  // namespace

SweepReport run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    SweepReport rep;
    const int n = cfg.samples;
    rep.samples.resize(n);
    for (int i = 0; i < n; ++i)
        rep.samples[i].t = cfg.t_lo + (cfg.t_hi - cfg.t_lo) * static_cast<double>(i) / (n - 1);

    unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(n));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                for (int i = static_cast<int>(w); i < n; i += static_cast<int>(threads)) process(cfg, rep.samples[i]);
            });
    }

    for (const auto& s : rep.samples) {
        if (!s.verification) continue;
        (s.verification->pass ? rep.verified : rep.failed) += 1;
    }

    const size_t n_gaps = landmark_gaps(cfg.at(cfg.t_lo)).size();
    for (int i = 0; i + 1 < n; ++i) {
        const SweepSample &L = rep.samples[i], &R = rep.samples[i + 1];
        const bool changed = L.cls.regime.figure_id != R.cls.regime.figure_id || L.cls.c_slot != R.cls.c_slot ||
                             L.cls.count.kind != R.cls.count.kind;
        const auto gl = landmark_gaps(L.m), gr = landmark_gaps(R.m);
        bool any = false;
        for (size_t k = 0; k < n_gaps; ++k) {
            if (!gl[k].value || !gr[k].value) continue;
            double vl = *gl[k].value, vr = *gr[k].value;
            if (vl == 0 || vr == 0 || (vl > 0) == (vr > 0)) continue;
            double lo = L.t, hi = R.t;
            for (int it = 0; it < 200 && hi - lo > cfg.boundary_refine_tol; ++it) {
                double mid = 0.5 * (lo + hi);
                auto vm = gap_at(cfg, k, mid);
                if (!vm) break;
                if (*vm == 0) {
                    lo = hi = mid;
                    break;
                }
                ((*vm > 0) == (vl > 0) ? lo : hi) = mid;
            }
            Boundary b;
            b.t = 0.5 * (lo + hi);
            b.gap = gl[k].identity;
            b.residual = gap_at(cfg, k, b.t).value_or(NAN);
            b.from_figure = L.cls.regime.figure_id;
            b.from_case = L.cls.c_slot;
            b.to_figure = R.cls.regime.figure_id;
            b.to_case = R.cls.c_slot;
            b.classification_changed = changed;
            rep.boundaries.push_back(b);
            any = true;
        }
        if (changed && !any)
            rep.anomalies.push_back({L.t, R.t, "classification changed from " + citation(L.cls.regime.figure_id, L.cls.c_slot) +
                                                   " to " + citation(R.cls.regime.figure_id, R.cls.c_slot) +
                                                   " without a landmark gap sign change"});
    }
    std::sort(rep.boundaries.begin(), rep.boundaries.end(), [](const Boundary& x, const Boundary& y) { return x.t < y.t; });
    return rep;
}

}  // namespace cubiso
