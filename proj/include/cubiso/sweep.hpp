#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubiso/classify.hpp"
#include "cubiso/isolate.hpp"
#include "cubiso/sturm.hpp"

namespace cubiso {

struct SweepConfig {
    double a0 = 0, a1 = 0, b0 = 0, b1 = 0, c0 = 0, c1 = 0;
    double t_lo = 0, t_hi = 1;
    int samples = 100;
    double boundary_refine_tol = 1e-12;
    bool physical = false;
    bool verify = true;
    unsigned threads = 0;  // 0: hardware concurrency
    IsolateOptions isolate;

    MonicCubic at(double t) const { return {a0 + a1 * t, b0 + b1 * t, c0 + c1 * t}; }
    void validate() const;
};

SweepConfig rayleigh_preset();

enum class PhysicalStatus { Physical, Unphysical, Ambiguous };

struct PhysicalNote {
    PhysicalStatus status = PhysicalStatus::Physical;
    std::optional<PhysicalStatus> resolved;  // for ambiguous intervals, decided by the oracle root
    std::optional<double> root;
};

struct SweepSample {
    double t = 0;
    MonicCubic m;
    Classification cls;
    RootIsolation iso;
    std::optional<VerificationReport> verification;
    std::vector<PhysicalNote> physical;
    std::string error;
};

struct Boundary {
    double t = 0;
    std::string gap;       // the landmark identity, e.g. "c=c1"
    double residual = 0;   // gap value at t
    int from_figure = 0, from_case = 0, to_figure = 0, to_case = 0;
    bool classification_changed = false;
};

struct Anomaly {
    double t_lo = 0, t_hi = 0;
    std::string message;
};

struct SweepReport {
    std::vector<SweepSample> samples;
    std::vector<Boundary> boundaries;
    std::vector<Anomaly> anomalies;
    int verified = 0, failed = 0;
};

struct Gap {
    std::string identity;
    std::optional<double> value;
};
std::vector<Gap> landmark_gaps(const MonicCubic& m);

PhysicalNote physical_status(const Interval& iv, double q, const MonicCubic& m, const Tolerance& t = {});
SweepReport run_sweep(const SweepConfig& cfg);

}  // namespace cubiso
