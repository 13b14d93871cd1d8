#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cubiso/cubiso.hpp"

using namespace cubiso;
using nlohmann::json;

namespace {

enum class Command { Classify, Isolate, Verify };

struct Globals {
    bool as_json = false;
    double tol_rel = 1e-10;
    double tol_abs = 1e-12;
    bool physical = false;
    std::string harness = "min";
    std::string bounds = "figure";

    IsolateOptions options() const {
        IsolateOptions opt;
        opt.tol = {tol_rel, tol_abs};
        opt.harness = harness == "off" ? HarnessMode::Off : harness == "demo" ? HarnessMode::Demo : HarnessMode::Min;
        opt.bounds = bounds == "generic" ? BoundsMode::Generic : BoundsMode::Figure;
        return opt;
    }
};

struct Outcome {
    json doc;
    std::string text;
    bool failed = false;
};

Outcome run_one(Command cmd, const CubicInput& in, const Globals& g) {
    const IsolateOptions opt = g.options();
    Classification cls = classify(in.m, opt.tol);
    RootIsolation ri = isolate(in.m, opt);
    std::optional<VerificationReport> ver;
    if (cmd == Command::Verify) ver = verify(in.m, cls, ri, opt.tol);
    Outcome o;
    o.doc = document(cls, ri, ver, in.general);
    o.failed = ver && !ver->pass;
    if (cmd == Command::Classify) {
        std::ostringstream os;
        std::string text = render_text(cls, ri);
        // classification view omits the interval listing
        os << text.substr(0, text.find("bounds"));
        o.text = os.str();
    } else {
        o.text = render_text(cls, ri, ver);
    }
    if (cmd == Command::Classify) o.doc.erase("verification");
    return o;
}

int run_cubics(Command cmd, const std::vector<CubicInput>& inputs, const Globals& g, bool batch) {
    std::vector<Outcome> out(inputs.size());
    std::vector<std::string> errors(inputs.size());
    {
        const unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                                  static_cast<unsigned>(inputs.size())));
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                for (size_t i = w; i < inputs.size(); i += threads) {
                    try {
                        out[i] = run_one(cmd, inputs[i], g);
                    } catch (const Error& e) {
                        errors[i] = e.what();
                    }
                }
            });
    }
    bool failed = false;
    json results = json::array();
    for (size_t i = 0; i < inputs.size(); ++i) {
        if (!errors[i].empty()) {
            failed = true;
            out[i].doc = {{"coefficients", {{"a", inputs[i].m.a}, {"b", inputs[i].m.b}, {"c", inputs[i].m.c}}},
                          {"error", errors[i]}};
            out[i].text = "error: " + errors[i] + "\n";
        }
        failed = failed || out[i].failed;
        if (batch) out[i].doc["line"] = inputs[i].line;
        results.push_back(out[i].doc);
    }
    if (g.as_json) {
        std::cout << (batch ? json{{"results", results}} : results.at(0)).dump(2) << "\n";
    } else {
        for (size_t i = 0; i < out.size(); ++i) {
            if (batch) std::cout << "# line " << inputs[i].line << "\n";
            std::cout << out[i].text;
            if (batch && i + 1 < out.size()) std::cout << "\n";
        }
    }
    return failed ? 1 : 0;
}

int run_sweep_cmd(SweepConfig cfg, const Globals& g, const std::string& series, char delim) {
    cfg.physical = cfg.physical || g.physical;
    cfg.isolate = g.options();
    SweepReport rep = run_sweep(cfg);
    if (!series.empty()) {
        std::ofstream f(series);
        if (!f) throw ParseError("cannot write series file '" + series + "'");
        f << sweep_series(rep, delim);
    }
    if (g.as_json)
        std::cout << sweep_json(rep).dump(2) << "\n";
    else
        std::cout << render_sweep_text(rep);
    return rep.failed ? 1 : 0;
}

int demo_rayleigh(const Globals& g, const std::vector<double>& qs) {
    SweepConfig cfg = rayleigh_preset();
    cfg.physical = true;
    cfg.isolate = g.options();
    SweepReport rep = run_sweep(cfg);
    json picks = json::array();
    std::ostringstream text;
    text << "Rayleigh cubic x^3 - 8x^2 + 8(3 - 2q)x - 16(1 - q), q in [0, 0.75)\n";
    text << render_sweep_text(rep) << "\n";
    bool failed = rep.failed > 0;
    for (double q : qs) {
        MonicCubic m = cfg.at(q);
        Classification cls = classify(m, cfg.isolate.tol);
        RootIsolation ri = isolate(m, cfg.isolate);
        VerificationReport ver = verify(m, cls, ri, cfg.isolate.tol);
        failed = failed || !ver.pass;
        json doc = document(cls, ri, ver);
        doc["q"] = q;
        json ph = json::array();
        text << "q = " << q << "\n" << render_text(cls, ri, ver);
        for (size_t i = 0; i < ri.intervals.size(); ++i) {
            PhysicalNote note = physical_status(ri.intervals[i], q, m, cfg.isolate.tol);
            json pj = {{"status", physical_name(note.status)}};
            text << "  x" << ri.intervals.size() - i << " " << physical_name(note.status);
            if (note.resolved) {
                pj["resolved"] = physical_name(*note.resolved);
                pj["root"] = *note.root;
                text << " -> " << physical_name(*note.resolved) << " (root " << *note.root << ")";
            }
            text << "\n";
            ph.push_back(pj);
        }
        doc["physical"] = ph;
        picks.push_back(doc);
        text << "\n";
    }
    if (g.as_json) {
        json j = sweep_json(rep);
        j.erase("samples");
        j["examples"] = picks;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text.str();
    }
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cubic root classification and isolation with closed-form landmarks"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.as_json, "Machine-readable output");
    app.add_option("--tol-rel", g.tol_rel, "Relative comparison tolerance")->check(CLI::PositiveNumber);
    app.add_option("--tol-abs", g.tol_abs, "Absolute tolerance floor")->check(CLI::NonNegativeNumber);
    app.add_flag("--physical", g.physical, "Annotate intervals with the Rayleigh admissibility filter");
    app.add_option("--harness", g.harness, "Harness narrowing")->check(CLI::IsMember({"min", "off", "demo"}));
    app.add_option("--bounds", g.bounds, "Outer root bounds")->check(CLI::IsMember({"figure", "generic"}));

    std::map<std::string, Command> cubic_cmds{{"classify", Command::Classify},
                                              {"isolate", Command::Isolate},
                                              {"verify", Command::Verify}};
    std::map<std::string, std::vector<std::string>> coeffs;
    std::map<std::string, std::string> batch;
    std::map<std::string, CLI::App*> subs;
    for (auto& [name, cmd] : cubic_cmds) {
        auto* sub = app.add_subcommand(name, name == "classify" ? "Classify a cubic"
                                             : name == "isolate" ? "Isolate the real roots of a cubic"
                                                                 : "Isolate and verify against the Sturm oracle");
        sub->fallthrough();
        sub->add_option("coefficients", coeffs[name], "a b c (monic) or A B C D (general)");
        sub->add_option("--batch", batch[name], "File with one cubic per line");
        subs[name] = sub;
    }

    SweepConfig cfg;
    std::string config_file, series_file, delim = ",";
    bool use_preset = false;
    auto* sweep = app.add_subcommand("sweep", "One-parameter sweep a(t)=a0+a1 t, b(t)=b0+b1 t, c(t)=c0+c1 t");
    sweep->fallthrough();
    sweep->add_flag("--rayleigh", use_preset, "Start from the Rayleigh preset");
    sweep->add_option("--config", config_file, "key=value configuration file");
    std::map<std::string, std::string> overrides;
    for (const char* key : {"a0", "a1", "b0", "b1", "c0", "c1", "t_lo", "t_hi", "samples", "boundary_refine_tol"}) {
        std::string flag = std::string("--") + key;
        std::replace(flag.begin() + 2, flag.end(), '_', '-');
        sweep->add_option(flag, overrides[key]);
    }
    sweep->add_option("--series", series_file, "Write the sample series as delimiter-separated values");
    sweep->add_option("--delim", delim, "Series delimiter")->check([](const std::string& s) {
        return s.size() == 1 ? std::string() : std::string("delimiter must be one character");
    });
    sweep->add_option("--threads", cfg.threads, "Worker threads (0: all cores)");

    std::vector<double> demo_q{0.1, 0.3, 0.45, 0.55, 0.65};
    auto* demo = app.add_subcommand("demo-rayleigh", "Rayleigh cubic regime walk");
    demo->fallthrough();
    demo->add_option("--q", demo_q, "Parameter values to isolate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        for (auto& [name, cmd] : cubic_cmds) {
            if (!subs[name]->parsed()) continue;
            std::vector<CubicInput> inputs;
            bool is_batch = !batch[name].empty();
            if (is_batch) {
                std::ifstream f(batch[name]);
                if (!f) throw ParseError("cannot read batch file '" + batch[name] + "'");
                inputs = parse_batch(f);
            }
            if (!coeffs[name].empty()) inputs.push_back(parse_coefficients(coeffs[name]));
            if (inputs.empty()) throw ParseError("no coefficients given");
            return run_cubics(cmd, inputs, g, is_batch);
        }
        if (sweep->parsed()) {
            SweepConfig c = use_preset ? rayleigh_preset() : SweepConfig{};
            c.threads = cfg.threads;
            if (!config_file.empty()) {
                std::ifstream f(config_file);
                if (!f) throw ParseError("cannot read config file '" + config_file + "'");
                parse_sweep_config(f, c);
            }
            for (auto& [key, value] : overrides)
                if (!value.empty()) apply_sweep_setting(c, key, value);
            try {
                c.validate();
            } catch (const Error& e) {
                throw ParseError(e.what());
            }
            return run_sweep_cmd(c, g, series_file, delim[0]);
        }
        if (demo->parsed()) return demo_rayleigh(g, demo_q);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
