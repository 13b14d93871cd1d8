#include "cubiso/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>

#include "cubiso/case_table.hpp"

namespace cubiso {

using nlohmann::json;

namespace {

std::string num(double v, int prec = 10) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    return buf;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string sign_summary(const SignPattern& sp) {
    std::vector<std::string> parts;
    if (sp.n_pos) parts.push_back(std::to_string(sp.n_pos) + " positive");
    if (sp.n_neg) parts.push_back(std::to_string(sp.n_neg) + " negative");
    if (sp.n_zero) parts.push_back(std::to_string(sp.n_zero) + " zero");
    if (sp.complex_pair) parts.push_back("complex pair");
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
    return out;
}

json endpoint_from(const Endpoint& e) { return e.value; }

}  // namespace

double parse_number(const std::string& s) {
    std::string t = trim(s);
    double v = 0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (t.empty() || ec != std::errc() || ptr != last || !std::isfinite(v))
        throw ParseError("not a finite number: '" + s + "'");
    return v;
}

CubicInput parse_coefficients(const std::vector<std::string>& tokens) {
    std::vector<double> v;
    for (const auto& tok : tokens) v.push_back(parse_number(tok));
    CubicInput in;
    if (v.size() == 3) {
        in.m = {v[0], v[1], v[2]};
    } else if (v.size() == 4) {
        GeneralCubic g{v[0], v[1], v[2], v[3]};
        try {
            in.m = monicize(g);
        } catch (const DegenerateLeadingCoefficient& e) {
            throw ParseError(e.what());
        }
        in.general = g;
    } else {
        throw ParseError("expected 3 (monic a b c) or 4 (A B C D) coefficients, got " + std::to_string(v.size()));
    }
    return in;
}

std::vector<CubicInput> parse_batch(std::istream& in) {
    std::vector<CubicInput> out;
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        std::vector<std::string> tokens;
        for (std::string tok; ss >> tok;) tokens.push_back(tok);
        if (tokens.empty()) continue;
        try {
            CubicInput ci = parse_coefficients(tokens);
            ci.line = n;
            out.push_back(ci);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(n) + ": " + e.what());
        }
    }
    return out;
}

void apply_sweep_setting(SweepConfig& cfg, const std::string& key, const std::string& value) {
    const std::string k = trim(key);
    auto d = [&] { return parse_number(value); };
    if (k == "a0") cfg.a0 = d();
    else if (k == "a1") cfg.a1 = d();
    else if (k == "b0") cfg.b0 = d();
    else if (k == "b1") cfg.b1 = d();
    else if (k == "c0") cfg.c0 = d();
    else if (k == "c1") cfg.c1 = d();
    else if (k == "t_lo") cfg.t_lo = d();
    else if (k == "t_hi") cfg.t_hi = d();
    else if (k == "boundary_refine_tol") cfg.boundary_refine_tol = d();
    else if (k == "samples") {
        double s = d();
        if (s != std::floor(s) || s < 0 || s > 1e9) throw ParseError("samples must be a non-negative integer");
        cfg.samples = static_cast<int>(s);
    } else if (k == "physical") {
        std::string v = trim(value);
        if (v == "true" || v == "1") cfg.physical = true;
        else if (v == "false" || v == "0") cfg.physical = false;
        else throw ParseError("physical must be true or false");
    } else {
        throw ParseError("unknown sweep key '" + k + "'");
    }
}

void parse_sweep_config(std::istream& in, SweepConfig& cfg) {
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        if (trim(line).empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("line " + std::to_string(n) + ": expected key=value");
        try {
            apply_sweep_setting(cfg, line.substr(0, eq), line.substr(eq + 1));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(n) + ": " + e.what());
        }
    }
}

json to_json(const Interval& iv) {
    return {{"lo", endpoint_from(iv.lo)},
            {"hi", endpoint_from(iv.hi)},
            {"lo_closed", iv.lo.closed},
            {"hi_closed", iv.hi.closed},
            {"lo_tag", to_string(iv.lo.provenance)},
            {"hi_tag", to_string(iv.hi.provenance)},
            {"multiplicity", iv.multiplicity}};
}

json to_json(const Classification& cls) {
    const SignPattern& sp = cls.signs;
    json count = {{"kind", count_name(cls.count.kind)}};
    if (cls.count.kind == CountKind::DoubleSimple) {
        count["double_at"] = cls.count.double_at;
        count["simple_at"] = cls.count.simple_at;
    }
    if (cls.count.kind == CountKind::TripleRoot) count["triple_at"] = cls.count.triple_at;
    return {{"count", count},
            {"signs",
             {{"n_pos", sp.n_pos},
              {"n_neg", sp.n_neg},
              {"n_zero", sp.n_zero},
              {"complex_pair", sp.complex_pair},
              {"table", table_name(sp.table_id)}}},
            {"zero_root", cls.zero_root}};
}

json to_json(const VerificationReport& rep) {
    json ivs = json::array();
    for (const auto& ic : rep.intervals)
        ivs.push_back({{"sturm_count", ic.sturm_count}, {"expected", ic.expected}, {"contains", ic.contains}});
    json roots = json::array();
    for (size_t i = 0; i < rep.roots.roots.size(); ++i)
        roots.push_back({{"value", rep.roots.roots[i].value},
                         {"multiplicity", rep.roots.roots[i].multiplicity},
                         {"residual", rep.roots.residuals[i]}});
    json j = {{"pass", rep.pass},
              {"intervals", ivs},
              {"roots", roots},
              {"counts_ok", rep.counts_ok},
              {"disjoint_ok", rep.disjoint_ok},
              {"count_kind_ok", rep.count_kind_ok},
              {"signs_ok", rep.signs_ok},
              {"bounds_ok", rep.bounds_ok},
              {"diagnostics", rep.diagnostics}};
    j["harness_ok"] = rep.harness_ok ? json(*rep.harness_ok) : json(nullptr);
    j["span"] = rep.span ? json(*rep.span) : json(nullptr);
    return j;
}

json document(const Classification& cls, const RootIsolation& ri, const std::optional<VerificationReport>& ver,
              const std::optional<GeneralCubic>& general) {
    json doc;
    doc["coefficients"] = {{"a", cls.m.a}, {"b", cls.m.b}, {"c", cls.m.c}};
    if (general) doc["input"] = {{"A", general->A}, {"B", general->B}, {"C", general->C}, {"D", general->D}};
    doc["figure"] = ri.figure_id;
    doc["case"] = ri.case_id;
    doc["citation"] = citation(ri.figure_id, ri.case_id);
    doc["regime"] = {{"kind", kind_name(cls.regime.kind)},
                     {"a_sign", static_cast<int>(cls.regime.a_sign)},
                     {"flags", cls.regime.boundary_flags}};
    json ivs = json::array();
    for (const auto& iv : ri.intervals) ivs.push_back(to_json(iv));
    doc["intervals"] = ivs;
    doc["bounds"] = {{"B_L", ri.bounds.B_L},
                     {"B_U", ri.bounds.B_U},
                     {"H", ri.bounds.H},
                     {"k", ri.bounds.k},
                     {"source", ri.bounds.source == BoundsMode::Figure ? "figure" : "generic"}};
    doc["harness_applied"] = ri.harness_applied;
    doc["classification"] = to_json(cls);
    doc["verification"] = ver ? to_json(*ver) : json(nullptr);
    return doc;
}

MonicCubic coefficients_from_json(const json& doc) {
    const auto& c = doc.at("coefficients");
    return {c.at("a").get<double>(), c.at("b").get<double>(), c.at("c").get<double>()};
}

RootIsolation isolation_from_json(const json& doc) {
    RootIsolation ri;
    try {
        ri.figure_id = doc.at("figure").get<int>();
        ri.case_id = doc.at("case").get<int>();
        ri.harness_applied = doc.value("harness_applied", false);
        const auto& b = doc.at("bounds");
        ri.bounds.B_L = b.at("B_L").get<double>();
        ri.bounds.B_U = b.at("B_U").get<double>();
        ri.bounds.H = b.value("H", 0.0);
        ri.bounds.k = b.value("k", 0);
        ri.bounds.source = b.value("source", "figure") == "figure" ? BoundsMode::Figure : BoundsMode::Generic;
        for (const auto& j : doc.at("intervals")) {
            Interval iv;
            iv.lo = {j.at("lo").get<double>(), j.at("lo_closed").get<bool>(),
                     parse_provenance(j.at("lo_tag").get<std::string>())};
            iv.hi = {j.at("hi").get<double>(), j.at("hi_closed").get<bool>(),
                     parse_provenance(j.at("hi_tag").get<std::string>())};
            iv.multiplicity = j.at("multiplicity").get<int>();
            ri.intervals.push_back(iv);
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed isolation document: ") + e.what());
    }
    return ri;
}

std::string_view physical_name(PhysicalStatus s) {
    switch (s) {
        case PhysicalStatus::Physical: return "physical";
        case PhysicalStatus::Unphysical: return "unphysical";
        case PhysicalStatus::Ambiguous: return "ambiguous";
    }
    return "?";
}

json sweep_json(const SweepReport& rep) {
    json samples = json::array();
    for (const auto& s : rep.samples) {
        json j = s.error.empty() ? document(s.cls, s.iso, s.verification) : json::object();
        j["t"] = s.t;
        if (!s.error.empty()) {
            j["coefficients"] = {{"a", s.m.a}, {"b", s.m.b}, {"c", s.m.c}};
            j["error"] = s.error;
        }
        if (!s.physical.empty()) {
            json ph = json::array();
            for (const auto& p : s.physical) {
                json pj = {{"status", physical_name(p.status)}};
                if (p.resolved) pj["resolved"] = physical_name(*p.resolved);
                if (p.root) pj["root"] = *p.root;
                ph.push_back(pj);
            }
            j["physical"] = ph;
        }
        samples.push_back(j);
    }
    json bounds = json::array();
    for (const auto& b : rep.boundaries)
        bounds.push_back({{"t", b.t},
                          {"identity", b.gap},
                          {"residual", b.residual},
                          {"from", citation(b.from_figure, b.from_case)},
                          {"to", citation(b.to_figure, b.to_case)},
                          {"classification_changed", b.classification_changed}});
    json anomalies = json::array();
    for (const auto& a : rep.anomalies) anomalies.push_back({{"t_lo", a.t_lo}, {"t_hi", a.t_hi}, {"message", a.message}});
    return {{"samples", samples},
            {"boundaries", bounds},
            {"anomalies", anomalies},
            {"verification", {{"passed", rep.verified}, {"failed", rep.failed}}}};
}

std::string format_cubic(const MonicCubic& m) {
    auto term = [](double v, const char* x) {
        std::string s = v < 0 ? " - " : " + ";
        return s + num(std::fabs(v)) + x;
    };
    return "x^3" + term(m.a, "x^2") + term(m.b, "x") + term(m.c, "");
}

std::string format_interval(const Interval& iv) {
    return std::string(iv.lo.closed ? "[" : "(") + num(iv.lo.value) + ", " + num(iv.hi.value) +
           (iv.hi.closed ? "]" : ")");
}

std::string render_text(const Classification& cls, const RootIsolation& ri, const std::optional<VerificationReport>& ver) {
    std::ostringstream os;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-11s%s\n", "cubic", format_cubic(cls.m).c_str());
    os << buf;
    std::string reg = std::string(kind_name(cls.regime.kind));
    if (cls.regime.a_sign != Sign::Zero) reg += cls.regime.a_sign == Sign::Neg ? " (a < 0)" : " (a > 0)";
    std::snprintf(buf, sizeof buf, "%-11s%s, %s\n", "regime", reg.c_str(), citation(ri.figure_id, ri.case_id).c_str());
    os << buf;
    std::string roots = std::string(count_name(cls.count.kind)) + "; " + sign_summary(cls.signs) + " (Table " +
                        std::string(table_name(cls.signs.table_id)) + ")";
    if (cls.signs.table_id == TableId::ZeroRootCase) roots = std::string(count_name(cls.count.kind)) + "; " + sign_summary(cls.signs) + " (zero root)";
    std::snprintf(buf, sizeof buf, "%-11s%s\n", "roots", roots.c_str());
    os << buf;
    std::string flags;
    for (const auto& f : cls.regime.boundary_flags) flags += (flags.empty() ? "" : " ") + f;
    std::snprintf(buf, sizeof buf, "%-11s%s\n", "flags", flags.empty() ? "-" : flags.c_str());
    os << buf;
    std::snprintf(buf, sizeof buf, "%-11s[%s, %s]%s\n", "bounds", num(ri.bounds.B_L).c_str(), num(ri.bounds.B_U).c_str(),
                  ri.harness_applied ? "  harness applied" : "");
    os << buf;
    os << "intervals\n";
    const int n = static_cast<int>(ri.intervals.size());
    for (int i = 0; i < n; ++i) {
        const Interval& iv = ri.intervals[i];
        std::string label = "x" + std::to_string(n - i);
        std::snprintf(buf, sizeof buf, "  %-4s%-40s %s .. %s", label.c_str(), format_interval(iv).c_str(),
                      to_string(iv.lo.provenance).c_str(), to_string(iv.hi.provenance).c_str());
        os << buf;
        if (iv.multiplicity > 1) os << "  (multiplicity " << iv.multiplicity << ")";
        os << "\n";
    }
    if (ver) {
        std::string rs;
        for (const auto& r : ver->roots.roots) {
            rs += (rs.empty() ? "" : ", ") + num(r.value);
            if (r.multiplicity > 1) rs += " (x" + std::to_string(r.multiplicity) + ")";
        }
        std::snprintf(buf, sizeof buf, "%-11s%s\n", "oracle", rs.empty() ? "-" : rs.c_str());
        os << buf;
        std::snprintf(buf, sizeof buf, "%-11s%s\n", "verify", ver->pass ? "pass" : "FAIL");
        os << buf;
        for (const auto& d : ver->diagnostics) os << "  " << d << "\n";
    }
    return os.str();
}

std::string render_sweep_text(const SweepReport& rep) {
    std::ostringstream os;
    char buf[256];
    os << "boundaries\n";
    for (const auto& b : rep.boundaries) {
        std::snprintf(buf, sizeof buf, "  t = %-20.14g %-10s %s -> %s\n", b.t, b.gap.c_str(),
                      citation(b.from_figure, b.from_case).c_str(), citation(b.to_figure, b.to_case).c_str());
        os << buf;
    }
    if (!rep.anomalies.empty()) {
        os << "anomalies\n";
        for (const auto& a : rep.anomalies) os << "  " << a.message << "\n";
    }
    std::snprintf(buf, sizeof buf, "samples    %zu, verified %d, failed %d\n", rep.samples.size(), rep.verified, rep.failed);
    os << buf;
    return os.str();
}

std::string sweep_series(const SweepReport& rep, char delim) {
    std::ostringstream os;
    const char d = delim;
    os << "t" << d << "a" << d << "b" << d << "c" << d << "figure" << d << "case" << d << "count";
    for (int k = 3; k >= 1; --k) os << d << "x" << k << "_lo" << d << "x" << k << "_hi";
    for (int k = 3; k >= 1; --k) os << d << "root" << k;
    os << "\n";
    for (const auto& s : rep.samples) {
        os << num(s.t, 15) << d << num(s.m.a, 15) << d << num(s.m.b, 15) << d << num(s.m.c, 15) << d
           << s.cls.regime.figure_id << d << s.cls.c_slot << d << count_name(s.cls.count.kind);
        const auto& ivs = s.iso.intervals;
        for (int k = 0; k < 3; ++k) {
            if (k < static_cast<int>(ivs.size()))
                os << d << num(ivs[k].lo.value, 15) << d << num(ivs[k].hi.value, 15);
            else
                os << d << d;
        }
        std::vector<double> rs;
        if (s.verification)
            for (const auto& r : s.verification->roots.roots) rs.push_back(r.value);
        for (int k = 0; k < 3; ++k) {
            os << d;
            if (k < static_cast<int>(rs.size())) os << num(rs[k], 15);
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace cubiso
