#include "cubiso/provenance.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <utility>

namespace cubiso {

namespace {

constexpr std::array<std::pair<Tag, std::string_view>, 24> kNames{{
    {Tag::Xi1, "xi1"},
    {Tag::Xi2, "xi2"},
    {Tag::Mu1, "mu1"},
    {Tag::Mu2, "mu2"},
    {Tag::Rho0, "rho0"},
    {Tag::Rho1, "rho1"},
    {Tag::Rho2, "rho2"},
    {Tag::Lambda1, "lambda1"},
    {Tag::Lambda2, "lambda2"},
    {Tag::NegA, "neg_a"},
    {Tag::NegAThird, "neg_a_third"},
    {Tag::SqrtNegB, "sqrt_neg_b"},
    {Tag::NegSqrtNegB, "neg_sqrt_neg_b"},
    {Tag::COverB, "c_over_b"},
    {Tag::Zero, "zero"},
    {Tag::BL, "B_L"},
    {Tag::BU, "B_U"},
    {Tag::CbrtClosedForm, "cbrt_closed_form"},
    {Tag::MinOf, "min_of"},
    {Tag::MaxOf, "max_of"},
    {Tag::Plus, "plus"},
    {Tag::Minus, "minus"},
    {Tag::HarnessLower, "harness_lower"},
    {Tag::HarnessUpper, "harness_upper"},
}};

bool is_binary(Tag t) {
    return t == Tag::MinOf || t == Tag::MaxOf || t == Tag::Plus || t == Tag::Minus;
}

double need(const std::optional<double>& v, Tag t) {
    if (!v) throw MissingLandmark("landmark " + std::string(tag_name(t)) + " is not defined here");
    return *v;
}

struct Parser {
    std::string_view s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && s[i] == ' ') ++i;
    }
    void expect(char ch) {
        skip();
        if (i >= s.size() || s[i] != ch)
            throw TagParseError("expected '" + std::string(1, ch) + "' in tag '" + std::string(s) + "'");
        ++i;
    }
    Provenance node() {
        skip();
        size_t start = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        std::string_view word = s.substr(start, i - start);
        auto it = std::find_if(kNames.begin(), kNames.end(), [&](auto& kv) { return kv.second == word; });
        if (it == kNames.end()) throw TagParseError("unknown tag '" + std::string(word) + "'");
        Provenance p(it->first);
        if (is_binary(p.tag)) {
            expect('(');
            p.args.push_back(node());
            expect(',');
            p.args.push_back(node());
            expect(')');
        }
        return p;
    }
};

}  // namespace

std::string_view tag_name(Tag t) {
    for (auto& [k, v] : kNames)
        if (k == t) return v;
    return "?";
}

std::string to_string(const Provenance& p) {
    std::string out(tag_name(p.tag));
    if (!p.args.empty()) {
        out += '(';
        for (size_t k = 0; k < p.args.size(); ++k) {
            if (k) out += ',';
            out += to_string(p.args[k]);
        }
        out += ')';
    }
    return out;
}

Provenance parse_provenance(std::string_view s) {
    Parser ps{s};
    Provenance p = ps.node();
    ps.skip();
    if (ps.i != s.size()) throw TagParseError("trailing characters in tag '" + std::string(s) + "'");
    return p;
}

bool uses_bound(const Provenance& p) {
    if (p.tag == Tag::BL || p.tag == Tag::BU) return true;
    return std::any_of(p.args.begin(), p.args.end(), uses_bound);
}

double eval_provenance(const Provenance& p, const TagContext& ctx) {
    const Landmarks& L = ctx.lm;
    const MonicCubic& m = ctx.m;
    switch (p.tag) {
        case Tag::Xi1: return need(L.xi1, p.tag);
        case Tag::Xi2: return need(L.xi2, p.tag);
        case Tag::Mu1: return need(L.mu1, p.tag);
        case Tag::Mu2: return need(L.mu2, p.tag);
        case Tag::Rho0: return L.rho0;
        case Tag::Rho1: return need(L.rho1, p.tag);
        case Tag::Rho2: return need(L.rho2, p.tag);
        case Tag::Lambda1: return need(L.lambda1, p.tag);
        case Tag::Lambda2: return need(L.lambda2, p.tag);
        case Tag::NegA: return -m.a;
        case Tag::NegAThird: return -m.a / 3.0;
        case Tag::SqrtNegB: return need(L.sqrt_neg_b, p.tag);
        case Tag::NegSqrtNegB: return -need(L.sqrt_neg_b, p.tag);
        case Tag::COverB: return need(L.c_over_b, p.tag);
        case Tag::Zero: return 0.0;
        case Tag::BL:
            if (!ctx.has_bounds) throw MissingBound("lower root bound not supplied");
            return ctx.B_L;
        case Tag::BU:
            if (!ctx.has_bounds) throw MissingBound("upper root bound not supplied");
            return ctx.B_U;
        case Tag::CbrtClosedForm:
            return -m.a / 3.0 + std::cbrt(m.a * m.a * m.a / 27.0 - m.c);
        case Tag::HarnessLower: return std::sqrt(3.0) * need(L.s, p.tag);
        case Tag::HarnessUpper: return 2.0 * need(L.s, p.tag);
        case Tag::MinOf:
            return std::min(eval_provenance(p.args.at(0), ctx), eval_provenance(p.args.at(1), ctx));
        case Tag::MaxOf:
            return std::max(eval_provenance(p.args.at(0), ctx), eval_provenance(p.args.at(1), ctx));
        case Tag::Plus:
            return eval_provenance(p.args.at(0), ctx) + eval_provenance(p.args.at(1), ctx);
        case Tag::Minus:
            return eval_provenance(p.args.at(0), ctx) - eval_provenance(p.args.at(1), ctx);
    }
    return 0.0;
}

}  // namespace cubiso
