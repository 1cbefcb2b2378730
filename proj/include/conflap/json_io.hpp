#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "conflap/bounds.hpp"
#include "conflap/errors.hpp"
#include "conflap/manifold_summary.hpp"
#include "conflap/step_potential.hpp"
#include "conflap/yamabe.hpp"

namespace conflap {

namespace jsonio {

// All floating-point output goes through one formatter: 17 significant
// digits round-trip doubles exactly, and a fixed format keeps identical
// configurations byte-identical.
inline std::string num(double v) {
    if (!std::isfinite(v)) throw solver_error("json output: non-finite number");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string num(int v) { return std::to_string(v); }

inline std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
        }
    }
    out += '"';
    return out;
}

/// Insertion-ordered JSON object builder.
class Object {
public:
    Object& field(const std::string& key, const std::string& raw) {
        if (!body_.empty()) body_ += ',';
        body_ += quote(key) + ":" + raw;
        return *this;
    }
    Object& number(const std::string& key, double v) { return field(key, num(v)); }
    Object& number(const std::string& key, int v) { return field(key, num(v)); }
    Object& boolean(const std::string& key, bool v) { return field(key, v ? "true" : "false"); }
    Object& text(const std::string& key, const std::string& v) { return field(key, quote(v)); }
    std::string str() const { return "{" + body_ + "}"; }

private:
    std::string body_;
};

inline std::string array_of(const std::vector<std::string>& raws) {
    std::string out = "[";
    for (std::size_t i = 0; i < raws.size(); ++i) {
        if (i) out += ',';
        out += raws[i];
    }
    return out + "]";
}

inline std::string number_array(const std::vector<double>& v) {
    std::vector<std::string> raw;
    raw.reserve(v.size());
    for (double x : v) raw.push_back(num(x));
    return array_of(raw);
}

} // namespace jsonio

// ---- parsing ----------------------------------------------------------

inline ManifoldSummary parse_manifold_summary(const nlohmann::json& j) {
    try {
        const auto& sc = j.at("scalar");
        ManifoldSummary s{Dim(j.at("n").get<int>()),
                          j.at("diameter").get<double>(),
                          j.at("volume").get<double>(),
                          j.at("ricciLowerBound").get<double>(),
                          ScalarCurvatureStats{sc.at("supPlus").get<double>(),
                                               sc.at("supMinus").get<double>(),
                                               sc.at("l1Plus").get<double>(),
                                               sc.at("l1Minus").get<double>()}};
        validate(s);
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("manifold summary JSON: ") + e.what());
    }
}

inline StepPotential parse_step_potential(const nlohmann::json& j) {
    try {
        StepPotential h{Dim(j.at("n").get<int>()), j.at("cPlus").get<double>(),
                        Radius(j.at("r1").get<double>()), j.at("cMinus").get<double>(),
                        Radius(j.at("r2").get<double>())};
        validate(h);
        return h;
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("step potential JSON: ") + e.what());
    }
}

inline RigidityVerdict parse_verdict(const std::string& s) {
    if (s == "conformal-sphere") return RigidityVerdict::conformal_sphere;
    if (s == "inconclusive") return RigidityVerdict::inconclusive;
    if (s == "not-applicable") return RigidityVerdict::not_applicable;
    throw validation_error("unknown rigidity verdict: " + s);
}

inline BoundsReport parse_bounds_report(const nlohmann::json& j) {
    try {
        BoundsReport r{parse_manifold_summary(j.at("summary")),
                       Hypothesis{j.at("hypothesis").at("epsilon").get<int>(),
                                  j.at("hypothesis").at("alpha").get<double>()},
                       j.at("a").get<double>(),
                       j.at("aOverD2").get<double>(),
                       j.at("beta").get<double>(),
                       j.at("r1").get<double>(),
                       j.at("r2").get<double>(),
                       j.at("rho1").get<double>(),
                       j.at("rho").get<double>(),
                       j.at("rhoConverged").get<bool>(),
                       j.at("mu1LowerBound").get<double>(),
                       j.at("lambdaLowerBound").get<double>(),
                       j.at("lambdaSphere").get<double>(),
                       parse_verdict(j.at("rigidity").get<std::string>()),
                       j.at("caveats").get<std::vector<std::string>>()};
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("bounds report JSON: ") + e.what());
    }
}

// ---- serialization ----------------------------------------------------

inline std::string to_json(const ManifoldSummary& s) {
    jsonio::Object scalar;
    scalar.number("supPlus", s.scalar.sup_plus)
        .number("supMinus", s.scalar.sup_minus)
        .number("l1Plus", s.scalar.l1_plus)
        .number("l1Minus", s.scalar.l1_minus);
    jsonio::Object o;
    o.number("n", s.n.n)
        .number("diameter", s.diameter)
        .number("volume", s.volume)
        .number("ricciLowerBound", s.ricci_lower)
        .field("scalar", scalar.str());
    return o.str();
}

inline std::string to_json(const StepPotential& h) {
    jsonio::Object o;
    o.number("n", h.n.n)
        .number("cPlus", h.c_plus)
        .number("r1", h.r1.r)
        .number("cMinus", h.c_minus)
        .number("r2", h.r2.r);
    return o.str();
}

inline std::string to_json(const BoundsReport& r) {
    jsonio::Object hyp;
    hyp.number("epsilon", r.hypothesis.epsilon).number("alpha", r.hypothesis.alpha);
    std::vector<std::string> caveats;
    for (const std::string& c : r.caveats) caveats.push_back(jsonio::quote(c));
    jsonio::Object o;
    o.field("summary", to_json(r.summary))
        .field("hypothesis", hyp.str())
        .number("a", r.a)
        .number("aOverD2", r.a_over_d_sq)
        .number("beta", r.beta)
        .number("r1", r.r1)
        .number("r2", r.r2)
        .number("rho1", r.rho1)
        .number("rho", r.rho)
        .boolean("rhoConverged", r.rho_converged)
        .number("mu1LowerBound", r.mu1_lower_bound)
        .number("lambdaLowerBound", r.lambda_lower_bound)
        .number("lambdaSphere", r.lambda_sphere)
        .text("rigidity", std::string(to_string(r.rigidity)))
        .field("caveats", jsonio::array_of(caveats));
    return o.str();
}

inline std::string to_json(const YamabeResult& y, bool with_minimizer) {
    std::vector<std::string> starts;
    for (const StartOutcome& s : y.starts) {
        jsonio::Object so;
        so.text("label", s.label)
            .number("value", s.value)
            .boolean("converged", s.converged)
            .number("iterations", s.iterations);
        starts.push_back(so.str());
    }
    jsonio::Object o;
    o.number("rho", y.rho)
        .number("iterations", y.iterations)
        .number("elResidual", y.el_residual)
        .boolean("converged", y.converged)
        .text("startLabel", y.start_label)
        .field("starts", jsonio::array_of(starts));
    if (with_minimizer) o.field("minimizer", jsonio::number_array(y.minimizer));
    return o.str();
}

} // namespace conflap
