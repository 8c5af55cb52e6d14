#pragma once

// Command implementations behind the hyperinv executable. Each command
// returns a JSON result document and an exit code; nothing here touches
// stdout, so the commands are testable in process.
//
// Exit codes:
//   0  success
//   1  internal or numeric failure
//   2  parse / usage error
//   3  degenerate input (curve or model not squarefree, a_1 = a_g = 0, b0 = 0)
//   4  not in L_g (no extra involution on the exact path)
//   5  model precondition failed

#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperinv/classify.hpp"
#include "hyperinv/io.hpp"
#include "hyperinv/models.hpp"

namespace hyperinv::cli {

enum exit_code : int {
    exit_ok = 0,
    exit_internal = 1,
    exit_usage = 2,
    exit_degenerate = 3,
    exit_not_in_locus = 4,
    exit_precondition = 5,
};

constexpr int exit_code_for(errc e) noexcept
{
    switch (e) {
    case errc::parse_error:
    case errc::invalid_argument:
    case errc::invalid_comparison:
    case errc::not_applicable: return exit_usage;
    case errc::degenerate_curve:
    case errc::degenerate_model:
    case errc::degenerate_locus:
    case errc::not_normalizable: return exit_degenerate;
    case errc::not_in_locus: return exit_not_in_locus;
    case errc::precondition_failed: return exit_precondition;
    default: return exit_internal;
    }
}

struct Options {
    bool numeric = false;
    double tol = 1e-9;
};

struct Result {
    ordered_json document;
    int exit_code = exit_ok;
    std::string diagnostic;  // for stderr; empty on success
};

namespace detail {

inline std::string format_double(double x)
{
    if (x == 0.0) x = 0.0;  // drop the sign of -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

inline ordered_json complex_json(Complex z)
{
    return ordered_json{{"re", format_double(z.real())}, {"im", format_double(z.imag())}};
}

inline ordered_json rationals(const std::vector<Rational>& v)
{
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
}

inline ordered_json poly_json(const Poly<Rational>& p)
{
    return rationals(std::vector<Rational>(p.coeffs().begin(), p.coeffs().end()));
}

inline ordered_json numeric_tuples_json(const std::vector<NumericTuple>& tuples)
{
    ordered_json a = ordered_json::array();
    for (const auto& t : tuples) {
        ordered_json u = ordered_json::array();
        for (Complex z : t.u) u.push_back(complex_json(z));
        a.push_back(ordered_json{{"involution",
                                  {{"a", complex_json(t.involution.a)},
                                   {"b", complex_json(t.involution.b)},
                                   {"c", complex_json(t.involution.c)}}},
                                 {"u", std::move(u)}});
    }
    return a;
}

inline ordered_json header(const std::string& command)
{
    return ordered_json{{"command", command}, {"status", "ok"}};
}

}  // namespace detail

/// Runs body; library errors become an error document with the mapped exit code.
inline Result guarded(const std::string& command, const std::function<Result()>& body)
{
    try {
        return body();
    } catch (const error& e) {
        ordered_json doc{{"command", command},
                         {"status", "error"},
                         {"error", std::string(to_string(e.code()))},
                         {"message", e.what()}};
        return {std::move(doc), exit_code_for(e.code()), std::string(to_string(e.code())) + ": " + e.what()};
    }
}

inline Result cmd_invariants(const CurveDocument& input, const Options& opt = {})
{
    return guarded("invariants", [&] {
        Result r{detail::header("invariants"), exit_ok, {}};
        const HyperellipticCurve curve = input.curve();
        ordered_json& doc = r.document;
        doc["genus"] = curve.genus();
        std::optional<error> exact_failure;
        try {
            const EvenForm<Rational> form = normalize_to_even(curve);
            const auto u = invariants_from_even(form);
            doc["exact"] = true;
            doc["invariants"] = detail::rationals(u.values());
            doc["even_form"] = {{"shift", form.shift.to_string()},
                                {"leading_scale", form.leading_scale.to_string()},
                                {"b0", form.b0.to_string()},
                                {"c", detail::rationals(form.c)}};
        } catch (const error& e) {
            if (!opt.numeric || e.code() != errc::not_in_locus) throw;
            exact_failure = e;
        }
        if (opt.numeric) {
            auto tuples = numeric_invariant_tuples(even_degree_model(curve), opt.tol);
            if (exact_failure && tuples.empty()) throw *exact_failure;
            if (exact_failure) {
                doc["status"] = "numeric";
                doc["exact"] = false;
            }
            doc["numeric_invariants"] = detail::numeric_tuples_json(tuples);
        }
        return r;
    });
}

inline Result cmd_classify(const CurveDocument& input, const Options& opt = {})
{
    return guarded("classify", [&] {
        Result r{detail::header("classify"), exit_ok, {}};
        const HyperellipticCurve curve = input.curve();
        const ClassificationReport report = classify(curve, {opt.numeric, opt.tol});
        ordered_json& doc = r.document;
        doc["genus"] = report.genus;
        ordered_json tuples = ordered_json::array();
        for (const auto& u : report.invariant_tuples) tuples.push_back(detail::rationals(u.values()));
        doc["invariant_tuples"] = std::move(tuples);
        if (opt.numeric) doc["numeric_tuples"] = detail::numeric_tuples_json(report.numeric_tuples);
        doc["v4_embedded"] = report.v4_embedded;
        if (report.factor_sign) doc["factor_sign"] = std::string(to_string(*report.factor_sign));
        if (report.d6) doc["d6"] = report.d6->to_string();
        doc["notes"] = report.notes;
        return r;
    });
}

inline Result cmd_isomorphic(const CurveDocument& a, const CurveDocument& b)
{
    return guarded("isomorphic", [&] {
        Result r{detail::header("isomorphic"), exit_ok, {}};
        const HyperellipticCurve ca = a.curve();
        const HyperellipticCurve cb = b.curve();
        const bool iso = curves_isomorphic_with_involution(ca, cb);
        r.document["isomorphic"] = iso;
        r.document["invariants_a"] = detail::rationals(curve_invariants(ca).values());
        r.document["invariants_b"] = detail::rationals(curve_invariants(cb).values());
        return r;
    });
}

struct ModelArgs {
    std::optional<int> genus;
    std::vector<Rational> u;
    ModelFamily family = ModelFamily::generic_v4;
    std::optional<Rational> w;
};

inline Result cmd_model(const ModelArgs& args, const Options& opt = {})
{
    return guarded("model", [&] {
        Result r{detail::header("model"), exit_ok, {}};
        RationalModelRequest req;
        req.family = args.family;
        req.u = args.u;
        req.w = args.w;
        if (args.genus)
            req.genus = *args.genus;
        else if (auto fg = family_genus(args.family))
            req.genus = *fg;
        else
            req.genus = static_cast<int>(args.u.size());
        if (req.family != ModelFamily::g3_aut16 && req.u.empty())
            throw error(errc::parse_error, "--u is required for family " + std::string(to_string(req.family)));

        const HyperellipticCurve curve = build_model(req);
        ordered_json& doc = r.document;
        doc["family"] = std::string(to_string(req.family));
        doc["family_verified"] = family_verified(req.family);
        doc["genus"] = req.genus;
        doc["coefficients"] = detail::poly_json(curve.f());
        doc["polynomial"] = to_string(curve.f());
        if (req.family == ModelFamily::generic_v4 || req.family == ModelFamily::g2_D8 ||
            req.family == ModelFamily::g3_Z2cubed) {
            const DihedralInvariants<Rational> u(req.genus, req.u);
            const ModelCheck check = check_model(u, curve, opt.tol);
            doc["reproduces_invariants"] = check.invariants_match;
            doc["exact_check"] = check.exact;
            doc["closed_form_u1"] = closed_form_u1(u).to_string();
        }
        return r;
    });
}

inline Result cmd_decompose(const CurveDocument& input)
{
    return guarded("decompose", [&] {
        Result r{detail::header("decompose"), exit_ok, {}};
        const Poly<Rational> e = input.polynomial();
        ordered_json& doc = r.document;
        doc["input"] = to_string(e);
        const auto dec = decompose_degree2(e);
        if (!dec) {
            doc["status"] = "indecomposable";
            doc["reason"] = e.degree() % 2 != 0 ? "odd degree" : "shifted polynomial has odd terms";
            return r;
        }
        doc["shift"] = dec->shift.to_string();
        doc["G"] = detail::poly_json(dec->G);
        doc["H"] = detail::poly_json(dec->H);
        doc["even_part"] = detail::poly_json(dec->even_part);
        doc["G_text"] = to_string(dec->G, "Y");
        doc["H_text"] = to_string(dec->H);
        doc["even_part_text"] = to_string(dec->even_part, "Y");
        return r;
    });
}

/// Canonical text of a result document: two-space indent plus trailing newline.
inline std::string render(const Result& r)
{
    return r.document.dump(2) + "\n";
}

}  // namespace hyperinv::cli
