#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperinv/invariants.hpp"
#include "hyperinv/models.hpp"
#include "hyperinv/numeric_invariants.hpp"

namespace hyperinv {

/// Which factor of (2^r u_1 - u_g^{r+1})(2^r u_1 + u_g^{r+1}), r = floor((g-1)/2),
/// vanishes. first: the V4 involutions lift to involutions; second: two of
/// them lift to elements of order 4.
enum class FactorSign { first, second, both, none };

constexpr std::string_view to_string(FactorSign s) noexcept
{
    switch (s) {
    case FactorSign::first: return "first";
    case FactorSign::second: return "second";
    case FactorSign::both: return "both";
    case FactorSign::none: return "none";
    }
    return "none";
}

/// Odd genus only.
template <Coefficient T>
FactorSign v4_factor_sign(const DihedralInvariants<T>& u, double tol = 1e-9)
{
    const int g = u.genus();
    if (g % 2 == 0) throw error(errc::not_applicable, "factor sign is defined for odd genus only");
    const auto r = static_cast<std::uint64_t>((g - 1) / 2);
    const T lhs = power(domain_traits<T>::from_int(2, u[1]), r) * u[1];
    const T rhs = power(u[g], r + 1);
    const bool first = domain_traits<T>::equal(lhs, rhs, tol);
    const bool second = domain_traits<T>::equal(-lhs, rhs, tol);
    if (first && second) return FactorSign::both;
    if (first) return FactorSign::first;
    if (second) return FactorSign::second;
    return FactorSign::none;
}

struct ClassifyOptions {
    bool numeric = false;
    double tol = 1e-9;
};

struct ClassificationReport {
    int genus = 0;
    std::vector<DihedralInvariants<Rational>> invariant_tuples;  // exact path
    std::vector<NumericTuple> numeric_tuples;                    // only with options.numeric
    bool v4_embedded = false;
    std::optional<FactorSign> factor_sign;  // odd genus only
    std::optional<Rational> d6;             // genus 2: 2 u_1^2 - u_2^3
    std::vector<std::string> notes;
};

/// Runs detection, computes the invariant tuples and evaluates the V4
/// relations. Never throws for a valid curve: failures are reported in notes.
inline ClassificationReport classify(const HyperellipticCurve& curve, const ClassifyOptions& options = {})
{
    ClassificationReport report;
    report.genus = curve.genus();
    const int g = curve.genus();
    const Poly<Rational> model = even_degree_model(curve);

    if (curve.odd_degree()) {
        Poly<Rational> x7m1({Rational(-1), 0, 0, 0, 0, 0, 0, 1});
        if (g == 3 && curve.f() * (Rational(1) / curve.f().leading()) == x7m1)
            report.notes.emplace_back(
                "Y^2 = X^7 - 1: genus 3 curve with |Aut| > 4 and no extra involution; field of moduli Q");
        report.notes.emplace_back("odd degree: branch point at infinity moved via X -> 1/(X - t)");
    }

    try {
        report.invariant_tuples.push_back(invariants_from_even(normalize_even_polynomial(model)));
    } catch (const error& e) {
        if (e.code() == errc::not_in_locus)
            report.notes.emplace_back("not-in-L_g: no extra involution found on the exact rational path");
        else if (e.code() == errc::degenerate_locus)
            report.notes.emplace_back("degenerate-locus: extra involution found but c_1 = c_g = 0");
        else
            throw;
    }

    if (options.numeric) {
        try {
            report.numeric_tuples = numeric_invariant_tuples(model, options.tol);
            report.notes.emplace_back("numeric: " + std::to_string(report.numeric_tuples.size()) +
                                      " tuple(s) from floating-point involution search (not exact)");
        } catch (const error& e) {
            if (e.code() != errc::numeric_failure) throw;
            report.notes.emplace_back(std::string("numeric search failed: ") + e.what());
        }
    }

    for (const auto& u : report.invariant_tuples) report.v4_embedded = report.v4_embedded || v4_condition(u);
    if (report.invariant_tuples.empty()) {
        for (const auto& t : report.numeric_tuples)
            report.v4_embedded = report.v4_embedded || v4_condition(DihedralInvariants<Complex>(g, t.u), 1e-6);
    }

    if (g % 2 == 1) {
        report.factor_sign = FactorSign::none;
        for (const auto& u : report.invariant_tuples) {
            auto s = v4_factor_sign(u);
            if (s != FactorSign::none) {
                report.factor_sign = s;
                break;
            }
        }
    }

    if (!report.invariant_tuples.empty()) {
        const auto& u = report.invariant_tuples.front();
        if (g == 2) {
            report.d6 = Rational(2) * u[1] * u[1] - pow(u[2], 3);
            report.notes.emplace_back(report.d6->is_zero()
                                          ? "d6 = 0: V4 embeds in the reduced automorphism group"
                                          : "d6 != 0: reduced automorphism group has no V4 through this involution");
        }
        if (report.v4_embedded) {
            const char* family = g == 2 ? "g2_D8" : (g == 3 ? "g3_Z2cubed" : nullptr);
            bool reproduced = false;
            try {
                reproduced = family != nullptr && verify_model(u, model_generic_v4(u));
            } catch (const error& e) {
                if (e.code() != errc::degenerate_model) throw;
            }
            if (reproduced)
                report.notes.emplace_back(std::string("consistent with the ") + family +
                                          " model, which reproduces these invariants");
            else if (family == nullptr)
                report.notes.emplace_back("V4 relation holds; rational model over the field of moduli available");
        }
        report.notes.emplace_back(
            "tuples come from the rational detection path; other extra involutions over Qbar may exist");
    }
    return report;
}

/// Pairs (curve, involution) are isomorphic iff some exact invariant tuple
/// of c1 equals one of c2. Throws not_in_locus when either curve has no
/// rationally detectable extra involution.
inline bool curves_isomorphic_with_involution(const HyperellipticCurve& c1, const HyperellipticCurve& c2)
{
    if (c1.genus() != c2.genus()) return false;
    if (!has_extra_involution_rational(c1) || !has_extra_involution_rational(c2))
        throw error(errc::not_in_locus, "curve has no rationally detectable extra involution");
    return invariants_equal(curve_invariants(c1), curve_invariants(c2));
}

}  // namespace hyperinv
