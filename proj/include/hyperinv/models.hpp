#pragma once

// Rational models over the field of moduli, built from invariant data.
//
// The generic model for tuples with 2^{g-1} u_1^2 = u_g^{g+1} is
//   Y^2 = u_1 X^{2g+2} + u_1 X^{2g} + u_2 X^{2g-2} + ... + u_g X^2 + 2,
// whose coefficients are polynomials in u, so it is defined over Q(u).
// The genus 2 and genus 3 special families are emitted coefficient by
// coefficient; families whose reference formulas could not be validated are
// marked by family_verified() == false.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperinv/invariants.hpp"
#include "hyperinv/numeric_invariants.hpp"

namespace hyperinv {

enum class ModelFamily {
    generic_v4,
    g2_D8,
    g2_D12,
    g2_V4_a,
    g2_V4_b,
    g3_aut16,
    g3_D12,
    g3_Z2xZ4,
    g3_Z2cubed,
};

inline constexpr ModelFamily all_model_families[] = {
    ModelFamily::generic_v4, ModelFamily::g2_D8,   ModelFamily::g2_D12,   ModelFamily::g2_V4_a,    ModelFamily::g2_V4_b,
    ModelFamily::g3_aut16,   ModelFamily::g3_D12,  ModelFamily::g3_Z2xZ4, ModelFamily::g3_Z2cubed,
};

constexpr std::string_view to_string(ModelFamily f) noexcept
{
    switch (f) {
    case ModelFamily::generic_v4: return "generic_v4";
    case ModelFamily::g2_D8: return "g2_D8";
    case ModelFamily::g2_D12: return "g2_D12";
    case ModelFamily::g2_V4_a: return "g2_V4_a";
    case ModelFamily::g2_V4_b: return "g2_V4_b";
    case ModelFamily::g3_aut16: return "g3_aut16";
    case ModelFamily::g3_D12: return "g3_D12";
    case ModelFamily::g3_Z2xZ4: return "g3_Z2xZ4";
    case ModelFamily::g3_Z2cubed: return "g3_Z2cubed";
    }
    return "generic_v4";
}

inline ModelFamily parse_model_family(std::string_view name)
{
    for (ModelFamily f : all_model_families)
        if (to_string(f) == name) return f;
    throw error(errc::parse_error, "unknown model family '" + std::string(name) + "'");
}

/// False for families whose reference coefficients do not reproduce (or cannot
/// be checked against) their invariants: g2_D12, g2_V4_a, g3_D12, g3_Z2xZ4.
constexpr bool family_verified(ModelFamily f) noexcept
{
    return f != ModelFamily::g2_D12 && f != ModelFamily::g2_V4_a && f != ModelFamily::g3_D12 &&
           f != ModelFamily::g3_Z2xZ4;
}

/// Genus required by the family, or nullopt for generic_v4.
constexpr std::optional<int> family_genus(ModelFamily f) noexcept
{
    switch (f) {
    case ModelFamily::generic_v4: return std::nullopt;
    case ModelFamily::g2_D8:
    case ModelFamily::g2_D12:
    case ModelFamily::g2_V4_a:
    case ModelFamily::g2_V4_b: return 2;
    default: return 3;
    }
}

struct RationalModelRequest {
    int genus = 0;
    std::vector<Rational> u;  // full tuple, or just u_g for the u_3-only genus 3 families
    ModelFamily family = ModelFamily::generic_v4;
    std::optional<Rational> w;  // g3_aut16 parameter
};

/// (2^{g-1} u_1^2 + u_g^{g+1}) / (2^g u_1): the first invariant of the generic
/// model; equals u_1 exactly when the V4 relation holds.
inline Rational closed_form_u1(const DihedralInvariants<Rational>& u)
{
    const int g = u.genus();
    if (u[1].is_zero()) throw error(errc::precondition_failed, "u_1 = 0");
    return (pow(Rational(2), g - 1) * u[1] * u[1] + pow(u[g], g + 1)) / (pow(Rational(2), g) * u[1]);
}

namespace detail {

inline void require(bool ok, const std::string& what)
{
    if (!ok) throw error(errc::precondition_failed, what);
}

inline Poly<Rational> generic_v4_polynomial(const std::vector<Rational>& u)
{
    const int g = static_cast<int>(u.size());
    DihedralInvariants<Rational> inv(g, u);
    require(!u.front().is_zero(), "model needs u_1 != 0");
    require(v4_condition(inv), "V4 condition 2^{g-1} u_1^2 = u_g^{g+1} fails");
    std::vector<Rational> c(static_cast<std::size_t>(2 * g + 3), Rational(0));
    c[0] = Rational(2);
    for (int k = 1; k <= g; ++k) c[static_cast<std::size_t>(2 * k)] = u[static_cast<std::size_t>(g - k)];
    c.back() = u.front();
    return Poly<Rational>(std::move(c));
}

/// u_g from a request that may carry only that one value.
inline Rational last_invariant(const RationalModelRequest& req)
{
    require(req.u.size() == 1 || req.u.size() == static_cast<std::size_t>(req.genus),
            std::string(to_string(req.family)) + " needs u_" + std::to_string(req.genus) + " or the full tuple");
    return req.u.back();
}

inline std::vector<Rational> full_tuple(const RationalModelRequest& req)
{
    require(req.u.size() == static_cast<std::size_t>(req.genus),
            std::string(to_string(req.family)) + " needs " + std::to_string(req.genus) + " invariants, got " +
                std::to_string(req.u.size()));
    return req.u;
}

}  // namespace detail

/// The family's reference polynomial after checking its preconditions. The
/// squarefree requirement is left to build_model.
inline Poly<Rational> model_polynomial(const RationalModelRequest& req)
{
    using R = Rational;
    if (auto g = family_genus(req.family))
        detail::require(req.genus == *g, std::string(to_string(req.family)) + " needs genus " + std::to_string(*g));
    detail::require(req.genus >= 2, "genus must be at least 2");

    switch (req.family) {
    case ModelFamily::generic_v4:
    case ModelFamily::g2_D8:
    case ModelFamily::g3_Z2cubed: return detail::generic_v4_polynomial(detail::full_tuple(req));

    case ModelFamily::g2_D12: {
        // Literal reading of an unvalidated formula; coefficients are not in normal-form coordinates.
        R u2 = detail::last_invariant(req);
        return Poly<R>({u2 - R(18), 0, 0, R(4) * (u2 - R(450)), 0, 0, R(4) * (u2 - R(450))});
    }
    case ModelFamily::g2_V4_a: {
        auto u = detail::full_tuple(req);
        const R& u1 = u[0];
        const R& u2 = u[1];
        const R d6 = R(2) * u1 * u1 - pow(u2, 3);
        detail::require(!u2.is_zero(), "g2_V4_a needs u_2 != 0");
        detail::require(!d6.is_zero(), "g2_V4_a needs d6 = 2u_1^2 - u_2^3 != 0");
        const R a = pow(u2, 3) + u2 * u2 * u1 + R(2) * d6;
        const R b = R(15) * pow(u2, 3) - u2 * u2 * u1 + R(30) * d6;
        return Poly<R>({a, R(2) * (u2 * u2 + R(12)), R(2) / pow(d6, 2) * b, R(-8) / d6 * (u2 * u2 - R(20) * u1),
                        R(4) / pow(d6, 2) * b, R(8) / pow(d6, 2) * (u2 * u2 + R(12) * u1), R(8) / pow(d6, 3) * a});
    }
    case ModelFamily::g2_V4_b: {
        auto u = detail::full_tuple(req);
        detail::require(u[1].is_zero(), "g2_V4_b needs u_2 = 0");
        const R& u1 = u[0];
        const R e6 = R(2) * u1 + R(1);
        const R e5 = R(-2) * (R(4) * u1 - R(3));
        const R e4 = R(14) * u1 + R(15);
        const R e3 = R(-4) * (R(4) * u1 - R(5));
        return Poly<R>({e6, e5, e4, e3, e4, e5, e6});
    }
    case ModelFamily::g3_aut16: {
        detail::require(req.w.has_value(), "g3_aut16 needs the parameter w");
        detail::require(!req.w->is_zero(), "g3_aut16 needs w != 0");
        const R& w = *req.w;
        return Poly<R>({R(1), 0, 0, 0, w, 0, 0, 0, w});
    }
    case ModelFamily::g3_D12: {
        R u3 = detail::last_invariant(req);
        return Poly<R>({R(126), 0, R(-9) * (u3 - R(162)), 0, R(15) * (u3 - R(134)), 0, R(-7) * (u3 - R(98)), 0,
                        u3 - R(260)});
    }
    case ModelFamily::g3_Z2xZ4: {
        R u3 = detail::last_invariant(req);
        detail::require(!u3.is_zero(), "g3_Z2xZ4 needs u_3 != 0");
        const R u3_4 = pow(u3, 4);
        return Poly<R>({R(-16), 0, R(8) * u3, 0, 0, 0, u3_4, 0, u3_4});
    }
    }
    throw error(errc::invalid_argument, "unknown model family");
}

/// model_polynomial as a curve; throws degenerate_model if the polynomial is
/// not squarefree or its degree does not fit the genus.
inline HyperellipticCurve build_model(const RationalModelRequest& req)
{
    Poly<Rational> f = model_polynomial(req);
    const int d = f.degree();
    if (d != 2 * req.genus + 1 && d != 2 * req.genus + 2)
        throw error(errc::degenerate_model, "model polynomial has degree " + std::to_string(d) + ", not a genus " +
                                                std::to_string(req.genus) + " curve");
    if (!is_squarefree(f)) throw error(errc::degenerate_model, "model polynomial is not squarefree");
    return HyperellipticCurve(req.genus, std::move(f));
}

inline HyperellipticCurve model_generic_v4(const DihedralInvariants<Rational>& u)
{
    return build_model({u.genus(), u.values(), ModelFamily::generic_v4, std::nullopt});
}

inline HyperellipticCurve model_g2(const DihedralInvariants<Rational>& u, ModelFamily family)
{
    return build_model({2, u.values(), family, std::nullopt});
}

inline HyperellipticCurve model_g3(const RationalModelRequest& req)
{
    if (family_genus(req.family) != std::optional<int>(3))
        throw error(errc::precondition_failed, "not a genus 3 family");
    return build_model(req);
}

struct ModelCheck {
    bool invariants_match = false;
    bool exact = false;                          // match decided over Q
    std::optional<bool> closed_form_identity;    // evaluated when the V4 relation holds
    std::optional<DihedralInvariants<Rational>> exact_tuple;
    std::vector<NumericTuple> numeric_tuples;
    std::string diagnostics;

    bool ok() const { return invariants_match && closed_form_identity.value_or(true); }
};

/// Recomputes the invariants of curve and compares them with u: exactly when
/// the curve has a rational degree-2 decomposition, otherwise against every
/// numeric tuple within tol.
inline ModelCheck check_model(const DihedralInvariants<Rational>& u, const HyperellipticCurve& curve,
                              double tol = 1e-9)
{
    ModelCheck check;
    if (u.genus() != curve.genus())
        throw error(errc::invalid_comparison, "invariants and curve have different genus");
    if (!u[1].is_zero() && v4_condition(u)) check.closed_form_identity = closed_form_u1(u) == u[1];

    const Poly<Rational> model = even_degree_model(curve);
    try {
        check.exact_tuple = invariants_from_even(normalize_even_polynomial(model));
        if (invariants_equal(*check.exact_tuple, u)) {
            check.invariants_match = true;
            check.exact = true;
            return check;
        }
        check.diagnostics = "exact tuple differs from the requested invariants";
    } catch (const error& e) {
        if (e.code() != errc::not_in_locus && e.code() != errc::degenerate_locus) throw;
        check.diagnostics = std::string("exact path: ") + e.what();
    }

    check.numeric_tuples = numeric_invariant_tuples(model, tol);
    std::vector<Complex> target;
    for (const auto& x : u.values()) target.push_back(domain_traits<Rational>::to_complex(x));
    for (const auto& t : check.numeric_tuples) {
        bool same = true;
        for (std::size_t i = 0; i < target.size(); ++i)
            same = same && domain_traits<Complex>::equal(t.u[i], target[i], tol);
        if (same) {
            check.invariants_match = true;
            break;
        }
    }
    if (!check.invariants_match) check.diagnostics += "; no numeric tuple matches";
    return check;
}

inline bool verify_model(const DihedralInvariants<Rational>& u, const HyperellipticCurve& curve, double tol = 1e-9)
{
    return check_model(u, curve, tol).ok();
}

}  // namespace hyperinv
