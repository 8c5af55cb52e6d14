#pragma once

// Floating-point search for Moebius involutions permuting the branch points.
// Results are approximations and are labelled as such by callers.

#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "hyperinv/curve.hpp"
#include "hyperinv/domain.hpp"

namespace hyperinv {

/// X -> (aX + b) / (cX - a), scaled so that a^2 + bc = 1 (trace 0, det -1).
struct MobiusInvolution {
    Complex a, b, c;
    bool fixes_branch_points = false;  // lifts to an element of order 4
    double residual = 0.0;             // worst root-matching distance

    std::optional<Complex> apply(Complex x) const
    {
        Complex den = c * x - a;
        Complex num = a * x + b;
        if (std::abs(den) <= 1e-300 || std::abs(den) < 1e-14 * std::abs(num)) return std::nullopt;
        return num / den;
    }

    /// The two fixed points; nullopt stands for infinity.
    std::array<std::optional<Complex>, 2> fixed_points() const
    {
        // c X^2 - 2a X - b = 0
        if (std::abs(c) < 1e-14 * std::max(std::abs(a), std::abs(b))) return {Complex(-b / (2.0 * a)), std::nullopt};
        Complex disc = std::sqrt(a * a + b * c);
        return {Complex((a + disc) / c), Complex((a - disc) / c)};
    }
};

namespace detail {

inline std::complex<long double> eval_ld(const std::vector<std::complex<long double>>& coeffs,
                                         std::complex<long double> x)
{
    std::complex<long double> acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

inline Complex tidy(Complex z, double scale)
{
    double re = std::abs(z.real()) < 1e-13 * scale ? 0.0 : z.real();
    double im = std::abs(z.imag()) < 1e-13 * scale ? 0.0 : z.imag();
    return {re + 0.0, im + 0.0};
}

inline MobiusInvolution canonical_involution(Complex a, Complex b, Complex c)
{
    Complex s = std::sqrt(a * a + b * c);
    a /= s;
    b /= s;
    c /= s;
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
    for (Complex* z : {&a, &b, &c}) {
        if (std::abs(*z) < 1e-9 * scale) continue;
        bool flip = std::abs(z->real()) > 1e-9 * scale ? z->real() < 0 : z->imag() < 0;
        if (flip) {
            a = -a;
            b = -b;
            c = -c;
        }
        break;
    }
    return {tidy(a, scale), tidy(b, scale), tidy(c, scale)};
}

}  // namespace detail

/// Complex roots of f, polished by Newton steps in long double. Throws
/// numeric_failure when a root cannot be certified to a small backward error
/// or two roots coincide to working precision.
inline std::vector<Complex> polynomial_roots(const Poly<Rational>& f)
{
    const int n = f.degree();
    if (n < 1) throw error(errc::invalid_argument, "root finding needs degree >= 1");
    Eigen::VectorXd coeffs(n + 1);
    std::vector<std::complex<long double>> cld, dld;
    for (int k = 0; k <= n; ++k) {
        coeffs[k] = f.coeff(static_cast<std::size_t>(k)).to_double();
        cld.emplace_back(static_cast<long double>(coeffs[k]), 0.0L);
    }
    for (int k = 1; k <= n; ++k) dld.push_back(cld[static_cast<std::size_t>(k)] * static_cast<long double>(k));

    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver;
    solver.compute(coeffs);
    std::vector<Complex> roots;
    for (Eigen::Index i = 0; i < solver.roots().size(); ++i) {
        std::complex<long double> z(solver.roots()[i].real(), solver.roots()[i].imag());
        for (int it = 0; it < 8; ++it) {
            auto d = detail::eval_ld(dld, z);
            if (std::abs(d) == 0.0L) break;
            auto step = detail::eval_ld(cld, z) / d;
            z -= step;
            if (std::abs(step) <= 1e-19L * std::max(1.0L, std::abs(z))) break;
        }
        long double mag = 0;
        for (std::size_t k = 0; k < cld.size(); ++k) mag += std::abs(cld[k]) * std::pow(std::abs(z), (long double)k);
        if (std::abs(detail::eval_ld(cld, z)) > 1e-10L * mag)
            throw error(errc::numeric_failure, "root finding did not converge");
        roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    }
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (std::abs(roots[i] - roots[j]) < 1e-12 * std::max(1.0, std::abs(roots[i])))
                throw error(errc::numeric_failure, "roots are not separated at working precision");
    std::sort(roots.begin(), roots.end(), [](Complex x, Complex y) {
        return std::pair(x.real(), x.imag()) < std::pair(y.real(), y.imag());
    });
    return roots;
}

/// Greedy nearest-neighbour matching of gamma(roots) against roots.
/// Returns the worst distance, or nullopt if any image exceeds tol.
inline std::optional<double> match_roots(const MobiusInvolution& gamma, const std::vector<Complex>& roots, double tol)
{
    std::vector<bool> used(roots.size(), false);
    double worst = 0.0;
    for (const Complex& r : roots) {
        auto img = gamma.apply(r);
        if (!img) return std::nullopt;
        std::size_t best = roots.size();
        double best_d = 0.0;
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (used[j]) continue;
            double d = std::abs(*img - roots[j]);
            if (best == roots.size() || d < best_d) {
                best = j;
                best_d = d;
            }
        }
        if (best == roots.size() || best_d > tol * std::max(1.0, std::abs(roots[best]))) return std::nullopt;
        used[best] = true;
        worst = std::max(worst, best_d / std::max(1.0, std::abs(roots[best])));
    }
    return worst;
}

/// All Moebius involutions permuting the roots of f (deg f even), sorted
/// canonically. An involution is fixed by two disjoint orbits {r0, r_j} and
/// {r_k, r_l} (an orbit may be a fixed point), giving O(n^2) candidates.
inline std::vector<MobiusInvolution> search_involutions_numeric(const Poly<Rational>& f, double tol = 1e-9)
{
    if (f.degree() < 4 || f.degree() % 2 != 0)
        throw error(errc::invalid_argument, "numeric search needs an even-degree model of degree >= 4");
    const auto roots = polynomial_roots(f);
    const std::size_t n = roots.size();
    std::vector<MobiusInvolution> found;

    auto orbit_row = [&](std::size_t i, std::size_t j) {
        // gamma(r_i) = r_j  <=>  a (r_i + r_j) + b - c r_i r_j = 0
        return std::array<Complex, 3>{roots[i] + roots[j], 1.0, -roots[i] * roots[j]};
    };

    for (std::size_t j = 0; j < n; ++j) {
        std::size_t k = 1;
        while (k == j) ++k;
        for (std::size_t l = 1; l < n; ++l) {
            if (l == j) continue;
            auto u = orbit_row(0, j);
            auto v = orbit_row(k, l);
            Complex a = u[1] * v[2] - u[2] * v[1];
            Complex b = u[2] * v[0] - u[0] * v[2];
            Complex c = u[0] * v[1] - u[1] * v[0];
            Complex det = a * a + b * c;
            double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
            if (scale == 0.0 || std::abs(det) < 1e-12 * scale * scale) continue;
            MobiusInvolution gamma = detail::canonical_involution(a, b, c);
            auto residual = match_roots(gamma, roots, tol);
            if (!residual) continue;
            gamma.residual = *residual;
            for (const auto& fp : gamma.fixed_points()) {
                if (!fp) continue;
                for (const Complex& r : roots)
                    if (std::abs(*fp - r) <= tol * std::max(1.0, std::abs(r))) gamma.fixes_branch_points = true;
            }
            bool duplicate = false;
            for (const auto& other : found) {
                double s = std::max({1.0, std::abs(other.a), std::abs(other.b), std::abs(other.c)});
                if (std::abs(other.a - gamma.a) + std::abs(other.b - gamma.b) + std::abs(other.c - gamma.c) <=
                    1e-6 * s) {
                    duplicate = true;
                    break;
                }
            }
            if (!duplicate) found.push_back(gamma);
        }
    }

    auto key = [](const MobiusInvolution& m) {
        auto q = [](double x) { return std::llround(x * 1e6); };
        return std::make_tuple(q(m.a.real()), q(m.a.imag()), q(m.b.real()), q(m.b.imag()), q(m.c.real()),
                               q(m.c.imag()));
    };
    std::sort(found.begin(), found.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });
    return found;
}

/// Curve overload; the curve must have even degree 2g+2.
inline std::vector<MobiusInvolution> search_involutions_numeric(const HyperellipticCurve& curve, double tol = 1e-9)
{
    if (curve.odd_degree())
        throw error(errc::invalid_argument, "numeric search needs deg f = 2g+2; use even_degree_model first");
    return search_involutions_numeric(curve.f(), tol);
}

}  // namespace hyperinv
