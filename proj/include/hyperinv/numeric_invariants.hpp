#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "hyperinv/invariants.hpp"
#include "hyperinv/numeric.hpp"

namespace hyperinv {

/// Numeric invariant tuple attached to one extra involution found by the
/// Moebius search.
struct NumericTuple {
    MobiusInvolution involution;
    std::vector<Complex> u;
};

/// Invariant tuples of every extra involution (no fixed branch points) of the
/// degree-(2g+2) polynomial f, up to tol. Each involution is conjugated to
/// X -> -X by X -> (X - p)/(X - q) with p, q its fixed points; the image of
/// the branch set is then an even polynomial whose invariants are read off
/// with invariants_from_even over the complex numbers.
inline std::vector<NumericTuple> numeric_invariant_tuples(const Poly<Rational>& f, double tol = 1e-9)
{
    const int n = f.degree();
    const int g = n / 2 - 1;
    const auto roots = polynomial_roots(f);
    std::vector<NumericTuple> out;
    for (const auto& gamma : search_involutions_numeric(f, tol)) {
        if (gamma.fixes_branch_points) continue;
        const auto fp = gamma.fixed_points();
        std::vector<Complex> moved;
        for (const Complex& r : roots) moved.push_back(fp[1] ? (r - *fp[0]) / (r - *fp[1]) : r - *fp[0]);
        std::vector<Complex> prod{Complex(1.0)};
        for (const Complex& r : moved) {
            std::vector<Complex> next(prod.size() + 1, Complex{});
            for (std::size_t k = 0; k < prod.size(); ++k) {
                next[k + 1] += prod[k];
                next[k] -= r * prod[k];
            }
            prod = std::move(next);
        }
        EvenForm<Complex> ef{g, prod[0], {}, Complex{}, Complex(1.0)};
        for (int i = 1; i <= g; ++i) ef.c.push_back(prod[static_cast<std::size_t>(2 * i)]);
        std::vector<Complex> u;
        try {
            u = invariants_from_even(ef).values();
        } catch (const error& e) {
            if (e.code() != errc::degenerate_locus) throw;
            continue;
        }
        double scale = 0.0;
        for (Complex z : u) scale = std::max(scale, std::abs(z));
        for (Complex& z : u) {
            // parts below roundoff are noise from the root approximations
            if (std::abs(z.real()) < 1e-11 * scale) z.real(0.0);
            if (std::abs(z.imag()) < 1e-11 * scale) z.imag(0.0);
        }
        bool duplicate = false;
        for (const auto& t : out) {
            bool same = true;
            for (std::size_t i = 0; i < u.size(); ++i)
                same = same && domain_traits<Complex>::equal(t.u[i], u[i], 1e-6);
            duplicate = duplicate || same;
        }
        if (!duplicate) out.push_back({gamma, std::move(u)});
    }
    return out;
}

}  // namespace hyperinv
