#pragma once

// Detection of extra involutions through degree-2 decomposition E = G o H,
// and normalization of E to a monic even polynomial.
//
// E of degree n = 2g+2 decomposes with deg H = 2 iff E(X + c) is even for the
// single candidate c forced by the X^{n-1} coefficient. Then
//   E(X) = P((X - c)^2),  H = X^2 - 2cX,  G(Y) = P(Y + c^2).
// Every step is a Taylor shift, so the cost is O(g^2) field operations.

#include <cstddef>
#include <optional>
#include <vector>

#include "hyperinv/curve.hpp"
#include "hyperinv/poly.hpp"

namespace hyperinv {

/// Monic even polynomial X^{2g+2} + c_g X^{2g} + ... + c_1 X^2 + b0, obtained from
/// the input by E(X + shift) / leading_scale.
template <Coefficient T>
struct EvenForm {
    int g = 0;
    T b0;
    std::vector<T> c;  // c[i-1] is the coefficient of X^{2i}
    T shift;
    T leading_scale;

    Poly<T> polynomial() const
    {
        std::vector<T> v(static_cast<std::size_t>(2 * g + 3), zero_like(b0));
        v[0] = b0;
        for (int i = 1; i <= g; ++i) v[static_cast<std::size_t>(2 * i)] = c[static_cast<std::size_t>(i - 1)];
        v.back() = one_like(b0);
        return Poly<T>(std::move(v));
    }
};

template <Coefficient T>
struct DecompositionWitness {
    Poly<T> G;
    Poly<T> H;          // X^2 + aX, a = -2 * shift
    T shift;            // E(X + shift) is even
    Poly<T> even_part;  // P with E(X) = P((X - shift)^2)
};

/// The only c for which E(X + c) can be even: c = -e_{n-1} / (n * e_n).
template <Coefficient T>
T even_shift_candidate(const Poly<T>& e)
{
    const int n = e.degree();
    if (n < 2 || n % 2 != 0)
        throw error(errc::invalid_argument, "shift candidate needs even degree >= 2, got " + std::to_string(n));
    const T lead = e.leading();
    return -e.coeff(static_cast<std::size_t>(n - 1)) / (domain_traits<T>::from_int(n, lead) * lead);
}

/// E = G o H with deg H = 2, or nullopt when no such decomposition exists
/// (including odd degree or degree below 4).
template <Coefficient T>
std::optional<DecompositionWitness<T>> decompose_degree2(const Poly<T>& e)
{
    const int n = e.degree();
    if (n < 4 || n % 2 != 0) return std::nullopt;
    const T c = even_shift_candidate(e);
    const Poly<T> shifted = taylor_shift(e, c);
    const auto s = shifted.coeffs();
    std::vector<T> half;
    half.reserve(s.size() / 2 + 1);
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k % 2 == 1) {
            if (!is_zero(s[k])) return std::nullopt;
        } else {
            half.push_back(s[k]);
        }
    }
    const T one = one_like(c);
    const T two = domain_traits<T>::from_int(2, c);
    Poly<T> even_part(std::move(half));
    Poly<T> h({zero_like(c), -two * c, one});
    Poly<T> g = taylor_shift(even_part, c * c);
    return DecompositionWitness<T>{std::move(g), std::move(h), c, std::move(even_part)};
}

/// Monic even form of a polynomial of even degree 2g+2 >= 4.
/// Throws not_in_locus when E has no degree-2 decomposition and
/// not_normalizable when the even form has constant term 0.
template <Coefficient T>
EvenForm<T> normalize_even_polynomial(const Poly<T>& e)
{
    auto dec = decompose_degree2(e);
    if (!dec) throw error(errc::not_in_locus, "polynomial has no decomposition G(X^2 + aX)");
    const auto p = dec->even_part.coeffs();
    const T lead = p.back();
    const int g = static_cast<int>(p.size()) - 2;
    EvenForm<T> form{g, p[0] / lead, {}, dec->shift, lead};
    if (is_zero(form.b0))
        throw error(errc::not_normalizable, "0 is a branch point after the shift; even form has b0 = 0");
    form.c.reserve(static_cast<std::size_t>(g));
    for (int i = 1; i <= g; ++i) form.c.push_back(p[static_cast<std::size_t>(i)] / lead);
    return form;
}

/// Rational point t in the order 0, 1, -1, 2, -2, ... with f(t) != 0.
inline Rational first_non_root(const Poly<Rational>& f)
{
    for (long k = 0;; ++k) {
        for (long t : {k, -k}) {
            if (!f(Rational(t)).is_zero()) return Rational(t);
            if (k == 0) break;
        }
    }
}

/// Degree-(2g+2) model of the curve. Odd-degree f (infinity is a branch
/// point) is replaced by X^{2g+2} f(t + 1/X), i.e. the non-branch point t is
/// sent to infinity via X -> 1/(X - t).
inline Poly<Rational> even_degree_model(const HyperellipticCurve& curve)
{
    if (!curve.odd_degree()) return curve.f();
    const Rational t = first_non_root(curve.f());
    return reverse(taylor_shift(curve.f(), t), 2 * curve.genus() + 2);
}

/// True iff the degree-(2g+2) model decomposes as G(X^2 + aX) over Q.
inline bool has_extra_involution_rational(const HyperellipticCurve& curve)
{
    return decompose_degree2(even_degree_model(curve)).has_value();
}

/// Even form of the curve's degree-(2g+2) model.
inline EvenForm<Rational> normalize_to_even(const HyperellipticCurve& curve)
{
    return normalize_even_polynomial(even_degree_model(curve));
}

}  // namespace hyperinv
