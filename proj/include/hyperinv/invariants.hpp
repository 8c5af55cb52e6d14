#pragma once

// Normal form Y^2 = X^{2g+2} + a_g X^{2g} + ... + a_1 X^2 + 1, the dihedral
// group action on (a_1, ..., a_g), and the dihedral invariants
//   u_i = a_1^{g-i+1} a_i + a_g^{g-i+1} a_{g+1-i},   1 <= i <= g.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hyperinv/involution.hpp"
#include "hyperinv/poly.hpp"

namespace hyperinv {

/// Coefficients a_1..a_g of the normal form; a[i-1] holds a_i.
/// Nonsingularity (discriminant != 0) is not enforced here because the
/// invariant formulas are polynomial identities; see require_nonsingular().
template <Coefficient T>
struct NormalForm {
    int g = 0;
    std::vector<T> a;

    NormalForm() = default;
    NormalForm(int genus, std::vector<T> coeffs) : g(genus), a(std::move(coeffs))
    {
        if (g < 1 || a.size() != static_cast<std::size_t>(g))
            throw error(errc::invalid_argument, "normal form of genus " + std::to_string(g) + " needs " +
                                                    std::to_string(g) + " coefficients, got " +
                                                    std::to_string(a.size()));
    }

    const T& operator[](int i) const { return a[static_cast<std::size_t>(i - 1)]; }  // 1-based a_i

    Poly<T> polynomial() const
    {
        const T one = one_like(a[0]);
        std::vector<T> v(static_cast<std::size_t>(2 * g + 3), zero_like(one));
        v[0] = one;
        for (int i = 1; i <= g; ++i) v[static_cast<std::size_t>(2 * i)] = (*this)[i];
        v.back() = one;
        return Poly<T>(std::move(v));
    }

    bool is_nonsingular() const { return !is_zero(discriminant(polynomial())); }

    void require_nonsingular() const
    {
        if (!is_nonsingular()) throw error(errc::degenerate_curve, "normal form has zero discriminant");
    }

    friend bool operator==(const NormalForm& x, const NormalForm& y) { return x.g == y.g && x.a == y.a; }
};

/// Tuple (u_1, ..., u_g); the all-zero tuple is rejected.
template <Coefficient T>
class DihedralInvariants {
public:
    DihedralInvariants(int genus, std::vector<T> u) : g_(genus), u_(std::move(u))
    {
        if (g_ < 1 || u_.size() != static_cast<std::size_t>(g_))
            throw error(errc::invalid_argument, "invariant tuple of genus " + std::to_string(g_) + " needs " +
                                                    std::to_string(g_) + " entries, got " +
                                                    std::to_string(u_.size()));
        bool all_zero = true;
        for (const T& x : u_) all_zero = all_zero && is_zero(x);
        if (all_zero) throw error(errc::degenerate_locus, "dihedral invariants all vanish (a_1 = a_g = 0)");
    }

    int genus() const noexcept { return g_; }
    const std::vector<T>& values() const noexcept { return u_; }
    const T& operator[](int i) const { return u_[static_cast<std::size_t>(i - 1)]; }  // 1-based u_i

    friend bool operator==(const DihedralInvariants& x, const DihedralInvariants& y)
    {
        return x.g_ == y.g_ && x.u_ == y.u_;
    }

private:
    int g_;
    std::vector<T> u_;
};

namespace detail {

/// The invariant formula without the degeneracy check.
template <Coefficient T>
std::vector<T> raw_dihedral_invariants(int g, const std::vector<T>& a)
{
    std::vector<T> u;
    u.reserve(a.size());
    const T& a1 = a.front();
    const T& ag = a.back();
    for (int i = 1; i <= g; ++i) {
        const auto e = static_cast<std::uint64_t>(g - i + 1);
        u.push_back(power(a1, e) * a[static_cast<std::size_t>(i - 1)] +
                    power(ag, e) * a[static_cast<std::size_t>(g - i)]);
    }
    return u;
}

}  // namespace detail

template <Coefficient T>
DihedralInvariants<T> dihedral_invariants(const NormalForm<T>& nf)
{
    if (is_zero(nf.a.front()) && is_zero(nf.a.back()))
        throw error(errc::degenerate_locus, "a_1 = a_g = 0: dihedral invariants are not defined");
    return DihedralInvariants<T>(nf.g, detail::raw_dihedral_invariants(nf.g, nf.a));
}

/// Rotation X -> eps X of the dihedral action: a_i -> eps^{2i} a_i.
/// eps must have exact multiplicative order 2g+2.
template <Coefficient T>
NormalForm<T> apply_rotation(const NormalForm<T>& nf, const T& eps, double tol = 1e-9)
{
    const auto n = static_cast<std::uint64_t>(2 * nf.g + 2);
    auto is_one = [&](const T& x) { return domain_traits<T>::equal(x, one_like(x), tol); };
    bool ok = is_one(power(eps, n));
    for (std::uint64_t q : detail::prime_factors(n)) ok = ok && !is_one(power(eps, n / q));
    if (!ok) throw error(errc::invalid_root, "root of unity does not have order " + std::to_string(n));
    std::vector<T> a;
    a.reserve(nf.a.size());
    const T eps2 = eps * eps;
    T scale = eps2;
    for (const T& x : nf.a) {
        a.push_back(scale * x);
        scale = scale * eps2;
    }
    return NormalForm<T>(nf.g, std::move(a));
}

/// Reflection X -> 1/X of the dihedral action: a_i -> a_{g+1-i}.
template <Coefficient T>
NormalForm<T> apply_reflection(const NormalForm<T>& nf)
{
    return NormalForm<T>(nf.g, std::vector<T>(nf.a.rbegin(), nf.a.rend()));
}

/// Invariants of a monic even form X^{2g+2} + sum c_i X^{2i} + b0 without
/// extracting the root mu^{2g+2} = b0 that would bring it to normal form:
///   u_i = c_1^{g-i+1} c_i / b0^{g-i+1} + c_g^{g-i+1} c_{g+1-i} / b0.
template <Coefficient T>
DihedralInvariants<T> invariants_from_even(const EvenForm<T>& ef)
{
    const int g = ef.g;
    if (ef.c.size() != static_cast<std::size_t>(g) || g < 1)
        throw error(errc::invalid_argument, "even form has inconsistent genus");
    if (is_zero(ef.b0)) throw error(errc::not_normalizable, "even form has b0 = 0");
    const T& c1 = ef.c.front();
    const T& cg = ef.c.back();
    if (is_zero(c1) && is_zero(cg))
        throw error(errc::degenerate_locus, "c_1 = c_g = 0: dihedral invariants are not defined");
    const T inv_b0 = one_like(ef.b0) / ef.b0;
    std::vector<T> u;
    u.reserve(ef.c.size());
    for (int i = 1; i <= g; ++i) {
        const auto e = static_cast<std::uint64_t>(g - i + 1);
        u.push_back(power(c1, e) * ef.c[static_cast<std::size_t>(i - 1)] * power(inv_b0, e) +
                    power(cg, e) * ef.c[static_cast<std::size_t>(g - i)] * inv_b0);
    }
    return DihedralInvariants<T>(g, std::move(u));
}

/// 2^{g+1} a_g^{2g+2} - 2^{g+1} u_1 a_g^{g+1} + u_g^{g+1}; identically zero.
template <Coefficient T>
T relation_check(const NormalForm<T>& nf)
{
    const auto u = detail::raw_dihedral_invariants(nf.g, nf.a);
    const auto g1 = static_cast<std::uint64_t>(nf.g + 1);
    const T& ag = nf.a.back();
    const T two_pow = power(domain_traits<T>::from_int(2, ag), g1);
    return two_pow * power(ag, 2 * g1) - two_pow * u.front() * power(ag, g1) + power(u.back(), g1);
}

/// Equality of invariant tuples: exact over exact domains, relative tol
/// over complex floating point.
template <Coefficient T>
bool invariants_equal(const DihedralInvariants<T>& u, const DihedralInvariants<T>& v, double tol = 1e-9)
{
    if (u.genus() != v.genus())
        throw error(errc::invalid_comparison, "cannot compare invariants of genus " + std::to_string(u.genus()) +
                                                  " and " + std::to_string(v.genus()));
    for (int i = 1; i <= u.genus(); ++i)
        if (!domain_traits<T>::equal(u[i], v[i], tol)) return false;
    return true;
}

/// 2^{g-1} u_1^2 = u_g^{g+1}: necessary for V4 in the reduced automorphism group.
template <Coefficient T>
bool v4_condition(const DihedralInvariants<T>& u, double tol = 1e-9)
{
    const int g = u.genus();
    const T two = domain_traits<T>::from_int(2, u[1]);
    const T lhs = power(two, static_cast<std::uint64_t>(g - 1)) * u[1] * u[1];
    const T rhs = power(u[g], static_cast<std::uint64_t>(g + 1));
    return domain_traits<T>::equal(lhs, rhs, tol);
}

/// Dihedral invariants of the curve through the exact pipeline.
inline DihedralInvariants<Rational> curve_invariants(const HyperellipticCurve& curve)
{
    return invariants_from_even(normalize_to_even(curve));
}

}  // namespace hyperinv
