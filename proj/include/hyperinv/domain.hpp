#pragma once

// Coefficient-domain abstraction shared by Poly, NormalForm and the invariant
// formulas. Three domains are supported: exact rationals, prime fields with a
// run-time modulus, and complex floating point.

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>

#include "hyperinv/prime_field.hpp"
#include "hyperinv/rational.hpp"

namespace hyperinv {

using Complex = std::complex<double>;

template <class T>
struct domain_traits;

template <>
struct domain_traits<Rational> {
    static constexpr bool exact = true;
    static Rational from_int(long n, const Rational&) { return Rational(n); }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static bool equal(const Rational& x, const Rational& y, double) { return x == y; }
    static bool same_domain(const Rational&, const Rational&) { return true; }
    static Complex to_complex(const Rational& x) { return {x.to_double(), 0.0}; }
};

template <>
struct domain_traits<PrimeFieldElement> {
    static constexpr bool exact = true;
    static PrimeFieldElement from_int(long n, const PrimeFieldElement& like) { return {n, like.modulus()}; }
    static bool is_zero(const PrimeFieldElement& x) { return x.is_zero(); }
    static bool equal(const PrimeFieldElement& x, const PrimeFieldElement& y, double) { return x == y; }
    static bool same_domain(const PrimeFieldElement& x, const PrimeFieldElement& y)
    {
        return x.modulus() == y.modulus();
    }
};

template <>
struct domain_traits<Complex> {
    static constexpr bool exact = false;
    static Complex from_int(long n, const Complex&) { return {static_cast<double>(n), 0.0}; }
    static bool is_zero(const Complex& x) { return x == Complex{}; }
    /// Relative comparison, absolute near zero.
    static bool equal(const Complex& x, const Complex& y, double tol)
    {
        double scale = std::max({1.0, std::abs(x), std::abs(y)});
        return std::abs(x - y) <= tol * scale;
    }
    static bool same_domain(const Complex&, const Complex&) { return true; }
    static Complex to_complex(const Complex& x) { return x; }
};

template <class T>
concept Coefficient = requires(const T& a, const T& b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a / b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { domain_traits<T>::is_zero(a) } -> std::convertible_to<bool>;
};

template <Coefficient T>
T zero_like(const T& like)
{
    return domain_traits<T>::from_int(0, like);
}

template <Coefficient T>
T one_like(const T& like)
{
    return domain_traits<T>::from_int(1, like);
}

template <Coefficient T>
bool is_zero(const T& x)
{
    return domain_traits<T>::is_zero(x);
}

/// x^e by repeated squaring, e >= 0.
template <Coefficient T>
T power(const T& x, std::uint64_t e)
{
    T result = one_like(x);
    T base = x;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

}  // namespace hyperinv
