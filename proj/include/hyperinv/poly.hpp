#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hyperinv/domain.hpp"
#include "hyperinv/error.hpp"

namespace hyperinv {

/// Dense univariate polynomial, coeffs()[k] is the coefficient of X^k.
/// Trailing zeros are trimmed, so the leading coefficient of a nonzero
/// polynomial is nonzero and the zero polynomial has no coefficients.
template <Coefficient T>
class Poly {
public:
    Poly() = default;

    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs))
    {
        for (std::size_t i = 1; i < c_.size(); ++i) {
            if (!domain_traits<T>::same_domain(c_[0], c_[i]))
                throw error(errc::domain_mismatch, "polynomial coefficients from different domains");
        }
        trim();
    }

    Poly(std::initializer_list<T> coeffs) : Poly(std::vector<T>(coeffs)) {}

    static Poly constant(const T& c) { return Poly(std::vector<T>{c}); }

    /// c * X^k
    static Poly monomial(const T& c, std::size_t k)
    {
        std::vector<T> v(k + 1, zero_like(c));
        v[k] = c;
        return Poly(std::move(v));
    }

    /// Degree, -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    std::span<const T> coeffs() const noexcept { return c_; }
    const T& leading() const
    {
        if (c_.empty()) throw error(errc::invalid_argument, "zero polynomial has no leading coefficient");
        return c_.back();
    }

    /// Coefficient of X^k (zero beyond the degree).
    T coeff(std::size_t k) const
    {
        if (k < c_.size()) return c_[k];
        return c_.empty() ? T{} : zero_like(c_[0]);
    }

    T operator()(const T& x) const
    {
        if (c_.empty()) return zero_like(x);
        T acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly derivative() const
    {
        if (c_.size() <= 1) return {};
        std::vector<T> d;
        d.reserve(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(domain_traits<T>::from_int(long(k), c_[k]) * c_[k]);
        return Poly(std::move(d));
    }

    friend bool operator==(const Poly& a, const Poly& b)
    {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return combine(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return combine(a, b, true); }
    friend Poly operator-(const Poly& a)
    {
        std::vector<T> v;
        v.reserve(a.c_.size());
        for (const T& x : a.c_) v.push_back(-x);
        return Poly(std::move(v));
    }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        check_domain(a, b);
        std::vector<T> v(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (hyperinv::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(v));
    }

    friend Poly operator*(const Poly& a, const T& s)
    {
        std::vector<T> v;
        v.reserve(a.c_.size());
        for (const T& x : a.c_) v.push_back(x * s);
        return Poly(std::move(v));
    }
    friend Poly operator*(const T& s, const Poly& a) { return a * s; }

private:
    void trim()
    {
        while (!c_.empty() && hyperinv::is_zero(c_.back())) c_.pop_back();
    }

    static void check_domain(const Poly& a, const Poly& b)
    {
        if (!a.is_zero() && !b.is_zero() && !domain_traits<T>::same_domain(a.c_[0], b.c_[0]))
            throw error(errc::domain_mismatch, "polynomials over different coefficient domains");
    }

    static Poly combine(const Poly& a, const Poly& b, bool subtract)
    {
        check_domain(a, b);
        std::size_t n = std::max(a.c_.size(), b.c_.size());
        std::vector<T> v;
        v.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (i >= b.c_.size()) v.push_back(a.c_[i]);
            else if (i >= a.c_.size()) v.push_back(subtract ? -b.c_[i] : b.c_[i]);
            else v.push_back(subtract ? a.c_[i] - b.c_[i] : a.c_[i] + b.c_[i]);
        }
        return Poly(std::move(v));
    }

    std::vector<T> c_;
};

/// G(H(X)) by Horner's rule in the polynomial ring.
template <Coefficient T>
Poly<T> compose(const Poly<T>& g, const Poly<T>& h)
{
    if (g.is_zero()) return {};
    auto c = g.coeffs();
    Poly<T> acc = Poly<T>::constant(c.back());
    for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * h + Poly<T>::constant(c[i]);
    return acc;
}

/// p(X + c) by the quadratic synthetic-division scheme.
template <Coefficient T>
Poly<T> taylor_shift(const Poly<T>& p, const T& c)
{
    std::vector<T> a(p.coeffs().begin(), p.coeffs().end());
    const std::size_t n = a.size();
    if (n <= 1 || is_zero(c)) return p;
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j-- > i;) a[j] = a[j] + c * a[j + 1];
    return Poly<T>(std::move(a));
}

/// Exact shift over Q carried out in integer arithmetic: with c = p/q and
/// D the common denominator of the coefficients, shift the integer
/// polynomial sum(D a_i q^{n-i} Z^i) by p, then rescale Z = qX. This avoids a
/// gcd on every inner-loop operation.
inline Poly<Rational> taylor_shift(const Poly<Rational>& poly, const Rational& c)
{
    const auto coeffs = poly.coeffs();
    const std::size_t n1 = coeffs.size();
    if (n1 <= 1 || c.is_zero()) return poly;
    const std::size_t n = n1 - 1;

    mpz_class den = 1;
    for (const auto& a : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.get().get_den_mpz_t());

    const mpz_class p = c.numerator();
    const mpz_class q = c.denominator();
    std::vector<mpz_class> qpow(n1);
    qpow[0] = 1;
    for (std::size_t i = 1; i < n1; ++i) qpow[i] = qpow[i - 1] * q;

    std::vector<mpz_class> b(n1);
    for (std::size_t i = 0; i < n1; ++i) {
        b[i] = coeffs[i].get().get_num() * (den / coeffs[i].get().get_den());
        b[i] *= qpow[n - i];
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = n; j-- > i;) mpz_addmul(b[j].get_mpz_t(), p.get_mpz_t(), b[j + 1].get_mpz_t());

    const mpz_class scale = qpow[n] * den;
    std::vector<Rational> out;
    out.reserve(n1);
    for (std::size_t k = 0; k < n1; ++k) out.emplace_back(b[k] * qpow[k], scale);
    return Poly<Rational>(std::move(out));
}

/// X^n p(1/X); requires n >= deg p.
template <Coefficient T>
Poly<T> reverse(const Poly<T>& p, int n)
{
    if (n < p.degree())
        throw error(errc::invalid_argument,
                    "reversal bound " + std::to_string(n) + " below degree " + std::to_string(p.degree()));
    if (p.is_zero()) return p;
    std::vector<T> v(static_cast<std::size_t>(n) + 1, zero_like(p.coeffs()[0]));
    auto c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) v[static_cast<std::size_t>(n) - k] = c[k];
    return Poly<T>(std::move(v));
}

/// Quotient and remainder over a field.
template <Coefficient T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b)
{
    if (b.is_zero()) throw error(errc::invalid_argument, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<T>{}, a};
    std::vector<T> r(a.coeffs().begin(), a.coeffs().end());
    const auto bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const T inv_lead = one_like(bc.back()) / bc.back();
    std::vector<T> q(r.size() - db, zero_like(bc.back()));
    for (std::size_t k = r.size(); k-- > db;) {
        if (is_zero(r[k])) continue;
        T f = r[k] * inv_lead;
        q[k - db] = f;
        for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = r[k - db + j] - f * bc[j];
    }
    r.resize(db);
    return {Poly<T>(std::move(q)), Poly<T>(std::move(r))};
}

/// Monic greatest common divisor (zero if both inputs are zero).
template <Coefficient T>
Poly<T> gcd(Poly<T> a, Poly<T> b)
{
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        if (!r.is_zero()) r = r * (one_like(r.leading()) / r.leading());
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (one_like(a.leading()) / a.leading());
}

/// Resultant with the Sylvester-matrix convention
///   res(A, B) = lc(A)^deg B * prod_{A(a)=0} B(a),
/// so res(X - a, X - b) = a - b. Computed by the Euclidean remainder sequence.
template <Coefficient T>
T resultant(const Poly<T>& a, const Poly<T>& b)
{
    if (a.is_zero() || b.is_zero()) throw error(errc::undefined_resultant, "resultant with a zero polynomial");
    const int da = a.degree();
    const int db = b.degree();
    if (db == 0) return power(b.leading(), static_cast<std::uint64_t>(da));
    if (da == 0) return power(a.leading(), static_cast<std::uint64_t>(db));
    auto r = divmod(a, b).second;
    if (r.is_zero()) return zero_like(a.leading());
    T factor = power(b.leading(), static_cast<std::uint64_t>(da - r.degree()));
    if ((da * db) % 2 != 0) factor = -factor;
    return factor * resultant(b, r);
}

/// disc(p) = (-1)^{d(d-1)/2} res(p, p') / lc(p), d = deg p >= 2.
template <Coefficient T>
T discriminant(const Poly<T>& p)
{
    const int d = p.degree();
    if (d < 2) throw error(errc::invalid_argument, "discriminant needs degree >= 2, got " + std::to_string(d));
    T r = resultant(p, p.derivative()) / p.leading();
    return (d * (d - 1) / 2) % 2 ? -r : r;
}

/// True iff gcd(p, p') is constant.
template <Coefficient T>
bool is_squarefree(const Poly<T>& p)
{
    if (p.is_zero()) throw error(errc::invalid_argument, "squarefree test of the zero polynomial");
    if (p.degree() <= 0) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

/// Human-readable form, e.g. "X^4 - 8*X^3 + 1/2*X + 29".
inline std::string to_string(const Poly<Rational>& p, const std::string& var = "X")
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k].is_zero()) continue;
        Rational mag = abs(c[k]);
        if (first) {
            if (c[k].sign() < 0) os << "-";
        } else {
            os << (c[k].sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag == Rational(1);
        if (k == 0) {
            os << mag;
            continue;
        }
        if (!unit) os << mag << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

}  // namespace hyperinv
