#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "hyperinv/error.hpp"

namespace hyperinv {

/// Arbitrary-precision rational number, always in canonical form
/// (positive denominator, numerator and denominator coprime).
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}  // NOLINT: integers convert implicitly
    Rational(int n) : v_(static_cast<long>(n)) {}  // NOLINT
    Rational(long num, long den)
    {
        if (den == 0) throw error(errc::invalid_argument, "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den)
    {
        if (den == 0) throw error(errc::invalid_argument, "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "num" or "num/den" with optional sign on the numerator.
    static Rational parse(std::string_view text)
    {
        auto digits = [](std::string_view s) {
            if (s.empty()) return false;
            for (char ch : s)
                if (ch < '0' || ch > '9') return false;
            return true;
        };
        std::string_view body = text;
        if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
        auto slash = body.find('/');
        std::string_view num = body.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
        if (!digits(num) || (slash != std::string_view::npos && !digits(den)))
            throw error(errc::parse_error, "malformed rational '" + std::string(text) + "'");
        mpz_class n(std::string(num), 10);
        if (text.front() == '-') n = -n;
        mpz_class d(1);
        if (slash != std::string_view::npos) d = mpz_class(std::string(den), 10);
        if (d == 0) throw error(errc::parse_error, "zero denominator in '" + std::string(text) + "'");
        return Rational(n, d);
    }

    const mpq_class& get() const noexcept { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const noexcept { return sgn(v_); }
    double to_double() const { return v_.get_d(); }

    /// Canonical text: "num" for integers, otherwise "num/den".
    std::string to_string() const
    {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero()) throw error(errc::invalid_argument, "division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

private:
    mpq_class v_{0};
};

/// q^e for any integer e; e < 0 requires q != 0.
inline Rational pow(const Rational& q, long e)
{
    if (e < 0) {
        if (q.is_zero()) throw error(errc::invalid_argument, "zero to a negative power");
        return pow(Rational(1) / q, -e);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q.get().get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q.get().get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

inline Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

}  // namespace hyperinv
