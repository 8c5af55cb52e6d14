#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "hyperinv/error.hpp"

namespace hyperinv {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        out.push_back(q);
        while (n % q == 0) n /= q;
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace detail

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Element of F_p for an odd prime p chosen at run time. Mixing moduli in one
/// operation raises errc::domain_mismatch.
class PrimeFieldElement {
public:
    PrimeFieldElement() = default;

    PrimeFieldElement(std::int64_t value, std::uint64_t modulus) : modulus_(modulus)
    {
        if (modulus < 3 || !is_prime(modulus))
            throw error(errc::invalid_argument, "modulus " + std::to_string(modulus) + " is not an odd prime");
        std::int64_t m = static_cast<std::int64_t>(modulus);
        std::int64_t r = value % m;
        value_ = static_cast<std::uint64_t>(r < 0 ? r + m : r);
    }

    std::uint64_t value() const noexcept { return value_; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return value_ == 0; }

    PrimeFieldElement& operator+=(const PrimeFieldElement& o)
    {
        check(o);
        value_ += o.value_;
        if (value_ >= modulus_) value_ -= modulus_;
        return *this;
    }
    PrimeFieldElement& operator-=(const PrimeFieldElement& o)
    {
        check(o);
        value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + modulus_ - o.value_;
        return *this;
    }
    PrimeFieldElement& operator*=(const PrimeFieldElement& o)
    {
        check(o);
        value_ = detail::mulmod(value_, o.value_, modulus_);
        return *this;
    }
    PrimeFieldElement& operator/=(const PrimeFieldElement& o) { return *this *= o.inverse(); }

    PrimeFieldElement inverse() const
    {
        if (value_ == 0) throw error(errc::invalid_argument, "inverse of zero in F_p");
        return raw(detail::powmod(value_, modulus_ - 2, modulus_), modulus_);
    }

    PrimeFieldElement pow(std::uint64_t e) const { return raw(detail::powmod(value_, e, modulus_), modulus_); }

    /// Multiplicative order; the element must be nonzero.
    std::uint64_t order() const
    {
        if (value_ == 0) throw error(errc::invalid_argument, "zero has no multiplicative order");
        std::uint64_t ord = modulus_ - 1;
        for (std::uint64_t q : detail::prime_factors(modulus_ - 1)) {
            while (ord % q == 0 && detail::powmod(value_, ord / q, modulus_) == 1) ord /= q;
        }
        return ord;
    }

    friend PrimeFieldElement operator+(PrimeFieldElement a, const PrimeFieldElement& b) { return a += b; }
    friend PrimeFieldElement operator-(PrimeFieldElement a, const PrimeFieldElement& b) { return a -= b; }
    friend PrimeFieldElement operator*(PrimeFieldElement a, const PrimeFieldElement& b) { return a *= b; }
    friend PrimeFieldElement operator/(PrimeFieldElement a, const PrimeFieldElement& b) { return a /= b; }
    friend PrimeFieldElement operator-(const PrimeFieldElement& a)
    {
        return raw(a.value_ == 0 ? 0 : a.modulus_ - a.value_, a.modulus_);
    }

    friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b)
    {
        a.check(b);
        return a.value_ == b.value_;
    }

    friend std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& x)
    {
        return os << x.value_ << " (mod " << x.modulus_ << ")";
    }

private:
    static PrimeFieldElement raw(std::uint64_t v, std::uint64_t m)
    {
        PrimeFieldElement x;
        x.value_ = v;
        x.modulus_ = m;
        return x;
    }

    void check(const PrimeFieldElement& o) const
    {
        if (modulus_ != o.modulus_)
            throw error(errc::domain_mismatch, "prime field moduli differ: " + std::to_string(modulus_) + " vs " +
                                                   std::to_string(o.modulus_));
    }

    std::uint64_t value_ = 0;
    std::uint64_t modulus_ = 0;
};

/// Smallest prime p > lower_bound with p = 1 (mod n).
inline std::uint64_t prime_congruent_one(std::uint64_t n, std::uint64_t lower_bound)
{
    std::uint64_t p = lower_bound - lower_bound % n + 1;
    while (p <= lower_bound || !is_prime(p)) p += n;
    return p;
}

/// A primitive n-th root of unity in F_p; requires p = 1 (mod n).
inline PrimeFieldElement primitive_root_of_unity(std::uint64_t n, std::uint64_t p)
{
    if ((p - 1) % n != 0)
        throw error(errc::invalid_argument, "F_" + std::to_string(p) + " has no primitive " + std::to_string(n) +
                                                "-th root of unity");
    for (std::int64_t x = 2; x < static_cast<std::int64_t>(p); ++x) {
        auto eps = PrimeFieldElement(x, p).pow((p - 1) / n);
        if (eps.order() == n) return eps;
    }
    throw error(errc::invalid_argument, "no primitive root of unity found");
}

}  // namespace hyperinv
