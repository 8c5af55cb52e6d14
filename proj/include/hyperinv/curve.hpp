#pragma once

#include <string>
#include <utility>

#include "hyperinv/poly.hpp"

namespace hyperinv {

/// Y^2 = f(X) with f squarefree over Q, genus g >= 2 and deg f in {2g+1, 2g+2}.
class HyperellipticCurve {
public:
    HyperellipticCurve(int genus, Poly<Rational> f) : genus_(genus), f_(std::move(f))
    {
        if (genus_ < 2) throw error(errc::invalid_argument, "genus must be at least 2, got " + std::to_string(genus_));
        const int d = f_.degree();
        if (d != 2 * genus_ + 1 && d != 2 * genus_ + 2)
            throw error(errc::invalid_argument, "degree " + std::to_string(d) + " does not match genus " +
                                                    std::to_string(genus_) + " (expected " +
                                                    std::to_string(2 * genus_ + 1) + " or " +
                                                    std::to_string(2 * genus_ + 2) + ")");
        if (!is_squarefree(f_)) throw error(errc::degenerate_curve, "defining polynomial is not squarefree");
    }

    /// Genus inferred from the degree: g = floor((deg f - 1) / 2).
    static HyperellipticCurve from_polynomial(Poly<Rational> f)
    {
        const int g = (f.degree() - 1) / 2;
        return HyperellipticCurve(g, std::move(f));
    }

    int genus() const noexcept { return genus_; }
    const Poly<Rational>& f() const noexcept { return f_; }
    /// True when infinity is a branch point.
    bool odd_degree() const noexcept { return f_.degree() == 2 * genus_ + 1; }

    friend bool operator==(const HyperellipticCurve&, const HyperellipticCurve&) = default;

private:
    int genus_;
    Poly<Rational> f_;
};

}  // namespace hyperinv
