#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace hyperinv;
using namespace hyperinv::testing;

namespace {

PQ X() { return PQ({Q(0), Q(1)}); }

}  // namespace

TEST(Rational, CanonicalForm)
{
    Q q(6, -4);
    EXPECT_EQ(q.to_string(), "-3/2");
    EXPECT_EQ(q.denominator(), 2);
    EXPECT_EQ(Q(4, 2).to_string(), "2");
    EXPECT_EQ(Q::parse("-10/4"), Q(-5, 2));
    EXPECT_EQ(Q::parse("+7"), Q(7));
    EXPECT_THROW(Q(1, 0), error);
    EXPECT_THROW(Q::parse("1/0"), error);
    EXPECT_THROW(Q::parse("1.5"), error);
    EXPECT_THROW(Q::parse(""), error);
    EXPECT_THROW(Q(1) / Q(0), error);
}

TEST(Rational, PowerAndOrder)
{
    EXPECT_EQ(pow(Q(2, 3), 3), Q(8, 27));
    EXPECT_EQ(pow(Q(2, 3), -2), Q(9, 4));
    EXPECT_EQ(pow(Q(-5), 0), Q(1));
    EXPECT_LT(Q(-1, 2), Q(1, 3));
    EXPECT_EQ(abs(Q(-3, 7)), Q(3, 7));
}

TEST(PrimeField, ArithmeticAndOrder)
{
    PrimeFieldElement four(4, 13);
    EXPECT_EQ(four.pow(6), PrimeFieldElement(1, 13));
    EXPECT_EQ(four.order(), 6u);
    EXPECT_EQ(four * four.inverse(), PrimeFieldElement(1, 13));
    EXPECT_EQ(PrimeFieldElement(-1, 13), PrimeFieldElement(12, 13));
    EXPECT_THROW(PrimeFieldElement(1, 15), error);
    EXPECT_THROW(PrimeFieldElement(1, 2), error);
    try {
        (void)(PrimeFieldElement(1, 13) + PrimeFieldElement(1, 17));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::domain_mismatch);
    }
}

TEST(PrimeField, RootsOfUnity)
{
    for (std::uint64_t n : {6u, 8u, 10u, 22u}) {
        const auto p = prime_congruent_one(n, 1000);
        EXPECT_TRUE(is_prime(p));
        EXPECT_EQ((p - 1) % n, 0u);
        EXPECT_EQ(primitive_root_of_unity(n, p).order(), n);
    }
}

TEST(Poly, AddExamples)
{
    EXPECT_EQ(PQ({1, 0, 1}) + PQ({0, 0, -1}), PQ({1}));
    EXPECT_EQ(PQ() + PQ({1, 2}), PQ({1, 2}));
    EXPECT_EQ(PQ({Q(1, 2), 1}) + PQ({Q(1, 2), 1}), PQ({1, 2}));
    EXPECT_EQ((PQ({1, 0, 1}) + PQ({0, 0, -1})).degree(), 0);
    EXPECT_TRUE((PQ({1, 2}) - PQ({1, 2})).is_zero());
}

TEST(Poly, MulExamples)
{
    EXPECT_EQ(PQ({1, 0, 1}) * PQ({1, 0, 0, 0, 1}), PQ({1, 0, 1, 0, 1, 0, 1}));
    EXPECT_EQ(PQ({3, 4}) * PQ({1}), PQ({3, 4}));
    EXPECT_EQ(PQ({1, 0, -1, 0, 1}) * PQ({1, 0, -2, 0, 1}), PQ({1, 0, -3, 0, 4, 0, -3, 0, 1}));
}

TEST(Poly, MixedDomainsRejected)
{
    using PF = PrimeFieldElement;
    Poly<PF> a({PF(1, 13), PF(1, 13)});
    Poly<PF> b({PF(1, 17), PF(1, 17)});
    EXPECT_THROW(a + b, error);
    EXPECT_THROW(a * b, error);
    EXPECT_THROW(Poly<PF>(std::vector<PF>{PF(1, 13), PF(1, 17)}), error);
}

TEST(Poly, ComposeExamples)
{
    EXPECT_EQ(compose(PQ({1, 3, 1}), PQ({0, 0, 1})), PQ({1, 0, 3, 0, 1}));
    const PQ p({5, -1, 0, 2});
    EXPECT_EQ(compose(X(), p), p);
    EXPECT_EQ(compose(PQ({7}), p), PQ({7}));
}

TEST(Poly, TaylorShiftExamples)
{
    const PQ e({29, -44, 27, -8, 1});
    EXPECT_EQ(taylor_shift(e, Q(2)), PQ({1, 0, 3, 0, 1}));
    EXPECT_EQ(taylor_shift(e, Q(0)), e);
    EXPECT_EQ(taylor_shift(PQ({0, 0, 1}), Q(1)), PQ({1, 2, 1}));
}

TEST(Poly, TaylorShiftMatchesCompose)
{
    // integer fast path against substitution X -> X + c
    for (int trial = 0; trial < 200; ++trial) {
        const PQ p = random_poly(static_cast<int>(random_int(0, 12)));
        const Q c = random_rational();
        EXPECT_EQ(taylor_shift(p, c), compose(p, PQ({c, Q(1)})));
    }
}

TEST(Poly, ReverseExamples)
{
    EXPECT_EQ(reverse(PQ({5, 3, 0, 2}), 3), PQ({2, 0, 3, 5}));
    const PQ pal({1, 2, 5, 2, 1});
    EXPECT_EQ(reverse(pal, 4), pal);
    const Q a(3), b(-7);
    EXPECT_EQ(reverse(PQ({1, 0, b, 0, a, 0, 1}), 6), PQ({1, 0, a, 0, b, 0, 1}));
    EXPECT_THROW(reverse(pal, 3), error);
}

TEST(Poly, ResultantExamples)
{
    EXPECT_EQ(resultant(PQ({-1, 0, 1}), PQ({-1, 1})), Q(0));
    // res(X - a, X - b) = a - b in the Sylvester convention
    const Q a(3), b(-5);
    EXPECT_EQ(resultant(PQ({-a, 1}), PQ({-b, 1})), a - b);
    const Q p(2), q(-3);
    const PQ cubic({q, p, 0, 1});
    EXPECT_EQ(resultant(cubic, cubic.derivative()), sylvester_resultant(cubic, cubic.derivative()));
    EXPECT_EQ(discriminant(cubic), Q(-4) * pow(p, 3) - Q(27) * q * q);
    EXPECT_THROW(resultant(PQ(), cubic), error);
}

TEST(Poly, ResultantAgreesWithSylvesterOracle)
{
    for (int trial = 0; trial < 150; ++trial) {
        const PQ a = random_poly(static_cast<int>(random_int(0, 6)), 5);
        const PQ b = random_poly(static_cast<int>(random_int(0, 6)), 5);
        EXPECT_EQ(resultant(a, b), sylvester_resultant(a, b)) << to_string(a) << " , " << to_string(b);
    }
}

TEST(Poly, DiscriminantExamples)
{
    const Q b(5), c(-3, 2);
    EXPECT_EQ(discriminant(PQ({c, b, 1})), b * b - Q(4) * c);
    EXPECT_EQ(discriminant(PQ({-1, 1}) * PQ({-1, 1}) * PQ({2, 1})), Q(0));
    EXPECT_THROW(discriminant(PQ({1, 1})), error);
}

TEST(Poly, SquarefreeExamples)
{
    EXPECT_TRUE(is_squarefree(PQ({1, 0, 1, 0, 1, 0, 1})));
    EXPECT_FALSE(is_squarefree(PQ({-1, 0, 1}) * PQ({-1, 0, 1})));
    EXPECT_TRUE(is_squarefree(PQ({7})));
}

TEST(Poly, RingAxioms)
{
    for (int trial = 0; trial < 100; ++trial) {
        const PQ f = random_poly(static_cast<int>(random_int(0, 6)));
        const PQ g = random_poly(static_cast<int>(random_int(0, 6)));
        const PQ h = random_poly(static_cast<int>(random_int(0, 6)));
        EXPECT_EQ((f + g) + h, f + (g + h));
        EXPECT_EQ(f + g, g + f);
        EXPECT_EQ((f * g) * h, f * (g * h));
        EXPECT_EQ(f * g, g * f);
        EXPECT_EQ(f * (g + h), f * g + f * h);
        EXPECT_EQ((f * g).degree(), f.degree() + g.degree());
    }
}

TEST(Poly, ComposeAssociative)
{
    for (int trial = 0; trial < 50; ++trial) {
        const PQ f = random_poly(static_cast<int>(random_int(0, 3)), 4);
        const PQ g = random_poly(static_cast<int>(random_int(0, 3)), 4);
        const PQ h = random_poly(static_cast<int>(random_int(0, 3)), 4);
        EXPECT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
    }
}

TEST(Poly, ShiftAndReverseRoundTrip)
{
    for (int trial = 0; trial < 100; ++trial) {
        PQ p = random_poly(static_cast<int>(random_int(1, 10)));
        const Q c = random_rational();
        EXPECT_EQ(taylor_shift(taylor_shift(p, c), -c), p);
        if (p.coeff(0).is_zero()) p = p + PQ({1});
        EXPECT_EQ(reverse(reverse(p, p.degree()), p.degree()), p);
    }
}

TEST(Poly, DiscriminantZeroIffNotSquarefree)
{
    for (int trial = 0; trial < 100; ++trial) {
        PQ p = random_poly(static_cast<int>(random_int(1, 4)), 5);
        const bool plant = trial % 2 == 0;
        if (plant) {
            const PQ r = random_poly(1, 5);
            p = p * r * r;
        } else {
            p = p * random_poly(1, 5);
        }
        if (p.degree() < 2) continue;
        EXPECT_EQ(discriminant(p).is_zero(), !is_squarefree(p));
        if (plant) {
            EXPECT_FALSE(is_squarefree(p));
        }
    }
}

TEST(Poly, DivmodAndGcd)
{
    for (int trial = 0; trial < 100; ++trial) {
        const PQ a = random_poly(static_cast<int>(random_int(0, 8)));
        const PQ b = random_poly(static_cast<int>(random_int(0, 5)));
        auto [q, r] = divmod(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree());
        const PQ common = random_poly(2);
        const PQ g = gcd(a * common, b * common);
        EXPECT_TRUE(divmod(g, common).second.is_zero());
        EXPECT_EQ(g.leading(), Q(1));
    }
}

TEST(Poly, Text)
{
    EXPECT_EQ(to_string(PQ({29, Q(1, 2), 0, -8, 1})), "X^4 - 8*X^3 + 1/2*X + 29");
    EXPECT_EQ(to_string(PQ()), "0");
    EXPECT_EQ(to_string(PQ({-1, -1})), "-X - 1");
}
