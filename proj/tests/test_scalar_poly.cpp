#include <gtest/gtest.h>

#include <random>

#include "ffreiman/ratfunc.hpp"

using namespace ffreiman;

namespace {

using QP = Poly<RationalField>;
using FP = Poly<PrimeField>;
using QR = RatFunc<RationalField>;
const RationalField Q;

QP qp(std::vector<long> c) {
    std::vector<Rational> v(c.begin(), c.end());
    return QP(Q, v);
}

QP random_qp(std::mt19937_64& rng, int max_deg) {
    const int d = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    std::vector<long> c;
    for (int i = 0; i <= d; ++i) c.push_back(static_cast<long>(rng() % 7) - 3);
    return qp(c);
}

}  // namespace

TEST(Scalar, RationalCanonical) {
    Rational a(6, -8);
    EXPECT_EQ(a.to_string(), "-3/4");
    EXPECT_TRUE((a + Rational(3, 4)).is_zero());
    EXPECT_THROW(Rational(1, 0), ZeroDenominator);
    EXPECT_THROW(Rational(0).inverse(), ZeroDenominator);
}

TEST(Scalar, PrimeFieldArithmetic) {
    PrimeField K(101);
    EXPECT_EQ(K.from_int(-1).value(), 100u);
    Zp a = K.from_int(37);
    EXPECT_TRUE((a * a.inverse()).is_one());
    EXPECT_EQ(K.from_rational(Rational(1, 2)).value(), 51u);
    EXPECT_THROW(PrimeField(4), NotPrime);
    EXPECT_THROW(PrimeField(1), NotPrime);
    EXPECT_THROW(K.from_rational(Rational(1, 101)), ZeroDenominator);
}

TEST(Scalar, LargePrimeInverse) {
    PrimeField K(9223372036854775783ULL);  // largest prime below 2^63
    Zp a = K.from_int(123456789);
    EXPECT_TRUE((a * a.inverse()).is_one());
    EXPECT_TRUE(is_prime(1000003));
    EXPECT_FALSE(is_prime(1000001));
}

TEST(Poly, GcdExamples) {
    EXPECT_EQ(gcd(qp({-1, 0, 1}), qp({1, -2, 1})), qp({-1, 1}));
    EXPECT_EQ(gcd(qp({0, 0, 0, 2}), QP(Q)), qp({0, 0, 0, 1}));
    EXPECT_EQ(gcd(qp({1, 0, 1}), qp({-1, 1})), qp({1}));
    EXPECT_TRUE(gcd(QP(Q), QP(Q)).is_zero());
}

TEST(Poly, ZeroDegreeSentinel) {
    EXPECT_EQ(QP(Q).degree(), kDegNegInf);
    EXPECT_NE(QP(Q).degree(), -1);
}

// Trial-division oracle: the gcd divides both inputs, the planted common
// factor divides the gcd, and the cofactors are coprime.
TEST(Poly, GcdRandomAgainstTrialDivision) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const QP c = random_qp(rng, 3);
        const QP a = random_qp(rng, 4) * c, b = random_qp(rng, 4) * c;
        const QP g = gcd(a, b);
        if (a.is_zero() && b.is_zero()) {
            EXPECT_TRUE(g.is_zero());
            continue;
        }
        EXPECT_TRUE(g.is_monic());
        EXPECT_TRUE(g.divides(a));
        EXPECT_TRUE(g.divides(b));
        if (!c.is_zero()) {
            EXPECT_TRUE(c.divides(g));
        }
        // no common factor is left after dividing out the gcd
        if (!a.is_zero() && !b.is_zero()) {
            EXPECT_EQ(gcd(a / g, b / g).degree(), 0);
        }
    }
}

TEST(RatFunc, MakeExamples) {
    EXPECT_EQ(QR(qp({-1, 0, 1}), qp({-1, 1})), QR(qp({1, 1})));
    EXPECT_EQ(QR(qp({0, 2}), qp({2})), QR::x(Q));
    const QR r(qp({1}), qp({-2, 2}));
    EXPECT_EQ(r.num(), QP(Q, {Rational(1, 2)}));
    EXPECT_EQ(r.den(), qp({-1, 1}));
    EXPECT_THROW(QR(qp({1}), QP(Q)), ZeroDenominator);
}

TEST(RatFunc, Idempotent) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        QP d = random_qp(rng, 4);
        if (d.is_zero()) continue;
        const QR r(random_qp(rng, 4), d);
        EXPECT_EQ(QR(r.num(), r.den()), r);
        EXPECT_TRUE(r.is_zero() || r.den().is_monic());
        if (!r.is_zero()) {
            EXPECT_EQ(gcd(r.num(), r.den()).degree(), 0);
            EXPECT_EQ(r * r.inverse(), QR::one(Q));
        }
    }
}

TEST(RatFunc, ComposeAndFieldOps) {
    const QR x = QR::x(Q);
    const QR f = (x * x + QR::one(Q)) / x;
    EXPECT_EQ(f.compose(x * x), (x.pow(4) + QR::one(Q)) / (x * x));
    EXPECT_EQ((f - f), QR(Q));
    EXPECT_EQ(f.to_string(), "(x^2 + 1)/x");
}

TEST(RootFactorization, Examples) {
    auto f = linear_root_factorization(qp({0, -1, 0, 1}));
    EXPECT_EQ(f.roots.size(), 3u);
    EXPECT_EQ(f.roots.at(Rational(0)), 1);
    EXPECT_EQ(f.roots.at(Rational(1)), 1);
    EXPECT_EQ(f.roots.at(Rational(-1)), 1);
    EXPECT_EQ(f.nonsplit, qp({1}));

    f = linear_root_factorization(qp({4, -4, 1}));
    EXPECT_EQ(f.roots.size(), 1u);
    EXPECT_EQ(f.roots.at(Rational(2)), 2);

    f = linear_root_factorization(qp({1, 0, 1}));
    EXPECT_TRUE(f.roots.empty());
    EXPECT_EQ(f.nonsplit, qp({1, 0, 1}));
    EXPECT_THROW(linear_root_factorization(QP(Q)), InvalidParameter);
}

TEST(RootFactorization, RationalRootsWithLargeCoefficients) {
    // (3x - 2)^2 (5x + 7) (x^2 - 2) * 6
    const QP p = qp({-2, 3}).pow(2) * qp({7, 5}) * qp({-2, 0, 1}) * qp({6});
    const auto f = linear_root_factorization(p);
    EXPECT_EQ(f.roots.at(Rational(2, 3)), 2);
    EXPECT_EQ(f.roots.at(Rational(-7, 5)), 1);
    EXPECT_EQ(f.nonsplit, qp({-2, 0, 1}));
    EXPECT_EQ(f.expand(), p);
}

TEST(RootFactorization, ReconstructsRandom) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        QP p = random_qp(rng, 5) * qp({static_cast<long>(rng() % 9) - 4, 1});
        if (p.is_zero()) continue;
        EXPECT_EQ(linear_root_factorization(p).expand(), p);
    }
}

TEST(RootFactorization, PrimeFieldSmallAndLarge) {
    for (std::uint64_t prime : {7ULL, 101ULL, 1000003ULL, 2305843009213693951ULL}) {
        PrimeField K(prime);
        auto lin = [&](long a) { return FP::linear(K, K.from_int(a)); };
        // (x-3)^2 (x+5) (x-12)
        FP p = lin(3).pow(2) * lin(-5) * lin(12);
        const auto f = linear_root_factorization(p);
        EXPECT_EQ(f.expand(), p) << prime;
        EXPECT_EQ(f.nonsplit.degree(), 0);
        int total = 0;
        for (const auto& [a, m] : f.roots) total += m;
        EXPECT_EQ(total, 4);
        EXPECT_EQ(f.roots.at(K.from_int(3)), 2);
    }
    PrimeField K(1000003);
    // x^2 + 1 splits iff p = 1 mod 4; 1000003 = 3 mod 4
    const auto f = linear_root_factorization(FP(K, {K.one(), K.zero(), K.one()}));
    EXPECT_TRUE(f.roots.empty());
    EXPECT_EQ(f.nonsplit.degree(), 2);
}
