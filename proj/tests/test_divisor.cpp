#include <gtest/gtest.h>

#include <set>

#include "ffreiman/parser.hpp"
#include "ffreiman/random.hpp"

using namespace ffreiman;

namespace {

using QR = RatFunc<RationalField>;
using QS = Subspace<RationalField>;
using QD = Divisor<RationalField>;
using QPl = Place<RationalField>;
const RationalField Q;

QR parse(const std::string& s) { return parse_ratfunc(s, Q); }
QD div(const std::string& s) { return parse_divisor(s, Q); }

/// f in L(D) by checking v_P(f) >= -D(P) at every place that matters.
bool in_L_by_valuations(const QR& f, const QD& d) {
    if (f.is_zero()) return true;
    std::set<QPl> places{QPl::infinity()};
    for (const auto& [a, m] : linear_root_factorization(f.den()).roots) places.insert(QPl::finite(a));
    for (const auto& [p, c] : d.terms()) places.insert(p);
    for (const auto& p : places)
        if (valuation(f, p) < -d.coeff(p)) return false;
    return true;
}

}  // namespace

TEST(Divisor, Valuations) {
    const QR f = parse("(x-1)^2/(x^3*(x+2))");
    EXPECT_EQ(valuation(f, QPl::finite(Rational(1))), 2);
    EXPECT_EQ(valuation(f, QPl::finite(Rational(0))), -3);
    EXPECT_EQ(valuation(f, QPl::finite(Rational(-2))), -1);
    EXPECT_EQ(valuation(f, QPl::infinity()), 2);
    EXPECT_THROW(valuation(QR(Q), QPl::infinity()), ZeroElement);
}

TEST(Divisor, ArithmeticAndRendering) {
    const QD a = div("3*inf + 2*0"), b = div("1*inf - 1*1/2");
    EXPECT_EQ(a.degree(), 5);
    EXPECT_EQ((a + b).to_string(), "4*inf + 2*0 - 1*1/2");
    EXPECT_EQ((a - a).to_string(), "0");
    EXPECT_TRUE(b <= a + b + div("1*1/2"));
    EXPECT_FALSE(b.is_effective());
    EXPECT_EQ(div(a.to_string()), a);
}

TEST(Divisor, MinimalDivisorExamples) {
    EXPECT_EQ(minimal_divisor(QS::poly_space(Q, 4)), div("4*inf"));
    const QS s = QS::span(Q, {parse("1"), parse("x"), parse("1/(x-1)^2")});
    EXPECT_EQ(minimal_divisor(s), div("1*inf + 2*1"));
    EXPECT_TRUE(contained_in_L(s, minimal_divisor(s)));
    EXPECT_FALSE(contained_in_L(s, div("1*inf + 1*1")));
}

TEST(Divisor, NonSplitDenominatorDependsOnField) {
    EXPECT_THROW(minimal_divisor(QS::span(Q, {parse("1"), parse("1/(x^2+1)")})), NonSplitPlace);
    const PrimeField F5(5);
    const auto s = Subspace<PrimeField>::span(F5, {RatFunc<PrimeField>::one(F5), parse_ratfunc("1/(x^2+1)", F5)});
    EXPECT_EQ(minimal_divisor(s).to_string(), "1*2 + 1*3");
}

TEST(Divisor, RiemannRochDimensionIsDegreePlusOne) {
    for (const char* d : {"0", "3*inf", "2*0 + 1*-1", "-1*inf + 2*3", "4*inf - 2*1"}) {
        const QD dd = div(d);
        EXPECT_EQ(static_cast<int>(riemann_roch_space(Q, dd).dim()), std::max(dd.degree() + 1, 0)) << d;
    }
    EXPECT_TRUE(riemann_roch_space(Q, div("-1*inf")).is_zero());
}

TEST(Divisor, MembershipAgreesWithValuationScan) {
    Rng rng(3);
    for (int k = 0; k < 300; ++k) {
        QD d;
        d.add(QPl::infinity(), static_cast<int>(uniform_int(rng, -1, 4)));
        for (int j = 0; j < 2; ++j) d.add(QPl::finite(Rational(uniform_int(rng, -2, 2))), static_cast<int>(uniform_int(rng, -1, 2)));
        std::vector<Rational> num;
        for (int i = 0, n = static_cast<int>(uniform_int(rng, 0, 4)); i <= n; ++i) num.emplace_back(uniform_int(rng, -2, 2));
        Poly<RationalField> den = Poly<RationalField>::one(Q);
        for (int i = 0, n = static_cast<int>(uniform_int(rng, 0, 3)); i < n; ++i)
            den = den * Poly<RationalField>::linear(Q, Rational(uniform_int(rng, -2, 2)));
        const QR f(Poly<RationalField>(Q, num), den);
        EXPECT_EQ(in_riemann_roch(f, d), in_L_by_valuations(f, d)) << f.to_string() << " in L(" << d.to_string() << ")";
    }
}

TEST(Divisor, MinimalDivisorIsLeastContainingDivisor) {
    Rng rng(8);
    for (int k = 0; k < 60; ++k) {
        QD d = QD::at(QPl::infinity(), static_cast<int>(uniform_int(rng, 0, 4)));
        d.add(QPl::finite(Rational(uniform_int(rng, -2, 2))), static_cast<int>(uniform_int(rng, 0, 2)));
        const QS l = riemann_roch_space(Q, d);
        const QD m = minimal_divisor(l);
        EXPECT_TRUE(m <= d);
        EXPECT_EQ(m, d) << "L(D) has minimal divisor D when deg D >= 0 and D >= 0";
        for (const auto& [p, c] : m.terms()) {
            QD smaller = m;
            smaller.add(p, -1);
            EXPECT_FALSE(contained_in_L(l, smaller));
        }
    }
}
