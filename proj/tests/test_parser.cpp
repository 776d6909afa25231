#include <gtest/gtest.h>

#include "ffreiman/parser.hpp"
#include "ffreiman/random.hpp"

using namespace ffreiman;

namespace {

using QR = RatFunc<RationalField>;
const RationalField Q;

QR parse(const std::string& s) { return parse_ratfunc(s, Q); }
QR poly(std::vector<long> c) { return QR(Poly<RationalField>(Q, {c.begin(), c.end()})); }

}  // namespace

TEST(Parser, Examples) {
    EXPECT_EQ(parse("x^2 + 1/(x-1)"), QR(Poly<RationalField>(Q, {1, 0, -1, 1}), Poly<RationalField>(Q, {-1, 1})));
    EXPECT_EQ(parse("(x+1)*x^3"), poly({0, 0, 0, 1, 1}));
    EXPECT_THROW(parse("1/(x-x)"), ZeroDenominator);
}

TEST(Parser, Precedence) {
    EXPECT_EQ(parse("-x^2"), poly({0, 0, -1}));
    EXPECT_THROW(parse("x^2^3"), SyntaxError);  // exponents are literals, so no chains
    EXPECT_EQ(parse("010 + x"), poly({10, 1}));
    EXPECT_EQ(parse("x^09"), parse("x^9"));
    EXPECT_EQ(parse("1 - 2 - 3"), poly({-4}));
    EXPECT_EQ(parse("8/4/2"), poly({1}));
    EXPECT_EQ(parse("3/4*x"), QR(Poly<RationalField>(Q, {Rational(0), Rational(3, 4)})));
    EXPECT_EQ(parse("x/2"), QR(Poly<RationalField>(Q, {Rational(0), Rational(1, 2)})));
    EXPECT_EQ(parse("(x)^0"), poly({1}));
}

TEST(Parser, SyntaxErrorsCarryPosition) {
    try {
        parse_ratfunc("x + * 2", Q, 4);
        FAIL() << "expected a syntax error";
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.line(), 4);
        EXPECT_EQ(e.column(), 5);
    }
    for (const char* bad : {"", "x^-1", "x^y", "(x", "x)", "2x", "y", "1/0", "x^1.5", "3 4"}) EXPECT_THROW(parse(bad), SyntaxError) << bad;
}

TEST(Parser, InstanceFiles) {
    const auto a = parse_instance_file("field: q\n1\nx\nx^2");
    EXPECT_FALSE(a.field.prime);
    EXPECT_EQ(a.lines.size(), 3u);
    const auto b = parse_instance_file("# comment\nfield: fp 101\n\n1\n  x^4  # trailing\n");
    EXPECT_TRUE(b.field.prime);
    EXPECT_EQ(b.field.p, 101u);
    ASSERT_EQ(b.lines.size(), 2u);
    EXPECT_EQ(b.lines[1].first, 5);
    EXPECT_THROW(parse_instance_file("field: fp 4\n1\n"), NotPrime);
    EXPECT_THROW(parse_instance_file("1\nx\n"), SyntaxError);
    EXPECT_THROW(parse_instance_file("field: r\n1\n"), SyntaxError);
    const PrimeField K(101);
    EXPECT_EQ(instance_generators(b, K)[1], RatFunc<PrimeField>(Poly<PrimeField>::monomial(K, K.one(), 4)));
}

TEST(Parser, PlacesAndDivisors) {
    EXPECT_TRUE(parse_place("inf", Q).is_infinity());
    EXPECT_EQ(*parse_place("-3/2", Q).alpha, Rational(-3, 2));
    const auto d = parse_divisor("5*inf + 1*0 - 2*-1", Q);
    EXPECT_EQ(d.degree(), 4);
    EXPECT_EQ(parse_divisor(d.to_string(), Q), d);
    EXPECT_THROW(parse_divisor("5*inf +", Q), SyntaxError);
}

TEST(Parser, RenderAndReparseIsIdentity) {
    Rng rng(77);
    const PrimeField K(10007);
    for (int k = 0; k < 300; ++k) {
        std::vector<Rational> n, d;
        for (int i = 0, m = static_cast<int>(uniform_int(rng, 0, 5)); i <= m; ++i)
            n.emplace_back(uniform_int(rng, -20, 20), uniform_int(rng, 1, 6));
        for (int i = 0, m = static_cast<int>(uniform_int(rng, 0, 4)); i <= m; ++i) d.emplace_back(uniform_int(rng, -9, 9));
        const Poly<RationalField> pd(Q, d);
        if (pd.is_zero()) continue;
        const QR f(Poly<RationalField>(Q, n), pd);
        EXPECT_EQ(parse(f.to_string()), f) << f.to_string();
        std::vector<Zp> fn;
        for (const auto& c : n) fn.push_back(K.from_rational(c));
        const RatFunc<PrimeField> g(Poly<PrimeField>(K, fn), Poly<PrimeField>::one(K));
        EXPECT_EQ(parse_ratfunc(g.to_string(), K), g);
    }
}

TEST(Parser, ArbitraryBytesOnlyRaiseLibraryErrors) {
    Rng rng(99);
    const std::string alphabet = "x0123456789+-*/^() \t#:fpq\n\x01\xff";
    for (int k = 0; k < 4000; ++k) {
        std::string s;
        for (int i = 0, n = static_cast<int>(uniform_int(rng, 0, 24)); i < n; ++i)
            s += alphabet[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(alphabet.size()) - 1))];
        try {
            parse(s);
        } catch (const Error&) {
        }
        try {
            const auto inst = parse_instance_file("field: q\n" + s);
            instance_generators(inst, Q);
        } catch (const Error&) {
        }
    }
    std::string deep(5000, '(');
    EXPECT_THROW(parse(deep + "x"), SyntaxError);
    EXPECT_THROW(parse("x^99999999999999999999"), SyntaxError);
}
