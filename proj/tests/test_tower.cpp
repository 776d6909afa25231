#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "ffreiman/filtration.hpp"
#include "ffreiman/parser.hpp"
#include "ffreiman/random.hpp"
#include "ffreiman/tower.hpp"

using namespace ffreiman;

namespace {

using QR = RatFunc<RationalField>;
using QS = Subspace<RationalField>;
const RationalField Q;

QR parse(const std::string& s) { return parse_ratfunc(s, Q); }

QR random_nonconstant(Rng& rng, int max_deg) {
    while (true) {
        std::vector<Rational> n, d;
        for (int i = 0, k = static_cast<int>(uniform_int(rng, 0, max_deg)); i <= k; ++i) n.emplace_back(uniform_int(rng, -3, 3));
        for (int i = 0, k = static_cast<int>(uniform_int(rng, 0, max_deg)); i <= k; ++i) d.emplace_back(uniform_int(rng, -3, 3));
        const Poly<RationalField> pn(Q, n), pd(Q, d);
        if (pn.is_zero() || pd.is_zero()) continue;
        const QR f(pn, pd);
        if (!f.is_constant()) return f;
    }
}

}  // namespace

TEST(Tower, PoleCountExamples) {
    EXPECT_EQ(pole_count(parse("x^3 + x")), 3);
    EXPECT_EQ(pole_count(parse("1/(x^2 - 1)")), 2);
    EXPECT_EQ(pole_count(parse("(x^2+1)/(x-3)")), 2);
    EXPECT_THROW(pole_count(parse("7")), ConstantElement);
}

TEST(Tower, IndexOfKnownSubfields) {
    EXPECT_EQ(subfield_index<RationalField>({parse("x^2"), parse("x^3")}), 1);
    EXPECT_EQ(subfield_index<RationalField>({parse("x^2"), parse("x^4 + 3*x^2")}), 2);
    EXPECT_EQ(subfield_index<RationalField>({parse("x^2 + 1/x^2")}), 4);
    EXPECT_EQ(subfield_index<RationalField>({parse("x^2 + 1/x^2"), parse("x + 1/x")}), 2);
    EXPECT_THROW(luroth_generator<RationalField>({parse("1"), parse("2")}), AllConstant);
}

TEST(Tower, ComposedGeneratorsRecoverTheInnerFunction) {
    Rng rng(31);
    for (int k = 0; k < 25; ++k) {
        const QR h = random_nonconstant(rng, 2);
        const QR g1 = random_nonconstant(rng, 2), g2 = random_nonconstant(rng, 2);
        const std::vector<QR> gens{g1.compose(h), g2.compose(h)};
        if (gens[0].is_constant() || gens[1].is_constant()) continue;
        const QR y = luroth_generator(gens);
        const int idx = subfield_index(gens);
        // K(gens) lies inside K(h), so its index is a multiple of [K(x) : K(h)]
        EXPECT_EQ(idx % pole_count(h), 0) << h.to_string();
        EXPECT_EQ(idx, pole_count(y));
        for (const auto& e : gens) {
            const auto r = express_in(e, y);
            ASSERT_TRUE(r.has_value()) << e.to_string() << " via " << y.to_string();
            EXPECT_EQ(r->compose(y), e);
        }
    }
}

TEST(Tower, EvaluationAndGcdGeneratorsAgree) {
    Rng rng(77);
    int compared = 0;
    for (int k = 0; k < 40; ++k) {
        const QR h = random_nonconstant(rng, 2);
        std::vector<QR> gens{random_nonconstant(rng, 2).compose(h), random_nonconstant(rng, 2).compose(h)};
        if (gens[0].is_constant() || gens[1].is_constant()) continue;
        std::stable_sort(gens.begin(), gens.end(), [](const QR& a, const QR& b) { return pole_count(a) < pole_count(b); });
        const int g = std::gcd(pole_count(gens[0]), pole_count(gens[1]));
        if (g == 1) continue;
        const auto y = detail::luroth_by_evaluation(gens, g);
        ASSERT_TRUE(y.has_value());
        EXPECT_EQ(*y, detail::luroth_by_gcd(gens));
        ++compared;
    }
    EXPECT_GE(compared, 10);
}

TEST(Tower, SmallPrimeFieldFallsBackToGcd) {
    const PrimeField F3(3);
    const std::vector<RatFunc<PrimeField>> gens{parse_ratfunc("x^2", F3), parse_ratfunc("x^4 + x^2", F3)};
    // three points cannot pin down a degree-2 coefficient
    EXPECT_FALSE(detail::luroth_by_evaluation(gens, 2));
    EXPECT_EQ(luroth_generator(gens), parse_ratfunc("-x^2", F3));
}

// pole counts 10 and 12 with wide coefficients; the K[x][T] remainder
// sequence ran for minutes here
TEST(Tower, WideCoefficientGeneratorsStayFast) {
    const std::string den = "(x^6 + 6*x^5 + x^4 - 48*x^3 - 56*x^2 + 96*x + 144)";
    const std::vector<QR> gens{
        parse("(x^10 + 3*x^9 + 3*x^8 + 3*x^7 + 12*x^5 + 2*x^4 - 96*x^3 - 112*x^2 + 192*x + 291)/" + den),
        parse("(x^12 - x^11 + 3/2*x^9 - 15/2*x^5 + 47*x^3 + 56*x^2 - 97*x - 145)/" + den)};
    EXPECT_EQ(subfield_index(gens), 1);
}

TEST(Tower, DescentKeepsDimensionAndGenus) {
    const QS s = QS::span(Q, {parse("1"), parse("x^2"), parse("x^4"), parse("x^8")});
    const QR y = luroth_generator(s.basis());
    EXPECT_EQ(pole_count(y), 2);
    const QS d = descend(s, y);
    EXPECT_EQ(d.dim(), s.dim());
    EXPECT_EQ(product(d, d).dim(), product(s, s).dim());
    EXPECT_EQ(subfield_index(d.basis()), 1);
}

TEST(Tower, IndexChainOnFiltration) {
    const auto fb = filtered_basis(QS::span(Q, {parse("1"), parse("x^2"), parse("x^3")}));
    const auto chain = subfield_index_chain(natural_filtration(fb));
    EXPECT_FALSE(chain[0].has_value());
    EXPECT_EQ(chain[1], 2);
    EXPECT_EQ(chain[2], 1);
}

TEST(Tower, ValuationGapProbe) {
    const QS s = QS::span(Q, {parse("1"), parse("x"), parse("x^3 + 1/(x-1)")});
    const auto w = valuation_gap_probe(s, 5, 9);
    EXPECT_EQ(w.size(), 5u);
    for (const auto& g : w) {
        const Place<RationalField> p = Place<RationalField>::finite(g.alpha);
        EXPECT_EQ(valuation(g.s1, p), valuation(g.s2, p) + 1);
        EXPECT_EQ(g.gcd_valuations, 1);
        EXPECT_TRUE(s.contains(g.s1));
        EXPECT_TRUE(s.contains(g.s2));
    }
    EXPECT_THROW(valuation_gap_probe(QS::span(Q, {parse("1")}), 3, 1), InvalidParameter);
}
