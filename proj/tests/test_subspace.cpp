#include <gtest/gtest.h>

#include <set>

#include "ffreiman/freiman.hpp"
#include "ffreiman/random.hpp"

using namespace ffreiman;

namespace {

using QR = RatFunc<RationalField>;
using QS = Subspace<RationalField>;
const RationalField Q;

QR q(std::vector<long> num, std::vector<long> den = {1}) {
    return QR(Poly<RationalField>(Q, {num.begin(), num.end()}), Poly<RationalField>(Q, {den.begin(), den.end()}));
}

/// Rank of the coefficient vectors of polynomial numerators over a shared
/// denominator, by plain Gaussian elimination.
template <class F>
std::size_t rank_over(const F& K, const std::vector<Poly<F>>& v) {
    int width = 0;
    for (const auto& p : v) width = std::max(width, p.degree() + 1);
    Matrix<F> m(K, v.size(), static_cast<std::size_t>(std::max(width, 1)));
    for (std::size_t r = 0; r < v.size(); ++r)
        for (int c = 0; c <= v[r].degree(); ++c) m.at(r, static_cast<std::size_t>(c)) = v[r].coeff(c);
    return m.rref().size();
}

QR random_element(Rng& rng) {
    std::vector<long> num, den{1};
    for (int i = 0, d = static_cast<int>(uniform_int(rng, 0, 4)); i <= d; ++i) num.push_back(uniform_int(rng, -3, 3));
    if (uniform_int(rng, 0, 1)) den = {uniform_int(rng, -2, 2), 1};
    if (std::all_of(num.begin(), num.end(), [](long c) { return c == 0; })) num = {1};
    return q(num, den);
}

}  // namespace

TEST(Subspace, SpanDropsDependentGenerators) {
    const QS s = QS::span(Q, {q({1}), q({0, 1}), q({1, 1}), q({2, 3})});
    EXPECT_EQ(s.dim(), 2u);
    EXPECT_TRUE(s.contains(q({5, -7})));
    EXPECT_FALSE(s.contains(q({0, 0, 1})));
    EXPECT_EQ(s.degrees_ascending(), (std::vector<int>{0, 1}));
}

TEST(Subspace, EqualityIgnoresGeneratorOrderAndScaling) {
    const std::vector<QR> g{q({1}), q({0, 1}, {-1, 1}), q({0, 0, 1})};
    const QS a = QS::span(Q, g);
    const QS b = QS::span(Q, {g[2] * Rational(3), g[0] + g[1], g[1]});
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.common_den(), Poly<RationalField>::linear(Q, Rational(1)));
}

TEST(Subspace, PolySpaceAndScaling) {
    const QS p = QS::poly_space(Q, 4);
    EXPECT_EQ(p.dim(), 5u);
    EXPECT_EQ(p.max_degree(), 4);
    const QS s = p.scaled(q({1}, {0, 0, 1}));
    EXPECT_TRUE(s.contains(q({1}, {0, 0, 1})));
    EXPECT_TRUE(s.contains(q({0, 0, 0, 0, 1}, {0, 0, 1})));
    EXPECT_EQ(s.scaled(q({0, 0, 1})), p);
}

TEST(Subspace, ProductOfMonomialSpacesMatchesSumset) {
    Rng rng(17);
    for (int k = 0; k < 60; ++k) {
        std::vector<long> v;
        for (int i = 0, n = static_cast<int>(uniform_int(rng, 1, 7)); i < n; ++i) v.push_back(uniform_int(rng, 0, 20));
        const IntSet a(v);
        std::set<long> sums;
        for (long x : a.elems())
            for (long y : a.elems()) sums.insert(x + y);
        const QS s = monomial_space(a, Q);
        EXPECT_EQ(product(s, s).dim(), sums.size()) << a.to_string();
    }
}

TEST(Subspace, ProductAndSumRanksMatchCoefficientMatrix) {
    Rng rng(5);
    for (int k = 0; k < 40; ++k) {
        std::vector<QR> g;
        for (int i = 0, n = static_cast<int>(uniform_int(rng, 1, 4)); i < n; ++i) g.push_back(random_element(rng));
        const QS s = QS::span(Q, g);
        // oracle: bring every pairwise product over the square of the lcm denominator
        Poly<RationalField> den = Poly<RationalField>::one(Q);
        for (const auto& e : g) den = lcm(den, e.den());
        std::vector<Poly<RationalField>> nums;
        for (const auto& a : g)
            for (const auto& b : g) {
                const QR p = a * b;
                nums.push_back(p.num() * (den * den / p.den()));
            }
        EXPECT_EQ(product(s, s).dim(), rank_over(Q, nums));
        std::vector<Poly<RationalField>> lin;
        for (const auto& e : g) lin.push_back(e.num() * (den / e.den()));
        EXPECT_EQ(s.dim(), rank_over(Q, lin));
        EXPECT_EQ(sum(s, s), s);
        for (const auto& a : g)
            for (const auto& b : g) EXPECT_TRUE(product(s, s).contains(a * b));
    }
}

TEST(Subspace, SumDimensionIsInclusionExclusionForMonomials) {
    const QS a = monomial_space(IntSet({0, 1, 2}), Q), b = monomial_space(IntSet({2, 3}), Q);
    EXPECT_EQ(sum(a, b).dim(), 4u);
    EXPECT_TRUE(sum(a, b).contains(a));
    EXPECT_FALSE(a.contains(sum(a, b)));
}

TEST(Subspace, PrimeFieldDependencyAppearsModP) {
    const PrimeField K(7);
    using FR = RatFunc<PrimeField>;
    const FR one = FR::one(K), x = FR::x(K);
    const auto s = Subspace<PrimeField>::span(K, {one, x + one * K.from_int(7), x});
    EXPECT_EQ(s.dim(), 2u);
    EXPECT_EQ(product(s, s).dim(), 3u);
}
