#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "ffreiman/freiman.hpp"
#include "ffreiman/random.hpp"

using namespace ffreiman;

namespace {

const RationalField Q;

std::set<long> brute_sumset(const IntSet& a) {
    std::set<long> s;
    for (long x : a.elems())
        for (long y : a.elems()) s.insert(x + y);
    return s;
}

}  // namespace

TEST(Freiman, IntSetNormalizes) {
    const IntSet a({5, 1, 3, 1});
    EXPECT_EQ(a.elems(), (std::vector<long>{1, 3, 5}));
    EXPECT_EQ(a.to_string(), "{1,3,5}");
    EXPECT_THROW(IntSet(std::vector<long>{}), InvalidParameter);
}

TEST(Freiman, ThreeKMinusFourExamples) {
    const auto r = freiman_3k4(IntSet({0, 1, 2, 4}));
    EXPECT_TRUE(r.hypothesis_holds);
    EXPECT_EQ(r.hull_length, 5);
    EXPECT_EQ(r.bound, 5);
    EXPECT_TRUE(r.conclusion_holds);
    EXPECT_FALSE(freiman_3k4(IntSet({0, 1, 3})).hypothesis_holds);
    const auto g = freiman_3k4(IntSet({0, 5, 10}));
    EXPECT_EQ(g.ap_step, 5);
    EXPECT_EQ(g.hull_length, 3);
}

TEST(Freiman, SumsetAndGenusAgainstBruteForce) {
    Rng rng(12);
    for (int k = 0; k < 200; ++k) {
        std::vector<long> v;
        for (int i = 0, n = static_cast<int>(uniform_int(rng, 1, 9)); i < n; ++i) v.push_back(uniform_int(rng, -15, 15));
        const IntSet a(v);
        const auto s = brute_sumset(a);
        EXPECT_EQ(sumset(a).elems(), std::vector<long>(s.begin(), s.end()));
        EXPECT_EQ(additive_genus(a), static_cast<long>(s.size()) - 2 * static_cast<long>(a.size()) + 1);
        long g = 0;
        for (long x : a.elems()) g = std::gcd(g, x - a.min());
        if (a.size() >= 2) {
            EXPECT_EQ(freiman_3k4(a).hull_length, g == 0 ? 1 : (a.max() - a.min()) / g + 1);
        }
    }
}

TEST(Freiman, MonomialSpaceGenusMatchesAdditiveGenus) {
    for (const auto& v : std::vector<std::vector<long>>{{0, 1, 2, 4, 5}, {0, 3, 7}, {2, 4, 6, 8}, {0}}) {
        const IntSet a(v);
        const auto s = monomial_space(a, Q);
        const long gamma = static_cast<long>(product(s, s).dim()) - 2 * static_cast<long>(s.dim()) + 1;
        EXPECT_EQ(gamma, additive_genus(a)) << a.to_string();
    }
    EXPECT_THROW(monomial_space(IntSet({-1, 2}), Q), InvalidParameter);
}
