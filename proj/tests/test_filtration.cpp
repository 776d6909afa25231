#include <gtest/gtest.h>

#include "ffreiman/filtration.hpp"
#include "ffreiman/freiman.hpp"
#include "ffreiman/generators.hpp"

using namespace ffreiman;

namespace {

using QR = RatFunc<RationalField>;
using QS = Subspace<RationalField>;
const RationalField Q;

QS table1() { return monomial_space(IntSet({0, 1, 2, 4, 5}), Q); }

/// Least and greatest |B cap T| over all B in E completing base to target.
std::pair<int, int> subset_extremes(const QS& target, const QS& base, const std::vector<QR>& e, unsigned tmask) {
    const std::size_t codim = target.dim() - base.dim();
    int lo = 99, hi = -1;
    for (unsigned m = 0; m < (1u << e.size()); ++m) {
        if (static_cast<std::size_t>(__builtin_popcount(m)) != codim) continue;
        std::vector<QR> pick;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (m >> i & 1u) pick.push_back(e[i]);
        const QS s = pick.empty() ? base : sum(base, QS::span(Q, pick));
        if (s != target) continue;
        lo = std::min(lo, __builtin_popcount(m & tmask));
        hi = std::max(hi, __builtin_popcount(m & tmask));
    }
    return {lo, hi};
}

}  // namespace

TEST(Filtration, FilteredBasisStartsAtOneWithIncreasingDegrees) {
    const auto fb = filtered_basis(QS::span(Q, {parse_ratfunc("x^3 + 1/x", Q), parse_ratfunc("1/x", Q), parse_ratfunc("x", Q)}));
    ASSERT_EQ(fb.size(), 3u);
    EXPECT_EQ(fb.elements.front(), QR::one(Q));
    EXPECT_EQ(fb.degrees, (std::vector<int>{0, 2, 4}));
    EXPECT_EQ(fb.normalizer, parse_ratfunc("1/x", Q));
    EXPECT_THROW(filtered_basis(QS(Q)), InvalidParameter);
}

TEST(Filtration, Table1Profile) {
    const auto fb = filtered_basis(table1());
    const auto p = genus_profile(fb);
    EXPECT_EQ(p.gamma_seq, (std::vector<int>{0, 0, 0, 1, 2}));
    EXPECT_EQ(p.square_dims, (std::vector<int>{1, 3, 5, 8, 11}));
    EXPECT_EQ(p.t, 5);
    EXPECT_EQ(p.t1, 4);
    EXPECT_EQ(p.first_jump, 4);
    EXPECT_EQ(p.delta, 1);
    const auto table = degree_table(fb, 5);
    EXPECT_EQ(table[0][4], 5);
    EXPECT_EQ(table[3][4], 9);
    EXPECT_EQ(table[4][4], 10);
    EXPECT_FALSE(table[4][0].has_value());
}

TEST(Filtration, Table1NeededColumn) {
    const auto fb = filtered_basis(table1());
    const auto col = needed_column(fb, natural_filtration(fb), 5);
    EXPECT_EQ(col.codim, 3);
    EXPECT_EQ(col.needed, (std::vector<bool>{false, false, true, true, true}));
    // e3e5 has degree 7 <= 2 deg e4, so the degree screen alone cannot force it
    EXPECT_EQ(needed_degree_screen(fb.degrees, 5), (std::vector<int>{4, 5}));
}

TEST(Filtration, GenusRuleViolations) {
    EXPECT_TRUE(genus_rule_violations({0, 0, 1, 1, 3}).empty());
    EXPECT_FALSE(genus_rule_violations({1, 1}).empty());
    EXPECT_FALSE(genus_rule_violations({0, 2, 1}).empty());
}

TEST(Filtration, NeededCountMatchesSubsetSearch) {
    Rng rng(21);
    int columns = 0;
    for (int k = 0; k < 25; ++k) {
        Divisor<RationalField> d = Divisor<RationalField>::at(Place<RationalField>::infinity(), static_cast<int>(uniform_int(rng, 2, 6)));
        if (uniform_int(rng, 0, 1)) d.add(Place<RationalField>::finite(Rational(uniform_int(rng, -1, 1))), 1);
        const int n = static_cast<int>(uniform_int(rng, 2, std::min(d.degree() + 1, 6)));
        std::optional<FilteredBasis<RationalField>> fb;
        try {
            fb = filtered_basis(random_in_RR(Q, d, n, rng() >> 1));
        } catch (const NonSplitPlace&) {
            continue;
        }
        const auto filt = natural_filtration(*fb);
        for (int c = 2; c <= n; ++c) {
            const QS target = product(filt[c - 1], filt[c - 1]), base = product(filt[c - 2], filt[c - 2]);
            std::vector<QR> e;
            for (int i = 0; i < c; ++i) e.push_back(fb->elements[i] * fb->elements[c - 1]);
            for (unsigned tmask = 0; tmask < (1u << c); ++tmask) {
                std::vector<std::size_t> t;
                for (int i = 0; i < c; ++i)
                    if (tmask >> i & 1u) t.push_back(static_cast<std::size_t>(i));
                const auto [lo, hi] = subset_extremes(target, base, e, tmask);
                const auto nc = needed_count(target, base, e, t);
                EXPECT_EQ(nc.min_count, lo);
                EXPECT_EQ(nc.max_count, hi);
            }
            for (int i = 0; i < c; ++i) {
                const auto [lo, hi] = subset_extremes(target, base, e, 1u << i);
                EXPECT_EQ(is_needed(static_cast<std::size_t>(i), target, base, e), lo == 1);
            }
            ++columns;
        }
    }
    EXPECT_GE(columns, 30);
}

TEST(Filtration, NeededCountRejectsNonSpanningE) {
    const auto fb = filtered_basis(table1());
    const auto filt = natural_filtration(fb);
    const QS target = product(filt[4], filt[4]), base = product(filt[3], filt[3]);
    EXPECT_THROW(needed_count(target, base, {fb.elements[0] * fb.elements[4]}, {0}), SpanMismatch);
}

TEST(Filtration, SuperFilteredBasisReachesPoleFloors) {
    const QS s = QS::span(Q, {parse_ratfunc("1", Q), parse_ratfunc("x + 1/x", Q), parse_ratfunc("x^2 - 1/x", Q),
                              parse_ratfunc("x^3 + 1/x^2", Q)});
    const auto fb = filtered_basis(s);
    const auto sb = super_filtered_basis(fb);
    EXPECT_EQ(super_filtered_violation(sb, fb.space), "");
    EXPECT_EQ(sb.pole_floor.at(Rational(0)), -2);
    EXPECT_EQ(valuation(sb.elements.back(), Place<RationalField>::finite(Rational(0))), -2);
    for (std::size_t i = 1; i < sb.elements.size(); ++i)
        EXPECT_LE(valuation(sb.elements[i], Place<RationalField>::finite(Rational(0))),
                  valuation(sb.elements[i - 1], Place<RationalField>::finite(Rational(0))));
    const auto g = growth_profile(sb, natural_filtration(fb));
    EXPECT_EQ(g.divisors.back(), minimal_divisor(fb.space));
}

TEST(Filtration, TInclusionsOnGammaOneFamily) {
    const auto fb = filtered_basis(canonical_gamma1(Q, 6, 1, Rational(1)));
    const auto filt = natural_filtration(fb);
    const auto prof = genus_profile(fb);
    const auto g = growth_profile(super_filtered_basis(fb), filt);
    ASSERT_FALSE(t_inclusion_gate(g, prof).has_value());
    for (bool ok : check_T_inclusions(g, prof, filt)) EXPECT_TRUE(ok);
    const auto fb0 = filtered_basis(canonical_gamma0(Q, 5));
    EXPECT_THROW(check_T_inclusions(growth_profile(super_filtered_basis(fb0), natural_filtration(fb0)), genus_profile(fb0),
                                    natural_filtration(fb0)),
                 HypothesisNotMet);
}
