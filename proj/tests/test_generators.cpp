#include <gtest/gtest.h>

#include "ffreiman/generators.hpp"

using namespace ffreiman;

namespace {

using QS = Subspace<RationalField>;
const RationalField Q;

int gamma_of(const QS& s) { return static_cast<int>(product(s, s).dim()) - 2 * static_cast<int>(s.dim()) + 1; }

}  // namespace

TEST(Generators, CanonicalFamiliesHaveTheirGenus) {
    for (int n = 3; n <= 8; ++n) EXPECT_EQ(gamma_of(canonical_gamma0(Q, n)), 0);
    for (int shape : {1, 2})
        for (int n = 4; n <= 8; ++n)
            for (long a : {0L, 1L, -1L, 2L}) {
                const QS s = canonical_gamma1(Q, n, shape, Rational(a));
                EXPECT_EQ(static_cast<int>(s.dim()), n);
                EXPECT_EQ(gamma_of(s), 1) << "shape " << shape << " n " << n << " alpha " << a;
            }
    EXPECT_THROW(canonical_gamma0(Q, 2), InvalidParameter);
    EXPECT_THROW(canonical_gamma1(Q, 3, 1, Rational(0)), InvalidParameter);
    EXPECT_THROW(canonical_gamma1(Q, 5, 3, Rational(0)), InvalidParameter);
}

TEST(Generators, DegreeFamilyRealizesDegrees) {
    const IntSet set({0, 2, 3, 4, 5});
    const PolePlan<RationalField> plan{Rational(1), {0, 1, 0, 2, 1}};
    const QS s = degree_family(Q, set, std::optional(plan));
    EXPECT_EQ(s.degrees_ascending(), (std::vector<int>{0, 2, 3, 4, 5}));
    EXPECT_EQ(minimal_divisor(s).coeff(Place<RationalField>::finite(Rational(1))), 2);
    EXPECT_THROW(degree_family(Q, set, std::optional(PolePlan<RationalField>{Rational(1), {0, 1}})), DegreeRealizationFailed);
    EXPECT_THROW(degree_family(Q, set, std::optional(PolePlan<RationalField>{Rational(1), {1, 0, 0, 0, 0}})),
                 DegreeRealizationFailed);
    EXPECT_THROW(degree_family(Q, IntSet({1, 2})), InvalidParameter);
}

TEST(Generators, RandomSubspaceOfRiemannRoch) {
    const auto d = parse_divisor("4*inf + 1*0 + 2*-1", Q);
    const QS l = riemann_roch_space(Q, d);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const QS s = random_in_RR(Q, d, 5, seed);
        EXPECT_EQ(s.dim(), 5u);
        EXPECT_TRUE(l.contains(s));
        EXPECT_TRUE(s.contains(RatFunc<RationalField>::one(Q)));
        EXPECT_EQ(s, random_in_RR(Q, d, 5, seed));
    }
    EXPECT_THROW(random_in_RR(Q, d, 9, 1), DimensionTooLarge);
    EXPECT_THROW(random_in_RR(Q, parse_divisor("2*inf - 1*0", Q), 1, 1), InvalidParameter);
}

TEST(Generators, InstanceSpecRoundTrip) {
    const auto spec = InstanceSpec::parse("family=random-rr D=\"5*inf + 1*0\" n=4 seed=7");
    EXPECT_EQ(spec.family, "random-rr");
    EXPECT_EQ(spec.get("D"), "5*inf + 1*0");
    EXPECT_EQ(spec.get_int("n"), 4);
    EXPECT_EQ(InstanceSpec::parse(spec.to_string()).params, spec.params);
    EXPECT_THROW(InstanceSpec::parse("n=4"), InvalidParameter);
    EXPECT_THROW(spec.get("alpha"), InvalidParameter);
    EXPECT_THROW(InstanceSpec::parse("family=gamma0 n=x").get_int("n"), InvalidParameter);
}

TEST(Generators, GeneratedFilesParseBack) {
    const std::vector<std::string> specs{"family=gamma0 n=5", "family=gamma1a n=5 alpha=2", "family=gamma1b n=6 alpha=-1",
                                         "family=degset set=0,2,3,4,5 alpha=1 orders=0,1,0,2,1", "family=monomial set=0,1,2,4,5",
                                         "family=random-rr D=\"5*inf + 1*0\" n=4 seed=7"};
    for (const auto& text : specs) {
        const auto spec = InstanceSpec::parse(text);
        const QS s = generate_instance(spec, Q);
        const std::string file = instance_file_text(spec, FieldSpec{}, s);
        EXPECT_EQ(file.rfind("# spec: ", 0), 0u);
        const auto inst = parse_instance_file(file);
        EXPECT_EQ(QS::span(Q, instance_generators(inst, Q)), s) << text;
    }
    EXPECT_THROW(generate_instance(InstanceSpec::parse("family=nope"), Q), InvalidParameter);
}
