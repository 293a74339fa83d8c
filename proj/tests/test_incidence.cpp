#include <gtest/gtest.h>

#include "algcheck/incidence.hpp"

using namespace algcheck;
using namespace algcheck::incidence;

namespace {

HPoint pt(long x, long y) { return HPoint::affine(Rational{x}, Rational{y}); }

// Oracle: affine collinearity of finite points with plain rational arithmetic.
bool affine_collinear(const HPoint& a, const HPoint& b, const HPoint& c) {
    const auto X = [](const HPoint& p) { return Rational{p[0], p[2]}; };
    const auto Y = [](const HPoint& p) { return Rational{p[1], p[2]}; };
    return (X(b) - X(a)) * (Y(c) - Y(a)) - (Y(b) - Y(a)) * (X(c) - X(a)) == 0;
}

} // namespace

TEST(Incidence, NormalizationToPrimitiveVectors) {
    EXPECT_EQ(HPoint(2, 4, 6).to_string(), "1:2:3");
    EXPECT_EQ(HPoint(-3, 0, 0).to_string(), "1:0:0");
    EXPECT_EQ(HPoint(0, -2, 4).to_string(), "0:1:-2");
    EXPECT_EQ(HPoint::affine(Rational{1, 2}, Rational{-2, 3}), HPoint(3, -4, 6));
    EXPECT_THROW(HPoint(0, 0, 0), ValidationError);
    EXPECT_THROW(HLine(0, 0, 0), ValidationError);
}

TEST(Incidence, LinesAndMeets) {
    const auto a = pt(0, 0), b = pt(2, 0), c = pt(0, 2), d = pt(2, 2);
    const auto l = line_through(a, d);
    const auto m = line_through(b, c);
    EXPECT_TRUE(incident(a, l) && incident(d, l));
    EXPECT_EQ(meet(l, m), pt(1, 1));
    // Parallel lines meet at infinity.
    const auto inf = meet(line_through(a, b), line_through(c, d));
    EXPECT_TRUE(inf.at_infinity());
    EXPECT_EQ(inf.to_string(), "1:0:0");
    EXPECT_THROW((void)line_through(a, a), DomainError);
    EXPECT_THROW((void)meet(l, l), DomainError);
}

TEST(Incidence, CollinearityMatchesAffineOracle) {
    for (long x = -2; x <= 2; ++x)
        for (long y = -2; y <= 2; ++y) {
            const auto a = pt(0, 0), b = pt(1, 2), c = pt(x, y);
            EXPECT_EQ(collinear(a, b, c), affine_collinear(a, b, c));
        }
}

TEST(Incidence, ConcurrencyOfMedians) {
    const auto a = pt(0, 0), b = pt(6, 0), c = pt(1, 5);
    const auto mid = [](const HPoint& p, const HPoint& q) {
        return HPoint::affine((Rational{p[0], p[2]} + Rational{q[0], q[2]}) / 2,
                              (Rational{p[1], p[2]} + Rational{q[1], q[2]}) / 2);
    };
    EXPECT_TRUE(concurrent(line_through(a, mid(b, c)), line_through(b, mid(a, c)), line_through(c, mid(a, b))));
    EXPECT_FALSE(concurrent(line_through(a, b), line_through(b, c), line_through(c, a)));
}

TEST(Incidence, NiRelation) {
    // T = (t1, t2, t3), U = (u1, u2, u3) with t1 on u2u3 and u1 on t2t3.
    const Triangle t{pt(1, 0), pt(0, 1), pt(0, -1)};  // side t2t3 is x = 0
    const Triangle u{pt(0, 3), pt(1, 5), pt(1, -5)};  // side u2u3 is x = 1
    EXPECT_TRUE(ni(t, u));
    EXPECT_TRUE(ni(u, t));
    const Triangle w{pt(2, 0), pt(0, 1), pt(0, -1)};
    EXPECT_FALSE(ni(w, u));
    EXPECT_THROW((Triangle{pt(0, 0), pt(1, 1), pt(2, 2)}), DomainError);
}

TEST(Incidence, DualPreservesNiAndIsInvolutive) {
    const Triangle t{pt(1, 0), pt(0, 1), pt(0, -1)};
    const Triangle u{pt(0, 3), pt(1, 5), pt(1, -5)};
    EXPECT_TRUE(ni(dual(t), dual(u)));
    EXPECT_EQ(dual(dual(t)), t);
}

TEST(Incidence, ConfigurationsAreDeterministicAndExact) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto cfg = build_config(seed);
        ASSERT_EQ(cfg.triangles.size(), triangle_count);
        EXPECT_TRUE(all_hypotheses_hold(cfg));
        EXPECT_EQ(check_hypotheses(cfg).size(), 27U);
        const auto again = build_config(seed);
        EXPECT_EQ(again.triangles, cfg.triangles);
        for (const auto& tri : cfg.triangles)
            for (std::size_t k = 0; k < 3; ++k) EXPECT_FALSE(tri[k].at_infinity());
    }
}

TEST(Incidence, ConclusionHoldsWithVerifiedWitness) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto cfg = build_config(seed);
        const auto res = verify_conclusion(cfg);
        EXPECT_TRUE(res.collinear_ok) << seed;
        EXPECT_TRUE(res.concurrent_ok) << seed;
        ASSERT_TRUE(res.o_prime);
        EXPECT_TRUE(res.witness_verified);
        EXPECT_TRUE(ni(cfg[Tri::P], *res.o_prime) && ni(cfg[Tri::Q], *res.o_prime) && ni(cfg[Tri::R], *res.o_prime));
        EXPECT_TRUE(affine_collinear(cfg[Tri::P].v1(), cfg[Tri::Q].v1(), cfg[Tri::R].v1()));
    }
}

TEST(Incidence, NegativeControlBreaksConclusion) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto cfg = build_config(seed);
        const auto bad = perturbed(cfg, seed);
        EXPECT_FALSE(verify_conclusion(bad).collinear_ok);
        EXPECT_FALSE(verify_conclusion(bad).holds());
        EXPECT_FALSE(all_hypotheses_hold(bad));
    }
}

TEST(Incidence, DualConfigurationSatisfiesTheClosure) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto cfg = build_config(seed);
        const auto d = dual(cfg);
        EXPECT_TRUE(all_hypotheses_hold(d));
        EXPECT_TRUE(verify_conclusion(d).holds());
        EXPECT_EQ(dual(d).triangles, cfg.triangles);
    }
}

TEST(Incidence, HypothesisFailureIsNamed) {
    auto cfg = build_config(3);
    cfg[Tri::X] = Triangle{pt(1, 1), pt(2, 7), pt(-3, 4)};
    bool named = false;
    for (const auto& h : check_hypotheses(cfg))
        if (!h.holds && h.relation == "O ni X") named = true;
    EXPECT_TRUE(named);
}
