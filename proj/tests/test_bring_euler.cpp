#include <gtest/gtest.h>

#include "algcheck/bring_euler.hpp"

using namespace algcheck;

namespace {

// Oracle: brute-force search for the first (u, v), u outer, v inner in
// index order, with E(u v v) != E(u ^ v). Evaluates E from raw masks.
std::optional<std::pair<std::uint32_t, std::uint32_t>> first_failure(unsigned n, std::uint32_t e) {
    const std::uint32_t full = (1U << n) - 1;
    const auto E = [&](std::uint32_t a, std::uint32_t b) {
        const std::uint32_t ea = (~a & full) | e;
        return std::pair{ea & ~b & full, ea & b};
    };
    const std::uint32_t m = 1U << (2 * n);
    for (std::uint32_t u = 0; u < m; ++u)
        for (std::uint32_t v = 0; v < m; ++v) {
            const std::uint32_t ua = u >> n, ub = u & full, va = v >> n, vb = v & full;
            const auto lhs = E(ua | va, ub | vb);
            const auto rhs = E(ua & va, (ua & vb) | (ub & va) | (ub & vb));
            if (lhs != rhs) return std::pair{u, v};
        }
    return std::nullopt;
}

} // namespace

TEST(BRingEuler, ZeroBaseRejected) {
    EXPECT_THROW(ExpBase{BoolAlgebra{2}.bottom()}, PreconditionError);
}

TEST(BRingEuler, ScalarIdentitiesForEveryBase) {
    for (unsigned n = 1; n <= 4; ++n) {
        const BoolAlgebra alg{n};
        for (const auto& e : alg.enumerate()) {
            if (e.is_bottom()) continue;
            for (const auto& rep : check_scalar_identities(alg, ExpBase{e})) {
                EXPECT_TRUE(rep.passed) << rep.name << " n=" << n << " e=" << e.to_string();
            }
            EXPECT_TRUE(check_euler_pair(alg, ExpBase{e}).passed);
        }
    }
}

TEST(BRingEuler, HomomorphismHoldsAsPrintedDoesNot) {
    for (unsigned n = 1; n <= 3; ++n) {
        const BoolAlgebra alg{n};
        for (const auto& e : alg.enumerate()) {
            if (e.is_bottom()) continue;
            const auto rep = check_pair_exp_addition(alg, ExpBase{e});
            EXPECT_TRUE(rep.homomorphism.passed);
            EXPECT_FALSE(rep.as_printed.passed);
            EXPECT_EQ(rep.as_printed.cases, std::size_t{1} << (4 * n));
        }
    }
}

TEST(BRingEuler, AsPrintedWitnessMatchesBruteForce) {
    for (unsigned n = 1; n <= 2; ++n) {
        const BoolAlgebra alg{n};
        for (const auto& e : alg.enumerate()) {
            if (e.is_bottom()) continue;
            const auto oracle = first_failure(n, e.mask());
            ASSERT_TRUE(oracle);
            const auto u = PairElement::from_index(alg, oracle->first);
            const auto v = PairElement::from_index(alg, oracle->second);
            const auto rep = check_pair_exp_addition(alg, ExpBase{e});
            const auto& w = *rep.as_printed.counterexample;
            EXPECT_NE(w.find("u=" + u.to_string() + " v=" + v.to_string()), std::string::npos) << w;
        }
    }
}

TEST(BRingEuler, MinimalCounterexampleAtOneAtom) {
    const BoolAlgebra alg{1};
    const ExpBase base{alg.top()};
    const auto rep = check_pair_exp_addition(alg, base);
    EXPECT_EQ(*rep.as_printed.counterexample, "e=1 u=(0,0) v=(0,1) E(u v v)=(0,1) E(u ^ v)=(1,0)");
    // The commuted pair fails as well.
    const PairElement u{alg.bottom(), alg.top()}, v{alg.bottom(), alg.bottom()};
    EXPECT_FALSE(big_e(base, pair_join(u, v)) == big_e(base, twisted_meet(u, v)));
}

TEST(BRingEuler, PairExponentialValues) {
    const BoolAlgebra alg{2};
    const ExpBase base{alg.element(0b01)};
    EXPECT_EQ(big_e(base, pair::zero(alg)), pair::one(alg));
    EXPECT_EQ(big_e(base, pair::h(alg)), pair::h(alg));
    // e^a for a = top is just e.
    EXPECT_EQ(exp_e(base, alg.top()), alg.element(0b01));
}
