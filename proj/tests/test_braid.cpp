#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "algcheck/braid.hpp"

using namespace algcheck;

namespace {

SquareMapTable from_function(std::uint32_t m, auto f) {
    SquareMapTable t{m};
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j) {
            const auto [p, q] = f(i, j);
            t.set(i, j, p, q);
        }
    return t;
}

// Oracle: the braid relation evaluated through explicit composition of
// maps on triples, independent of braid_lhs/braid_rhs.
bool oracle_braid(const SquareMapTable& phi) {
    const auto on12 = [&](std::array<std::uint32_t, 3> t) {
        auto [p, q] = phi.table[t[0] * phi.m + t[1]];
        return std::array<std::uint32_t, 3>{p, q, t[2]};
    };
    const auto on23 = [&](std::array<std::uint32_t, 3> t) {
        auto [p, q] = phi.table[t[1] * phi.m + t[2]];
        return std::array<std::uint32_t, 3>{t[0], p, q};
    };
    for (std::uint32_t a = 0; a < phi.m; ++a)
        for (std::uint32_t b = 0; b < phi.m; ++b)
            for (std::uint32_t c = 0; c < phi.m; ++c) {
                const std::array<std::uint32_t, 3> t{a, b, c};
                if (on12(on23(on12(t))) != on23(on12(on23(t)))) return false;
            }
    return true;
}

} // namespace

TEST(Braid, IdentityAndSwapAreSolutions) {
    for (std::uint32_t m : {1U, 2U, 5U}) {
        EXPECT_TRUE(braid_check(from_function(m, [](auto i, auto j) { return std::pair{i, j}; })).holds);
        EXPECT_TRUE(braid_check(from_function(m, [](auto i, auto j) { return std::pair{j, i}; })).holds);
    }
}

TEST(Braid, ReportsFirstFailingTriple) {
    // (x, y) -> (x xor y, y) on {0,1}: (0,0,1) is the first triple where the sides differ.
    const auto phi = from_function(2, [](auto i, auto j) { return std::pair{i ^ j, j}; });
    EXPECT_FALSE(oracle_braid(phi));
    const auto v = braid_check(phi);
    ASSERT_FALSE(v.holds);
    EXPECT_NE(v.witness->lhs, v.witness->rhs);
    EXPECT_EQ(v.witness->input, (Triple3{0, 0, 1}));
    for (std::uint32_t k = 0; k < 8; ++k) {
        const Triple3 t{k >> 2 & 1, k >> 1 & 1, k & 1};
        if (t == v.witness->input) break;
        EXPECT_EQ(braid_lhs(phi, t), braid_rhs(phi, t));
    }
}

TEST(Braid, ComplementMapBraidsAndCollapses) {
    for (unsigned n = 1; n <= 3; ++n) {
        const BoolAlgebra alg{n};
        const auto phi = phi_complement(alg);
        EXPECT_TRUE(braid_check(phi).holds);
        const std::uint32_t full = alg.full_mask();
        for (std::uint32_t z = 0; z <= full; ++z) {
            const Triple3 t{full, 0, z};
            EXPECT_EQ(braid_lhs(phi, t), (Triple3{z, ~z & full, z}));
        }
    }
}

TEST(Braid, ParamFamilyAndClosedForms) {
    for (unsigned n = 1; n <= 3; ++n) {
        const BoolAlgebra alg{n};
        const auto rep = check_param_braid_family(alg);
        EXPECT_TRUE(rep.passed) << rep.counterexample.value_or("");
        for (const auto& x : alg.enumerate()) {
            const auto phi = phi_param(alg, x);
            EXPECT_EQ(oracle_braid(phi), true);
            EXPECT_EQ(blend(alg, x), phi);
        }
    }
}

TEST(Braid, ParamEndpoints) {
    const BoolAlgebra alg{2};
    EXPECT_EQ(phi_param(alg, alg.bottom()), identity_map(alg));
    EXPECT_EQ(phi_param(alg, alg.top()), join_meet_map(alg));
}

TEST(Braid, EnumerationAgreesWithOracle) {
    const auto sol = enumerate_solutions(2);
    EXPECT_EQ(sol.count, 43U);
    std::size_t oracle_count = 0;
    for (std::uint32_t code = 0; code < 256; ++code) {
        SquareMapTable t{2};
        for (std::uint32_t k = 0; k < 4; ++k) {
            const std::uint32_t o = code >> (6 - 2 * k) & 3U;
            t.table[k] = {o >> 1, o & 1U};
        }
        if (oracle_braid(t)) ++oracle_count;
    }
    EXPECT_EQ(oracle_count, sol.count);
    std::set<std::vector<std::pair<std::uint32_t, std::uint32_t>>> distinct;
    for (const auto& t : sol.solutions) distinct.insert(t.table);
    EXPECT_EQ(distinct.size(), sol.count);
    EXPECT_THROW((void)enumerate_solutions(3), PreconditionError);
}

TEST(Braid, SquareMapFileRoundTrip) {
    const auto phi = phi_param(BoolAlgebra{1}, BoolAlgebra{1}.top());
    std::stringstream ss;
    write_square_map(ss, phi);
    EXPECT_EQ(read_square_map(ss), phi);
}

TEST(Braid, MalformedMapFilesRejected) {
    std::istringstream missing{"2\n0 0 -> 0 0\n0 1 -> 0 1\n1 0 -> 1 0\n"};
    EXPECT_THROW((void)read_square_map(missing), ValidationError);
    std::istringstream dup{"2\n0 0 -> 0 0\n0 0 -> 0 1\n1 0 -> 1 0\n1 1 -> 1 1\n"};
    EXPECT_THROW((void)read_square_map(dup), ValidationError);
    std::istringstream range{"2\n0 0 -> 0 2\n0 1 -> 0 1\n1 0 -> 1 0\n1 1 -> 1 1\n"};
    EXPECT_THROW((void)read_square_map(range), ValidationError);
    std::istringstream arrow{"2\n0 0 => 0 0\n"};
    EXPECT_THROW((void)read_square_map(arrow), ValidationError);
    std::istringstream zero{"0\n"};
    EXPECT_THROW((void)read_square_map(zero), ValidationError);
}

TEST(Braid, Preconditions) {
    EXPECT_THROW((void)phi_complement(BoolAlgebra{4}), PreconditionError);
    EXPECT_THROW((void)phi_param(BoolAlgebra{2}, BoolAlgebra{1}.top()), DomainError);
    SquareMapTable bad{2};
    bad.table[0] = {3, 0};
    EXPECT_THROW((void)braid_check(bad), ValidationError);
}
