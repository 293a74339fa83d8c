#include <gtest/gtest.h>

#include <sstream>

#include "algcheck/suites.hpp"

using namespace algcheck;

namespace {

const CheckEntry* find(const SuiteReport& s, const std::string& name) {
    for (const auto& c : s.checks)
        if (c.name == name) return &c;
    return nullptr;
}

} // namespace

TEST(Suites, MatrixFileParsing) {
    std::istringstream in{"# unipotent\n1 1 0 1\n\n2 0 0 1/2  # diagonal\n0.5 0 0 2\n1e0 0 0 1\n"};
    const auto rows = read_matrix_file(in);
    ASSERT_EQ(rows.size(), 4U);
    EXPECT_EQ(rows[0].line, 2);
    ASSERT_TRUE(rows[1].exact);
    EXPECT_EQ(rows[1].exact->a22, (Rational{1, 2}));
    ASSERT_TRUE(rows[2].exact);
    EXPECT_EQ(rows[2].exact->a11, (Rational{1, 2}));
    EXPECT_FALSE(rows[3].exact);
    EXPECT_DOUBLE_EQ(rows[3].value.a11, 1.0);
}

TEST(Suites, MatrixFileErrors) {
    std::istringstream three{"1 2 3\n"};
    EXPECT_THROW((void)read_matrix_file(three), ValidationError);
    std::istringstream junk{"1 2 3 x\n"};
    EXPECT_THROW((void)read_matrix_file(junk), ValidationError);
    std::istringstream zero_den{"1 0 0 1/0\n"};
    EXPECT_THROW((void)read_matrix_file(zero_den), ValidationError);
}

TEST(Suites, MatrixInputWithWrongDeterminantFails) {
    MatrixOptions opt;
    opt.examples = false;
    opt.random_count = 0;
    std::istringstream in{"2 0 0 1\n1 1 0 1\n"};
    opt.inputs = read_matrix_file(in);
    const auto s = run_matrix_suite(opt);
    EXPECT_EQ(find(s, "input/line_1")->status, Status::fail);
    EXPECT_EQ(find(s, "input/line_2")->status, Status::pass);
    EXPECT_FALSE(s.ok());
}

TEST(Suites, BooleanAtomBoundsEnforced) {
    BooleanOptions opt;
    opt.atoms = {5};
    EXPECT_THROW((void)run_boolean_suite(opt), PreconditionError);
    opt.atoms = {1};
    opt.base_e = 0;
    EXPECT_THROW((void)run_boolean_suite(opt), PreconditionError);
}

TEST(Suites, BooleanSuiteReportsRefutationOnly) {
    BooleanOptions opt;
    opt.atoms = {1, 2};
    const auto s = run_boolean_suite(opt);
    EXPECT_TRUE(s.ok());
    std::size_t refuted = 0;
    for (const auto& c : s.checks) refuted += c.status == Status::refuted_as_printed;
    EXPECT_EQ(refuted, 2U);
    EXPECT_EQ(find(s, "n=1/bring_euler/pair_exp_as_printed")->counterexample,
              "e=1 u=(0,0) v=(0,1) E(u v v)=(0,1) E(u ^ v)=(1,0)");
}

TEST(Suites, BraidSuiteFreezesSolutionCount) {
    BraidOptions opt;
    opt.atoms = {1};
    const auto s = run_braid_suite(opt);
    EXPECT_TRUE(s.ok());
    EXPECT_EQ(find(s, "m=2/enumerate_solutions")->details["count"], braid_solutions_m2);
}

TEST(Suites, UserPolylineInequalitiesAreReportedNotAsserted) {
    // A long thin triangle: compute everything, fail nothing on the inequalities.
    CurveOptions opt;
    opt.jobs.push_back({"polyline", {jordan::PolylineShape{{{0, 0}, {10, 0}, {0, 1}}}, 0}, false, false});
    const auto s = run_curve_suite(opt);
    EXPECT_NE(find(s, "polyline/inequality_i"), nullptr);
    EXPECT_EQ(find(s, "polyline/inequality_i")->status, Status::pass);
    EXPECT_TRUE(find(s, "polyline/inequality_i")->details.contains("holds"));
}

TEST(Suites, IncidenceCertificateShape) {
    const auto cfg = incidence::build_config(4);
    const auto j = config_to_json(cfg);
    EXPECT_EQ(j["seed"], 4);
    EXPECT_EQ(j["triangles"].size(), incidence::triangle_count);
    EXPECT_TRUE(j["triangles"]["P"][0].is_array());
    EXPECT_EQ(j["triangles"]["P"][0].size(), 2U);
}

TEST(Suites, IncidenceSuiteSmall) {
    IncidenceOptions opt;
    opt.trials = 5;
    opt.seed = 11;
    const auto s = run_incidence_suite(opt);
    EXPECT_TRUE(s.ok());
    EXPECT_EQ(find(s, "hypotheses")->details["trials"].size(), 5U);
    opt.trials = 0;
    EXPECT_THROW((void)run_incidence_suite(opt), PreconditionError);
}

TEST(Suites, CertificateForFailingConfiguration) {
    const auto cfg = incidence::build_config(2);
    const auto bad = incidence::perturbed(cfg, 2);
    const auto res = incidence::verify_conclusion(bad);
    ASSERT_FALSE(res.holds());
    const auto cert = conclusion_certificate(bad, res);
    EXPECT_EQ(cert["collinear"], false);

    const std::string dir = ::testing::TempDir();
    const auto path = write_certificate(dir, cert);
    std::ifstream in{path};
    const auto back = nlohmann::ordered_json::parse(in);
    EXPECT_EQ(back, cert);
    // Coordinates are exact fractions: P1 read back equals the stored point.
    const std::string px = back["triangles"]["P"][0][0];
    const std::string py = back["triangles"]["P"][0][1];
    const auto p1 = incidence::HPoint::affine(Rational{px}, Rational{py});
    EXPECT_EQ(p1, bad[incidence::Tri::P].v1());
}
